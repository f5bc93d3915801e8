// Copyright 2026 The dysaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYSAUG_TEXT_CORRECT_H_
#define DYSAUG_TEXT_CORRECT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dysaug/confusion.h"

namespace dysaug {

// Soft character counts of a word.
struct CharProfile {
  std::map<char32_t, double> counts;

  double total() const;
};

// Without a matrix, counts[c] is the multiplicity of c in `word`. With one,
// every occurrence of c adds p(c, c') to counts[c'] for each alphabet
// character c'; the null column is dropped and characters outside the
// matrix alphabet count as themselves. Throws InvalidArgument on "".
CharProfile profile(std::string_view word, const ConfusionMatrix* confusion = nullptr);

// 1 - sum_c min(P[c], G[c]) / sum_c max(P[c], G[c]).
double weighted_jaccard(const CharProfile& p, const CharProfile& g);
double weighted_jaccard(std::string_view predicted, std::string_view truth,
                        const ConfusionMatrix* confusion = nullptr);

class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(const std::vector<std::string>& words);

  // Adds `count` to the word's frequency; inserts it if new.
  void add(const std::string& word, std::uint64_t count = 1);
  bool contains(std::string_view word) const;
  std::uint64_t frequency(std::string_view word) const;
  // Sorted, unique.
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  // One word per line with an optional tab-separated count (default 1).
  // Duplicate lines sum their counts. Throws FormatError on a bad count.
  static Dictionary load(std::istream& in);
  static Dictionary load(const std::filesystem::path& path);

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint64_t> freq_;
};

// Nearest-word lookup over a fixed dictionary and matrix, with dictionary
// profiles computed once. The dictionary and matrix must outlive it.
// Immutable after construction, so it can be shared across threads.
class Corrector {
 public:
  // Throws InvalidArgument on an empty dictionary.
  Corrector(const Dictionary& dictionary, const ConfusionMatrix* confusion = nullptr);

  // In-dictionary words come back unchanged. Otherwise the dictionary word
  // with the smallest weighted_jaccard; ties go to higher frequency, then
  // fewer characters, then lexicographic order.
  std::string correct_word(std::string_view word) const;

  // Whitespace-tokenizes, corrects each token made only of letters, and
  // rejoins with single spaces. Tokens with digits or punctuation pass
  // through.
  std::string correct_sentence(std::string_view sentence) const;

 private:
  struct Candidate {
    const std::string* word;
    CharProfile profile;
    std::uint64_t frequency;
    std::size_t length;
  };

  const Dictionary& dictionary_;
  const ConfusionMatrix* confusion_;
  std::vector<Candidate> candidates_;
};

std::string correct_word(std::string_view word, const Dictionary& dictionary,
                         const ConfusionMatrix* confusion = nullptr);
std::string correct_sentence(std::string_view sentence, const Dictionary& dictionary,
                             const ConfusionMatrix* confusion = nullptr);

// True when every character is a letter (no digits, no punctuation).
bool is_correctable_token(std::string_view token);

}  // namespace dysaug

#endif  // DYSAUG_TEXT_CORRECT_H_
