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

#include "dysaug/text_correct.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "dysaug/error.h"
#include "dysaug/utf8.h"

namespace dysaug {
namespace {

// Distances closer than this are treated as tied.
constexpr double kTieEpsilon = 1e-12;

bool is_letter(char32_t c) {
  if (c < 0x80) return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  if (c >= 0x00A1 && c <= 0x00BF) return false;  // Latin-1 punctuation and signs
  if (c == 0x00D7 || c == 0x00F7) return false;
  if (c >= 0x0660 && c <= 0x0669) return false;  // Arabic-Indic digits
  if (c >= 0x06F0 && c <= 0x06F9) return false;
  if (c == 0x060C || c == 0x061B || c == 0x061F || c == 0x06D4) return false;
  if (c >= 0x066A && c <= 0x066D) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;  // General Punctuation
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFF01 && c <= 0xFF20) return false;  // fullwidth digits and punctuation
  return c != 0xFFFD;
}

}  // namespace

double CharProfile::total() const {
  double sum = 0.0;
  for (const auto& [c, v] : counts) sum += v;
  return sum;
}

CharProfile profile(std::string_view word, const ConfusionMatrix* confusion) {
  if (word.empty()) throw InvalidArgument("cannot profile an empty word");
  CharProfile out;
  for (char32_t c : utf8::decode(word)) {
    const auto from = confusion ? confusion->index_of(c) : std::nullopt;
    if (!from) {
      out.counts[c] += 1.0;
      continue;
    }
    const auto& alphabet = confusion->alphabet();
    for (std::size_t to = 0; to < alphabet.size(); ++to) {
      const double mass = confusion->p(*from, to);
      if (mass > 0.0) out.counts[alphabet[to]] += mass;
    }
  }
  return out;
}

double weighted_jaccard(const CharProfile& p, const CharProfile& g) {
  double min_sum = 0.0, max_sum = 0.0;
  auto a = p.counts.begin();
  auto b = g.counts.begin();
  while (a != p.counts.end() || b != g.counts.end()) {
    if (b == g.counts.end() || (a != p.counts.end() && a->first < b->first)) {
      max_sum += a->second;
      ++a;
    } else if (a == p.counts.end() || b->first < a->first) {
      max_sum += b->second;
      ++b;
    } else {
      min_sum += std::min(a->second, b->second);
      max_sum += std::max(a->second, b->second);
      ++a, ++b;
    }
  }
  if (max_sum <= 0.0) return 0.0;
  return 1.0 - min_sum / max_sum;
}

double weighted_jaccard(std::string_view predicted, std::string_view truth,
                        const ConfusionMatrix* confusion) {
  return weighted_jaccard(profile(predicted, confusion), profile(truth, confusion));
}

Dictionary::Dictionary(const std::vector<std::string>& words) {
  for (const auto& w : words) add(w);
}

void Dictionary::add(const std::string& word, std::uint64_t count) {
  if (word.empty()) return;
  auto [it, inserted] = freq_.try_emplace(word, 0);
  it->second += count;
  if (inserted) words_.insert(std::lower_bound(words_.begin(), words_.end(), word), word);
}

bool Dictionary::contains(std::string_view word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

std::uint64_t Dictionary::frequency(std::string_view word) const {
  auto it = freq_.find(std::string(word));
  return it == freq_.end() ? 0 : it->second;
}

Dictionary Dictionary::load(std::istream& in) {
  std::vector<std::pair<std::string, std::uint64_t>> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string word = line;
    std::uint64_t count = 1;
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      word = line.substr(0, tab);
      const std::string field = utf8::normalize_whitespace(line.substr(tab + 1));
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), count);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw FormatError("dictionary line " + std::to_string(number) + ": bad count '" +
                          field + "'");
    }
    word = utf8::normalize_whitespace(word);
    if (!word.empty()) rows.emplace_back(std::move(word), count);
  }
  // Bulk build: sort once rather than inserting into the sorted vector.
  Dictionary d;
  for (auto& [w, c] : rows) d.freq_[w] += c;
  d.words_.reserve(d.freq_.size());
  for (const auto& [w, c] : d.freq_) d.words_.push_back(w);
  std::sort(d.words_.begin(), d.words_.end());
  return d;
}

Dictionary Dictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open dictionary");
  return load(in);
}

Corrector::Corrector(const Dictionary& dictionary, const ConfusionMatrix* confusion)
    : dictionary_(dictionary), confusion_(confusion) {
  if (dictionary.empty()) throw InvalidArgument("dictionary is empty");
  candidates_.reserve(dictionary.size());
  for (const auto& w : dictionary.words())
    candidates_.push_back(
        {&w, profile(w, confusion), dictionary.frequency(w), utf8::decode(w).size()});
}

std::string Corrector::correct_word(std::string_view word) const {
  if (word.empty()) throw InvalidArgument("cannot correct an empty word");
  if (dictionary_.contains(word)) return std::string(word);

  const CharProfile query = profile(word, confusion_);
  const Candidate* best = nullptr;
  double best_distance = 0.0;
  for (const auto& c : candidates_) {
    const double d = weighted_jaccard(query, c.profile);
    bool better;
    if (best == nullptr || d < best_distance - kTieEpsilon) {
      better = true;
    } else if (d > best_distance + kTieEpsilon) {
      better = false;
    } else if (c.frequency != best->frequency) {
      better = c.frequency > best->frequency;
    } else if (c.length != best->length) {
      better = c.length < best->length;
    } else {
      better = *c.word < *best->word;
    }
    if (better) {
      best = &c;
      best_distance = d;
    }
  }
  return *best->word;
}

std::string Corrector::correct_sentence(std::string_view sentence) const {
  std::string out;
  for (const auto& token : utf8::split_whitespace(sentence)) {
    if (!out.empty()) out.push_back(' ');
    out += is_correctable_token(token) ? correct_word(token) : token;
  }
  return out;
}

std::string correct_word(std::string_view word, const Dictionary& dictionary,
                         const ConfusionMatrix* confusion) {
  if (dictionary.empty()) throw InvalidArgument("dictionary is empty");
  if (dictionary.contains(word)) return std::string(word);
  return Corrector(dictionary, confusion).correct_word(word);
}

std::string correct_sentence(std::string_view sentence, const Dictionary& dictionary,
                             const ConfusionMatrix* confusion) {
  const auto tokens = utf8::split_whitespace(sentence);
  if (std::none_of(tokens.begin(), tokens.end(),
                   [](const std::string& t) { return is_correctable_token(t); }))
    return utf8::normalize_whitespace(sentence);
  return Corrector(dictionary, confusion).correct_sentence(sentence);
}

bool is_correctable_token(std::string_view token) {
  const auto cps = utf8::decode(token);
  return !cps.empty() && std::all_of(cps.begin(), cps.end(), is_letter);
}

}  // namespace dysaug
