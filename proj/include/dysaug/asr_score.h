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

#ifndef DYSAUG_ASR_SCORE_H_
#define DYSAUG_ASR_SCORE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dysaug {

enum class EditKind { kHit, kSubstitute, kInsert, kDelete };

struct EditOp {
  EditKind kind;
  std::optional<std::string> ref;  // absent for inserts
  std::optional<std::string> hyp;  // absent for deletes

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct ScoreReport {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t hits = 0;
  std::size_t ref_length = 0;

  std::size_t errors() const { return substitutions + insertions + deletions; }
  // (sub + ins + del) / ref_length; may exceed 1. Zero when ref_length is 0.
  double error_rate() const;

  ScoreReport& operator+=(const ScoreReport& other);
  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

struct Alignment {
  std::vector<EditOp> ops;

  // Unit-cost edit distance of the alignment.
  std::size_t cost() const;
  ScoreReport counts() const;
};

// Minimum edit distance alignment with unit costs. Among optimal alignments
// the backtrace from the end prefers hit, then substitute, then delete, then
// insert.
Alignment align(std::span<const std::string> ref, std::span<const std::string> hyp);

enum class ScoreUnit { kWord, kCharacter };

struct TextNormalization {
  // Drop tatweel and Arabic diacritics before comparing.
  bool strip_arabic_marks = false;
};

// Word unit splits on whitespace. Character unit splits the
// whitespace-normalized string into Unicode scalar values (spaces included).
std::vector<std::string> tokenize(std::string_view text, ScoreUnit unit,
                                  const TextNormalization& norm = {});

using TextPair = std::pair<std::string, std::string>;  // (reference, hypothesis)

// Corpus-level counts. Throws InvalidArgument if every reference is empty.
ScoreReport score(std::span<const TextPair> pairs, ScoreUnit unit,
                  const TextNormalization& norm = {});

}  // namespace dysaug

#endif  // DYSAUG_ASR_SCORE_H_
