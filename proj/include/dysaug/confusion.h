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

#ifndef DYSAUG_CONFUSION_H_
#define DYSAUG_CONFUSION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dysaug/asr_score.h"

namespace dysaug {

// Row-stochastic character confusion probabilities. p(a, b) is the
// estimated probability that reference character a is realized as b. The
// matrix has one extra row and column for the null symbol: the null column
// holds deletions, the null row insertions. The null index is always last.
class ConfusionMatrix {
 public:
  // `alphabet` must be sorted and unique; `probabilities` is row-major with
  // (alphabet.size() + 1)^2 entries. Throws InvalidArgument unless every
  // entry is non-negative and every row sums to 1 within 1e-9.
  ConfusionMatrix(std::vector<char32_t> alphabet, std::vector<double> probabilities);

  static ConfusionMatrix identity(std::vector<char32_t> alphabet);

  const std::vector<char32_t>& alphabet() const { return alphabet_; }
  std::size_t dimension() const { return alphabet_.size() + 1; }
  std::size_t null_index() const { return alphabet_.size(); }
  std::optional<std::size_t> index_of(char32_t c) const;

  double p(std::size_t from, std::size_t to) const { return probs_[from * dimension() + to]; }
  std::span<const double> row(std::size_t from) const {
    return {probs_.data() + from * dimension(), dimension()};
  }

  // {"alphabet": ["a", ..., ""], "probabilities": [row-major]}; the trailing
  // empty string is the null symbol.
  std::string to_json() const;
  static ConfusionMatrix from_json(std::string_view text);

 private:
  std::vector<char32_t> alphabet_;
  std::vector<double> probs_;
};

inline constexpr double kConfusionSmoothing = 0.5;

// Accumulates character-level alignments: hits and substitutions count
// [ref][hyp], deletions [ref][null], insertions [null][hyp]. Each row gets
// `alpha` added to every cell before normalization. Throws InvalidArgument
// on empty input.
ConfusionMatrix build_confusion(std::span<const TextPair> pairs, const TextNormalization& norm = {},
                                double alpha = kConfusionSmoothing);

}  // namespace dysaug

#endif  // DYSAUG_CONFUSION_H_
