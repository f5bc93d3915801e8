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

#include "dysaug/confusion.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "dysaug/error.h"
#include "dysaug/utf8.h"

namespace dysaug {

ConfusionMatrix::ConfusionMatrix(std::vector<char32_t> alphabet, std::vector<double> probabilities)
    : alphabet_(std::move(alphabet)), probs_(std::move(probabilities)) {
  if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
      std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
    throw InvalidArgument("confusion alphabet must be sorted and unique");
  const std::size_t dim = dimension();
  if (probs_.size() != dim * dim)
    throw InvalidArgument("confusion matrix needs " + std::to_string(dim * dim) +
                          " probabilities, got " + std::to_string(probs_.size()));
  for (std::size_t r = 0; r < dim; ++r) {
    double sum = 0.0;
    for (double v : row(r)) {
      if (!(v >= 0.0) || !std::isfinite(v))
        throw InvalidArgument("confusion row " + std::to_string(r) + " has a negative entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw InvalidArgument("confusion row " + std::to_string(r) + " sums to " +
                            std::to_string(sum));
  }
}

ConfusionMatrix ConfusionMatrix::identity(std::vector<char32_t> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const std::size_t dim = alphabet.size() + 1;
  std::vector<double> p(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) p[i * dim + i] = 1.0;
  return ConfusionMatrix(std::move(alphabet), std::move(p));
}

std::optional<std::size_t> ConfusionMatrix::index_of(char32_t c) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
  if (it == alphabet_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::string ConfusionMatrix::to_json() const {
  nlohmann::json alphabet = nlohmann::json::array();
  for (char32_t c : alphabet_) alphabet.push_back(utf8::encode(c));
  alphabet.push_back("");
  nlohmann::json obj{{"alphabet", alphabet}, {"probabilities", probs_}};
  return obj.dump();
}

ConfusionMatrix ConfusionMatrix::from_json(std::string_view text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("confusion matrix: ") + e.what());
  }
  try {
    const auto labels = obj.at("alphabet").get<std::vector<std::string>>();
    if (labels.empty() || !labels.back().empty())
      throw FormatError("confusion matrix: alphabet must end with the null symbol \"\"");
    std::vector<char32_t> alphabet;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
      const auto cps = utf8::decode(labels[i]);
      if (cps.size() != 1)
        throw FormatError("confusion matrix: alphabet entry " + std::to_string(i) +
                          " is not a single character");
      alphabet.push_back(cps[0]);
    }
    return ConfusionMatrix(std::move(alphabet), obj.at("probabilities").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("confusion matrix: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("confusion matrix: ") + e.what());
  }
}

ConfusionMatrix build_confusion(std::span<const TextPair> pairs, const TextNormalization& norm,
                                double alpha) {
  if (pairs.empty()) throw InvalidArgument("build_confusion needs at least one pair");
  if (!(alpha >= 0.0)) throw InvalidArgument("smoothing must be non-negative");

  std::vector<Alignment> alignments;
  std::set<char32_t> seen;
  alignments.reserve(pairs.size());
  for (const auto& [ref, hyp] : pairs) {
    const auto r = tokenize(ref, ScoreUnit::kCharacter, norm);
    const auto h = tokenize(hyp, ScoreUnit::kCharacter, norm);
    for (const auto& t : r) seen.insert(utf8::decode(t).front());
    for (const auto& t : h) seen.insert(utf8::decode(t).front());
    alignments.push_back(align(r, h));
  }

  std::vector<char32_t> alphabet(seen.begin(), seen.end());
  const std::size_t dim = alphabet.size() + 1;
  const std::size_t null = alphabet.size();
  auto index = [&](const std::optional<std::string>& token) {
    if (!token) return null;
    const char32_t c = utf8::decode(*token).front();
    return static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), c) -
                                    alphabet.begin());
  };

  std::vector<double> counts(dim * dim, 0.0);
  for (const auto& a : alignments)
    for (const auto& op : a.ops) counts[index(op.ref) * dim + index(op.hyp)] += 1.0;

  for (std::size_t r = 0; r < dim; ++r) {
    double total = 0.0;
    for (std::size_t c = 0; c < dim; ++c) total += counts[r * dim + c] + alpha;
    for (std::size_t c = 0; c < dim; ++c) {
      double& cell = counts[r * dim + c];
      // An unobserved row with no smoothing has no evidence; keep it sharp.
      cell = total > 0.0 ? (cell + alpha) / total : (r == c ? 1.0 : 0.0);
    }
  }
  return ConfusionMatrix(std::move(alphabet), std::move(counts));
}

}  // namespace dysaug
