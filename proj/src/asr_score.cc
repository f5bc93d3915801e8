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

#include "dysaug/asr_score.h"

#include <algorithm>

#include "dysaug/error.h"
#include "dysaug/utf8.h"

namespace dysaug {

double ScoreReport::error_rate() const {
  if (ref_length == 0) return 0.0;
  return static_cast<double>(errors()) / static_cast<double>(ref_length);
}

ScoreReport& ScoreReport::operator+=(const ScoreReport& other) {
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  hits += other.hits;
  ref_length += other.ref_length;
  return *this;
}

std::size_t Alignment::cost() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](const EditOp& op) { return op.kind != EditKind::kHit; }));
}

ScoreReport Alignment::counts() const {
  ScoreReport r;
  for (const auto& op : ops) {
    switch (op.kind) {
      case EditKind::kHit: ++r.hits; ++r.ref_length; break;
      case EditKind::kSubstitute: ++r.substitutions; ++r.ref_length; break;
      case EditKind::kDelete: ++r.deletions; ++r.ref_length; break;
      case EditKind::kInsert: ++r.insertions; break;
    }
  }
  return r;
}

Alignment align(std::span<const std::string> ref, std::span<const std::string> hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  const std::size_t cols = m + 1;
  // cost[i * cols + j] = distance between ref[0, i) and hyp[0, j).
  std::vector<std::size_t> cost((n + 1) * cols);
  for (std::size_t i = 0; i <= n; ++i) cost[i * cols] = i;
  for (std::size_t j = 0; j <= m; ++j) cost[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = cost[(i - 1) * cols + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::size_t up = cost[(i - 1) * cols + j] + 1;
      const std::size_t left = cost[i * cols + j - 1] + 1;
      cost[i * cols + j] = std::min({diag, up, left});
    }
  }

  Alignment a;
  a.ops.reserve(n + m);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = cost[i * cols + j];
    if (i > 0 && j > 0) {
      const std::size_t diag = cost[(i - 1) * cols + j - 1];
      const bool same = ref[i - 1] == hyp[j - 1];
      if (same && diag == here) {
        a.ops.push_back({EditKind::kHit, ref[i - 1], hyp[j - 1]});
        --i, --j;
        continue;
      }
      if (!same && diag + 1 == here) {
        a.ops.push_back({EditKind::kSubstitute, ref[i - 1], hyp[j - 1]});
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cost[(i - 1) * cols + j] + 1 == here) {
      a.ops.push_back({EditKind::kDelete, ref[i - 1], std::nullopt});
      --i;
      continue;
    }
    a.ops.push_back({EditKind::kInsert, std::nullopt, hyp[j - 1]});
    --j;
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

std::vector<std::string> tokenize(std::string_view text, ScoreUnit unit,
                                  const TextNormalization& norm) {
  std::string cleaned = norm.strip_arabic_marks ? utf8::strip_arabic_marks(text) : std::string(text);
  if (unit == ScoreUnit::kWord) return utf8::split_whitespace(cleaned);
  std::vector<std::string> chars;
  for (char32_t c : utf8::decode(utf8::normalize_whitespace(cleaned))) chars.push_back(utf8::encode(c));
  return chars;
}

ScoreReport score(std::span<const TextPair> pairs, ScoreUnit unit, const TextNormalization& norm) {
  ScoreReport total;
  for (const auto& [ref, hyp] : pairs) {
    const auto r = tokenize(ref, unit, norm);
    const auto h = tokenize(hyp, unit, norm);
    total += align(r, h).counts();
  }
  if (total.ref_length == 0) throw InvalidArgument("all references are empty");
  return total;
}

}  // namespace dysaug
