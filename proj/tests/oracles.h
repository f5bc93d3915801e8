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

#ifndef DYSAUG_TESTS_ORACLES_H_
#define DYSAUG_TESTS_ORACLES_H_

// Reference implementations used only by tests. They share no code with the
// library paths they check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dysaug::oracle {

struct EditCounts {
  int cost = 0;
  int sub = 0;
  int ins = 0;
  int del = 0;
  int hits = 0;
};

// Top-down recursion over prefixes. The last edit of an optimal alignment
// of ref[0,i) / hyp[0,j) is chosen in the order hit, substitute, delete,
// insert, which is what a tie-broken backtrace from the end produces.
class EditRecursion {
 public:
  EditRecursion(std::string ref, std::string hyp)
      : ref_(std::move(ref)), hyp_(std::move(hyp)),
        memo_((ref_.size() + 1) * (hyp_.size() + 1), -1) {}

  int distance(std::size_t i, std::size_t j) {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    int& slot = memo_[i * (hyp_.size() + 1) + j];
    if (slot >= 0) return slot;
    const int diag = distance(i - 1, j - 1) + (ref_[i - 1] == hyp_[j - 1] ? 0 : 1);
    const int del = distance(i - 1, j) + 1;
    const int ins = distance(i, j - 1) + 1;
    slot = std::min({diag, del, ins});
    return slot;
  }

  EditCounts counts() { return counts(ref_.size(), hyp_.size()); }

 private:
  EditCounts counts(std::size_t i, std::size_t j) {
    if (i == 0 && j == 0) return {};
    const int here = distance(i, j);
    if (i > 0 && j > 0) {
      const bool same = ref_[i - 1] == hyp_[j - 1];
      if (distance(i - 1, j - 1) + (same ? 0 : 1) == here) {
        EditCounts c = counts(i - 1, j - 1);
        c.cost = here;
        (same ? c.hits : c.sub) += 1;
        return c;
      }
    }
    if (i > 0 && distance(i - 1, j) + 1 == here) {
      EditCounts c = counts(i - 1, j);
      c.cost = here;
      c.del += 1;
      return c;
    }
    EditCounts c = counts(i, j - 1);
    c.cost = here;
    c.ins += 1;
    return c;
  }

  std::string ref_, hyp_;
  std::vector<int> memo_;
};

// Minimum cost over every alignment, enumerated without memoization.
// Exponential; for short strings only.
inline int enumerate_min_cost(const std::string& ref, const std::string& hyp, std::size_t i = 0,
                              std::size_t j = 0) {
  if (i == ref.size()) return static_cast<int>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<int>(ref.size() - i);
  const int diag = (ref[i] == hyp[j] ? 0 : 1) + enumerate_min_cost(ref, hyp, i + 1, j + 1);
  const int del = 1 + enumerate_min_cost(ref, hyp, i + 1, j);
  const int ins = 1 + enumerate_min_cost(ref, hyp, i, j + 1);
  return std::min({diag, del, ins});
}

// Multiset Jaccard distance on bytes: count each character of the union by
// scanning both words.
inline double multiset_jaccard(const std::string& a, const std::string& b) {
  std::string alphabet = a + b;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  long mins = 0, maxs = 0;
  for (char c : alphabet) {
    const long ca = std::count(a.begin(), a.end(), c);
    const long cb = std::count(b.begin(), b.end(), c);
    mins += std::min(ca, cb);
    maxs += std::max(ca, cb);
  }
  return 1.0 - static_cast<double>(mins) / static_cast<double>(maxs);
}

// All strings of length 0..max_len over `alphabet`.
inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len,
                                            std::size_t min_len = 0) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& s : layer)
      for (char c : alphabet) next.push_back(s + c);
    layer = std::move(next);
  }
  return out;
}

}  // namespace dysaug::oracle

#endif  // DYSAUG_TESTS_ORACLES_H_
