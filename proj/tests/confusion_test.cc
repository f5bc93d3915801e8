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

#include <random>

#include <gtest/gtest.h>

#include "dysaug/error.h"

namespace dysaug {
namespace {

void expect_stochastic(const ConfusionMatrix& m) {
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    double sum = 0.0;
    for (double v : m.row(r)) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9) << "row " << r;
  }
}

TEST(BuildConfusion, NoConfusionsObserved) {
  const std::vector<TextPair> pairs{{"ab", "ab"}, {"ba", "ba"}, {"aab", "aab"}};
  const auto m = build_confusion(pairs);
  ASSERT_EQ(m.alphabet(), (std::vector<char32_t>{U'a', U'b'}));
  const auto a = *m.index_of(U'a'), b = *m.index_of(U'b');
  EXPECT_GT(m.p(a, a), m.p(a, b));
  EXPECT_GT(m.p(b, b), m.p(b, a));
  // Off-diagonal mass comes only from smoothing: a seen 4 times, 3 cells.
  EXPECT_DOUBLE_EQ(m.p(a, b), 0.5 / (4.0 + 1.5));
  expect_stochastic(m);
}

TEST(BuildConfusion, CountAndNormalize) {
  std::vector<TextPair> pairs(100, TextPair{"abc", "axc"});
  const auto m = build_confusion(pairs);
  // Alphabet {a, b, c, x} + null; row b saw b->x 100 times.
  const auto b = *m.index_of(U'b');
  const auto x = *m.index_of(U'x');
  EXPECT_DOUBLE_EQ(m.p(b, x), 100.5 / (100.0 + 5 * 0.5));
  for (std::size_t c = 0; c < m.dimension(); ++c)
    if (c != x) EXPECT_LT(m.p(b, c), m.p(b, x));
  expect_stochastic(m);
}

TEST(BuildConfusion, InsertionsAndDeletionsUseNull) {
  const std::vector<TextPair> pairs{{"ab", "a"}, {"a", "ay"}};
  const auto m = build_confusion(pairs);
  const auto null = m.null_index();
  const auto b = *m.index_of(U'b');
  const auto y = *m.index_of(U'y');
  // Row b: one deletion. Row null: one insertion of y.
  EXPECT_DOUBLE_EQ(m.p(b, null), 1.5 / (1.0 + 4 * 0.5));
  EXPECT_DOUBLE_EQ(m.p(null, y), 1.5 / (1.0 + 4 * 0.5));
}

TEST(BuildConfusion, FuzzedRowsAreDistributions) {
  std::mt19937 gen(31);
  const std::string letters = "ab c\xd8\xa8";
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TextPair> pairs;
    for (int i = 0, n = 1 + gen() % 8; i < n; ++i) {
      std::string r, h;
      for (int k = 0, len = gen() % 7; k < len; ++k) r += "ab c"[gen() % 4];
      for (int k = 0, len = gen() % 7; k < len; ++k) h += gen() % 5 ? std::string(1, "abxy"[gen() % 4]) : "\xd8\xa8";
      pairs.emplace_back(r, h);
    }
    expect_stochastic(build_confusion(pairs));
  }
  // Degenerate: nothing but empty strings.
  const std::vector<TextPair> empty{{"", ""}};
  const auto m = build_confusion(empty);
  EXPECT_EQ(m.dimension(), 1u);
  expect_stochastic(m);
}

TEST(BuildConfusion, EmptyInput) {
  EXPECT_THROW(build_confusion(std::vector<TextPair>{}), InvalidArgument);
}

TEST(ConfusionMatrix, Validation) {
  EXPECT_THROW(ConfusionMatrix({U'b', U'a'}, std::vector<double>(9, 1.0 / 3)), InvalidArgument);
  EXPECT_THROW(ConfusionMatrix({U'a'}, {1.0, 0.0, 0.5, 0.4}), InvalidArgument);
  EXPECT_THROW(ConfusionMatrix({U'a'}, {1.2, -0.2, 0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(ConfusionMatrix({U'a'}, {1.0}), InvalidArgument);
  EXPECT_NO_THROW(ConfusionMatrix({U'a'}, {0.7, 0.3, 0.0, 1.0}));
}

TEST(ConfusionMatrix, JsonRoundTrip) {
  const std::vector<TextPair> pairs{{"\xd9\x83\xd8\xaa\xd8\xa8", "\xd9\x83\xd8\xab\xd8\xa8"},
                                    {"ab", "b"}};
  const auto m = build_confusion(pairs);
  const auto back = ConfusionMatrix::from_json(m.to_json());
  EXPECT_EQ(back.alphabet(), m.alphabet());
  for (std::size_t r = 0; r < m.dimension(); ++r)
    for (std::size_t c = 0; c < m.dimension(); ++c) EXPECT_EQ(back.p(r, c), m.p(r, c));
  EXPECT_NE(m.to_json().find("\"alphabet\""), std::string::npos);
  EXPECT_NE(m.to_json().find("\"probabilities\""), std::string::npos);
}

TEST(ConfusionMatrix, JsonErrors) {
  EXPECT_THROW(ConfusionMatrix::from_json("{"), FormatError);
  EXPECT_THROW(ConfusionMatrix::from_json(R"({"alphabet":["a"],"probabilities":[1]})"), FormatError);
  EXPECT_THROW(ConfusionMatrix::from_json(R"({"alphabet":["ab",""],"probabilities":[1,0,0,1]})"),
               FormatError);
  EXPECT_THROW(ConfusionMatrix::from_json(R"({"alphabet":["a",""],"probabilities":[1,1,0,1]})"),
               FormatError);
}

}  // namespace
}  // namespace dysaug
