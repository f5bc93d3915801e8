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

#include "dysaug/speed_perturb.h"

#include <random>

#include <gtest/gtest.h>

#include "dysaug/error.h"
#include "test_support.h"

namespace dysaug {
namespace {

TEST(SpeedFactor, Range) {
  EXPECT_NO_THROW(SpeedFactor(0.25));
  EXPECT_NO_THROW(SpeedFactor(4.0));
  EXPECT_THROW(SpeedFactor(0.2), InvalidArgument);
  EXPECT_THROW(SpeedFactor(4.5), InvalidArgument);
  EXPECT_THROW(SpeedFactor(std::nan("")), InvalidArgument);
}

TEST(PerturbSpeed, IdentityFactor) {
  const Waveform w = testing::speech_like_chirp(0.5);
  const Waveform out = perturb_speed(w, SpeedFactor(1.0));
  ASSERT_EQ(out.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ASSERT_NEAR(out.samples[i], w.samples[i], 1e-6);
}

TEST(PerturbSpeed, HalvesLength) {
  const Waveform w = testing::tone(440.0, 16000, 1.0);
  const Waveform out = perturb_speed(w, SpeedFactor(2.0));
  EXPECT_NEAR(static_cast<double>(out.size()), 8000.0, 1.0);
  EXPECT_EQ(out.sample_rate, 16000);
}

TEST(PerturbSpeed, MovesToneByFactor) {
  const Waveform w = testing::tone(440.0, 16000, 1.0);
  for (double r1 : {0.5, 0.8, 1.2, 1.4, 1.8, 2.0, 3.0}) {
    const Waveform out = perturb_speed(w, SpeedFactor(r1));
    EXPECT_NEAR(testing::dominant_frequency(out.samples, 16000), r1 * 440.0,
                testing::bin_width(16000))
        << "r1=" << r1;
  }
}

TEST(PerturbSpeed, DurationContractProperty) {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> factor(0.25, 4.0);
  std::uniform_int_distribution<int> length(300, 5000);
  for (int trial = 0; trial < 40; ++trial) {
    Waveform w = testing::tone(200.0, 16000, 1.0);
    w.samples.resize(static_cast<std::size_t>(length(gen)));
    const double r1 = factor(gen);
    if (w.size() / r1 < 64) continue;
    const Waveform out = perturb_speed(w, SpeedFactor(r1));
    EXPECT_LE(std::abs(static_cast<double>(out.size()) - w.size() / r1), 1.0) << r1;
  }
}

TEST(PerturbSpeed, CompositionLength) {
  const Waveform w = testing::speech_like_chirp(0.6);
  for (double a : {0.5, 0.8, 1.2, 2.0}) {
    for (double b : {0.5, 0.8, 1.4, 1.8}) {
      const auto twice = perturb_speed(perturb_speed(w, SpeedFactor(a)), SpeedFactor(b));
      const auto once = perturb_speed(w, SpeedFactor(a * b));
      EXPECT_LE(std::abs(static_cast<double>(twice.size()) - static_cast<double>(once.size())), 2.0);
    }
  }
}

TEST(PerturbSpeed, PassbandEnergyWithinOneDb) {
  const Waveform w = testing::tone(440.0, 16000, 1.0, 1.0);
  const double before = testing::energy_db(w.samples, 400, 400);
  for (double r1 : {0.5, 1.2, 1.4, 1.8, 2.0, 4.0}) {
    const Waveform out = perturb_speed(w, SpeedFactor(r1));
    EXPECT_LT(std::abs(testing::energy_db(out.samples, 200, 200) - before), 1.0) << r1;
  }
}

TEST(PerturbSpeed, OutputBounded) {
  Waveform square{std::vector<float>(4000), 16000};
  for (std::size_t i = 0; i < square.size(); ++i) square.samples[i] = (i / 20) % 2 ? 1.0f : -1.0f;
  for (double r1 : {0.7, 1.3, 2.0}) {
    for (float s : perturb_speed(square, SpeedFactor(r1)).samples) ASSERT_LE(std::abs(s), 1.0f);
  }
}

TEST(PerturbSpeed, RejectsDegenerateOutput) {
  Waveform w{std::vector<float>(100, 0.1f), 16000};
  EXPECT_THROW(perturb_speed(w, SpeedFactor(2.0)), InvalidArgument);
  EXPECT_THROW(perturb_speed(Waveform{{}, 16000}, SpeedFactor(1.0)), InvalidArgument);
}

}  // namespace
}  // namespace dysaug
