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

#include "dysaug/tempo_wsola.h"

#include <random>

#include <gtest/gtest.h>

#include "dysaug/error.h"
#include "dysaug/severity.h"
#include "test_support.h"

namespace dysaug {
namespace {

constexpr std::size_t kFrame = 512;

TEST(WsolaConfig, Validation) {
  EXPECT_NO_THROW(WsolaConfig{}.validate());
  EXPECT_THROW((WsolaConfig{511, 256, 160}.validate()), InvalidArgument);
  EXPECT_THROW((WsolaConfig{512, 0, 160}.validate()), InvalidArgument);
  EXPECT_THROW((WsolaConfig{512, 600, 160}.validate()), InvalidArgument);
}

TEST(TempoFactor, Range) {
  EXPECT_THROW(TempoFactor(0.1), InvalidArgument);
  EXPECT_THROW(TempoFactor(5.0), InvalidArgument);
  EXPECT_NO_THROW(TempoFactor(0.4));
}

TEST(PerturbTempo, IdentityReconstructs) {
  const Waveform w = testing::speech_like_chirp(2.0);
  const Waveform out = perturb_tempo(w, TempoFactor(1.0));
  ASSERT_EQ(out.size(), w.size());
  EXPECT_GE(testing::snr_db(w.samples, out.samples, kFrame, kFrame), 40.0);
}

TEST(PerturbTempo, IdentityOnNoise) {
  std::mt19937 gen(5);
  std::normal_distribution<float> noise(0.0f, 0.2f);
  Waveform w{std::vector<float>(8000), 16000};
  for (float& s : w.samples) s = std::clamp(noise(gen), -1.0f, 1.0f);
  const Waveform out = perturb_tempo(w, TempoFactor(1.0));
  EXPECT_GE(testing::snr_db(w.samples, out.samples, kFrame, kFrame), 40.0);
}

TEST(PerturbTempo, LengthForS1Tempo) {
  const Waveform w = testing::speech_like_chirp(1.0);
  const Waveform out = perturb_tempo(w, TempoFactor(0.8));
  EXPECT_LE(std::abs(static_cast<double>(out.size()) - 12800.0), 512.0);
  EXPECT_EQ(out.sample_rate, 16000);
}

TEST(PerturbTempo, KeepsPitch) {
  for (double f : {100.0, 440.0, 1000.0, 2000.0}) {
    const Waveform w = testing::tone(f, 16000, 1.0);
    for (double r2 : {0.4, 0.8, 1.25, 2.5}) {
      const Waveform out = perturb_tempo(w, TempoFactor(r2));
      EXPECT_NEAR(testing::dominant_frequency(out.samples, 16000), f, testing::bin_width(16000))
          << "f=" << f << " r2=" << r2;
    }
  }
}

TEST(PerturbTempo, DurationContractProperty) {
  std::mt19937 gen(13);
  std::uniform_real_distribution<double> factor(0.25, 4.0);
  std::uniform_int_distribution<int> length(512, 12000);
  const Waveform base = testing::speech_like_chirp(1.0);
  for (int trial = 0; trial < 30; ++trial) {
    Waveform w = base;
    w.samples.resize(static_cast<std::size_t>(length(gen)));
    const double r2 = factor(gen);
    const Waveform out = perturb_tempo(w, TempoFactor(r2));
    EXPECT_LE(std::abs(static_cast<double>(out.size()) - std::round(r2 * w.size())), 512.0);
    for (float s : out.samples) ASSERT_LE(std::abs(s), 1.0f);
  }
}

TEST(PerturbTempo, FullScaleStaysBounded) {
  const Waveform w = testing::tone(330.0, 16000, 0.5, 1.0);
  for (double r2 : {0.4, 0.8, 2.0}) {
    for (float s : perturb_tempo(w, TempoFactor(r2)).samples) ASSERT_LE(std::abs(s), 1.0f);
  }
}

TEST(PerturbTempo, Deterministic) {
  const Waveform w = testing::speech_like_chirp(0.7);
  const Waveform a = perturb_tempo(w, TempoFactor(0.4));
  const Waveform b = perturb_tempo(w, TempoFactor(0.4));
  EXPECT_EQ(a.samples, b.samples);
}

TEST(PerturbTempo, ZeroToleranceStillCoversOutput) {
  const Waveform w = testing::speech_like_chirp(0.5);
  WsolaConfig cfg;
  cfg.tolerance = 0;
  const Waveform out = perturb_tempo(w, TempoFactor(1.5), cfg);
  EXPECT_EQ(out.size(), static_cast<std::size_t>(std::llround(1.5 * w.size())));
}

TEST(PerturbTempo, RejectsShortInput) {
  Waveform w{std::vector<float>(511, 0.1f), 16000};
  EXPECT_THROW(perturb_tempo(w, TempoFactor(0.8)), InvalidArgument);
}

TEST(PertubateSignal, DoubleIdentity) {
  const Waveform w = testing::speech_like_chirp(1.0);
  const Waveform out = pertubate_signal(w, PerturbationParams{});
  ASSERT_EQ(out.size(), w.size());
  EXPECT_GE(testing::snr_db(w.samples, out.samples, kFrame, kFrame), 40.0);
}

TEST(PertubateSignal, ComposedDurations) {
  const Waveform w = testing::speech_like_chirp(2.0);
  ASSERT_EQ(w.size(), 32000u);
  EXPECT_LE(std::abs(static_cast<double>(pertubate_signal(w, params_for(SeverityLevel::kS1)).size()) -
                     21333.0),
            512.0);
  EXPECT_LE(std::abs(static_cast<double>(pertubate_signal(w, params_for(SeverityLevel::kS4)).size()) -
                     6400.0),
            512.0);
}

TEST(PertubateSignal, SpeedThenTempo) {
  const Waveform w = testing::tone(300.0, 16000, 1.0);
  const PerturbationParams p{SpeedFactor(1.8), TempoFactor(0.4), std::nullopt};
  const Waveform expected = perturb_tempo(perturb_speed(w, p.r1), p.r2);
  EXPECT_EQ(pertubate_signal(w, p).samples, expected.samples);
  // Pitch follows the speed factor only.
  EXPECT_NEAR(testing::dominant_frequency(expected.samples, 16000), 540.0, testing::bin_width(16000));
}

}  // namespace
}  // namespace dysaug
