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

#ifndef DYSAUG_RESAMPLE_H_
#define DYSAUG_RESAMPLE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dysaug/waveform.h"

namespace dysaug {

// Band-limited interpolation with a Kaiser-windowed sinc kernel (beta 8.6,
// 64 zero crossings) tabulated on a fine polyphase grid.
//
// The kernel is shared and immutable; all entry points are thread-safe.
class SincResampler {
 public:
  static constexpr int kZeroCrossings = 64;  // taps per phase
  static constexpr int kHalfWidth = kZeroCrossings / 2;
  static constexpr int kPhases = 512;        // table entries per zero crossing
  static constexpr double kKaiserBeta = 8.6;
  // Cutoff relative to the lower Nyquist limit; leaves room for the
  // transition band so the stop band starts at the Nyquist frequency.
  static constexpr double kRolloff = 0.945;

  // Resamples `input` so that output sample n sits at input position
  // n / ratio, i.e. `ratio` = output rate / input rate. Output length is
  // round(input.size() * ratio). ratio == 1 returns the input unchanged.
  static std::vector<float> process(std::span<const float> input, double ratio);

  // Evaluates the unit-cutoff kernel at offset t (in zero crossings) by
  // linear interpolation of the table. Zero for |t| >= kHalfWidth.
  static double kernel(double t);
};

// Changes the sample rate while keeping duration; output rate = target_rate.
Waveform resample(const Waveform& w, int target_rate);

}  // namespace dysaug

#endif  // DYSAUG_RESAMPLE_H_
