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

#ifndef DYSAUG_SPEED_PERTURB_H_
#define DYSAUG_SPEED_PERTURB_H_

#include "dysaug/waveform.h"

namespace dysaug {

// Speed factor R1: y(t) = x(R1 t). Values above 1 shorten the signal and
// raise every frequency by the same factor.
class SpeedFactor {
 public:
  static constexpr double kMin = 0.25;
  static constexpr double kMax = 4.0;

  // Throws InvalidArgument outside [kMin, kMax].
  explicit SpeedFactor(double r1);
  double value() const { return value_; }

 private:
  double value_;
};

// Outputs shorter than this are rejected as degenerate.
inline constexpr std::size_t kMinSpeedOutput = 64;

// Resamples the sample sequence by 1/r1 while keeping the declared rate, so
// the output lasts len/r1 samples and a tone at f moves to r1*f.
Waveform perturb_speed(const Waveform& w, SpeedFactor r1);

}  // namespace dysaug

#endif  // DYSAUG_SPEED_PERTURB_H_
