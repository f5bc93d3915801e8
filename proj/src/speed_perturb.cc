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

#include <cmath>
#include <string>

#include "dysaug/error.h"
#include "dysaug/resample.h"

namespace dysaug {

SpeedFactor::SpeedFactor(double r1) : value_(r1) {
  if (!(r1 >= kMin && r1 <= kMax))
    throw InvalidArgument("speed factor r1=" + std::to_string(r1) + " outside [0.25, 4.0]");
}

Waveform perturb_speed(const Waveform& w, SpeedFactor r1) {
  validate(w);
  const double ratio = 1.0 / r1.value();
  const auto out_len = static_cast<std::size_t>(std::llround(static_cast<double>(w.size()) * ratio));
  if (out_len < kMinSpeedOutput)
    throw InvalidArgument("speed perturbation of " + std::to_string(w.size()) +
                          " samples by r1=" + std::to_string(r1.value()) + " leaves " +
                          std::to_string(out_len) + " samples (minimum " +
                          std::to_string(kMinSpeedOutput) + ")");
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples = SincResampler::process(w.samples, ratio);
  return out;
}

}  // namespace dysaug
