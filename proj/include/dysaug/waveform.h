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

#ifndef DYSAUG_WAVEFORM_H_
#define DYSAUG_WAVEFORM_H_

#include <cstddef>
#include <vector>

namespace dysaug {

inline constexpr int kTargetSampleRate = 16000;

// Mono audio as normalized amplitudes in [-1, 1].
struct Waveform {
  std::vector<float> samples;
  int sample_rate = kTargetSampleRate;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Throws InvalidArgument unless sample_rate > 0 and, when require_samples is
// set, the waveform is non-empty. Amplitudes are not checked; use clip().
void validate(const Waveform& w, bool require_samples = true);

// Clamps every sample into [-1, 1] in place.
void clip(std::vector<float>& samples);

}  // namespace dysaug

#endif  // DYSAUG_WAVEFORM_H_
