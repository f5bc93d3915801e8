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

#ifndef DYSAUG_TEMPO_WSOLA_H_
#define DYSAUG_TEMPO_WSOLA_H_

#include <cstddef>
#include <optional>

#include "dysaug/speed_perturb.h"
#include "dysaug/waveform.h"

namespace dysaug {

// Tempo factor R2: output duration = R2 * input duration, pitch unchanged.
class TempoFactor {
 public:
  static constexpr double kMin = 0.25;
  static constexpr double kMax = 4.0;

  explicit TempoFactor(double r2);
  double value() const { return value_; }

 private:
  double value_;
};

enum class WindowKind { kHann };

// Defaults assume 16 kHz audio: 32 ms frames, 16 ms synthesis hop and a
// +/-10 ms similarity search.
struct WsolaConfig {
  std::size_t frame_length = 512;
  std::size_t synthesis_hop = 256;
  std::size_t tolerance = 160;
  WindowKind window = WindowKind::kHann;

  // Throws InvalidArgument unless 0 < synthesis_hop <= frame_length and
  // frame_length is even.
  void validate() const;
};

// Waveform-similarity overlap-add time-scale modification.
//
// Synthesis frames are laid at a fixed hop H_s. Frame m is read from the
// input near m * H_s / r2, shifted by up to +/-tolerance samples to
// maximize normalized cross-correlation with the natural continuation of
// the previously copied frame. Windowed frames are overlap-added and the sum
// is divided by the accumulated window envelope.
//
// Output length is exactly round(r2 * len(w)).
Waveform perturb_tempo(const Waveform& w, TempoFactor r2, const WsolaConfig& cfg = {});

enum class SeverityLevel : int;  // defined in dysaug/severity.h

// The (R1, R2) pair applied by pertubate_signal, optionally tagged with the
// severity preset it came from.
struct PerturbationParams {
  SpeedFactor r1{1.0};
  TempoFactor r2{1.0};
  std::optional<SeverityLevel> severity;
};

// Speed perturbation by r1 followed by WSOLA tempo perturbation by r2 with
// the default config. Output length is round(len * r2 / r1) within a frame.
Waveform pertubate_signal(const Waveform& w, const PerturbationParams& p);

}  // namespace dysaug

#endif  // DYSAUG_TEMPO_WSOLA_H_
