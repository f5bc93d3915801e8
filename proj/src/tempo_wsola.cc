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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "dysaug/error.h"

namespace dysaug {
namespace {

// Hann window sampled at half-integer offsets. Shifted copies at a hop of
// length/2 still sum to exactly one, and no tap is zero, so the envelope
// normalization never divides by zero inside the signal.
std::vector<double> hann(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t n = 0; n < length; ++n) {
    const double s = std::sin(std::numbers::pi * (static_cast<double>(n) + 0.5) /
                              static_cast<double>(length));
    w[n] = s * s;
  }
  return w;
}

double energy(const double* x, std::size_t n) {
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) e += x[i] * x[i];
  return e;
}

double normalized_xcorr(const double* a, const double* b, std::size_t n, double energy_b) {
  double dot = 0.0, energy_a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    energy_a += a[i] * a[i];
  }
  const double denom = std::sqrt(energy_a * energy_b);
  return denom > 1e-20 ? dot / denom : 0.0;
}

}  // namespace

TempoFactor::TempoFactor(double r2) : value_(r2) {
  if (!(r2 >= kMin && r2 <= kMax))
    throw InvalidArgument("tempo factor r2=" + std::to_string(r2) + " outside [0.25, 4.0]");
}

void WsolaConfig::validate() const {
  if (frame_length == 0 || frame_length % 2 != 0)
    throw InvalidArgument("WSOLA frame_length must be positive and even, got " +
                          std::to_string(frame_length));
  if (synthesis_hop == 0 || synthesis_hop > frame_length)
    throw InvalidArgument("WSOLA synthesis_hop must be in (0, frame_length], got " +
                          std::to_string(synthesis_hop));
}

Waveform perturb_tempo(const Waveform& w, TempoFactor r2, const WsolaConfig& cfg) {
  dysaug::validate(w);
  cfg.validate();
  const std::size_t frame = cfg.frame_length;
  const std::size_t n_in = w.size();
  if (n_in < frame)
    throw InvalidArgument("input of " + std::to_string(n_in) +
                          " samples is shorter than one WSOLA frame (" +
                          std::to_string(frame) + ")");

  const auto n_out = static_cast<std::size_t>(std::llround(r2.value() * static_cast<double>(n_in)));
  const std::size_t hop_s = cfg.synthesis_hop;
  const double hop_a = static_cast<double>(hop_s) / r2.value();
  const auto tol = static_cast<std::ptrdiff_t>(cfg.tolerance);
  const auto last_start = static_cast<std::ptrdiff_t>(n_in);

  // Zero tail so any start position in [0, n_in] can read a full frame.
  std::vector<double> x(n_in + frame, 0.0);
  std::copy(w.samples.begin(), w.samples.end(), x.begin());

  const std::vector<double> window = hann(frame);
  std::vector<double> acc(n_out + frame, 0.0);
  std::vector<double> envelope(n_out + frame, 0.0);

  std::ptrdiff_t prev = 0;
  for (std::size_t m = 0; m * hop_s < n_out; ++m) {
    const auto nominal = std::min<std::ptrdiff_t>(
        last_start, std::llround(static_cast<double>(m) * hop_a));
    std::ptrdiff_t start = nominal;
    if (m > 0 && tol > 0) {
      const std::ptrdiff_t natural =
          std::min<std::ptrdiff_t>(last_start, prev + static_cast<std::ptrdiff_t>(hop_s));
      const double* target = x.data() + natural;
      const double target_energy = energy(target, frame);
      double best = -2.0;
      auto consider = [&](std::ptrdiff_t candidate) {
        if (candidate < 0 || candidate > last_start) return;
        const double score = normalized_xcorr(x.data() + candidate, target, frame, target_energy);
        // A larger shift must win by a margin, so exact ties keep the smaller one.
        if (score > best + 1e-12) {
          best = score;
          start = candidate;
        }
      };
      consider(nominal);
      for (std::ptrdiff_t d = 1; d <= tol; ++d) {
        consider(nominal + d);
        consider(nominal - d);
      }
    }

    const std::size_t out_pos = m * hop_s;
    for (std::size_t i = 0; i < frame; ++i) {
      acc[out_pos + i] += window[i] * x[static_cast<std::size_t>(start) + i];
      envelope[out_pos + i] += window[i];
    }
    prev = start;
  }

  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(n_out);
  for (std::size_t i = 0; i < n_out; ++i) {
    const double v = envelope[i] > 1e-9 ? acc[i] / envelope[i] : 0.0;
    out.samples[i] = static_cast<float>(std::clamp(v, -1.0, 1.0));
  }
  return out;
}

Waveform pertubate_signal(const Waveform& w, const PerturbationParams& p) {
  return perturb_tempo(perturb_speed(w, p.r1), p.r2, WsolaConfig{});
}

}  // namespace dysaug
