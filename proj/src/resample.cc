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

#include "dysaug/resample.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dysaug/error.h"

namespace dysaug {
namespace {

std::vector<double> build_kernel_table() {
  constexpr int n = SincResampler::kHalfWidth * SincResampler::kPhases;
  std::vector<double> table(n + 2, 0.0);
  const double norm = std::cyl_bessel_i(0.0, SincResampler::kKaiserBeta);
  for (int i = 0; i <= n; ++i) {
    const double u = static_cast<double>(i) / SincResampler::kPhases;
    const double sinc = i == 0 ? 1.0 : std::sin(std::numbers::pi * u) / (std::numbers::pi * u);
    const double x = u / SincResampler::kHalfWidth;
    const double window =
        std::cyl_bessel_i(0.0, SincResampler::kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - x * x))) /
        norm;
    table[i] = sinc * window;
  }
  return table;
}

const std::vector<double>& kernel_table() {
  static const std::vector<double> table = build_kernel_table();
  return table;
}

}  // namespace

double SincResampler::kernel(double t) {
  const double u = std::abs(t) * kPhases;
  if (u >= kHalfWidth * kPhases) return 0.0;
  const auto& table = kernel_table();
  const auto i = static_cast<std::size_t>(u);
  const double frac = u - static_cast<double>(i);
  return table[i] + frac * (table[i + 1] - table[i]);
}

std::vector<float> SincResampler::process(std::span<const float> input, double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio))
    throw InvalidArgument("resampling ratio must be positive and finite");
  if (ratio == 1.0) return {input.begin(), input.end()};

  const auto n_in = static_cast<std::ptrdiff_t>(input.size());
  const auto n_out = static_cast<std::size_t>(std::llround(static_cast<double>(n_in) * ratio));
  const double cutoff = kRolloff * std::min(1.0, ratio);
  const double reach = kHalfWidth / cutoff;  // kernel half-width in input samples

  std::vector<float> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) {
    const double t = static_cast<double>(n) / ratio;
    const auto first = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(std::ceil(t - reach)));
    const auto last = std::min<std::ptrdiff_t>(n_in - 1, static_cast<std::ptrdiff_t>(std::floor(t + reach)));
    double acc = 0.0;
    for (std::ptrdiff_t k = first; k <= last; ++k)
      acc += input[k] * kernel(cutoff * (t - static_cast<double>(k)));
    out[n] = static_cast<float>(std::clamp(cutoff * acc, -1.0, 1.0));
  }
  return out;
}

Waveform resample(const Waveform& w, int target_rate) {
  validate(w, /*require_samples=*/false);
  if (target_rate <= 0)
    throw InvalidArgument("target rate must be positive, got " + std::to_string(target_rate));
  Waveform out;
  out.sample_rate = target_rate;
  out.samples = SincResampler::process(
      w.samples, static_cast<double>(target_rate) / static_cast<double>(w.sample_rate));
  return out;
}

}  // namespace dysaug
