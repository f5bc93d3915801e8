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

#ifndef DYSAUG_AUDIO_IO_H_
#define DYSAUG_AUDIO_IO_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "dysaug/waveform.h"

namespace dysaug {

// Reads a RIFF/WAVE file holding 16-bit PCM or 32-bit IEEE float samples
// with any number of channels. Channels are mean-downmixed to mono and PCM16
// is scaled by 1/32768. Throws AudioError naming the offending field.
Waveform read_wav(const std::filesystem::path& path);

// Writes mono 16-bit PCM at w.sample_rate. Amplitudes are scaled by 32768,
// rounded to nearest and clamped to [-32767, 32767], so a write/read round
// trip is exact to within one quantization step (1/32768).
void write_wav(const Waveform& w, const std::filesystem::path& path);

// Per-frame arithmetic mean of interleaved channels.
std::vector<float> downmix(std::span<const float> interleaved, int channels);

}  // namespace dysaug

#endif  // DYSAUG_AUDIO_IO_H_
