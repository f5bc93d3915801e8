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

#include "dysaug/audio_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "dysaug/error.h"

namespace dysaug {
namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::string format_tag_name(std::uint16_t tag) {
  switch (tag) {
    case 0x0001: return "PCM";
    case 0x0002: return "MS-ADPCM";
    case 0x0003: return "IEEE float";
    case 0x0006: return "A-law";
    case 0x0007: return "mu-law";
    case 0x0011: return "IMA-ADPCM";
    case 0x0050: return "MPEG";
    case 0x0055: return "MP3";
    default: return "unknown";
  }
}

std::string hex16(std::uint16_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase;
  os.width(4);
  os.fill('0');
  os << v;
  return os.str();
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

[[noreturn]] void malformed(const std::filesystem::path& path, const std::string& what) {
  throw AudioError(AudioError::Kind::kMalformedHeader,
                   path.string() + ": malformed RIFF/WAVE header: " + what);
}

[[noreturn]] void unsupported(const std::filesystem::path& path, const std::string& what) {
  throw AudioError(AudioError::Kind::kUnsupportedCodec,
                   path.string() + ": unsupported codec: " + what);
}

bool looks_like_mpeg(const std::string& bytes) {
  if (bytes.size() >= 3 && bytes.compare(0, 3, "ID3") == 0) return true;
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFF &&
         (static_cast<unsigned char>(bytes[1]) & 0xE0) == 0xE0;
}

}  // namespace

std::vector<float> downmix(std::span<const float> interleaved, int channels) {
  if (channels <= 0) throw InvalidArgument("channel count must be positive");
  if (channels == 1) return {interleaved.begin(), interleaved.end()};
  const std::size_t frames = interleaved.size() / channels;
  std::vector<float> mono(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (int c = 0; c < channels; ++c) sum += interleaved[f * channels + c];
    mono[f] = static_cast<float>(sum / channels);
  }
  return mono;
}

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw AudioError(AudioError::Kind::kMissingFile,
                     path.string() + ": cannot open file");
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());

  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0) {
    if (looks_like_mpeg(bytes))
      unsupported(path, "format tag MP3 (MPEG audio stream, not a RIFF/WAVE container)");
    malformed(path, "chunk id is not 'RIFF'");
  }
  if (bytes.compare(8, 4, "WAVE") != 0) malformed(path, "RIFF form type is not 'WAVE'");

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::string id = bytes.substr(pos, 4);
    const std::uint32_t size = get_u32(data + pos + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = bytes.size() - body;
    if (id == "fmt ") {
      if (size < 16 || size > avail) malformed(path, "fmt chunk size " + std::to_string(size));
      format_tag = get_u16(data + body);
      channels = get_u16(data + body + 2);
      rate = get_u32(data + body + 4);
      bits = get_u16(data + body + 14);
      if (format_tag == kFormatExtensible) {
        if (size < 40) malformed(path, "WAVE_FORMAT_EXTENSIBLE fmt chunk size " + std::to_string(size));
        // First two bytes of the sub-format GUID carry the real format tag.
        format_tag = get_u16(data + body + 24);
      }
      have_fmt = true;
    } else if (id == "data") {
      pcm = data + body;
      // Streamed writers sometimes leave the data size unset; clamp to file.
      pcm_bytes = std::min<std::size_t>(size, avail);
      break;
    }
    pos = body + size + (size & 1);
  }

  if (!have_fmt) malformed(path, "missing 'fmt ' chunk");
  if (pcm == nullptr) malformed(path, "missing 'data' chunk");
  if (channels == 0) malformed(path, "channel count 0");
  if (rate == 0) malformed(path, "sample rate 0");

  const bool is_pcm16 = format_tag == kFormatPcm && bits == 16;
  const bool is_float32 = format_tag == kFormatFloat && bits == 32;
  if (!is_pcm16 && !is_float32) {
    unsupported(path, "format tag " + hex16(format_tag) + " (" + format_tag_name(format_tag) +
                          ") with " + std::to_string(bits) +
                          " bits per sample; expected PCM16 or float32");
  }

  const std::size_t width = bits / 8;
  const std::size_t count = pcm_bytes / width;
  std::vector<float> interleaved(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned char* p = pcm + i * width;
    if (is_pcm16) {
      interleaved[i] = static_cast<float>(static_cast<std::int16_t>(get_u16(p)) / 32768.0);
    } else {
      std::uint32_t raw = get_u32(p);
      float v;
      std::memcpy(&v, &raw, sizeof v);
      interleaved[i] = std::isfinite(v) ? v : 0.0f;
    }
  }

  Waveform w;
  w.sample_rate = static_cast<int>(rate);
  w.samples = downmix(interleaved, channels);
  clip(w.samples);
  return w;
}

void write_wav(const Waveform& w, const std::filesystem::path& path) {
  validate(w, /*require_samples=*/false);
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(w.samples.size() * 2);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (float s : w.samples) {
    // Same 1/32768 step as read_wav, clamped to the symmetric range
    // [-32767, 32767] so +1.0 cannot overflow.
    const double scaled = std::round(static_cast<double>(s) * 32768.0);
    const auto q = static_cast<std::int16_t>(std::clamp(scaled, -32767.0, 32767.0));
    put_u16(out, static_cast<std::uint16_t>(q));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw AudioError(AudioError::Kind::kUnwritable, path.string() + ": cannot open for writing");
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file)
    throw AudioError(AudioError::Kind::kUnwritable, path.string() + ": write failed");
}

}  // namespace dysaug
