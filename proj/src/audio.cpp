// Copyright 2026 the prosody-score authors
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

#include "prosody/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "prosody/errors.hpp"

namespace prosody {

namespace {

std::uint32_t read_u32le(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) |
         (static_cast<std::uint32_t>(b[off + 1]) << 8) |
         (static_cast<std::uint32_t>(b[off + 2]) << 16) |
         (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

std::uint16_t read_u16le(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

bool chunk_id_is(std::span<const std::uint8_t> b, std::size_t off,
                 const char* id) {
  return std::memcmp(b.data() + off, id, 4) == 0;
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void put_u16le(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

}  // namespace

WavDecodeResult decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !chunk_id_is(bytes, 0, "RIFF") ||
      !chunk_id_is(bytes, 8, "WAVE")) {
    throw Error(ErrorCategory::kFormat, "not a RIFF/WAVE container");
  }

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits_per_sample = 0;
  std::uint32_t sample_rate = 0;
  std::size_t data_off = 0, data_len = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = read_u32le(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      throw Error(ErrorCategory::kFormat, "truncated chunk in WAV file");
    }
    if (chunk_id_is(bytes, pos, "fmt ")) {
      if (chunk_size < 16) {
        throw Error(ErrorCategory::kFormat, "fmt chunk too small");
      }
      format_tag = read_u16le(bytes, body);
      channels = read_u16le(bytes, body + 2);
      sample_rate = read_u32le(bytes, body + 4);
      bits_per_sample = read_u16le(bytes, body + 14);
      have_fmt = true;
    } else if (chunk_id_is(bytes, pos, "data")) {
      data_off = body;
      data_len = chunk_size;
      have_data = true;
    }
    // RIFF pads odd-sized chunks to even boundaries.
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt || !have_data) {
    throw Error(ErrorCategory::kFormat, "missing fmt or data chunk");
  }
  if (format_tag != 1) {
    throw Error(ErrorCategory::kUnsupportedFormat,
                "only PCM (format tag 1) is supported, got tag " +
                    std::to_string(format_tag));
  }
  if (channels != 1) {
    throw Error(ErrorCategory::kUnsupportedFormat,
                "only mono input is supported, got " +
                    std::to_string(channels) + " channels");
  }
  if (bits_per_sample != 16) {
    throw Error(ErrorCategory::kUnsupportedFormat,
                "only 16-bit PCM is supported, got " +
                    std::to_string(bits_per_sample) + " bits");
  }
  if (sample_rate == 0) {
    throw Error(ErrorCategory::kFormat, "sample rate is zero");
  }

  WavDecodeResult result;
  result.clip.sample_rate_hz = static_cast<int>(sample_rate);
  result.nonstandard_sample_rate =
      static_cast<int>(sample_rate) != kExpectedSampleRateHz;

  const std::size_t n = data_len / 2;
  result.clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int16_t raw = static_cast<std::int16_t>(
        read_u16le(bytes, data_off + 2 * i));
    result.clip.samples[i] = static_cast<float>(raw) / 32768.0f;
  }
  return result;
}

std::vector<std::uint8_t> encode_wav(const AudioClip& clip) {
  if (clip.sample_rate_hz <= 0) {
    throw Error(ErrorCategory::kValidation, "clip has non-positive sample rate");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(clip.samples.size());
  const std::uint32_t data_bytes = n * 2;

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  const char* riff = "RIFF";
  out.insert(out.end(), riff, riff + 4);
  put_u32le(out, 36 + data_bytes);
  const char* wavefmt = "WAVEfmt ";
  out.insert(out.end(), wavefmt, wavefmt + 8);
  put_u32le(out, 16);
  put_u16le(out, 1);  // PCM
  put_u16le(out, 1);  // mono
  put_u32le(out, static_cast<std::uint32_t>(clip.sample_rate_hz));
  put_u32le(out, static_cast<std::uint32_t>(clip.sample_rate_hz) * 2);
  put_u16le(out, 2);   // block align
  put_u16le(out, 16);  // bits per sample
  const char* data = "data";
  out.insert(out.end(), data, data + 4);
  put_u32le(out, data_bytes);

  for (float s : clip.samples) {
    long v = std::lrint(static_cast<double>(s) * 32768.0);
    v = std::clamp(v, -32768L, 32767L);
    put_u16le(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  return out;
}

std::vector<SpeechRegion> detect_speech_regions(const AudioClip& clip,
                                                double frame_s, double hop_s,
                                                double rms_threshold) {
  if (clip.sample_rate_hz <= 0) {
    throw Error(ErrorCategory::kValidation, "clip has non-positive sample rate");
  }
  if (!(hop_s > 0) || hop_s > frame_s) {
    throw Error(ErrorCategory::kConfig, "need 0 < hop_s <= frame_s");
  }
  if (!(rms_threshold > 0) || !(rms_threshold < 1)) {
    throw Error(ErrorCategory::kConfig, "rms_threshold must be in (0, 1)");
  }

  const double rate = clip.sample_rate_hz;
  const std::size_t frame_len =
      static_cast<std::size_t>(std::lround(frame_s * rate));
  const std::size_t hop_len =
      static_cast<std::size_t>(std::lround(hop_s * rate));
  if (frame_len == 0 || hop_len == 0 || clip.samples.size() < frame_len) {
    return {};
  }

  const std::size_t n_frames = (clip.samples.size() - frame_len) / hop_len + 1;
  std::vector<double> rms(n_frames);
  std::vector<bool> speech(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0;
    const std::size_t begin = i * hop_len;
    for (std::size_t j = 0; j < frame_len; ++j) {
      const double s = clip.samples[begin + j];
      acc += s * s;
    }
    rms[i] = std::sqrt(acc / static_cast<double>(frame_len));
    speech[i] = rms[i] >= rms_threshold;
  }

  std::vector<SpeechRegion> regions;
  const double duration = clip.duration_s();
  std::size_t i = 0;
  while (i < n_frames) {
    if (!speech[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    double rms_sum = 0;
    while (j < n_frames && speech[j]) {
      rms_sum += rms[j];
      ++j;
    }
    SpeechRegion region;
    region.start_s = static_cast<double>(i * hop_len) / rate;
    region.end_s = std::min(
        static_cast<double>((j - 1) * hop_len + frame_len) / rate, duration);
    region.mean_rms = rms_sum / static_cast<double>(j - i);
    regions.push_back(region);
    i = j;
  }

  // With hop < frame, a one-frame silence between two runs can leave the
  // previous region's tail past the next region's start; clip it so the list
  // stays disjoint.
  for (std::size_t k = 0; k + 1 < regions.size(); ++k) {
    regions[k].end_s = std::min(regions[k].end_s, regions[k + 1].start_s);
  }
  return regions;
}

}  // namespace prosody
