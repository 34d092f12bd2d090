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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace prosody {

inline constexpr int kExpectedSampleRateHz = 16000;

// Mono PCM signal, samples normalized to [-1, 1] by dividing by 32768.
struct AudioClip {
  std::vector<float> samples;
  int sample_rate_hz = 0;

  double duration_s() const {
    return samples.empty() ? 0.0
                           : static_cast<double>(samples.size()) /
                                 static_cast<double>(sample_rate_hz);
  }
};

struct WavDecodeResult {
  AudioClip clip;
  // Set when the container is valid PCM but not at the expected 16 kHz.
  // The clip is decoded as-is; no resampling happens.
  bool nonstandard_sample_rate = false;
};

// Accepts RIFF/WAVE, format tag 1 (PCM), 16-bit little-endian, 1 channel.
// Malformed containers raise kFormat; stereo/other bit depths raise
// kUnsupportedFormat.
WavDecodeResult decode_wav(std::span<const std::uint8_t> bytes);

// Canonical 44-byte-header writer. decode(encode(clip)) is sample-exact for
// any clip whose samples are multiples of 1/32768 (i.e. anything decoded).
std::vector<std::uint8_t> encode_wav(const AudioClip& clip);

struct SpeechRegion {
  double start_s = 0;
  double end_s = 0;
  double mean_rms = 0;
};

// Frame-wise RMS gate: a frame is speech iff its RMS >= rms_threshold, runs
// of adjacent speech frames merge into one region. Regions come back sorted
// and disjoint. A clip shorter than one frame yields an empty list.
std::vector<SpeechRegion> detect_speech_regions(const AudioClip& clip,
                                                double frame_s = 0.030,
                                                double hop_s = 0.010,
                                                double rms_threshold = 0.02);

}  // namespace prosody
