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

#include <string>
#include <vector>

#include "prosody/audio.hpp"

namespace prosody {

// Per-frame F0 estimates. Unvoiced frames carry f0_hz == 0 as a sentinel and
// must never enter any average; voiced frames always lie inside the search
// band the track was made with.
struct PitchTrack {
  std::vector<double> frame_times_s;  // frame centers
  std::vector<double> f0_hz;
  std::vector<bool> voiced;
  double hop_s = 0;

  std::size_t size() const { return frame_times_s.size(); }
};

// YIN: cumulative mean normalized difference over lags in
// [rate/f_max, rate/f_min], absolute threshold for voicing, parabolic
// interpolation of the selected lag, then a 3-frame median filter to knock
// out isolated octave spikes.
//
// Requires 0 < f_min < f_max < rate/2 and frame_s >= 2/f_min (the window has
// to hold two periods of the lowest pitch).
PitchTrack track_pitch(const AudioClip& clip, double f_min = 60.0,
                       double f_max = 400.0, double frame_s = 0.040,
                       double hop_s = 0.010, double voicing_threshold = 0.15);

// Debug dump: one "time_s,f0_hz,voiced" row per frame.
std::string pitch_track_csv(const PitchTrack& track);

}  // namespace prosody
