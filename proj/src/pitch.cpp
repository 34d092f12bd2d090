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

#include "prosody/pitch.hpp"

#include <algorithm>
#include <cmath>

#include "prosody/errors.hpp"
#include "prosody/serialize.hpp"

namespace prosody {

namespace {

// Difference function d(tau) = sum_j (x[j] - x[j+tau])^2 over a fixed
// integration window, so every lag is averaged over the same number of terms.
void difference(const float* frame, std::size_t window, std::size_t tau_max,
                std::vector<double>& d) {
  d.assign(tau_max + 1, 0.0);
  for (std::size_t tau = 1; tau <= tau_max; ++tau) {
    double acc = 0;
    for (std::size_t j = 0; j < window; ++j) {
      const double delta = static_cast<double>(frame[j]) -
                           static_cast<double>(frame[j + tau]);
      acc += delta * delta;
    }
    d[tau] = acc;
  }
}

// Cumulative mean normalization: d'(tau) = d(tau) * tau / sum(d(1..tau)).
// Leaves 1.0 everywhere for an all-zero window so silence stays unvoiced.
void cumulative_mean_normalize(std::vector<double>& d) {
  double running = 0;
  d[0] = 1.0;
  for (std::size_t tau = 1; tau < d.size(); ++tau) {
    running += d[tau];
    d[tau] = running > 0 ? d[tau] * static_cast<double>(tau) / running : 1.0;
  }
}

// Parabolic interpolation around the selected lag.
double refine_lag(const std::vector<double>& d, std::size_t tau) {
  if (tau < 1 || tau + 1 >= d.size()) {
    return static_cast<double>(tau);
  }
  const double s0 = d[tau - 1];
  const double s1 = d[tau];
  const double s2 = d[tau + 1];
  const double denom = 2.0 * (s0 - 2.0 * s1 + s2);
  if (std::abs(denom) < 1e-30) {
    return static_cast<double>(tau);
  }
  const double offset = (s0 - s2) / denom;
  return static_cast<double>(tau) + std::clamp(offset, -1.0, 1.0);
}

double median3(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

PitchTrack track_pitch(const AudioClip& clip, double f_min, double f_max,
                       double frame_s, double hop_s,
                       double voicing_threshold) {
  if (clip.sample_rate_hz <= 0) {
    throw Error(ErrorCategory::kValidation, "clip has non-positive sample rate");
  }
  const double rate = clip.sample_rate_hz;
  if (!(f_min > 0) || !(f_min < f_max) || !(f_max < rate / 2)) {
    throw Error(ErrorCategory::kConfig,
                "need 0 < f_min < f_max < sample_rate/2");
  }
  if (frame_s * f_min < 2.0) {
    throw Error(ErrorCategory::kConfig,
                "frame too short: need frame_s >= 2/f_min");
  }
  if (!(hop_s > 0)) {
    throw Error(ErrorCategory::kConfig, "hop_s must be positive");
  }
  if (!(voicing_threshold > 0)) {
    throw Error(ErrorCategory::kConfig, "voicing_threshold must be positive");
  }

  const std::size_t frame_len =
      static_cast<std::size_t>(std::lround(frame_s * rate));
  const std::size_t hop_len =
      static_cast<std::size_t>(std::lround(hop_s * rate));
  const std::size_t tau_min = static_cast<std::size_t>(
      std::max(2.0, std::ceil(rate / f_max)));
  const std::size_t tau_max =
      static_cast<std::size_t>(std::floor(rate / f_min));
  if (tau_max + tau_min >= frame_len) {
    throw Error(ErrorCategory::kConfig, "frame too short for the search band");
  }
  const std::size_t window = frame_len - tau_max;

  PitchTrack track;
  track.hop_s = hop_s;
  if (clip.samples.size() < frame_len) {
    return track;
  }

  const std::size_t n_frames = (clip.samples.size() - frame_len) / hop_len + 1;
  track.frame_times_s.resize(n_frames);
  track.f0_hz.assign(n_frames, 0.0);
  track.voiced.assign(n_frames, false);

  std::vector<double> d;
  for (std::size_t i = 0; i < n_frames; ++i) {
    track.frame_times_s[i] =
        static_cast<double>(i) * hop_s + frame_s / 2.0;

    const float* frame = clip.samples.data() + i * hop_len;
    difference(frame, window, tau_max, d);
    cumulative_mean_normalize(d);

    // Absolute threshold: take the first lag that dips under the threshold,
    // then slide down to the local minimum. Picking the first dip (the
    // shortest period) is what keeps strong harmonics from halving the pitch.
    std::size_t tau = 0;
    for (std::size_t t = tau_min; t <= tau_max; ++t) {
      if (d[t] < voicing_threshold) {
        tau = t;
        while (tau + 1 <= tau_max && d[tau + 1] < d[tau]) {
          ++tau;
        }
        break;
      }
    }
    if (tau == 0) {
      continue;  // unvoiced
    }

    const double lag = refine_lag(d, tau);
    track.f0_hz[i] = std::clamp(rate / lag, f_min, f_max);
    track.voiced[i] = true;
  }

  // 3-frame median over voiced runs. Edges and frames without two voiced
  // neighbours keep their raw estimate.
  std::vector<double> filtered = track.f0_hz;
  for (std::size_t i = 1; i + 1 < n_frames; ++i) {
    if (track.voiced[i - 1] && track.voiced[i] && track.voiced[i + 1]) {
      filtered[i] =
          median3(track.f0_hz[i - 1], track.f0_hz[i], track.f0_hz[i + 1]);
    }
  }
  track.f0_hz = std::move(filtered);
  return track;
}

std::string pitch_track_csv(const PitchTrack& track) {
  std::string out = "time_s,f0_hz,voiced\n";
  for (std::size_t i = 0; i < track.size(); ++i) {
    out += format_g9(track.frame_times_s[i]);
    out += ',';
    out += format_g9(track.f0_hz[i]);
    out += ',';
    out += track.voiced[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace prosody
