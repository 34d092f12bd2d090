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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prosody/pitch.hpp"
#include "prosody/transcript.hpp"

namespace prosody {

// Per-word pitch statistic. kHz is the default; kSemitone maps every voiced
// frame through 12*log2(f0/100) before averaging (the correlation is
// offset-invariant either way, the log scale just weights intervals
// relatively).
enum class PitchScale { kHz, kSemitone };

const char* pitch_scale_name(PitchScale scale);
PitchScale pitch_scale_from_name(const std::string& name);

// Mean pitch per reference-word slot for one reading. Slots the speaker
// skipped, substituted, or produced without any voiced frames stay absent.
struct WordPitchVector {
  std::string sentence_id;
  std::vector<std::optional<double>> values;

  int n_words() const { return static_cast<int>(values.size()); }
};

// Streaming (sum, count) per word slot, accumulated over training speakers.
// Order of training is irrelevant; merging two profiles adds them.
struct IntonationProfile {
  std::string sentence_id;
  std::vector<double> sum_f0;
  std::vector<int> counts;
  int trained_by = 0;

  int n_words() const { return static_cast<int>(sum_f0.size()); }
  std::optional<double> word_mean(int index) const {
    if (counts[static_cast<std::size_t>(index)] <= 0) return std::nullopt;
    return sum_f0[static_cast<std::size_t>(index)] /
           counts[static_cast<std::size_t>(index)];
  }
};

IntonationProfile make_profile(std::string sentence_id, int n_words);

// Pools voiced-frame pitch inside each matched hypothesis word's span and
// writes it into the reference slot. Substituted and deleted reference words
// get no entry: their pitch belongs to a different word.
WordPitchVector word_pitch_vector(const PitchTrack& track,
                                  std::span<const WordTiming> hyp_words,
                                  std::span<const AlignmentOp> alignment,
                                  std::string sentence_id,
                                  PitchScale scale = PitchScale::kHz);

// Accumulates one training reading into the profile. Sentence id or length
// mismatch raises kProfileMismatch.
void train_profile(IntonationProfile& profile, const WordPitchVector& vector);

// Pearson correlation between the profile means and the test vector over
// word slots present on both sides. Absent (not an error) when fewer than
// min_points slots overlap or either paired sequence is constant.
std::optional<double> sim_intonation(const IntonationProfile& profile,
                                     const WordPitchVector& test,
                                     int min_points = 3);

// One profile per sentence, persisted as JSON and merged additively.
class ProfileStore {
 public:
  // Missing file -> empty store (training creates, scoring degrades to an
  // absent feature).
  static ProfileStore load_or_empty(const std::string& path,
                                    PitchScale expected_scale);
  static ProfileStore parse(std::string_view text, PitchScale expected_scale);

  void save(const std::string& path) const;
  std::string serialize() const;

  void train(const WordPitchVector& vector);
  void merge(const ProfileStore& other);

  const IntonationProfile* find(const std::string& sentence_id) const;
  std::size_t size() const { return profiles_.size(); }
  PitchScale scale() const { return scale_; }
  void set_scale(PitchScale scale) { scale_ = scale; }

 private:
  std::map<std::string, IntonationProfile> profiles_;
  PitchScale scale_ = PitchScale::kHz;
};

}  // namespace prosody
