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

#include "prosody/intonation.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "prosody/errors.hpp"
#include "prosody/serialize.hpp"
#include "prosody/util.hpp"

namespace prosody {

const char* pitch_scale_name(PitchScale scale) {
  return scale == PitchScale::kHz ? "hz" : "semitone";
}

PitchScale pitch_scale_from_name(const std::string& name) {
  if (name == "hz") return PitchScale::kHz;
  if (name == "semitone") return PitchScale::kSemitone;
  throw Error(ErrorCategory::kConfig, "unknown pitch scale: " + name);
}

IntonationProfile make_profile(std::string sentence_id, int n_words) {
  if (n_words < 0) {
    throw Error(ErrorCategory::kValidation, "negative word count");
  }
  IntonationProfile profile;
  profile.sentence_id = std::move(sentence_id);
  profile.sum_f0.assign(static_cast<std::size_t>(n_words), 0.0);
  profile.counts.assign(static_cast<std::size_t>(n_words), 0);
  return profile;
}

WordPitchVector word_pitch_vector(const PitchTrack& track,
                                  std::span<const WordTiming> hyp_words,
                                  std::span<const AlignmentOp> alignment,
                                  std::string sentence_id, PitchScale scale) {
  int n_words = 0;
  for (const AlignmentOp& op : alignment) {
    if (op.ref_index.has_value()) ++n_words;
  }

  WordPitchVector vector;
  vector.sentence_id = std::move(sentence_id);
  vector.values.assign(static_cast<std::size_t>(n_words), std::nullopt);

  for (const AlignmentOp& op : alignment) {
    if (op.kind != AlignKind::kMatch) {
      continue;
    }
    const int hyp = op.hyp_index.value();
    if (hyp < 0 || hyp >= static_cast<int>(hyp_words.size())) {
      throw Error(ErrorCategory::kValidation,
                  "alignment hyp_index out of range");
    }
    const WordTiming& word = hyp_words[static_cast<std::size_t>(hyp)];

    double sum = 0;
    int count = 0;
    for (std::size_t i = 0; i < track.size(); ++i) {
      if (!track.voiced[i]) continue;
      const double t = track.frame_times_s[i];
      if (t < word.start_s || t > word.end_s) continue;
      const double f0 = track.f0_hz[i];
      sum += scale == PitchScale::kHz ? f0 : 12.0 * std::log2(f0 / 100.0);
      ++count;
    }
    if (count > 0) {
      vector.values[static_cast<std::size_t>(op.ref_index.value())] =
          sum / count;
    }
  }
  return vector;
}

void train_profile(IntonationProfile& profile, const WordPitchVector& vector) {
  if (profile.sentence_id != vector.sentence_id) {
    throw Error(ErrorCategory::kProfileMismatch,
                "sentence id mismatch: profile '" + profile.sentence_id +
                    "' vs vector '" + vector.sentence_id + "'");
  }
  if (profile.n_words() != vector.n_words()) {
    throw Error(ErrorCategory::kProfileMismatch,
                "word count mismatch for sentence '" + profile.sentence_id +
                    "': profile has " + std::to_string(profile.n_words()) +
                    ", vector has " + std::to_string(vector.n_words()));
  }
  for (std::size_t i = 0; i < vector.values.size(); ++i) {
    if (vector.values[i].has_value()) {
      profile.sum_f0[i] += *vector.values[i];
      profile.counts[i] += 1;
    }
  }
  profile.trained_by += 1;
}

std::optional<double> sim_intonation(const IntonationProfile& profile,
                                     const WordPitchVector& test,
                                     int min_points) {
  if (profile.sentence_id != test.sentence_id ||
      profile.n_words() != test.n_words()) {
    throw Error(ErrorCategory::kProfileMismatch,
                "profile and test vector describe different sentences");
  }

  std::vector<double> xs, ys;
  for (int i = 0; i < profile.n_words(); ++i) {
    const auto mean = profile.word_mean(i);
    const auto& value = test.values[static_cast<std::size_t>(i)];
    if (mean.has_value() && value.has_value()) {
      xs.push_back(*mean);
      ys.push_back(*value);
    }
  }
  if (static_cast<int>(xs.size()) < min_points) {
    return std::nullopt;
  }

  const std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0 || syy <= 0) {
    return std::nullopt;  // constant sequence, correlation undefined
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ProfileStore ProfileStore::load_or_empty(const std::string& path,
                                         PitchScale expected_scale) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error&) {
    ProfileStore store;
    store.scale_ = expected_scale;
    return store;
  }
  return parse(text, expected_scale);
}

ProfileStore ProfileStore::parse(std::string_view text,
                                 PitchScale expected_scale) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("profiles") ||
      !doc["profiles"].is_array()) {
    throw Error(ErrorCategory::kSchema, "malformed profile store");
  }

  ProfileStore store;
  store.scale_ = expected_scale;
  if (doc.contains("scale")) {
    const PitchScale file_scale =
        pitch_scale_from_name(doc["scale"].get<std::string>());
    if (file_scale != expected_scale) {
      throw Error(ErrorCategory::kConfig,
                  std::string("profile store was trained on the '") +
                      pitch_scale_name(file_scale) +
                      "' scale but the configuration asks for '" +
                      pitch_scale_name(expected_scale) + "'");
    }
  }

  for (const auto& p : doc["profiles"]) {
    if (!p.contains("sentence_id") || !p.contains("n_words") ||
        !p.contains("per_word") || !p.contains("trained_by")) {
      throw Error(ErrorCategory::kSchema, "malformed profile entry");
    }
    IntonationProfile profile =
        make_profile(p["sentence_id"].get<std::string>(),
                     p["n_words"].get<int>());
    profile.trained_by = p["trained_by"].get<int>();
    const auto& per_word = p["per_word"];
    if (!per_word.is_array() ||
        static_cast<int>(per_word.size()) != profile.n_words()) {
      throw Error(ErrorCategory::kSchema,
                  "per_word length disagrees with n_words");
    }
    for (std::size_t i = 0; i < per_word.size(); ++i) {
      profile.sum_f0[i] = per_word[i].at("sum_f0_hz").get<double>();
      profile.counts[i] = per_word[i].at("count").get<int>();
      if (profile.counts[i] > profile.trained_by) {
        throw Error(ErrorCategory::kValidation,
                    "per-word count exceeds trained_by");
      }
    }
    store.profiles_.emplace(profile.sentence_id, std::move(profile));
  }
  return store;
}

std::string ProfileStore::serialize() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["scale"] = pitch_scale_name(scale_);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& [id, profile] : profiles_) {
    nlohmann::ordered_json entry;
    entry["sentence_id"] = id;
    entry["n_words"] = profile.n_words();
    nlohmann::ordered_json per_word = nlohmann::ordered_json::array();
    for (int i = 0; i < profile.n_words(); ++i) {
      per_word.push_back(
          {{"sum_f0_hz", profile.sum_f0[static_cast<std::size_t>(i)]},
           {"count", profile.counts[static_cast<std::size_t>(i)]}});
    }
    entry["per_word"] = std::move(per_word);
    entry["trained_by"] = profile.trained_by;
    list.push_back(std::move(entry));
  }
  doc["profiles"] = std::move(list);
  return canonical_dump(doc);
}

void ProfileStore::save(const std::string& path) const {
  write_file_atomic(path, serialize());
}

void ProfileStore::train(const WordPitchVector& vector) {
  auto it = profiles_.find(vector.sentence_id);
  if (it == profiles_.end()) {
    it = profiles_
             .emplace(vector.sentence_id,
                      make_profile(vector.sentence_id, vector.n_words()))
             .first;
  }
  train_profile(it->second, vector);
}

void ProfileStore::merge(const ProfileStore& other) {
  if (scale_ != other.scale_) {
    throw Error(ErrorCategory::kConfig, "cannot merge stores on different scales");
  }
  for (const auto& [id, theirs] : other.profiles_) {
    auto it = profiles_.find(id);
    if (it == profiles_.end()) {
      profiles_.emplace(id, theirs);
      continue;
    }
    IntonationProfile& ours = it->second;
    if (ours.n_words() != theirs.n_words()) {
      throw Error(ErrorCategory::kProfileMismatch,
                  "word count mismatch for sentence '" + id + "'");
    }
    for (std::size_t i = 0; i < ours.sum_f0.size(); ++i) {
      ours.sum_f0[i] += theirs.sum_f0[i];
      ours.counts[i] += theirs.counts[i];
    }
    ours.trained_by += theirs.trained_by;
  }
}

const IntonationProfile* ProfileStore::find(
    const std::string& sentence_id) const {
  auto it = profiles_.find(sentence_id);
  return it == profiles_.end() ? nullptr : &it->second;
}

}  // namespace prosody
