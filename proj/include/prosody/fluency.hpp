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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "prosody/transcript.hpp"

namespace prosody {

// The four pause kinds: filled/unfilled crossed with short/long.
enum class PauseKind {
  kShortFilled,
  kLongFilled,
  kShortUnfilled,
  kLongUnfilled,
};

const char* pause_kind_name(PauseKind kind);

struct PauseEvent {
  double start_s = 0;
  double end_s = 0;
  double duration_s = 0;
  PauseKind kind = PauseKind::kShortUnfilled;
  std::optional<std::string> filler_token;  // present iff kind is *_filled
};

struct FluencyMetrics {
  double words_per_minute = 0;
  double articulation_rate = 0;  // syllables per second of phonation
  double total_pause_s = 0;
  double phonation_time_s = 0;
  std::map<PauseKind, int> pause_counts;  // always carries all four kinds
};

// {um, uh, er, ah, hmm, mm, erm}
const std::set<std::string>& default_filler_lexicon();

// One token per line; blank lines and '#' comments skipped.
std::set<std::string> load_token_set_file(const std::string& path);

// Words that are not hesitation fillers; these are what accuracy, word
// counts and the intonation vector run on.
std::vector<WordTiming> remove_fillers(const AsrResult& asr,
                                       const std::set<std::string>& fillers);

// Short iff duration < boundary; the boundary value itself is long.
PauseKind classify_pause(double duration_s, bool filled,
                         double short_long_boundary_s);

// Gaps between consecutive content words that last at least min_pause_s.
// A gap that contains a filler token (the filler's own span is part of the
// gap) is a filled pause and records that token.
std::vector<PauseEvent> extract_pauses(const AsrResult& asr,
                                       const std::set<std::string>& fillers,
                                       double min_pause_s = 0.25,
                                       double short_long_boundary_s = 1.0);

// Speaking span is [first content word start, last content word end].
// words_per_minute counts content words over that span; phonation time is
// span minus total pause time; articulation rate divides content-word
// syllables by phonation time.
FluencyMetrics fluency_metrics(
    const AsrResult& asr, std::span<const PauseEvent> pauses,
    const std::function<int(const std::string&)>& syllable_counter,
    const std::set<std::string>& fillers);

}  // namespace prosody
