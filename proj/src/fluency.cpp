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

#include "prosody/fluency.hpp"

#include <fstream>

#include "prosody/errors.hpp"

namespace prosody {

const char* pause_kind_name(PauseKind kind) {
  switch (kind) {
    case PauseKind::kShortFilled: return "short_filled";
    case PauseKind::kLongFilled: return "long_filled";
    case PauseKind::kShortUnfilled: return "short_unfilled";
    case PauseKind::kLongUnfilled: return "long_unfilled";
  }
  return "unknown";
}

const std::set<std::string>& default_filler_lexicon() {
  static const std::set<std::string> fillers = {"um", "uh", "er", "ah",
                                                "hmm", "mm", "erm"};
  return fillers;
}

std::set<std::string> load_token_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCategory::kInputMissing, "cannot open file: " + path);
  }
  std::set<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      continue;
    }
    const std::string token = normalize_token(line);
    if (!token.empty()) {
      tokens.insert(token);
    }
  }
  return tokens;
}

std::vector<WordTiming> remove_fillers(const AsrResult& asr,
                                       const std::set<std::string>& fillers) {
  std::vector<WordTiming> content;
  content.reserve(asr.words.size());
  for (const WordTiming& w : asr.words) {
    if (!fillers.contains(w.token)) {
      content.push_back(w);
    }
  }
  return content;
}

PauseKind classify_pause(double duration_s, bool filled,
                         double short_long_boundary_s) {
  const bool is_short = duration_s < short_long_boundary_s;
  if (filled) {
    return is_short ? PauseKind::kShortFilled : PauseKind::kLongFilled;
  }
  return is_short ? PauseKind::kShortUnfilled : PauseKind::kLongUnfilled;
}

std::vector<PauseEvent> extract_pauses(const AsrResult& asr,
                                       const std::set<std::string>& fillers,
                                       double min_pause_s,
                                       double short_long_boundary_s) {
  if (!(min_pause_s > 0)) {
    throw Error(ErrorCategory::kConfig, "min_pause_s must be positive");
  }

  std::vector<WordTiming> content;
  std::vector<WordTiming> filler_words;
  for (const WordTiming& w : asr.words) {
    (fillers.contains(w.token) ? filler_words : content).push_back(w);
  }

  std::vector<PauseEvent> pauses;
  for (std::size_t i = 0; i + 1 < content.size(); ++i) {
    const double gap_start = content[i].end_s;
    const double gap_end = content[i + 1].start_s;
    const double duration = gap_end - gap_start;
    if (duration < min_pause_s) {
      continue;
    }
    // Fillers never overlap real words, so any filler between the two
    // content words lies inside the gap.
    std::optional<std::string> filler_token;
    for (const WordTiming& f : filler_words) {
      if (f.start_s >= gap_start - 1e-9 && f.end_s <= gap_end + 1e-9) {
        filler_token = f.token;
        break;
      }
    }
    PauseEvent event;
    event.start_s = gap_start;
    event.end_s = gap_end;
    event.duration_s = duration;
    event.kind = classify_pause(duration, filler_token.has_value(),
                                short_long_boundary_s);
    event.filler_token = std::move(filler_token);
    pauses.push_back(std::move(event));
  }
  return pauses;
}

FluencyMetrics fluency_metrics(
    const AsrResult& asr, std::span<const PauseEvent> pauses,
    const std::function<int(const std::string&)>& syllable_counter,
    const std::set<std::string>& fillers) {
  const std::vector<WordTiming> content = remove_fillers(asr, fillers);
  if (content.empty()) {
    throw Error(ErrorCategory::kEmptyUtterance,
                "no non-filler words in the utterance");
  }

  const double span = content.back().end_s - content.front().start_s;
  if (!(span > 0)) {
    throw Error(ErrorCategory::kDegenerateTiming,
                "speaking span is not positive");
  }

  FluencyMetrics metrics;
  metrics.pause_counts = {{PauseKind::kShortFilled, 0},
                          {PauseKind::kLongFilled, 0},
                          {PauseKind::kShortUnfilled, 0},
                          {PauseKind::kLongUnfilled, 0}};
  for (const PauseEvent& p : pauses) {
    metrics.total_pause_s += p.duration_s;
    metrics.pause_counts[p.kind] += 1;
  }

  metrics.phonation_time_s = span - metrics.total_pause_s;
  if (!(metrics.phonation_time_s > 0)) {
    throw Error(ErrorCategory::kDegenerateTiming,
                "pauses consume the whole speaking span");
  }

  metrics.words_per_minute =
      60.0 * static_cast<double>(content.size()) / span;

  int syllables = 0;
  for (const WordTiming& w : content) {
    syllables += syllable_counter(w.token);
  }
  metrics.articulation_rate =
      static_cast<double>(syllables) / metrics.phonation_time_s;
  return metrics;
}

}  // namespace prosody
