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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prosody {

struct WordTiming {
  std::string token;  // lowercase, outer punctuation stripped
  double start_s = 0;
  double end_s = 0;
  double confidence = 1.0;
};

// Output of the external recognizer, already validated: words sorted by
// start time and non-overlapping.
struct AsrResult {
  std::vector<WordTiming> words;
  double utterance_confidence = 1.0;
  std::string source_id;
};

enum class AlignKind { kMatch, kSubstitute, kInsert, kDelete };

const char* align_kind_name(AlignKind kind);

// One step of a word-level alignment. match/substitute carry both indices,
// insert only hyp_index, delete only ref_index.
struct AlignmentOp {
  AlignKind kind;
  std::optional<int> ref_index;
  std::optional<int> hyp_index;
};

struct Alignment {
  int distance = 0;
  std::vector<AlignmentOp> ops;
};

// Lowercases ASCII and strips leading/trailing non-alphanumeric characters;
// inner characters (apostrophes, hyphens) survive.
std::string normalize_token(std::string_view raw);

// Whitespace-splits and normalizes; tokens that normalize to nothing are
// dropped.
std::vector<std::string> tokenize_text(std::string_view text);

// Parses the recognizer adapter document:
//   { "source_id": str, "utterance_confidence": num,
//     "words": [ { "token": str, "start_s": num, "end_s": num,
//                  "confidence": num } ] }
// Missing/ill-typed fields raise kSchema naming the field; bad timings or
// overlaps raise kValidation.
AsrResult parse_asr_json(std::string_view text);

// Word-level Levenshtein with unit costs. The backtrace is deterministic:
// match > substitute > delete > insert.
Alignment align_words(std::span<const std::string> ref,
                      std::span<const std::string> hyp);

// 1 - distance / max(|ref|, |hyp|), clamped to [0, 1]. Empty ref is an error.
double accuracy_score(std::span<const std::string> ref,
                      std::span<const std::string> hyp);

}  // namespace prosody
