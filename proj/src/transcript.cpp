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

#include "prosody/transcript.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "prosody/errors.hpp"

namespace prosody {

const char* align_kind_name(AlignKind kind) {
  switch (kind) {
    case AlignKind::kMatch: return "match";
    case AlignKind::kSubstitute: return "substitute";
    case AlignKind::kInsert: return "insert";
    case AlignKind::kDelete: return "delete";
  }
  return "unknown";
}

std::string normalize_token(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  auto is_word_char = [](unsigned char c) { return std::isalnum(c) != 0; };
  while (begin < end && !is_word_char(static_cast<unsigned char>(raw[begin]))) {
    ++begin;
  }
  while (end > begin && !is_word_char(static_cast<unsigned char>(raw[end - 1]))) {
    --end;
  }
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(raw[i]))));
  }
  return out;
}

std::vector<std::string> tokenize_text(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) {
      std::string token = normalize_token(text.substr(i, j - i));
      if (!token.empty()) {
        tokens.push_back(std::move(token));
      }
    }
    i = j;
  }
  return tokens;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& obj,
                                    const std::string& name,
                                    const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw Error(ErrorCategory::kSchema, "missing field '" + where + name + "'");
  }
  return *it;
}

double require_number(const nlohmann::json& obj, const std::string& name,
                      const std::string& where) {
  const auto& v = require_field(obj, name, where);
  if (!v.is_number()) {
    throw Error(ErrorCategory::kSchema,
                "field '" + where + name + "' must be a number");
  }
  return v.get<double>();
}

std::string require_string(const nlohmann::json& obj, const std::string& name,
                           const std::string& where) {
  const auto& v = require_field(obj, name, where);
  if (!v.is_string()) {
    throw Error(ErrorCategory::kSchema,
                "field '" + where + name + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

AsrResult parse_asr_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCategory::kSchema, "input is not a JSON object");
  }

  AsrResult result;
  result.source_id = require_string(doc, "source_id", "");
  result.utterance_confidence = require_number(doc, "utterance_confidence", "");
  if (result.utterance_confidence < 0 || result.utterance_confidence > 1) {
    throw Error(ErrorCategory::kValidation,
                "utterance_confidence must be in [0, 1]");
  }

  const auto& words = require_field(doc, "words", "");
  if (!words.is_array()) {
    throw Error(ErrorCategory::kSchema, "field 'words' must be an array");
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string where = "words[" + std::to_string(i) + "].";
    const auto& w = words[i];
    if (!w.is_object()) {
      throw Error(ErrorCategory::kSchema,
                  "words[" + std::to_string(i) + "] must be an object");
    }
    WordTiming timing;
    timing.token = normalize_token(require_string(w, "token", where));
    timing.start_s = require_number(w, "start_s", where);
    timing.end_s = require_number(w, "end_s", where);
    timing.confidence = require_number(w, "confidence", where);

    if (timing.token.empty()) {
      throw Error(ErrorCategory::kValidation,
                  "words[" + std::to_string(i) +
                      "].token is empty after normalization");
    }
    if (timing.start_s < 0 || timing.start_s >= timing.end_s) {
      throw Error(ErrorCategory::kValidation,
                  "words[" + std::to_string(i) +
                      "] needs 0 <= start_s < end_s");
    }
    if (timing.confidence < 0 || timing.confidence > 1) {
      throw Error(ErrorCategory::kValidation,
                  "words[" + std::to_string(i) +
                      "].confidence must be in [0, 1]");
    }
    result.words.push_back(std::move(timing));
  }

  std::stable_sort(result.words.begin(), result.words.end(),
                   [](const WordTiming& a, const WordTiming& b) {
                     return a.start_s < b.start_s;
                   });
  for (std::size_t i = 0; i + 1 < result.words.size(); ++i) {
    if (result.words[i].end_s > result.words[i + 1].start_s + 1e-9) {
      throw Error(ErrorCategory::kValidation,
                  "word timings overlap around t=" +
                      std::to_string(result.words[i].end_s));
    }
  }
  return result;
}

Alignment align_words(std::span<const std::string> ref,
                      std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();

  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const int del = d[i - 1][j] + 1;
      const int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({sub, del, ins});
    }
  }

  Alignment result;
  result.distance = d[n][m];

  // Backtrace, preferring match > substitute > delete > insert.
  std::size_t i = n, j = m;
  std::vector<AlignmentOp> ops;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        d[i][j] == d[i - 1][j - 1]) {
      ops.push_back({AlignKind::kMatch, static_cast<int>(i - 1),
                     static_cast<int>(j - 1)});
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1 &&
               ref[i - 1] != hyp[j - 1]) {
      ops.push_back({AlignKind::kSubstitute, static_cast<int>(i - 1),
                     static_cast<int>(j - 1)});
      --i, --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ops.push_back({AlignKind::kDelete, static_cast<int>(i - 1), std::nullopt});
      --i;
    } else {
      ops.push_back({AlignKind::kInsert, std::nullopt,
                     static_cast<int>(j - 1)});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  result.ops = std::move(ops);
  return result;
}

double accuracy_score(std::span<const std::string> ref,
                      std::span<const std::string> hyp) {
  if (ref.empty()) {
    throw Error(ErrorCategory::kValidation,
                "reference word sequence is empty");
  }
  const Alignment alignment = align_words(ref, hyp);
  const double denom = static_cast<double>(std::max(ref.size(), hyp.size()));
  const double score = 1.0 - static_cast<double>(alignment.distance) / denom;
  return std::clamp(score, 0.0, 1.0);
}

}  // namespace prosody
