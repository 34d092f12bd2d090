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
#include <set>
#include <span>
#include <string>
#include <vector>

namespace prosody {

// Heuristic syllable count: number of maximal vowel-letter groups
// (a, e, i, o, u, y), minus one for a terminal silent 'e' unless the word
// ends in consonant+"le", floored at 1. Deterministic, no dictionary.
// Throws kToken for empty or non-alphabetic input.
int count_syllables(std::string_view word);

// Same rule, but strips non-letters first and returns 1 when nothing is
// left. For recognizer tokens, which may carry digits or apostrophes.
int syllables_lenient(std::string_view token);

// 0.39 * (words/sentences) + 11.8 * (syllables/words) - 15.59
double flesch_kincaid_grade(int word_count, int sentence_count,
                            int syllable_count);

// Function-word stop list used for lexical density: determiners, pronouns,
// prepositions, conjunctions, auxiliaries, particles.
const std::set<std::string>& default_function_words();

// content words / all words, with a caller-supplied content predicate.
double lexical_density(std::span<const std::string> tokens,
                       const std::function<bool(const std::string&)>& is_content);

// Same, content = not in the default function-word list.
double lexical_density(std::span<const std::string> tokens);

// Letter-only lowercase words of a sentence; punctuation and digits dropped.
std::vector<std::string> letter_words(std::string_view sentence);

// Number of sentence terminators (. ! ? followed by whitespace or end),
// floored at 1 so a fragment still counts as one sentence.
int count_sentences(std::string_view text);

struct SentenceDifficulty {
  std::string sentence;
  int word_count = 0;
  int syllable_count = 0;
  int polysyllabic_words = 0;  // words with more than 4 syllables
  double fk_grade = 0;
  double lexical_density = 0;
};

struct DifficultyAggregates {
  double word_count = 0;
  double syllable_count = 0;
  double polysyllabic_words = 0;
  double fk_grade = 0;
  double lexical_density = 0;
};

struct DifficultyReport {
  std::vector<SentenceDifficulty> sentences;
  DifficultyAggregates means;
};

// Per-sentence metrics plus unweighted means. A sentence with no words
// raises kValidation naming its (0-based) index.
DifficultyReport difficulty_report(std::span<const std::string> sentences);

struct UniformityTolerances {
  double word_count = 2.0;
  double syllable_count = 4.0;
  double polysyllabic_words = 0.5;
  double fk_grade = 1.5;
  double lexical_density = 0.10;
};

struct SetComparison {
  DifficultyAggregates delta;  // absolute differences of the means
  bool uniform = false;
};

SetComparison compare_sets(const DifficultyReport& a,
                           const DifficultyReport& b,
                           const UniformityTolerances& tolerances = {});

}  // namespace prosody
