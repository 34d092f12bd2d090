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

#include <stdexcept>
#include <string>

namespace prosody {

// Every failure the library reports carries one of these categories. The CLI
// prints the category string on stderr and maps it to an exit code
// (1 usage, 2 missing input, 3 validation-like, 4 schema-like).
enum class ErrorCategory {
  kUsage,
  kInputMissing,
  kFormat,
  kUnsupportedFormat,
  kValidation,
  kConfig,
  kData,
  kInsufficientData,
  kEmptyUtterance,
  kDegenerateTiming,
  kProfileMismatch,
  kDegenerateVariance,
  kEmptySet,
  kToken,
  kSchema,
  kSchemaMismatch,
  kModel,
};

const char* category_name(ErrorCategory category);
int category_exit_code(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace prosody
