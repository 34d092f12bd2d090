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

#include "prosody/errors.hpp"

namespace prosody {

const char* category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kUsage: return "usage";
    case ErrorCategory::kInputMissing: return "input-missing";
    case ErrorCategory::kFormat: return "format";
    case ErrorCategory::kUnsupportedFormat: return "unsupported-format";
    case ErrorCategory::kValidation: return "validation";
    case ErrorCategory::kConfig: return "config";
    case ErrorCategory::kData: return "data";
    case ErrorCategory::kInsufficientData: return "insufficient-data";
    case ErrorCategory::kEmptyUtterance: return "empty-utterance";
    case ErrorCategory::kDegenerateTiming: return "degenerate-timing";
    case ErrorCategory::kProfileMismatch: return "profile-mismatch";
    case ErrorCategory::kDegenerateVariance: return "degenerate-variance";
    case ErrorCategory::kEmptySet: return "empty-set";
    case ErrorCategory::kToken: return "token";
    case ErrorCategory::kSchema: return "schema";
    case ErrorCategory::kSchemaMismatch: return "schema-mismatch";
    case ErrorCategory::kModel: return "model";
  }
  return "unknown";
}

int category_exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kUsage:
      return 1;
    case ErrorCategory::kInputMissing:
      return 2;
    case ErrorCategory::kSchema:
    case ErrorCategory::kSchemaMismatch:
    case ErrorCategory::kModel:
      return 4;
    default:
      return 3;
  }
}

}  // namespace prosody
