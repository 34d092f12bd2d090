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

#include <string>

#include <json.hpp>

namespace prosody {

// All numbers that end up in canonical output files go through this: %.9g,
// negative zero collapsed. Nine significant digits keep serialized documents
// byte-comparable across platforms.
std::string format_g9(double value);

// Deterministic pretty-printer for ordered_json. nlohmann's own dump() prints
// shortest-round-trip doubles, which depend on every stray ulp; this one
// routes every float through format_g9.
std::string canonical_dump(const nlohmann::ordered_json& doc);

}  // namespace prosody
