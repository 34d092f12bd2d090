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

#include "prosody/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "prosody/errors.hpp"

namespace prosody {

namespace {

void dump_value(const nlohmann::ordered_json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        out += pad_in;
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), depth + 1, out);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += pad_in;
        dump_value(v[i], depth + 1, out);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case nlohmann::ordered_json::value_t::string:
      out += nlohmann::json(v.get<std::string>()).dump();
      return;
    case nlohmann::ordered_json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case nlohmann::ordered_json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      return;
    case nlohmann::ordered_json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      return;
    case nlohmann::ordered_json::value_t::number_float:
      out += format_g9(v.get<double>());
      return;
    case nlohmann::ordered_json::value_t::null:
      out += "null";
      return;
    default:
      throw Error(ErrorCategory::kData, "unsupported JSON value type");
  }
}

}  // namespace

std::string format_g9(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCategory::kData, "non-finite value in canonical output");
  }
  if (value == 0.0) value = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string canonical_dump(const nlohmann::ordered_json& doc) {
  std::string out;
  dump_value(doc, 0, out);
  out += "\n";
  return out;
}

}  // namespace prosody
