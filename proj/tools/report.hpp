// Copyright 2026 The Plonka Workbench Authors. All Rights Reserved.
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
// =============================================================================

// Command reports: one JSON document per invocation, rendered either as JSON
// or as indented text.

#ifndef PLONKA_TOOLS_REPORT_HPP_
#define PLONKA_TOOLS_REPORT_HPP_

#include <string>

#include "json.hpp"

namespace plonka::cli {

using Json = nlohmann::ordered_json;

enum class Status { kAffirmative = 0, kNegative = 1, kUnknown = 2, kError = 3 };

inline char const* status_name(Status s) {
  switch (s) {
    case Status::kAffirmative: return "affirmative";
    case Status::kNegative: return "negative";
    case Status::kUnknown: return "unknown";
    case Status::kError: return "error";
  }
  return "error";
}

// Scalars print inline, multi-line strings as indented blocks, arrays of
// scalars as bracketed lists and everything else as nested sections.
std::string render_text(Json const& report);

}  // namespace plonka::cli

#endif  // PLONKA_TOOLS_REPORT_HPP_
