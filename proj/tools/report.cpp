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

#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace plonka::cli {

namespace {

std::string scalar(Json const& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(Json const& v) { return !v.is_object() && !v.is_array(); }

bool multiline(Json const& v) {
  return v.is_string() && v.get<std::string>().find('\n') != std::string::npos;
}

// Short scalars that stay unambiguous inside "[a, b]".
bool inline_item(Json const& v) {
  if (!is_scalar(v)) return false;
  if (!v.is_string()) return true;
  std::string const& s = v.get_ref<std::string const&>();
  return s.size() <= 40 && s.find(", ") == std::string::npos && s.find('\n') == std::string::npos;
}

void render(Json const& v, std::string const& pad, std::ostringstream& os);

void render_entry(std::string const& key, Json const& v, std::string const& pad,
                  std::ostringstream& os) {
  std::string const head = key == "-" ? "- " : key + ": ";
  if (multiline(v)) {
    os << pad << head << "|\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
  } else if (is_scalar(v)) {
    os << pad << head << scalar(v) << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), inline_item)) {
    os << pad << head << "[";
    bool first = true;
    for (auto const& e : v) {
      os << (first ? "" : ", ") << scalar(e);
      first = false;
    }
    os << "]\n";
  } else if (v.empty()) {
    os << pad << head << (v.is_array() ? "[]" : "{}") << "\n";
  } else {
    os << pad << key << ":\n";
    render(v, pad + "  ", os);
  }
}

void render(Json const& v, std::string const& pad, std::ostringstream& os) {
  if (v.is_object()) {
    for (auto const& [k, e] : v.items()) render_entry(k, e, pad, os);
    return;
  }
  for (auto const& e : v) {
    if (e.is_object() && !e.empty()) {
      std::ostringstream inner;
      render(e, pad + "  ", inner);
      std::string s = inner.str();
      s.replace(pad.size(), 2, "- ");
      os << s;
    } else {
      render_entry("-", e, pad, os);
    }
  }
}

}  // namespace

std::string render_text(Json const& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace plonka::cli
