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

// Named end-to-end checks shared by the acceptance binary and the
// `verify-paper` command.

#ifndef PLONKA_SCENARIOS_HPP_
#define PLONKA_SCENARIOS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plonka/algebra.hpp"

namespace plonka {

struct ScenarioOptions {
  std::uint64_t seed = 20260101;
  Limits limits;
};

struct ScenarioResult {
  std::string id;
  std::size_t criterion = 0;
  std::string title;
  bool passed = false;
  std::string summary;                // one line
  std::vector<std::string> findings;  // individual checks, "ok: ..." or "FAIL: ..."
};

struct ScenarioInfo {
  std::string id;
  std::size_t criterion;
  std::string title;
};

std::vector<ScenarioInfo> const& scenarios();

// Throws ValidationError for an unknown id.
ScenarioResult run_scenario(std::string_view id, ScenarioOptions const& options = {});

// The curated inferences derived by proof search in the calculus scenario,
// as (premises, goal) in the boolean signature.
std::vector<std::pair<std::vector<std::string>, std::string>> curated_pwk_inferences();

}  // namespace plonka

#endif  // PLONKA_SCENARIOS_HPP_
