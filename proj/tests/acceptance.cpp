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

// One line per acceptance criterion; exits non-zero when any fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "plonka/scenarios.hpp"

int main(int argc, char** argv) {
  plonka::ScenarioOptions options;
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (auto const& s : plonka::scenarios()) {
    auto start = std::chrono::steady_clock::now();
    plonka::ScenarioResult r = plonka::run_scenario(s.id, options);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %-24s %s (%.2fs)\n", r.criterion, r.passed ? "PASS" : "FAIL",
                r.id.c_str(), r.summary.c_str(), secs);
    if (verbose || !r.passed) {
      for (auto const& f : r.findings) std::printf("    %s\n", f.c_str());
    }
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(plonka::scenarios().size()) - failed,
              plonka::scenarios().size());
  return failed == 0 ? 0 : 1;
}
