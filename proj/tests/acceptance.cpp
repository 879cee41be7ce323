// Copyright 2026 The Authors.
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

// Runs the twelve acceptance checks and prints one line per check.

#include <cstdio>

#include "osforest/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& info : osforest::acceptance_checks()) {
    osforest::CheckReport rep = osforest::run_check(info.id);
    std::printf("%s %2d %-15s %8.2fs / %.0fs  %s\n", rep.pass ? "PASS" : "FAIL", rep.id,
                rep.name.c_str(), rep.seconds, rep.limit_seconds, rep.detail.c_str());
    std::fflush(stdout);
    failed += !rep.pass;
  }
  std::printf("%d of %zu checks passed\n",
              static_cast<int>(osforest::acceptance_checks().size()) - failed,
              osforest::acceptance_checks().size());
  return failed == 0 ? 0 : 1;
}
