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

#ifndef OSFOREST_VERIFY_HPP_
#define OSFOREST_VERIFY_HPP_

#include <string>
#include <vector>

namespace osforest {

// Outcome of one acceptance check. pass requires both the identity and the
// time limit.
struct CheckReport {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct CheckInfo {
  int id;
  const char* name;
  double limit_seconds;
};

// The twelve checks in order: counting, catalog, rectification, dimension,
// lehrer-solomon, betti, closedness, pullback, nbc, characters, generators,
// relations.
const std::vector<CheckInfo>& acceptance_checks();

// Runs the check with the given id (1-based) or name. Throws
// std::invalid_argument for an unknown check.
CheckReport run_check(int id);
CheckReport run_check(const std::string& name);

}  // namespace osforest

#endif  // OSFOREST_VERIFY_HPP_
