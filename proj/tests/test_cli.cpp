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

#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = osforest::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("betti output") {
  auto r = call({"betti", "--n", "4", "--weights", "-1/2,-1/2,-1/2,-1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"2\":3,\"3\":12,\"4\":9}", 0) == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"forests", "--r", "2", "--n", "2"};
  auto a = call(args);
  auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("exit codes") {
  CHECK(call({"betti", "--weights", "1/0"}).code == osforest::cli::kParseError);
  CHECK(call({"betti", "--weights", "0.5"}).code == osforest::cli::kParseError);
  CHECK(call({"no-such-command"}).code == osforest::cli::kParseError);
  CHECK(call({"rectify", "--r", "1", "--n", "2", "--forest", "1->9"}).code ==
        osforest::cli::kParseError);
  CHECK(call({"betti", "--r", "3", "--weights", "1/2"}).code == osforest::cli::kValidationError);
  CHECK(call({"trees", "--r", "1", "--n", "8"}).code == osforest::cli::kSizeGuard);
  CHECK(call({"verify", "mysterythm", "--r", "2", "--m", "2"}).code == osforest::cli::kOk);
}

TEST_CASE("verification failures exit with 5") {
  // The generators check fails for (1/2)^4; the code reports it faithfully.
  auto r = call({"verify", "generators"});
  CHECK(r.code == osforest::cli::kVerificationFailed);
}

TEST_CASE("form formats") {
  std::vector<std::string> base{"form", "--n", "4", "--weights", "-1/2,-1/2,-1/2,-1/2",
                                "--forest", "1->2;2->3;3->4*"};
  auto latex = base;
  latex.insert(latex.begin(), {"--format", "latex"});
  auto r = call(latex);
  CHECK(r.code == 0);
  CHECK(r.out.find("\\frac{z_2}") != std::string::npos);
  auto json = call(base);
  CHECK(json.code == 0);
  CHECK(json.out.front() == '{');
}
