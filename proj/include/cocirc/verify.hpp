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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cocirc::verify {

// One named assertion inside a suite.  detail carries the diagnostic on
// failure and a short census (counts, witnesses) on success so a transcript
// shows what was actually exercised.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = false;  // conjunction of the checks
  double ms = 0;
};

struct Options {
  uint64_t seed = 2026;
  int jobs = 1;
  // Directory holding fig1.graph / fig2.graph.  Empty string means use the
  // built-in constructors without touching the filesystem.
  std::string fixture_dir = "fixtures";
};

// Suite registry, in report order: fig2, theta, fig1, sweep, sec2, sec3,
// sec4, oracles.  run_suite raises kBadParams on an unknown name.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt = {});
std::vector<SuiteResult> run_all(const Options& opt = {});

}  // namespace cocirc::verify
