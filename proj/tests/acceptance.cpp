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
//
// Acceptance gate: eight criteria, one line each, wall-clock budgets pinned.
// Exit 0 iff every criterion passes inside its budget.

#include <cstdio>
#include <string>
#include <vector>

#include "cocirc/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* what;
  double budget_s;
};

}  // namespace

int main() {
  using namespace cocirc::verify;
  const std::vector<Criterion> criteria = {
      {1, "fig2", "9-element pinned instance: circuit, contractions, classifier", 10},
      {2, "theta", "theta family: self-duality, doubled circuit, series pairs", 60},
      {3, "fig1", "24-edge pinned instance entirely in graph terms", 300},
      {4, "sweep", "catalogue sweep: totality, zero violations, report", 1800},
      {5, "sec2", "connectivity calculus properties (exhaustive <= 8, randomized above)", 600},
      {6, "sec3", "segment-cosegment pair properties across the catalogue", 600},
      {7, "sec4", "minimal partition and crossing properties across the catalogue", 900},
      {8, "oracles", "independent re-derivation of partition and minor results", 300},
  };

  Options opt;
  opt.seed = 2026;
  opt.jobs = 1;
#ifdef COCIRC_FIXTURE_DIR
  opt.fixture_dir = COCIRC_FIXTURE_DIR;
#endif

  int met = 0;
  std::vector<std::string> failures;
  for (const Criterion& c : criteria) {
    SuiteResult r = run_suite(c.suite, opt);
    double secs = r.ms / 1000.0;
    bool in_budget = secs < c.budget_s;
    bool ok = r.pass && in_budget;
    std::printf("[%s] criterion %d: %s -- %.2f s (budget %.0f s)\n",
                ok ? "PASS" : "FAIL", c.number, c.what, secs, c.budget_s);
    if (ok) {
      ++met;
      continue;
    }
    if (!in_budget) {
      failures.push_back(std::string(c.suite) + ": over budget");
    }
    for (const CheckResult& ck : r.checks) {
      if (!ck.pass) {
        failures.push_back(std::string(c.suite) + ": " + ck.name +
                           (ck.detail.empty() ? "" : " -- " + ck.detail));
      }
    }
  }

  std::printf("acceptance: %d/8 criteria met\n", met);
  for (const std::string& f : failures) {
    std::printf("  failed: %s\n", f.c_str());
  }
  return met == 8 ? 0 : 1;
}
