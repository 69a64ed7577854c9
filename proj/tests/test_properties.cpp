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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cocirc/verify.hpp"

using namespace cocirc;

namespace {

// Fixture files are checked by test_verify; here the built-ins suffice and
// keep the property runs independent of the working directory.
verify::Options opts() {
  verify::Options o;
  o.fixture_dir = "";
  return o;
}

void require_suite(const char* name) {
  verify::SuiteResult r = verify::run_suite(name, opts());
  CHECK(r.suite == name);
  REQUIRE(!r.checks.empty());
  for (const verify::CheckResult& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("connectivity calculus properties hold across the pool") {
  require_suite("sec2");
}

TEST_CASE("segment-cosegment properties hold across the catalogue") {
  require_suite("sec3");
}

TEST_CASE("minimal partition properties hold across the catalogue") {
  require_suite("sec4");
}

TEST_CASE("search results agree with independent re-derivations") {
  require_suite("oracles");
}
