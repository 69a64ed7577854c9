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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocirc/graphic.hpp"
#include "cocirc/matroid.hpp"
#include "cocirc/minors.hpp"
#include "cocirc/structures.hpp"

namespace cocirc {

// The alternatives of the classification results.  The contraction family
// (cocircuit side) uses the first five kinds; the deletion family (circuit
// side) the last three.
enum class BranchKind {
  kSiOk,           // si(M / x) 3-connected with an N-minor, x in C*
  kCoSiOk,         // co(si(M / x)) 3-connected with an N-minor, x in C*
  kFan,            // fan (x1..x4), x1, x3 in C*, si(M / x2) 3-connected + minor
  kSegCosegWithE,  // pair (L, L*) with L in C* and cl(L) - L = {e}
  kSegCosegFlat,   // pair (L, L*) with L a flat and |L - C*| <= 1
  kCoOk,           // co(M \ x) 3-connected with an N-minor, x in C
  kSiCoOk,         // si(co(M \ x)) 3-connected with an N-minor, x in C
  kFanDel,         // fan (x1..x4), x2, x4 in C, co(M \ x3) 3-connected + minor
};

const char* branch_kind_name(BranchKind k);

// One satisfied alternative with its witness.  Secondary conclusions the
// statement attaches ("in this case ...") are re-verified; a failure there
// is recorded in extra_failures and extras_ok, never silently dropped.
// Oddities worth surfacing that are not failures land in flags.
struct Branch {
  BranchKind kind{};
  int x = -1;          // kSiOk, kCoSiOk, kCoOk, kSiCoOk
  Fan fan;             // kFan, kFanDel
  SegCosegPair pair;   // kSegCosegWithE, kSegCosegFlat
  int e = -1;          // kSegCosegWithE: the element of cl(L) - L
  bool extras_ok = true;
  std::vector<std::string> extra_failures;
  std::vector<std::string> flags;
};

struct TheoremVerdict {
  std::vector<Branch> branches;

  bool any() const { return !branches.empty(); }
  bool has(BranchKind k) const;
  const Branch* first(BranchKind k) const;
};

// Classify (M, N, C*, x0) against the four alternatives of the contraction
// theorem: (i) kSiOk, (ii) kFan, (iii) kSegCosegWithE, (iv) kSegCosegFlat.
// All witnesses of every satisfied alternative are returned unless
// first_only, which stops after the first satisfied alternative in
// statement order.  engine, when given, must target N and is reused for
// every minor test.  Raises kHypothesisViolated naming the failed
// hypothesis: M or N not 3-connected, |E(N)| < 4, C* not a cocircuit,
// x0 outside C*, or M / x0 without an N-minor.
TheoremVerdict classify_main(const Matroid& m, const Matroid& n,
                             ElementSet cstar, int x0,
                             MinorSearch* engine = nullptr,
                             bool first_only = false);

// The coarser contraction statement: (i) kSiOk, (ii) kCoSiOk, (iii) kFan.
TheoremVerdict classify_thm1(const Matroid& m, const Matroid& n,
                             ElementSet cstar, int x0,
                             MinorSearch* engine = nullptr,
                             bool first_only = false);

// Deletion-side statement, on a circuit C of M with M \ x0 having an
// N-minor: (i) kCoOk, (ii) kSiCoOk, (iii) kFanDel.  Computed directly on M;
// agreement with classify_thm1 on the dual instance is a tested property.
TheoremVerdict classify_dual(const Matroid& m, const Matroid& n,
                             ElementSet c, int x0,
                             MinorSearch* engine = nullptr,
                             bool first_only = false);

// ----- graphic fast path ------------------------------------------------------

// Label-based mirror of Branch for cycle matroids whose edge count exceeds
// the exact kernel.
struct GraphBranch {
  BranchKind kind{};
  std::string x;
  GraphFan fan;
  std::vector<std::string> l, lstar;
  std::string e;
  bool extras_ok = true;
  std::vector<std::string> extra_failures;
  std::vector<std::string> flags;
};

struct GraphTheoremVerdict {
  std::vector<GraphBranch> branches;

  bool any() const { return !branches.empty(); }
  bool has(BranchKind k) const;
  const GraphBranch* first(BranchKind k) const;
};

// classify_main for M(g), pattern cycle matroid M(h), entirely in graph
// terms.  g must be simple here, so cl(L) = L for every triangle and the
// kSegCosegWithE alternative cannot arise.  Agreement with classify_main is
// a tested property on instances small enough for both.
GraphTheoremVerdict classify_main_graphic(const Graph& g, const Graph& h,
                                          const std::vector<std::string>& cstar,
                                          const std::string& x0,
                                          bool first_only = false);

// ----- catalogue sweep --------------------------------------------------------

struct CatalogueEntry {
  std::string name;
  Matroid m;
};

// Uniform matroids (r <= 4, n <= 8), cycle matroids of the 3-connected
// simple graphs on at most 7 vertices and 11 edges (one per isomorphism
// class), the rank-3 double-fan fixture and its dual, and the wheels of
// rank 3..5.  Duplicates across families are kept once, first name wins.
// Entries are not filtered for 3-connectivity; the sweep logs and skips.
std::vector<CatalogueEntry> default_catalogue(uint64_t seed);

// Standard pattern list: U(2,4) and M(K4).
std::vector<CatalogueEntry> default_targets();

struct SweepInstance {
  std::string m_name, n_name;
  ElementSet cstar;
  std::vector<int> valid_x0;  // elements of C* whose contraction keeps N
  std::vector<Branch> branches;
  bool ok = false;
  double ms = 0;
};

struct SweepReport {
  std::vector<SweepInstance> instances;
  std::map<std::string, int> histogram;  // branch kind -> occurrences
  std::vector<std::string> violations;   // totality or extras failures
  std::vector<std::string> flags;
  std::vector<std::string> skipped;      // catalogue entries failing hypotheses
  int instance_count = 0;
  double wall_ms = 0;
};

// Runs classify_main over every valid (M, N, C*, x0) combination.  A valid
// instance with no branch, or with failing secondary conclusions, becomes a
// violation entry.  Deterministic for fixed inputs regardless of jobs.
SweepReport sweep_catalogue(const std::vector<CatalogueEntry>& catalogue,
                            const std::vector<CatalogueEntry>& targets,
                            int jobs = 1, bool first_only = true);

}  // namespace cocirc
