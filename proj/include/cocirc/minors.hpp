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

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cocirc/constructions.hpp"
#include "cocirc/matroid.hpp"

namespace cocirc {

// Certificate that M \ del / contr is isomorphic to N: iso[e] is the image
// in E(N) of each kept element e of M, -1 for removed ones.
struct MinorWitness {
  ElementSet del, contr;
  std::vector<int> iso;
};

inline constexpr int kMinorSearchCap = 14;

// Exhaustive (delete, contract) search with canonical-form memoization of
// minors already proven N-free.  Sound and complete up to kMinorSearchCap
// ground elements.  The engine object carries the memo so repeated queries
// against the same N share work.
class MinorSearch {
 public:
  explicit MinorSearch(Matroid n);

  std::optional<MinorWitness> find(const Matroid& m);

  const Matroid& target() const { return n_; }
  size_t memo_size() const { return dead_.size(); }

 private:
  Matroid n_;
  int n_rank_;
  std::vector<uint64_t> n_profile_;
  std::unordered_set<std::string> dead_;
};

// One-shot convenience wrapper.
std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n);

// Independent oracle: plain enumeration of removal sets and splits, no
// memo, no pruning beyond rank bookkeeping.  Small inputs only.
std::optional<MinorWitness> has_minor_naive(const Matroid& m,
                                            const Matroid& n);

// Replays the witness: both set disjointness and the isomorphism claim.
bool verify_minor_witness(const Matroid& m, const Matroid& n,
                          const MinorWitness& w);

// ----- graph minors ---------------------------------------------------------

// Branch decomposition: branch_sets[i] lists the G-vertices contracted to
// H-vertex i.  Sets are disjoint, each induces a connected subgraph, and
// every H-edge has a G-edge between the two sets.
struct GraphMinorWitness {
  std::vector<std::vector<int>> branch_sets;
};

// H must be simple and connected; G at most kGraphVertexCap vertices.
std::optional<GraphMinorWitness> graph_has_minor(const Graph& g,
                                                 const Graph& h);

bool verify_graph_minor_witness(const Graph& g, const Graph& h,
                                const GraphMinorWitness& w);

}  // namespace cocirc
