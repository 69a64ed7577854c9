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

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "cocirc/constructions.hpp"
#include "cocirc/matroid.hpp"

namespace cocirc::testutil {

// Random matroid from a shuffled draw of r-subsets, repaired to a valid
// basis family by keeping a random basis and greedily adding subsets that
// preserve the exchange property.
inline Matroid random_matroid(std::mt19937& rng, int n, int r, int target) {
  std::vector<uint32_t> pool;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == r) pool.push_back(mask);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<ElementSet> picked;
  for (uint32_t cand : pool) {
    if (int(picked.size()) >= target) break;
    picked.emplace_back(cand, n);
    std::vector<ElementSet> trial = picked;
    try {
      (void)Matroid::from_bases(n, {}, trial, Validation::kChecked);
    } catch (const Error&) {
      picked.pop_back();
    }
  }
  return Matroid::from_bases(n, {}, picked, Validation::kChecked);
}

// Random spanning subgraph of a complete graph, labels e0, e1, ...
inline Graph random_subgraph(std::mt19937& rng, int nv, int nedges) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g;
  g.num_vertices = nv;
  for (int i = 0; i < nedges && i < int(pairs.size()); ++i) {
    g.edges.push_back({pairs[size_t(i)].first, pairs[size_t(i)].second,
                       "e" + std::to_string(i)});
  }
  return g;
}

// Rank via the basis list only; independent of the RankTable DP.
inline int slow_rank(const Matroid& m, ElementSet x) {
  int best = 0;
  for (ElementSet b : m.bases) best = std::max(best, (b & x).size());
  return best;
}

inline int slow_lambda(const Matroid& m, ElementSet x) {
  return slow_rank(m, x) + slow_rank(m, x.complement()) - m.rank();
}

inline bool slow_in_closure(const Matroid& m, ElementSet x, int e) {
  return slow_rank(m, x.with(e)) == slow_rank(m, x);
}

}  // namespace cocirc::testutil
