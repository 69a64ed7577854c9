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

#include "cocirc/structures.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cocirc/connectivity.hpp"

namespace cocirc {

namespace {

template <typename Pred>
std::vector<ElementSet> three_subsets_where(int n, Pred&& pred) {
  std::vector<ElementSet> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        uint32_t mask = (1u << a) | (1u << b) | (1u << c);
        if (pred(mask)) out.emplace_back(mask, n);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ElementSet> triangles(const RankTable& rt) {
  return three_subsets_where(rt.n(), [&](uint32_t mask) { return is_circuit(rt, mask); });
}

std::vector<ElementSet> triads(const RankTable& rt) {
  return three_subsets_where(rt.n(), [&](uint32_t mask) { return is_cocircuit(rt, mask); });
}

std::vector<ElementSet> triangles(const Matroid& m) { return triangles(RankTable(m)); }
std::vector<ElementSet> triads(const Matroid& m) { return triads(RankTable(m)); }

std::vector<Fan> fans(const Matroid& m) {
  RankTable rt(m);
  std::vector<ElementSet> tris = triangles(rt);
  std::vector<Fan> out;
  for (ElementSet t : tris) {
    std::vector<int> elems = t.elements();
    for (int pick = 0; pick < 3; ++pick) {
      int x1 = elems[size_t(pick)];
      int u = elems[size_t((pick + 1) % 3)];
      int v = elems[size_t((pick + 2) % 3)];
      for (auto [x2, x3] : {std::pair{u, v}, std::pair{v, u}}) {
        for (int x4 = 0; x4 < m.n; ++x4) {
          if (t.contains(x4)) continue;
          uint32_t triad = (1u << x2) | (1u << x3) | (1u << x4);
          if (is_cocircuit(rt, triad)) out.push_back(Fan{x1, x2, x3, x4});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Fan& a, const Fan& b) {
    return std::tie(a.x1, a.x2, a.x3, a.x4) < std::tie(b.x1, b.x2, b.x3, b.x4);
  });
  return out;
}

std::vector<ElementSet> segments(const Matroid& m, bool include_subsets) {
  RankTable rt(m);
  // Candidate lines: closures of independent pairs.
  std::set<uint32_t> lines;
  for (int a = 0; a < m.n; ++a) {
    for (int b = a + 1; b < m.n; ++b) {
      uint32_t pair = (1u << a) | (1u << b);
      if (rt.rank(pair) == 2) lines.insert(rt.closure(pair));
    }
  }
  std::set<uint32_t> found;
  for (uint32_t flat : lines) {
    // Group the non-loop points of the line into parallel classes.
    std::set<uint32_t> classes;
    for (uint32_t rest = flat; rest != 0; rest &= rest - 1) {
      uint32_t bit = rest & (~rest + 1);
      if (rt.rank(bit) == 1) classes.insert(rt.closure(bit) & flat);
    }
    if (classes.size() < 3) continue;
    std::vector<uint32_t> cls(classes.begin(), classes.end());
    // Maximal segments are the transversals: one representative per class.
    std::vector<uint32_t> partial{0};
    for (uint32_t c : cls) {
      std::vector<uint32_t> next;
      for (uint32_t base : partial) {
        for (uint32_t rest = c; rest != 0; rest &= rest - 1) {
          uint32_t bit = rest & (~rest + 1);
          if (rt.rank(bit) == 1) next.push_back(base | bit);
        }
      }
      partial = std::move(next);
    }
    found.insert(partial.begin(), partial.end());
  }
  if (include_subsets) {
    std::set<uint32_t> all;
    for (uint32_t seg : found) {
      for (uint32_t sub = seg;; sub = (sub - 1) & seg) {
        if (std::popcount(sub) >= 3) all.insert(sub);
        if (sub == 0) break;
      }
    }
    found = std::move(all);
  }
  std::vector<ElementSet> out;
  for (uint32_t mask : found) out.emplace_back(mask, m.n);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElementSet> cosegments(const Matroid& m, bool include_subsets) {
  return segments(dual(m), include_subsets);
}

std::vector<SegCosegPair> seg_coseg_pairs(const Matroid& m) {
  RankTable rt(m);
  std::vector<SegCosegPair> out;
  for (ElementSet l : segments(m, /*include_subsets=*/true)) {
    uint32_t cl = rt.closure(l.bits);
    std::vector<int> xs = l.elements();
    std::vector<std::vector<int>> candidates(xs.size());
    bool feasible = true;
    for (size_t i = 0; i < xs.size() && feasible; ++i) {
      uint32_t hole = cl & ~(1u << xs[i]);
      for (int y = 0; y < m.n; ++y) {
        if (l.contains(y)) continue;
        if (is_cocircuit(rt, hole | (1u << y))) candidates[i].push_back(y);
      }
      feasible = !candidates[i].empty();
    }
    if (!feasible) continue;
    // All systems of distinct representatives.
    std::vector<int> ys(xs.size(), -1);
    uint32_t used = 0;
    auto dfs = [&](auto&& self, size_t i) -> void {
      if (i == xs.size()) {
        uint32_t lstar = used;
        out.push_back(SegCosegPair{l, ElementSet(lstar, m.n), xs, ys});
        return;
      }
      for (int y : candidates[i]) {
        if (used & (1u << y)) continue;
        used |= 1u << y;
        ys[size_t(i)] = y;
        self(self, i + 1);
        used &= ~(1u << y);
      }
    };
    dfs(dfs, 0);
  }
  std::sort(out.begin(), out.end(), [](const SegCosegPair& a, const SegCosegPair& b) {
    if (a.l.bits != b.l.bits) return canonical_less(a.l, b.l);
    return a.ys < b.ys;
  });
  return out;
}

std::vector<Spore> spores(const Matroid& m) {
  RankTable rt(m);
  std::set<uint32_t> points;
  for (int e = 0; e < m.n; ++e) {
    if (rt.rank(1u << e) == 1) points.insert(rt.closure(1u << e));
  }
  std::vector<Spore> out;
  for (uint32_t p : points) {
    for (int s = 0; s < m.n; ++s) {
      if (p & (1u << s)) continue;
      if (is_cocircuit(rt, p | (1u << s))) out.push_back(Spore{ElementSet(p, m.n), s});
    }
  }
  std::sort(out.begin(), out.end(), [](const Spore& a, const Spore& b) {
    return a.p.bits != b.p.bits ? a.p.bits < b.p.bits : a.s < b.s;
  });
  return out;
}

std::optional<Spore> is_3conn_up_to_unique_spore(const Matroid& m) {
  std::vector<Spore> found = spores(m);
  if (found.size() != 1) return std::nullopt;
  const Spore& spore = found.front();
  RankTable rt(m);
  uint32_t hull = spore.p.bits | (1u << spore.s);
  // Every 1- or 2-separation must have a side inside P u s.
  uint32_t all = rt.ground_mask();
  for (uint32_t mask = 1; mask < all; ++mask) {
    for (int k = 1; k <= 2; ++k) {
      if (!is_k_separation(rt, mask, k)) continue;
      if ((mask & ~hull) != 0 && ((all ^ mask) & ~hull) != 0) return std::nullopt;
    }
  }
  return spore;
}

}  // namespace cocirc
