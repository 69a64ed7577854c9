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

#include "cocirc/connectivity.hpp"

#include <algorithm>
#include <bit>

#include "cocirc/constructions.hpp"

namespace cocirc {

int lambda(const Matroid& m, ElementSet x) {
  return rank(m, x) + rank(m, x.complement()) - m.rank();
}

int local_connectivity(const Matroid& m, ElementSet a, ElementSet b) {
  return rank(m, a) + rank(m, b) - rank(m, a | b);
}

bool is_k_separation(const RankTable& rt, uint32_t side, int k) {
  uint32_t comp = rt.ground_mask() & ~side;
  return rt.lambda(side) < k && std::popcount(side) >= k && std::popcount(comp) >= k;
}

std::optional<Separation> find_separation_below(const RankTable& rt, int bound) {
  int n = rt.n();
  if (n < 2) return std::nullopt;
  std::optional<Separation> best;
  // Element 0 stays on the witness side; that covers each partition once.
  uint32_t rest = rt.ground_mask() >> 1;
  for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
    uint32_t side = (sub << 1) | 1u;
    int small = std::min(std::popcount(side), n - std::popcount(side));
    int l = rt.lambda(side);
    // side is a k-separation for every k with lambda < k <= min side size.
    if (l + 1 <= small) {
      int k = l + 1;
      if (k < bound && (!best || k < best->k)) {
        best = Separation{ElementSet(side, n), k, true};
        if (k == 1) break;
      }
    }
    if (sub == 0) break;
  }
  return best;
}

bool is_3_connected(const RankTable& rt) { return !find_separation_below(rt, 3).has_value(); }

bool is_3_connected(const Matroid& m) { return is_3_connected(RankTable(m)); }

std::optional<Separation> three_connectivity_violation(const Matroid& m) {
  return find_separation_below(RankTable(m), 3);
}

bool is_connected(const RankTable& rt) { return !find_separation_below(rt, 2).has_value(); }

bool is_vertical_partition(const RankTable& rt, uint32_t x1, uint32_t x2, int x, int k) {
  uint32_t xbit = 1u << x;
  if ((x1 & x2) || (x1 & xbit) || (x2 & xbit)) return false;
  if ((x1 | x2 | xbit) != rt.ground_mask()) return false;
  if (rt.rank(x1) < k || rt.rank(x2) < k) return false;
  if (rt.lambda(x1) != k - 1 || rt.lambda(x2) != k - 1) return false;
  // x in cl(X1) n cl(X2).
  return rt.rank(x1 | xbit) == rt.rank(x1) && rt.rank(x2 | xbit) == rt.rank(x2);
}

std::vector<VerticalPartition> vertical_3_partitions(const RankTable& rt, int x) {
  int n = rt.n();
  std::vector<VerticalPartition> out;
  if (x < 0 || x >= n) raise(ErrorCode::kBadParams, "apex outside the ground set");
  uint32_t others = rt.ground_mask() & ~(1u << x);
  uint32_t anchor = others & (~others + 1);  // lowest non-apex element: X1 keeps it
  uint32_t rest = others ^ anchor;
  for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
    uint32_t x1 = sub | anchor;
    uint32_t x2 = others ^ x1;
    if (x2 != 0 && is_vertical_partition(rt, x1, x2, x, 3)) {
      out.push_back(
          VerticalPartition{ElementSet(x1, n), ElementSet(x2, n), x, 3});
    }
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const VerticalPartition& a, const VerticalPartition& b) {
              return a.x1.bits < b.x1.bits;
            });
  return out;
}

std::vector<VerticalPartition> vertical_3_partitions(const Matroid& m, int x) {
  RankTable rt(m);
  if (!is_3_connected(rt)) raise(ErrorCode::kNotThreeConnected, "matroid is not 3-connected");
  return vertical_3_partitions(rt, x);
}

bool is_minimal_partition(const RankTable& rt, const VerticalPartition& p, ElementSet a) {
  int n = rt.n();
  if (!is_vertical_partition(rt, p.x1.bits, p.x2.bits, p.x, 3)) return false;
  if (!a.contains(p.x)) return false;
  uint32_t hood = (p.x1.bits | (1u << p.x)) & a.bits;  // apexes to consider
  for (uint32_t am = hood; am != 0; am &= am - 1) {
    int y = std::countr_zero(am);
    uint32_t others = rt.ground_mask() & ~(1u << y);
    // Ordered sweep over (Y1, Y2); checking the first-coordinate condition on
    // both orientations covers conditions (ii) and (iii) of minimality.
    for (uint32_t sub = others;; sub = (sub - 1) & others) {
      uint32_t y1 = sub, y2 = others ^ sub;
      if (y1 != 0 && y2 != 0 && (p.x2.bits & y1) == 0 &&
          is_vertical_partition(rt, y1, y2, y, 3)) {
        if (y != p.x || y1 != p.x1.bits) return false;
      }
      if (sub == 0) break;
    }
  }
  return true;
}

namespace {

// Family S0 of the shrinking argument: vertical 3-partitions (S1, S2, s)
// with s in A n (Z1' u z) and the S1 side inside Z1'.
std::vector<VerticalPartition> partitions_inside(const RankTable& rt, uint32_t z1p,
                                                 uint32_t apexes) {
  int n = rt.n();
  std::vector<VerticalPartition> out;
  for (uint32_t am = apexes; am != 0; am &= am - 1) {
    int s = std::countr_zero(am);
    uint32_t inside = z1p & ~(1u << s);
    uint32_t others = rt.ground_mask() & ~(1u << s);
    for (uint32_t sub = inside;; sub = (sub - 1) & inside) {
      uint32_t s1 = sub, s2 = others ^ sub;
      if (s1 != 0 && s2 != 0 && is_vertical_partition(rt, s1, s2, s, 3)) {
        out.push_back(VerticalPartition{ElementSet(s1, n), ElementSet(s2, n), s, 3});
      }
      if (sub == 0) break;
    }
  }
  return out;
}

}  // namespace

VerticalPartition find_minimal_partition(const RankTable& rt, ElementSet a,
                                         const VerticalPartition& seed) {
  int n = rt.n();
  if (!is_vertical_partition(rt, seed.x1.bits, seed.x2.bits, seed.x, 3)) {
    raise(ErrorCode::kSeedInvalid, "seed is not a vertical 3-partition");
  }
  if (!a.contains(seed.x)) raise(ErrorCode::kSeedInvalid, "seed apex is not in A");
  int z = seed.x;

  // Step 1: shrink the z-side to an inclusion-minimal choice inside Z1.
  uint32_t z1p = seed.x1.bits, z2p = seed.x2.bits;
  {
    uint32_t others = rt.ground_mask() & ~(1u << z);
    bool improved = true;
    while (improved) {
      improved = false;
      for (uint32_t sub = z1p & (z1p - 1);; sub = (sub - 1) & z1p) {
        // proper submasks only
        uint32_t s2 = others ^ sub;
        if (sub != 0 && sub != z1p && is_vertical_partition(rt, sub, s2, z, 3)) {
          z1p = sub;
          z2p = s2;
          improved = true;
          break;
        }
        if (sub == 0) break;
      }
    }
  }

  // Step 2: among partitions whose small side sits inside Z1', apexed in
  // A n (Z1' u z), pick one minimizing X1 u x; apex-z members can only be
  // (Z1', Z2', z) itself.
  uint32_t apexes = a.bits & (z1p | (1u << z));
  std::vector<VerticalPartition> family = partitions_inside(rt, z1p, apexes);
  const VerticalPartition* pick = nullptr;
  for (const VerticalPartition& vp : family) {
    if (vp.x == z) continue;
    if (!pick) {
      pick = &vp;
      continue;
    }
    uint32_t cand = vp.x1.bits | (1u << vp.x);
    uint32_t best = pick->x1.bits | (1u << pick->x);
    if ((cand & ~best) == 0 && cand != best) {
      pick = &vp;
    } else if (!((best & ~cand) == 0) &&
               canonical_less(ElementSet(cand, n), ElementSet(best, n))) {
      // Incomparable: deterministic tie-break by canonical order.
      pick = &vp;
    }
  }
  VerticalPartition result =
      pick ? *pick
           : VerticalPartition{ElementSet(z1p, n), ElementSet(z2p, n), z, 3};
  if (!is_minimal_partition(rt, result, a)) {
    raise(ErrorCode::kValidation, "minimal-partition construction failed re-verification");
  }
  return result;
}

VerticalPartition find_minimal_partition(const Matroid& m, ElementSet a,
                                         const VerticalPartition& seed) {
  RankTable rt(m);
  if (!is_3_connected(rt)) raise(ErrorCode::kNotThreeConnected, "matroid is not 3-connected");
  return find_minimal_partition(rt, a, seed);
}

TwoSumDecomposition decompose_2_separation(const Matroid& m, ElementSet x1) {
  RankTable rt(m);
  ElementSet x2 = x1.complement();
  if (rt.lambda(x1.bits) != 1 || x1.size() < 2 || x2.size() < 2) {
    raise(ErrorCode::kNotA2Separation, "(X1, E-X1) is not an exact 2-separation");
  }
  std::string basepoint = "p";
  while (std::find(m.labels.begin(), m.labels.end(), basepoint) != m.labels.end()) {
    basepoint += "*";
  }

  std::vector<ElementSet> all = circuits(m);
  auto side_part = [&](ElementSet side) {
    int np = side.size() + 1;
    int pbit_pos = np - 1;
    std::vector<int> remap = removal_index_map(m.n, side.complement());
    auto pack = [&](uint32_t mask) {
      uint32_t packed = 0;
      for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        packed |= 1u << remap[size_t(std::countr_zero(rest))];
      }
      return packed;
    };
    std::vector<uint32_t> fam;
    for (const ElementSet& c : all) {
      if (c.subset_of(side)) {
        fam.push_back(pack(c.bits));
      } else if (c.intersects(side)) {
        // Crossing circuit: its trace plus the basepoint.
        fam.push_back(pack(c.bits & side.bits) | (1u << pbit_pos));
      }
    }
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    // Keep only inclusion-minimal members.
    std::vector<ElementSet> minimal;
    for (uint32_t c : fam) {
      bool dominated = false;
      for (uint32_t d : fam) {
        if (d != c && (d & ~c) == 0) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.emplace_back(c, np);
    }
    std::vector<std::string> labels;
    for (int e : side.elements()) labels.push_back(m.labels[size_t(e)]);
    labels.push_back(basepoint);
    return matroid_from_circuits(np, std::move(labels), minimal, Validation::kChecked);
  };

  TwoSumDecomposition out{side_part(x1), side_part(x2), basepoint};
  Matroid glued = two_sum(out.m1, out.m2, basepoint, basepoint);
  if (!equal_up_to_label_order(glued, m)) {
    raise(ErrorCode::kValidation, "2-sum recomposition does not reproduce the input");
  }
  return out;
}

BixbyOutcome bixby_check(const Matroid& m, int x) {
  RankTable rt(m);
  if (!is_3_connected(rt)) raise(ErrorCode::kNotThreeConnected, "matroid is not 3-connected");
  if (m.n < 4) raise(ErrorCode::kBadParams, "ground set too small for the dichotomy");
  ElementSet e = ElementSet::single(x, m.n);
  bool si_ok = is_3_connected(simplify(contraction(m, e)).m);
  bool co_ok = is_3_connected(cosimplify(deletion(m, e)).m);
  if (si_ok && co_ok) return BixbyOutcome::kBoth;
  if (si_ok) return BixbyOutcome::kSiOk;
  if (co_ok) return BixbyOutcome::kCoOk;
  return BixbyOutcome::kNeither;
}

}  // namespace cocirc
