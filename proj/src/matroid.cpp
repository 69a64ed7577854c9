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

#include "cocirc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace cocirc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadParams: return "bad_params";
    case ErrorCode::kEmptyGroundSet: return "empty_ground_set";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kValidation: return "validation_error";
    case ErrorCode::kNotThreeConnected: return "not_3_connected";
    case ErrorCode::kNotA2Separation: return "not_a_2_separation";
    case ErrorCode::kSeedInvalid: return "seed_invalid";
    case ErrorCode::kBasepointDegenerate: return "basepoint_degenerate";
    case ErrorCode::kTooLarge: return "too_large";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kHypothesisViolated: return "hypothesis_violated";
    case ErrorCode::kDegenerateRealization: return "degenerate_realization";
  }
  return "unknown_error";
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(size_t(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool Matroid::is_basis(ElementSet b) const {
  if (b.n != n) return false;
  auto it = std::lower_bound(bases.begin(), bases.end(), b,
                             [](ElementSet x, ElementSet y) { return x.bits < y.bits; });
  return it != bases.end() && it->bits == b.bits;
}

std::vector<std::string> Matroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int e : s.elements()) out.push_back(labels.at(size_t(e)));
  return out;
}

int Matroid::index_of_label(const std::string& name) const {
  for (int i = 0; i < n; ++i) {
    if (labels[size_t(i)] == name) return i;
  }
  raise(ErrorCode::kBadParams, "unknown element label '" + name + "'");
}

ElementSet Matroid::set_by_labels(const std::vector<std::string>& names) const {
  ElementSet s = ElementSet::empty(n);
  for (const auto& name : names) {
    int e = index_of_label(name);
    if (s.contains(e)) raise(ErrorCode::kBadParams, "duplicate element label '" + name + "'");
    s = s.with(e);
  }
  return s;
}

namespace {

void validate_bases(int n, const std::vector<std::string>& labels,
                    const std::vector<ElementSet>& bases) {
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (int(seen.size()) != n) raise(ErrorCode::kValidation, "labels are not distinct");
  }
  if (bases.empty()) raise(ErrorCode::kValidation, "a matroid needs at least one basis");
  int r = bases.front().size();
  for (size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].n != n) raise(ErrorCode::kValidation, "basis outside the ground set");
    if (bases[i].size() != r) raise(ErrorCode::kValidation, "bases differ in size");
    if (i > 0 && bases[i].bits == bases[i - 1].bits) {
      raise(ErrorCode::kValidation, "duplicate basis");
    }
  }
  // Exchange axiom, one-sided form: for all bases A, B and a in A-B there is
  // b in B-A with A-a+b a basis.  Quadratic in the family size; callers with
  // trusted recipes should use kTrusted.
  auto is_member = [&bases](uint32_t mask) {
    auto it = std::lower_bound(bases.begin(), bases.end(), mask,
                               [](ElementSet x, uint32_t y) { return x.bits < y; });
    return it != bases.end() && it->bits == mask;
  };
  for (const ElementSet& a : bases) {
    for (const ElementSet& b : bases) {
      uint32_t out = a.bits & ~b.bits;
      for (uint32_t am = out; am != 0; am &= am - 1) {
        uint32_t abit = am & (~am + 1);
        bool found = false;
        for (uint32_t bm = b.bits & ~a.bits; bm != 0; bm &= bm - 1) {
          uint32_t bbit = bm & (~bm + 1);
          if (is_member((a.bits ^ abit) | bbit)) {
            found = true;
            break;
          }
        }
        if (!found) {
          raise(ErrorCode::kValidation,
                "exchange fails between bases " + std::to_string(a.bits) + " and " +
                    std::to_string(b.bits));
        }
      }
    }
  }
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<std::string> labels,
                            std::vector<ElementSet> bases, Validation validation) {
  if (n <= 0) raise(ErrorCode::kEmptyGroundSet, "ground set must be nonempty");
  if (n > ElementSet::kMaxGroundSize) {
    raise(ErrorCode::kTooLarge, "ground set larger than " +
                                    std::to_string(ElementSet::kMaxGroundSize) + " elements");
  }
  if (labels.empty()) labels = default_labels(n);
  if (int(labels.size()) != n) raise(ErrorCode::kBadParams, "label count differs from n");
  std::sort(bases.begin(), bases.end(),
            [](ElementSet a, ElementSet b) { return a.bits < b.bits; });
  if (validation == Validation::kChecked) {
    validate_bases(n, labels, bases);
  }
  Matroid m;
  m.n = n;
  m.labels = std::move(labels);
  m.bases = std::move(bases);
  return m;
}

Matroid Matroid::from_base_masks(int n, std::vector<std::string> labels,
                                 std::vector<uint32_t> base_masks, Validation validation) {
  std::vector<ElementSet> bases;
  bases.reserve(base_masks.size());
  for (uint32_t mask : base_masks) bases.emplace_back(mask, n);
  return from_bases(n, std::move(labels), std::move(bases), validation);
}

// ----- RankTable -------------------------------------------------------------

RankTable::RankTable(const Matroid& m) : n_(m.n), full_rank_(m.rank()) {
  size_t size = size_t(1) << n_;
  rank_.assign(size, 0);
  std::vector<uint8_t> indep(size, 0);
  for (ElementSet b : m.bases) indep[b.bits] = 1;
  // Downward closure: one pass per element marks every subset of a basis.
  for (int e = 0; e < n_; ++e) {
    uint32_t bit = 1u << e;
    for (uint32_t mask = 0; mask < size; ++mask) {
      if ((mask & bit) && indep[mask]) indep[mask ^ bit] = 1;
    }
  }
  for (uint32_t mask = 1; mask < size; ++mask) {
    if (indep[mask]) {
      rank_[mask] = uint8_t(std::popcount(mask));
      continue;
    }
    // Some maximal independent subset of mask survives dropping one element.
    uint8_t best = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      uint32_t bit = rest & (~rest + 1);
      best = std::max(best, rank_[mask ^ bit]);
    }
    rank_[mask] = best;
  }
}

uint32_t RankTable::closure(uint32_t mask) const {
  uint32_t cl = mask;
  int r = rank_[mask];
  for (uint32_t rest = ground_mask() & ~mask; rest != 0; rest &= rest - 1) {
    uint32_t bit = rest & (~rest + 1);
    if (rank_[mask | bit] == r) cl |= bit;
  }
  return cl;
}

uint32_t RankTable::coclosure(uint32_t mask) const {
  // e joins cl*(X) exactly when removing it from the complement drops rank.
  uint32_t cl = mask;
  uint32_t comp = ground_mask() & ~mask;
  for (uint32_t rest = comp; rest != 0; rest &= rest - 1) {
    uint32_t bit = rest & (~rest + 1);
    if (rank_[comp ^ bit] < rank_[comp]) cl |= bit;
  }
  return cl;
}

// ----- core operations -------------------------------------------------------

int rank(const Matroid& m, ElementSet x) {
  // r(X) = max_B |B intersect X|: any maximal independent subset of X extends
  // to a basis, and every B intersect X is independent in X.
  int best = 0;
  for (ElementSet b : m.bases) best = std::max(best, std::popcount(b.bits & x.bits));
  return best;
}

ElementSet closure(const Matroid& m, ElementSet x) {
  int r = rank(m, x);
  ElementSet cl = x;
  for (int e = 0; e < m.n; ++e) {
    if (!x.contains(e) && rank(m, x.with(e)) == r) cl = cl.with(e);
  }
  return cl;
}

bool is_circuit(const RankTable& rt, uint32_t mask) {
  if (mask == 0) return false;
  int c = std::popcount(mask);
  if (rt.rank(mask) != c - 1) return false;
  for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    uint32_t bit = rest & (~rest + 1);
    if (rt.rank(mask ^ bit) != c - 1) return false;
  }
  return true;
}

bool is_cocircuit(const RankTable& rt, uint32_t mask) {
  if (mask == 0) return false;
  uint32_t comp = rt.ground_mask() & ~mask;
  return rt.rank(comp) == rt.full_rank() - 1 && rt.closure(comp) == comp;
}

std::vector<ElementSet> circuits(const Matroid& m) {
  RankTable rt(m);
  std::vector<ElementSet> out;
  uint32_t all = rt.ground_mask();
  for (uint32_t mask = 1; mask <= all && all != 0; ++mask) {
    if (is_circuit(rt, mask)) out.emplace_back(mask, m.n);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElementSet> cocircuits(const Matroid& m) {
  RankTable rt(m);
  std::vector<ElementSet> out;
  uint32_t all = rt.ground_mask();
  for (uint32_t mask = 1; mask <= all && all != 0; ++mask) {
    if (is_cocircuit(rt, mask)) out.emplace_back(mask, m.n);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Matroid matroid_from_circuits(int n, std::vector<std::string> labels,
                              const std::vector<ElementSet>& circuits, Validation validation) {
  if (n <= 0) raise(ErrorCode::kEmptyGroundSet, "ground set must be nonempty");
  if (n > ElementSet::kMaxGroundSize) raise(ErrorCode::kTooLarge, "too many elements");
  size_t size = size_t(1) << n;
  std::vector<uint8_t> dep(size, 0);
  for (ElementSet c : circuits) {
    if (c.empty_set()) raise(ErrorCode::kBadParams, "the empty set cannot be a circuit");
    dep[c.bits] = 1;
  }
  for (int e = 0; e < n; ++e) {
    uint32_t bit = 1u << e;
    for (uint32_t mask = 0; mask < size; ++mask) {
      if (!(mask & bit) && dep[mask]) dep[mask | bit] = 1;
    }
  }
  int r = 0;
  for (uint32_t mask = 0; mask < size; ++mask) {
    if (!dep[mask]) r = std::max(r, std::popcount(mask));
  }
  std::vector<ElementSet> bases;
  for (uint32_t mask = 0; mask < size; ++mask) {
    if (!dep[mask] && std::popcount(mask) == r) bases.emplace_back(mask, n);
  }
  return Matroid::from_bases(n, std::move(labels), std::move(bases), validation);
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> cobases;
  cobases.reserve(m.bases.size());
  for (ElementSet b : m.bases) cobases.push_back(b.complement());
  return Matroid::from_bases(m.n, m.labels, std::move(cobases), Validation::kTrusted);
}

std::vector<int> removal_index_map(int n, ElementSet removed) {
  std::vector<int> out(size_t(n), -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (!removed.contains(e)) out[size_t(e)] = next++;
  }
  return out;
}

namespace {

Matroid rebuild_on_subset(const Matroid& m, ElementSet kept,
                          const std::vector<uint32_t>& base_masks) {
  std::vector<int> remap = removal_index_map(m.n, kept.complement());
  int nn = kept.size();
  std::vector<std::string> labels;
  labels.reserve(size_t(nn));
  for (int e : kept.elements()) labels.push_back(m.labels[size_t(e)]);
  std::vector<ElementSet> bases;
  bases.reserve(base_masks.size());
  for (uint32_t mask : base_masks) {
    uint32_t packed = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      packed |= 1u << remap[size_t(std::countr_zero(rest))];
    }
    bases.emplace_back(packed, nn);
  }
  return Matroid::from_bases(nn, std::move(labels), std::move(bases), Validation::kTrusted);
}

// Visits every submask of comp, including 0 and comp itself.
template <typename F>
void for_each_submask(uint32_t comp, F&& f) {
  uint32_t sub = comp;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
}

}  // namespace

Matroid deletion(const Matroid& m, ElementSet d) {
  if (d.empty_set()) return m;
  ElementSet kept = d.complement();
  if (kept.empty_set()) raise(ErrorCode::kEmptyGroundSet, "deletion would empty the ground set");
  RankTable rt(m);
  int r = rt.rank(kept.bits);
  std::vector<uint32_t> masks;
  for_each_submask(kept.bits, [&](uint32_t sub) {
    if (std::popcount(sub) == r && rt.independent(sub)) masks.push_back(sub);
  });
  return rebuild_on_subset(m, kept, masks);
}

Matroid contraction(const Matroid& m, ElementSet c) {
  if (c.empty_set()) return m;
  ElementSet kept = c.complement();
  if (kept.empty_set()) raise(ErrorCode::kEmptyGroundSet, "contraction would empty the ground set");
  RankTable rt(m);
  int want = rt.full_rank() - rt.rank(c.bits);
  std::vector<uint32_t> masks;
  for_each_submask(kept.bits, [&](uint32_t sub) {
    // sub is a basis of the contraction iff it tops C up to full rank with
    // every element counting.
    if (std::popcount(sub) == want && rt.rank(sub | c.bits) == rt.full_rank()) {
      masks.push_back(sub);
    }
  });
  return rebuild_on_subset(m, kept, masks);
}

Simplified simplify(const Matroid& m) {
  RankTable rt(m);
  SimplificationMap map;
  map.representative.assign(size_t(m.n), -2);
  uint32_t loops = 0;
  for (int e = 0; e < m.n; ++e) {
    if (rt.rank(1u << e) == 0) {
      loops |= 1u << e;
      map.representative[size_t(e)] = -1;
    }
  }
  uint32_t removed = loops;
  for (int e = 0; e < m.n; ++e) {
    if (map.representative[size_t(e)] != -2) continue;
    // Parallel class of e: the rank-1 flat it spans, minus loops.
    uint32_t cls = rt.closure(1u << e) & ~loops;
    for (uint32_t rest = cls; rest != 0; rest &= rest - 1) {
      int f = std::countr_zero(rest);
      map.representative[size_t(f)] = e;
      if (f != e) removed |= 1u << f;
    }
  }
  if (removed == rt.ground_mask()) {
    raise(ErrorCode::kEmptyGroundSet, "simplification removes every element (rank 0)");
  }
  Matroid sm = removed == 0 ? m : deletion(m, ElementSet(removed, m.n));
  map.new_index = removal_index_map(m.n, ElementSet(removed, m.n));
  return Simplified{std::move(sm), std::move(map)};
}

Simplified cosimplify(const Matroid& m) {
  // Coloops are contracted; all but the lowest element of every series class
  // are contracted.  Dualizing reduces this to simplification.
  Simplified sd = simplify(dual(m));
  return Simplified{dual(sd.m), std::move(sd.map)};
}

// ----- isomorphism -----------------------------------------------------------

std::vector<std::pair<int, std::vector<int>>> element_invariants(const Matroid& m) {
  std::vector<std::pair<int, std::vector<int>>> inv(size_t(m.n));
  for (ElementSet b : m.bases) {
    for (int e : b.elements()) inv[size_t(e)].first++;
  }
  for (const ElementSet& c : circuits(m)) {
    for (int e : c.elements()) inv[size_t(e)].second.push_back(c.size());
  }
  for (auto& [count, sizes] : inv) std::sort(sizes.begin(), sizes.end());
  return inv;
}

namespace {

struct IsoContext {
  const Matroid* a = nullptr;
  const Matroid* b = nullptr;
  std::vector<int> class_a;  // element -> invariant class id
  std::vector<int> class_b;
  std::vector<std::vector<int>> pairs_a;  // pairs[i][j] = #bases containing both
  std::vector<std::vector<int>> pairs_b;
  std::vector<int> perm;
  std::vector<bool> used;

  bool dfs(int depth) {
    int n = a->n;
    if (depth == n) {
      for (ElementSet basis : a->bases) {
        uint32_t image = 0;
        for (int e : basis.elements()) image |= 1u << perm[size_t(e)];
        if (!b->is_basis(ElementSet(image, n))) return false;
      }
      return true;
    }
    for (int j = 0; j < n; ++j) {
      if (used[size_t(j)] || class_b[size_t(j)] != class_a[size_t(depth)]) continue;
      bool ok = true;
      for (int i = 0; i < depth; ++i) {
        if (pairs_a[size_t(i)][size_t(depth)] != pairs_b[size_t(perm[size_t(i)])][size_t(j)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      perm[size_t(depth)] = j;
      used[size_t(j)] = true;
      if (dfs(depth + 1)) return true;
      used[size_t(j)] = false;
    }
    return false;
  }
};

std::vector<std::vector<int>> pair_profile(const Matroid& m) {
  std::vector<std::vector<int>> pairs(size_t(m.n), std::vector<int>(size_t(m.n), 0));
  for (ElementSet b : m.bases) {
    auto members = b.elements();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        pairs[size_t(members[i])][size_t(members[j])]++;
      }
    }
  }
  return pairs;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.n != b.n || a.rank() != b.rank() || a.bases.size() != b.bases.size()) {
    return std::nullopt;
  }
  auto inv_a = element_invariants(a);
  auto inv_b = element_invariants(b);
  std::map<std::pair<int, std::vector<int>>, int> class_ids;
  std::vector<int> class_a(size_t(a.n)), class_b(size_t(b.n));
  std::vector<int> count_a, count_b;
  for (int e = 0; e < a.n; ++e) {
    auto [it, fresh] = class_ids.emplace(inv_a[size_t(e)], int(class_ids.size()));
    class_a[size_t(e)] = it->second;
    if (fresh) count_a.push_back(0), count_b.push_back(0);
    count_a[size_t(it->second)]++;
  }
  for (int e = 0; e < b.n; ++e) {
    auto it = class_ids.find(inv_b[size_t(e)]);
    if (it == class_ids.end()) return std::nullopt;
    class_b[size_t(e)] = it->second;
    count_b[size_t(it->second)]++;
  }
  if (count_a != count_b) return std::nullopt;

  IsoContext ctx;
  ctx.a = &a;
  ctx.b = &b;
  ctx.class_a = std::move(class_a);
  ctx.class_b = std::move(class_b);
  ctx.pairs_a = pair_profile(a);
  ctx.pairs_b = pair_profile(b);
  ctx.perm.assign(size_t(a.n), -1);
  ctx.used.assign(size_t(a.n), false);
  if (ctx.dfs(0)) return ctx.perm;
  return std::nullopt;
}

bool equal_up_to_label_order(const Matroid& a, const Matroid& b) {
  if (a.n != b.n) raise(ErrorCode::kBadParams, "ground sets differ in size");
  std::vector<int> to_b(size_t(a.n));
  for (int e = 0; e < a.n; ++e) to_b[size_t(e)] = b.index_of_label(a.labels[size_t(e)]);
  if (a.bases.size() != b.bases.size()) return false;
  std::vector<uint32_t> mapped;
  mapped.reserve(a.bases.size());
  for (ElementSet basis : a.bases) {
    uint32_t image = 0;
    for (int e : basis.elements()) image |= 1u << to_b[size_t(e)];
    mapped.push_back(image);
  }
  std::sort(mapped.begin(), mapped.end());
  for (size_t i = 0; i < mapped.size(); ++i) {
    if (mapped[i] != b.bases[i].bits) return false;
  }
  return true;
}

// ----- witnesses -------------------------------------------------------------

bool witness_checks(const Matroid& m, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::kCircuit: {
      if (w.sets.size() != 1) return false;
      RankTable rt(m);
      return is_circuit(rt, w.sets.front().bits);
    }
    case Witness::Kind::kCocircuit: {
      if (w.sets.size() != 1) return false;
      RankTable rt(m);
      return is_cocircuit(rt, w.sets.front().bits);
    }
    case Witness::Kind::kSeparation: {
      // note holds the order k; the side and its complement must both reach
      // size k and the connectivity must stay under k.
      if (w.sets.size() != 1 || w.note.empty()) return false;
      int k = 0;
      for (char ch : w.note) {
        if (ch < '0' || ch > '9') return false;
        k = k * 10 + (ch - '0');
      }
      ElementSet x = w.sets.front();
      if (x.size() < k || x.complement().size() < k) return false;
      RankTable rt(m);
      return rt.lambda(x.bits) < k;
    }
    case Witness::Kind::kNote:
      return true;
  }
  return false;
}

}  // namespace cocirc
