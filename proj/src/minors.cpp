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

#include "cocirc/minors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cocirc/error.hpp"
#include "cocirc/graphic.hpp"

namespace cocirc {

namespace {

// ----- bases-family surgery --------------------------------------------------

uint32_t drop_bit(uint32_t mask, int e) {
  uint32_t low = mask & ((1u << e) - 1);
  uint32_t high = (mask >> (e + 1)) << e;
  return low | high;
}

// Bases of the minor after deleting element e (by current index).
std::vector<uint32_t> bases_delete(const std::vector<uint32_t>& bases, int e) {
  uint32_t bit = 1u << e;
  std::vector<uint32_t> out;
  for (uint32_t b : bases)
    if (!(b & bit)) out.push_back(drop_bit(b, e));
  if (out.empty())  // coloop: every basis shrinks by e
    for (uint32_t b : bases) out.push_back(drop_bit(b & ~bit, e));
  return out;
}

// Bases after contracting element e.
std::vector<uint32_t> bases_contract(const std::vector<uint32_t>& bases,
                                     int e) {
  uint32_t bit = 1u << e;
  std::vector<uint32_t> out;
  for (uint32_t b : bases)
    if (b & bit) out.push_back(drop_bit(b & ~bit, e));
  if (out.empty())  // loop: bases untouched
    for (uint32_t b : bases) out.push_back(drop_bit(b, e));
  return out;
}

// Sorted per-element basis counts plus rank and size: the cheap screen used
// both for leaf checks and fingerprinting.
std::vector<uint64_t> basis_profile(const std::vector<uint32_t>& bases,
                                    int n) {
  std::vector<uint64_t> counts(size_t(n), 0);
  for (uint32_t b : bases)
    for (int e = 0; e < n; ++e)
      if (b & (1u << e)) ++counts[size_t(e)];
  std::sort(counts.begin(), counts.end());
  return counts;
}

// Iso-invariant per-element fingerprints: basis counts refined twice by the
// counts of co-occurring elements.
std::vector<uint64_t> fingerprints(const std::vector<uint32_t>& bases,
                                   int n) {
  std::vector<uint64_t> fp(size_t(n), 0);
  for (uint32_t b : bases)
    for (int e = 0; e < n; ++e)
      if (b & (1u << e)) ++fp[size_t(e)];
  for (int round = 0; round < 2; ++round) {
    std::vector<uint64_t> next(size_t(n), 0);
    for (uint32_t b : bases) {
      uint64_t sum = 0;
      for (int e = 0; e < n; ++e)
        if (b & (1u << e)) sum += fp[size_t(e)];
      for (int e = 0; e < n; ++e)
        if (b & (1u << e)) next[size_t(e)] += sum * 31 + fp[size_t(e)];
    }
    for (int e = 0; e < n; ++e)
      fp[size_t(e)] = fp[size_t(e)] * 1000003u + next[size_t(e)];
  }
  return fp;
}

std::string encode_bases(const std::vector<uint32_t>& sorted_bases, int n) {
  std::string key;
  key.reserve(sorted_bases.size() * 2 + 2);
  key.push_back(char(n));
  for (uint32_t b : sorted_bases) {
    key.push_back(char(b & 0xff));
    key.push_back(char((b >> 8) & 0xff));
  }
  return key;
}

std::vector<uint32_t> relabeled(const std::vector<uint32_t>& bases,
                                const std::vector<int>& to_new) {
  std::vector<uint32_t> out;
  out.reserve(bases.size());
  for (uint32_t b : bases) {
    uint32_t nb = 0;
    for (int e = 0; uint32_t(1u << e) <= b; ++e)
      if (b & (1u << e)) nb |= 1u << to_new[size_t(e)];
    out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical-under-isomorphism key.  Uniform families get an exact tag;
// otherwise elements are ordered by fingerprint, and small tie groups are
// resolved by the lexicographically least relabeled family.
std::string canonical_key(const std::vector<uint32_t>& bases, int n,
                          int rank) {
  uint64_t full_count = 1;
  for (int i = 0; i < rank; ++i)
    full_count = full_count * uint64_t(n - i) / uint64_t(i + 1);
  if (bases.size() == full_count)
    return "U" + std::to_string(rank) + "," + std::to_string(n);

  std::vector<uint64_t> fp = fingerprints(bases, n);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return fp[size_t(a)] < fp[size_t(b)]; });

  // Group boundaries of equal fingerprints.
  std::vector<std::pair<int, int>> groups;
  uint64_t perms = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && fp[size_t(order[size_t(j)])] == fp[size_t(order[size_t(i)])]) ++j;
    groups.push_back({i, j});
    for (int t = 2; t <= j - i && perms <= 40320; ++t) perms *= uint64_t(t);
    i = j;
  }

  std::vector<int> to_new(static_cast<size_t>(n));
  if (perms > 40320) {
    // Too symmetric for exact search; index order inside ties still yields
    // a sound (merely weaker) key.
    for (int i = 0; i < n; ++i) to_new[size_t(order[size_t(i)])] = i;
    return encode_bases(relabeled(bases, to_new), n);
  }

  std::vector<uint32_t> best;
  std::vector<int> cur = order;
  // Iterate permutations within each tie group, taking the least family.
  std::vector<std::vector<int>> slots;
  for (auto [a, b] : groups)
    slots.push_back(std::vector<int>(cur.begin() + a, cur.begin() + b));
  std::vector<size_t> idx(slots.size(), 0);
  auto emit = [&]() {
    int pos = 0;
    for (const auto& s : slots)
      for (int v : s) to_new[size_t(v)] = pos++;
    std::vector<uint32_t> fam = relabeled(bases, to_new);
    if (best.empty() || fam < best) best = fam;
  };
  // Recursive product of per-group permutations.
  std::function<void(size_t)> walk = [&](size_t gi) {
    if (gi == slots.size()) {
      emit();
      return;
    }
    std::sort(slots[gi].begin(), slots[gi].end());
    do {
      walk(gi + 1);
    } while (std::next_permutation(slots[gi].begin(), slots[gi].end()));
  };
  walk(0);
  return encode_bases(best, n);
}

int family_rank(const std::vector<uint32_t>& bases) {
  return bases.empty() ? 0 : __builtin_popcount(bases[0]);
}

Matroid family_matroid(const std::vector<uint32_t>& bases, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<ElementSet> fam;
  for (uint32_t b : bases) fam.push_back(ElementSet(b, n));
  return Matroid::from_bases(n, labels, fam, Validation::kTrusted);
}

}  // namespace

// ----- memoized search --------------------------------------------------------

MinorSearch::MinorSearch(Matroid n) : n_(std::move(n)) {
  n_rank_ = n_.rank();
  std::vector<uint32_t> nb;
  for (const ElementSet& b : n_.bases) nb.push_back(b.bits);
  n_profile_ = basis_profile(nb, n_.n);
}

namespace {

struct SearchFrame {
  std::vector<uint32_t> bases;
  std::vector<int> orig;  // current index -> element of the root matroid
};

}  // namespace

std::optional<MinorWitness> MinorSearch::find(const Matroid& m) {
  if (m.n > kMinorSearchCap)
    raise(ErrorCode::kCapExceeded,
          "minor search capped at " + std::to_string(kMinorSearchCap) +
              " elements");

  int want_rank = n_rank_;
  int want_corank = n_.n - n_rank_;

  std::optional<MinorWitness> found;

  std::function<bool(const SearchFrame&)> rec = [&](const SearchFrame& f) {
    int sz = int(f.orig.size());
    int rank = family_rank(f.bases);
    if (rank < want_rank || sz - rank < want_corank || sz < n_.n)
      return false;

    if (sz == n_.n) {
      if (basis_profile(f.bases, sz) != n_profile_) return false;
      Matroid cand = family_matroid(f.bases, sz);
      auto iso = is_isomorphic(cand, n_);
      if (!iso) return false;
      MinorWitness w;
      w.del = ElementSet::empty(m.n);
      w.contr = ElementSet::empty(m.n);
      w.iso.assign(size_t(m.n), -1);
      std::vector<char> kept(size_t(m.n), 0);
      for (int i = 0; i < sz; ++i) {
        kept[size_t(f.orig[size_t(i)])] = 1;
        w.iso[size_t(f.orig[size_t(i)])] = (*iso)[size_t(i)];
      }
      found = std::move(w);
      return true;
    }

    for (int e = 0; e < sz; ++e) {
      uint32_t bit = 1u << e;
      bool in_all = true, in_none = true;
      for (uint32_t b : f.bases) {
        if (b & bit) in_none = false;
        else in_all = false;
      }
      // A loop deletes, a coloop contracts; both moves coincide there, so
      // trying one of them keeps the tree small.
      for (int op = 0; op < 2; ++op) {
        if (op == 0 && in_all) continue;   // deletion of a coloop
        if (op == 1 && in_none) continue;  // contraction of a loop
        SearchFrame child;
        child.bases = op == 0 ? bases_delete(f.bases, e)
                              : bases_contract(f.bases, e);
        child.orig = f.orig;
        child.orig.erase(child.orig.begin() + e);
        int crank = family_rank(child.bases);
        if (crank < want_rank || int(child.orig.size()) - crank < want_corank)
          continue;
        std::string key = canonical_key(child.bases, sz - 1, crank);
        if (dead_.count(key)) continue;
        if (rec(child)) {
          int elem = f.orig[size_t(e)];
          if (op == 0) found->del = found->del.with(elem);
          else found->contr = found->contr.with(elem);
          return true;
        }
        dead_.insert(std::move(key));
      }
    }
    return false;
  };

  SearchFrame root;
  for (const ElementSet& b : m.bases) root.bases.push_back(b.bits);
  root.orig.resize(size_t(m.n));
  std::iota(root.orig.begin(), root.orig.end(), 0);
  rec(root);
  return found;
}

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
  MinorSearch engine(n);
  return engine.find(m);
}

std::optional<MinorWitness> has_minor_naive(const Matroid& m,
                                            const Matroid& n) {
  if (m.n > 12)
    raise(ErrorCode::kCapExceeded, "naive minor search capped at 12");
  if (m.n < n.n) return std::nullopt;

  RankTable rt(m);
  int removals = m.n - n.n;
  std::optional<MinorWitness> found;

  // Choose each element's fate in index order, no dedup, no memo.
  std::function<bool(int, uint32_t, uint32_t, int)> rec =
      [&](int idx, uint32_t del, uint32_t contr, int used) {
        if (used == removals) {
          uint32_t keep = ~(del | contr) & ((1u << m.n) - 1);
          int crank = rt.rank(keep | contr) - rt.rank(contr);
          if (crank != n.rank()) return false;
          std::vector<int> kept;
          for (int e = 0; e < m.n; ++e)
            if (keep & (1u << e)) kept.push_back(e);
          std::vector<uint32_t> bases;
          // All crank-subsets of the kept set independent in the minor.
          int k = int(kept.size());
          for (uint32_t sub = 0; sub < (1u << k); ++sub) {
            if (__builtin_popcount(sub) != crank) continue;
            uint32_t lifted = 0;
            for (int i = 0; i < k; ++i)
              if (sub & (1u << i)) lifted |= 1u << kept[size_t(i)];
            if (rt.rank(lifted | contr) - rt.rank(contr) == crank)
              bases.push_back(sub);
          }
          Matroid cand = family_matroid(bases, k);
          auto iso = is_isomorphic(cand, n);
          if (!iso) return false;
          MinorWitness w;
          w.del = ElementSet(del, m.n);
          w.contr = ElementSet(contr, m.n);
          w.iso.assign(size_t(m.n), -1);
          for (int i = 0; i < k; ++i)
            w.iso[size_t(kept[size_t(i)])] = (*iso)[size_t(i)];
          found = std::move(w);
          return true;
        }
        if (idx == m.n || m.n - idx < removals - used) return false;
        if (rec(idx + 1, del, contr, used)) return true;
        if (rec(idx + 1, del | (1u << idx), contr, used + 1)) return true;
        return rec(idx + 1, del, contr | (1u << idx), used + 1);
      };
  rec(0, 0, 0, 0);
  return found;
}

bool verify_minor_witness(const Matroid& m, const Matroid& n,
                          const MinorWitness& w) {
  if (w.del.intersects(w.contr)) return false;
  Matroid after_contr = contraction(m, w.contr);
  auto cmap = removal_index_map(m.n, w.contr);
  ElementSet del_in(0, after_contr.n);
  for (int e : w.del.elements()) del_in = del_in.with(cmap[size_t(e)]);
  Matroid minor = deletion(after_contr, del_in);
  if (minor.n != n.n || minor.rank() != n.rank()) return false;

  // Map minor indices back to root elements, then through iso into N.
  std::vector<int> root_elem;
  ElementSet removed = w.del | w.contr;
  for (int e = 0; e < m.n; ++e)
    if (!removed.contains(e)) root_elem.push_back(e);
  std::vector<int> image(size_t(minor.n), -1);
  std::vector<char> hit(size_t(n.n), 0);
  for (int i = 0; i < minor.n; ++i) {
    int t = w.iso[size_t(root_elem[size_t(i)])];
    if (t < 0 || t >= n.n || hit[size_t(t)]) return false;
    hit[size_t(t)] = 1;
    image[size_t(i)] = t;
  }

  std::set<uint32_t> n_bases;
  for (const ElementSet& b : n.bases) n_bases.insert(b.bits);
  size_t matched = 0;
  for (const ElementSet& b : minor.bases) {
    uint32_t mapped = 0;
    for (int e : b.elements()) mapped |= 1u << image[size_t(e)];
    if (!n_bases.count(mapped)) return false;
    ++matched;
  }
  return matched == n_bases.size();
}

// ----- graph minors -----------------------------------------------------------

std::optional<GraphMinorWitness> graph_has_minor(const Graph& g,
                                                 const Graph& h) {
  if (g.num_vertices > kGraphVertexCap)
    raise(ErrorCode::kCapExceeded,
          "graph minor search capped at " +
              std::to_string(kGraphVertexCap) + " vertices");
  std::set<std::pair<int, int>> h_pairs;
  for (const GraphEdge& e : h.edges) {
    if (e.u == e.v) raise(ErrorCode::kBadParams, "pattern graph has a loop");
    auto key = std::minmax(e.u, e.v);
    if (!h_pairs.insert({key.first, key.second}).second)
      raise(ErrorCode::kBadParams, "pattern graph has parallel edges");
  }
  if (!graph_connected(h))
    raise(ErrorCode::kBadParams, "pattern graph must be connected");

  int k = h.num_vertices;
  int nv = g.num_vertices;
  if (k > nv || h.edges.size() > g.edges.size()) return std::nullopt;

  std::vector<uint32_t> adj(size_t(nv), 0);
  for (const GraphEdge& e : g.edges) {
    if (e.u == e.v) continue;
    adj[size_t(e.u)] |= 1u << e.v;
    adj[size_t(e.v)] |= 1u << e.u;
  }
  uint32_t all = (1u << nv) - 1;

  std::vector<uint32_t> nbr(size_t(1) << nv, 0);
  for (uint32_t mask = 1; mask <= all; ++mask) {
    int low = __builtin_ctz(mask);
    nbr[mask] = nbr[mask ^ (1u << low)] | adj[size_t(low)];
  }

  // Connected candidate masks, ascending by size so small models come out
  // first.
  std::vector<uint32_t> connected;
  for (uint32_t mask = 1; mask <= all; ++mask) {
    uint32_t seen = uint32_t(mask & (~mask + 1));
    for (;;) {
      uint32_t grown = (seen | nbr[seen]) & mask;
      if (grown == seen) break;
      seen = grown;
    }
    if (seen == mask) connected.push_back(mask);
  }
  std::stable_sort(connected.begin(), connected.end(),
                   [](uint32_t a, uint32_t b) {
                     return __builtin_popcount(a) < __builtin_popcount(b);
                   });

  std::vector<int> hdeg(size_t(k), 0);
  std::vector<uint32_t> hadj(size_t(k), 0);
  for (auto [u, v] : h_pairs) {
    ++hdeg[size_t(u)];
    ++hdeg[size_t(v)];
    hadj[size_t(u)] |= 1u << v;
    hadj[size_t(v)] |= 1u << u;
  }

  std::vector<uint32_t> chosen(size_t(k), 0);
  std::optional<GraphMinorWitness> found;

  std::function<bool(int, uint32_t)> rec = [&](int i, uint32_t used) {
    if (i == k) {
      GraphMinorWitness w;
      for (int t = 0; t < k; ++t) {
        std::vector<int> verts;
        for (int v = 0; v < nv; ++v)
          if (chosen[size_t(t)] & (1u << v)) verts.push_back(v);
        w.branch_sets.push_back(std::move(verts));
      }
      found = std::move(w);
      return true;
    }
    if (__builtin_popcount(all & ~used) < k - i) return false;
    for (uint32_t mask : connected) {
      if (mask & used) continue;
      // Enough fresh neighbors to eventually realize every pattern edge.
      uint32_t out = nbr[mask] & ~mask;
      if (__builtin_popcount(out) < hdeg[size_t(i)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (hadj[size_t(i)] & (1u << j))
          ok = (nbr[mask] & chosen[size_t(j)]) != 0;
      if (!ok) continue;
      chosen[size_t(i)] = mask;
      if (rec(i + 1, used | mask)) return true;
    }
    return false;
  };
  rec(0, 0);
  return found;
}

bool verify_graph_minor_witness(const Graph& g, const Graph& h,
                                const GraphMinorWitness& w) {
  if (int(w.branch_sets.size()) != h.num_vertices) return false;
  std::vector<uint32_t> masks;
  uint32_t used = 0;
  std::vector<uint32_t> adj(size_t(g.num_vertices), 0);
  for (const GraphEdge& e : g.edges) {
    if (e.u == e.v) continue;
    adj[size_t(e.u)] |= 1u << e.v;
    adj[size_t(e.v)] |= 1u << e.u;
  }
  for (const auto& verts : w.branch_sets) {
    uint32_t mask = 0;
    for (int v : verts) {
      if (v < 0 || v >= g.num_vertices) return false;
      mask |= 1u << v;
    }
    if (mask == 0 || (mask & used)) return false;
    used |= mask;
    // Connectivity within the set.
    uint32_t seen = uint32_t(mask & (~mask + 1));
    for (;;) {
      uint32_t grown = seen;
      for (int v = 0; v < g.num_vertices; ++v)
        if (seen & (1u << v)) grown |= adj[size_t(v)] & mask;
      if (grown == seen) break;
      seen = grown;
    }
    if (seen != mask) return false;
    masks.push_back(mask);
  }
  for (const GraphEdge& e : h.edges) {
    uint32_t a = masks[size_t(e.u)], b = masks[size_t(e.v)];
    bool realized = false;
    for (const GraphEdge& ge : g.edges) {
      bool ab = (a & (1u << ge.u)) && (b & (1u << ge.v));
      bool ba = (b & (1u << ge.u)) && (a & (1u << ge.v));
      if (ab || ba) {
        realized = true;
        break;
      }
    }
    if (!realized) return false;
  }
  return true;
}

}  // namespace cocirc
