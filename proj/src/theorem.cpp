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

#include "cocirc/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "cocirc/connectivity.hpp"
#include "cocirc/constructions.hpp"
#include "cocirc/error.hpp"

namespace cocirc {

const char* branch_kind_name(BranchKind k) {
  switch (k) {
    case BranchKind::kSiOk: return "si-contract";
    case BranchKind::kCoSiOk: return "cosi-contract";
    case BranchKind::kFan: return "fan-contract";
    case BranchKind::kSegCosegWithE: return "pair-point";
    case BranchKind::kSegCosegFlat: return "pair-flat";
    case BranchKind::kCoOk: return "co-delete";
    case BranchKind::kSiCoOk: return "sico-delete";
    case BranchKind::kFanDel: return "fan-delete";
  }
  return "?";
}

bool TheoremVerdict::has(BranchKind k) const {
  return first(k) != nullptr;
}

const Branch* TheoremVerdict::first(BranchKind k) const {
  for (const Branch& b : branches)
    if (b.kind == k) return &b;
  return nullptr;
}

bool GraphTheoremVerdict::has(BranchKind k) const {
  return first(k) != nullptr;
}

const GraphBranch* GraphTheoremVerdict::first(BranchKind k) const {
  for (const GraphBranch& b : branches)
    if (b.kind == k) return &b;
  return nullptr;
}

namespace {

void require_hyp(bool ok, const std::string& which) {
  if (!ok) raise(ErrorCode::kHypothesisViolated, which);
}

Matroid contract_one(const Matroid& m, int x) {
  return contraction(m, ElementSet::empty(m.n).with(x));
}

Matroid delete_one(const Matroid& m, int x) {
  return deletion(m, ElementSet::empty(m.n).with(x));
}

// Owns an engine unless the caller supplied one targeting the same pattern.
struct EngineRef {
  MinorSearch* ptr = nullptr;
  std::unique_ptr<MinorSearch> owned;

  EngineRef(const Matroid& n, MinorSearch* external) {
    if (external) {
      if (external->target().n != n.n ||
          external->target().rank() != n.rank())
        raise(ErrorCode::kBadParams, "engine targets a different pattern");
      ptr = external;
    } else {
      owned = std::make_unique<MinorSearch>(n);
      ptr = owned.get();
    }
  }

  bool minor(const Matroid& host) { return ptr->find(host).has_value(); }
};

void check_contraction_hypotheses(const Matroid& m, const Matroid& n,
                                  const RankTable& rt, ElementSet cstar,
                                  int x0, EngineRef& eng) {
  require_hyp(is_3_connected(rt), "M is not 3-connected");
  require_hyp(is_3_connected(n), "N is not 3-connected");
  require_hyp(n.n >= 4, "|E(N)| < 4");
  require_hyp(is_cocircuit(rt, cstar.bits), "C* is not a cocircuit");
  require_hyp(x0 >= 0 && x0 < m.n && cstar.contains(x0), "x0 is not in C*");
  require_hyp(eng.minor(contract_one(m, x0)), "M/x0 has no N-minor");
}

// Whether M / xi is 3-connected up to exactly the spore (cl(L) - xi, yi).
bool unique_spore_holds(const Matroid& m, const RankTable& rt, ElementSet l,
                        int xi, int yi, std::string* why) {
  ElementSet cll(rt.closure(l.bits), m.n);
  Matroid q = contract_one(m, xi);
  auto map = removal_index_map(m.n, ElementSet::empty(m.n).with(xi));
  ElementSet p = ElementSet::empty(q.n);
  for (int e : cll.without(xi).elements()) p = p.with(map[size_t(e)]);
  auto got = is_3conn_up_to_unique_spore(q);
  if (!got) {
    *why = "M/" + m.label_of(xi) + " is not 3-connected up to a unique spore";
    return false;
  }
  if (!(got->p == p && got->s == map[size_t(yi)])) {
    *why = "M/" + m.label_of(xi) + " has a different spore";
    return false;
  }
  return true;
}

void flag_small_complement(const Matroid& m, ElementSet cll, Branch* b) {
  if (m.n - cll.size() < 4)
    b->flags.push_back("|E - cl(L)| < 4, detailed spore analysis is outside "
                       "its hypotheses");
}

Branch pair_point_branch(const Matroid& m, const RankTable& rt,
                         ElementSet cstar, const SegCosegPair& p,
                         ElementSet cll, EngineRef& eng) {
  Branch b;
  b.kind = BranchKind::kSegCosegWithE;
  b.pair = p;
  b.e = (cll - p.l).elements()[0];
  auto fail = [&b](const std::string& s) {
    b.extras_ok = false;
    b.extra_failures.push_back(s);
  };

  if (cstar.contains(b.e)) fail("e lies in C*");
  Matroid si_e = simplify(contract_one(m, b.e)).m;
  if (!is_3_connected(si_e)) fail("si(M/e) is not 3-connected");
  else if (!eng.minor(si_e)) fail("si(M/e) has no N-minor");

  Matroid q = contraction(m, cll);
  if (!is_3_connected(q)) fail("M/cl(L) is not 3-connected");
  else if (!eng.minor(q)) fail("M/cl(L) has no N-minor");

  for (size_t i = 0; i < b.pair.xs.size(); ++i) {
    std::string why;
    if (!unique_spore_holds(m, rt, b.pair.l, b.pair.xs[i], b.pair.ys[i],
                            &why))
      fail(why);
  }
  flag_small_complement(m, cll, &b);
  return b;
}

Branch pair_flat_branch(const Matroid& m, const RankTable& rt,
                        const SegCosegPair& p, EngineRef& eng) {
  Branch b;
  b.kind = BranchKind::kSegCosegFlat;
  b.pair = p;
  auto fail = [&b](const std::string& s) {
    b.extras_ok = false;
    b.extra_failures.push_back(s);
  };

  Matroid q = contraction(m, p.l);
  if (!is_3_connected(q)) fail("M/L is not 3-connected");
  else if (!eng.minor(q)) fail("M/L has no N-minor");

  for (size_t i = 0; i < p.xs.size(); ++i) {
    std::string why;
    if (!unique_spore_holds(m, rt, p.l, p.xs[i], p.ys[i], &why)) fail(why);
  }
  flag_small_complement(m, p.l, &b);
  return b;
}

}  // namespace

TheoremVerdict classify_main(const Matroid& m, const Matroid& n,
                             ElementSet cstar, int x0, MinorSearch* engine,
                             bool first_only) {
  RankTable rt(m);
  EngineRef eng(n, engine);
  check_contraction_hypotheses(m, n, rt, cstar, x0, eng);

  TheoremVerdict v;

  for (int x : cstar.elements()) {
    Matroid si_q = simplify(contract_one(m, x)).m;
    if (is_3_connected(si_q) && eng.minor(si_q)) {
      Branch b;
      b.kind = BranchKind::kSiOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (const Fan& f : fans(m)) {
    if (!cstar.contains(f.x1) || !cstar.contains(f.x3)) continue;
    Matroid si_q = simplify(contract_one(m, f.x2)).m;
    if (is_3_connected(si_q) && eng.minor(si_q)) {
      Branch b;
      b.kind = BranchKind::kFan;
      b.fan = f;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  std::vector<SegCosegPair> pairs = seg_coseg_pairs(m);
  for (const SegCosegPair& p : pairs) {
    ElementSet cll(rt.closure(p.l.bits), m.n);
    if ((p.l & cstar) == p.l && (cll - p.l).size() == 1)
      v.branches.push_back(pair_point_branch(m, rt, cstar, p, cll, eng));
  }
  if (first_only && v.any()) return v;

  for (const SegCosegPair& p : pairs) {
    if (rt.is_flat(p.l.bits) && (p.l - cstar).size() <= 1)
      v.branches.push_back(pair_flat_branch(m, rt, p, eng));
  }
  return v;
}

TheoremVerdict classify_thm1(const Matroid& m, const Matroid& n,
                             ElementSet cstar, int x0, MinorSearch* engine,
                             bool first_only) {
  RankTable rt(m);
  EngineRef eng(n, engine);
  check_contraction_hypotheses(m, n, rt, cstar, x0, eng);

  TheoremVerdict v;

  for (int x : cstar.elements()) {
    Matroid si_q = simplify(contract_one(m, x)).m;
    if (is_3_connected(si_q) && eng.minor(si_q)) {
      Branch b;
      b.kind = BranchKind::kSiOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (int x : cstar.elements()) {
    Matroid cosi = cosimplify(simplify(contract_one(m, x)).m).m;
    if (is_3_connected(cosi) && eng.minor(cosi)) {
      Branch b;
      b.kind = BranchKind::kCoSiOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (const Fan& f : fans(m)) {
    if (!cstar.contains(f.x1) || !cstar.contains(f.x3)) continue;
    Matroid si_q = simplify(contract_one(m, f.x2)).m;
    if (is_3_connected(si_q) && eng.minor(si_q)) {
      Branch b;
      b.kind = BranchKind::kFan;
      b.fan = f;
      v.branches.push_back(std::move(b));
    }
  }
  return v;
}

TheoremVerdict classify_dual(const Matroid& m, const Matroid& n,
                             ElementSet c, int x0, MinorSearch* engine,
                             bool first_only) {
  RankTable rt(m);
  EngineRef eng(n, engine);
  require_hyp(is_3_connected(rt), "M is not 3-connected");
  require_hyp(is_3_connected(n), "N is not 3-connected");
  require_hyp(n.n >= 4, "|E(N)| < 4");
  require_hyp(is_circuit(rt, c.bits), "C is not a circuit");
  require_hyp(x0 >= 0 && x0 < m.n && c.contains(x0), "x0 is not in C");
  require_hyp(eng.minor(delete_one(m, x0)), "M\\x0 has no N-minor");

  TheoremVerdict v;

  for (int x : c.elements()) {
    Matroid co = cosimplify(delete_one(m, x)).m;
    if (is_3_connected(co) && eng.minor(co)) {
      Branch b;
      b.kind = BranchKind::kCoOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (int x : c.elements()) {
    Matroid sico = simplify(cosimplify(delete_one(m, x)).m).m;
    if (is_3_connected(sico) && eng.minor(sico)) {
      Branch b;
      b.kind = BranchKind::kSiCoOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (const Fan& f : fans(m)) {
    if (!c.contains(f.x2) || !c.contains(f.x4)) continue;
    Matroid co = cosimplify(delete_one(m, f.x3)).m;
    if (is_3_connected(co) && eng.minor(co)) {
      Branch b;
      b.kind = BranchKind::kFanDel;
      b.fan = f;
      v.branches.push_back(std::move(b));
    }
  }
  return v;
}

// ----- graphic fast path ------------------------------------------------------

namespace {

bool is_bond_of(const Graph& g, std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  for (auto bond : graph_bonds(g)) {
    if (bond == labels) return true;
  }
  return false;
}

bool graph_minor_ok(const Graph& host, const Graph& h) {
  return graph_has_minor(host, h).has_value();
}

// Segment-cosegment pairs of M(g) for simple g: L is a triangle, and each
// (L - xi) u yi must be a triad.  Mirrors the matroid detector.
struct GraphPair {
  std::vector<std::string> l, lstar;  // lstar matched to sorted l
};

std::vector<GraphPair> graph_seg_coseg_pairs(const Graph& g) {
  std::vector<GraphPair> out;
  auto triads = graph_triads(g);
  for (std::vector<std::string> tri : graph_triangles(g)) {
    std::sort(tri.begin(), tri.end());
    // Candidate yi lists per position.
    std::vector<std::vector<std::string>> cand(tri.size());
    for (size_t i = 0; i < tri.size(); ++i) {
      std::vector<std::string> rest;
      for (size_t j = 0; j < tri.size(); ++j)
        if (j != i) rest.push_back(tri[j]);
      for (const auto& td : triads) {
        std::vector<std::string> extra;
        std::set_difference(td.begin(), td.end(), rest.begin(), rest.end(),
                            std::back_inserter(extra));
        if (extra.size() == 1 &&
            std::find(tri.begin(), tri.end(), extra[0]) == tri.end())
          cand[i].push_back(extra[0]);
      }
    }
    // Distinct representatives.
    std::vector<std::string> ys(tri.size());
    std::function<void(size_t)> pick = [&](size_t i) {
      if (i == tri.size()) {
        out.push_back({tri, ys});
        return;
      }
      for (const std::string& y : cand[i]) {
        if (std::find(ys.begin(), ys.begin() + long(i), y) !=
            ys.begin() + long(i))
          continue;
        ys[i] = y;
        pick(i + 1);
      }
    };
    pick(0);
  }
  return out;
}

}  // namespace

GraphTheoremVerdict classify_main_graphic(const Graph& g, const Graph& h,
                                          const std::vector<std::string>& cstar,
                                          const std::string& x0,
                                          bool first_only) {
  require_hyp(graphic_3_connected(g), "M is not 3-connected");
  require_hyp(graphic_3_connected(h), "N is not 3-connected");
  require_hyp(h.edges.size() >= 4, "|E(N)| < 4");
  require_hyp(is_bond_of(g, cstar), "C* is not a cocircuit");
  require_hyp(std::find(cstar.begin(), cstar.end(), x0) != cstar.end(),
              "x0 is not in C*");
  require_hyp(graph_minor_ok(contract_edge(g, x0), h),
              "M/x0 has no N-minor");

  GraphTheoremVerdict v;

  for (const std::string& x : cstar) {
    Graph q = contract_edge(g, x);
    if (graphic_3_connected(simplify_graph(q)) && graph_minor_ok(q, h)) {
      GraphBranch b;
      b.kind = BranchKind::kSiOk;
      b.x = x;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  for (const GraphFan& f : graph_fans(g)) {
    bool x1_in = std::find(cstar.begin(), cstar.end(), f.x1) != cstar.end();
    bool x3_in = std::find(cstar.begin(), cstar.end(), f.x3) != cstar.end();
    if (!x1_in || !x3_in) continue;
    Graph q = contract_edge(g, f.x2);
    if (graphic_3_connected(simplify_graph(q)) && graph_minor_ok(q, h)) {
      GraphBranch b;
      b.kind = BranchKind::kFan;
      b.fan = f;
      v.branches.push_back(std::move(b));
    }
  }
  if (first_only && v.any()) return v;

  // Simple graph: every triangle is its own closure, so the alternative
  // with cl(L) - L = {e} cannot arise; only the flat alternative remains.
  for (const GraphPair& p : graph_seg_coseg_pairs(g)) {
    int outside = 0;
    for (const std::string& x : p.l)
      if (std::find(cstar.begin(), cstar.end(), x) == cstar.end()) ++outside;
    if (outside > 1) continue;

    GraphBranch b;
    b.kind = BranchKind::kSegCosegFlat;
    b.l = p.l;
    b.lstar = p.lstar;
    auto fail = [&b](const std::string& s) {
      b.extras_ok = false;
      b.extra_failures.push_back(s);
    };

    Graph q = contract_edges(g, p.l);
    if (!graphic_3_connected(q)) fail("M/L is not 3-connected");
    else if (!graph_minor_ok(q, h)) fail("M/L has no N-minor");

    for (size_t i = 0; i < p.l.size(); ++i) {
      Graph qi = contract_edge(g, p.l[i]);
      if (int(qi.edges.size()) > ElementSet::kMaxGroundSize) {
        b.flags.push_back("spore check skipped for " + p.l[i] +
                          ": quotient exceeds the exact kernel");
        continue;
      }
      Matroid mq = graphic(qi);
      ElementSet want_p = ElementSet::empty(mq.n);
      for (size_t j = 0; j < p.l.size(); ++j)
        if (j != i) want_p = want_p.with(mq.index_of_label(p.l[j]));
      auto got = is_3conn_up_to_unique_spore(mq);
      if (!got || !(got->p == want_p &&
                    got->s == mq.index_of_label(p.lstar[i])))
        fail("M/" + p.l[i] + " lacks the expected unique spore");
    }
    if (int(g.edges.size()) - int(p.l.size()) < 4)
      b.flags.push_back("|E - cl(L)| < 4, detailed spore analysis is "
                        "outside its hypotheses");
    v.branches.push_back(std::move(b));
  }
  return v;
}

// ----- catalogue --------------------------------------------------------------

namespace {

// One representative per isomorphism class of simple 3-connected graphs on
// at most 7 vertices and 11 edges, by exhaustive subset enumeration of the
// complete graph's edges.
const std::vector<Graph>& small_3connected_graphs() {
  static const std::vector<Graph> cache = [] {
    std::vector<Graph> reps;
    std::vector<Matroid> rep_mats;
    // (vertices, edges, sorted degrees) -> indices into reps
    std::map<std::tuple<int, int, std::vector<int>>, std::vector<size_t>>
        buckets;

    for (int v = 4; v <= 7; ++v) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
      int maxe = int(pairs.size());
      int lo = (3 * v + 1) / 2;  // min degree 3 forces at least this many
      for (int e = lo; e <= std::min(11, maxe); ++e) {
        std::vector<int> comb(static_cast<size_t>(e));
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
          std::vector<int> deg(size_t(v), 0);
          for (int idx : comb) {
            ++deg[size_t(pairs[size_t(idx)].first)];
            ++deg[size_t(pairs[size_t(idx)].second)];
          }
          if (*std::min_element(deg.begin(), deg.end()) >= 3) {
            Graph g;
            g.num_vertices = v;
            for (int idx : comb) {
              auto [a, b] = pairs[size_t(idx)];
              g.edges.push_back(
                  {a, b, std::to_string(a) + "-" + std::to_string(b)});
            }
            if (graphic_3_connected(g)) {
              Matroid mg = graphic(g);
              std::vector<int> key_deg = deg;
              std::sort(key_deg.begin(), key_deg.end());
              auto key = std::make_tuple(v, e, key_deg);
              bool dup = false;
              for (size_t idx : buckets[key]) {
                if (is_isomorphic(rep_mats[idx], mg)) {
                  dup = true;
                  break;
                }
              }
              if (!dup) {
                buckets[key].push_back(reps.size());
                reps.push_back(std::move(g));
                rep_mats.push_back(std::move(mg));
              }
            }
          }
          int i = e - 1;
          while (i >= 0 && comb[size_t(i)] == maxe - e + i) --i;
          if (i < 0) break;
          ++comb[size_t(i)];
          for (int j = i + 1; j < e; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
      }
    }
    return reps;
  }();
  return cache;
}

}  // namespace

std::vector<CatalogueEntry> default_catalogue(uint64_t seed) {
  std::vector<CatalogueEntry> cat;
  auto add = [&cat](const std::string& name, Matroid m) {
    for (const CatalogueEntry& e : cat) {
      if (e.m.n == m.n && e.m.rank() == m.rank() &&
          e.m.bases.size() == m.bases.size() && is_isomorphic(e.m, m))
        return;
    }
    cat.push_back({name, std::move(m)});
  };

  for (int r = 1; r <= 4; ++r)
    for (int n = r; n <= 8; ++n)
      add("U(" + std::to_string(r) + "," + std::to_string(n) + ")",
          uniform(r, n));

  add("theta-double3", theta_double(3, seed));
  add("dual(theta-double3)", dual(theta_double(3, seed)));

  for (int k = 3; k <= 5; ++k)
    add("M(W" + std::to_string(k) + ")", graphic(wheel_graph(k)));

  const std::vector<Graph>& graphs = small_3connected_graphs();
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    add("G" + std::to_string(g.num_vertices) + "." +
            std::to_string(g.edges.size()) + "." + std::to_string(i),
        graphic(g));
  }
  return cat;
}

std::vector<CatalogueEntry> default_targets() {
  std::vector<CatalogueEntry> t;
  t.push_back({"U(2,4)", uniform(2, 4)});
  t.push_back({"M(K4)", graphic(complete_graph(4))});
  return t;
}

// ----- sweep ------------------------------------------------------------------

SweepReport sweep_catalogue(const std::vector<CatalogueEntry>& catalogue,
                            const std::vector<CatalogueEntry>& targets,
                            int jobs, bool first_only) {
  auto t0 = std::chrono::steady_clock::now();

  struct Slot {
    std::vector<SweepInstance> instances;
    std::vector<std::string> violations, flags, skipped;
  };
  std::vector<Slot> slots(catalogue.size());

  auto run_entry = [&](size_t ci) {
    const CatalogueEntry& entry = catalogue[ci];
    Slot& slot = slots[ci];
    if (!is_3_connected(entry.m)) {
      slot.skipped.push_back(entry.name + ": not 3-connected");
      return;
    }
    std::vector<ElementSet> cocs = cocircuits(entry.m);
    for (const CatalogueEntry& target : targets) {
      if (target.m.n < 4 || !is_3_connected(target.m)) continue;
      if (target.m.n > entry.m.n - 1) continue;  // contraction too small
      MinorSearch engine(target.m);
      for (ElementSet cstar : cocs) {
        SweepInstance inst;
        inst.m_name = entry.name;
        inst.n_name = target.name;
        inst.cstar = cstar;
        for (int x : cstar.elements())
          if (engine.find(contract_one(entry.m, x)).has_value())
            inst.valid_x0.push_back(x);
        if (inst.valid_x0.empty()) continue;

        auto t1 = std::chrono::steady_clock::now();
        TheoremVerdict verdict =
            classify_main(entry.m, target.m, cstar, inst.valid_x0[0],
                          &engine, first_only);
        inst.ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t1)
                      .count();
        inst.branches = verdict.branches;
        inst.ok = verdict.any();

        std::string where = entry.name + " / " + target.name + " C*={";
        for (const std::string& lab : entry.m.labels_of(cstar))
          where += lab + ",";
        where.back() = '}';
        if (!inst.ok)
          slot.violations.push_back("no alternative holds: " + where);
        for (const Branch& b : inst.branches) {
          for (const std::string& f : b.extra_failures)
            slot.violations.push_back(std::string(branch_kind_name(b.kind)) +
                                      " extras: " + f + " at " + where);
          for (const std::string& f : b.flags)
            slot.flags.push_back(f + " at " + where);
        }
        slot.instances.push_back(std::move(inst));
      }
    }
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < catalogue.size(); ++i) run_entry(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= catalogue.size()) break;
        run_entry(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepReport report;
  for (Slot& slot : slots) {
    for (SweepInstance& inst : slot.instances) {
      for (const Branch& b : inst.branches)
        ++report.histogram[branch_kind_name(b.kind)];
      report.instances.push_back(std::move(inst));
    }
    for (std::string& s : slot.violations)
      report.violations.push_back(std::move(s));
    for (std::string& s : slot.flags) report.flags.push_back(std::move(s));
    for (std::string& s : slot.skipped)
      report.skipped.push_back(std::move(s));
  }
  report.instance_count = int(report.instances.size());
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace cocirc
