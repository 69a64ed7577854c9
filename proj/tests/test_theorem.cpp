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

#include <algorithm>
#include <set>

#include "cocirc/connectivity.hpp"
#include "cocirc/constructions.hpp"
#include "cocirc/theorem.hpp"
#include "test_util.hpp"

using namespace cocirc;

namespace {

ElementSet labels_set(const Matroid& m, const std::vector<std::string>& ls) {
  return m.set_by_labels(ls);
}

ErrorCode classify_error(const Matroid& m, const Matroid& n, ElementSet cstar,
                         int x0, std::string* msg) {
  try {
    (void)classify_main(m, n, cstar, x0);
  } catch (const Error& e) {
    *msg = e.what();
    return e.code();
  }
  return ErrorCode::kBadParams;
}

}  // namespace

TEST_CASE("plain contraction instance") {
  Matroid m = uniform(3, 6);
  Matroid n = uniform(2, 4);
  ElementSet cstar = cocircuits(m)[0];
  int x0 = cstar.elements()[0];

  TheoremVerdict v = classify_main(m, n, cstar, x0);
  CHECK(v.any());
  CHECK(v.has(BranchKind::kSiOk));
  // Every element of the cocircuit works here.
  int si_count = 0;
  for (const Branch& b : v.branches) si_count += b.kind == BranchKind::kSiOk;
  CHECK(si_count == cstar.size());

  TheoremVerdict t1 = classify_thm1(m, n, cstar, x0);
  CHECK(t1.has(BranchKind::kSiOk));

  TheoremVerdict quick = classify_main(m, n, cstar, x0, nullptr, true);
  CHECK(quick.any());
  CHECK(quick.branches[0].kind == BranchKind::kSiOk);
}

TEST_CASE("two-hub dual instance lands on the flat pair") {
  Matroid md = dual(k5_minus_e());
  Matroid n = graphic(complete_graph(4));
  ElementSet cstar = labels_set(md, {"a", "b", "c", "d"});
  int x0 = md.index_of_label("a");

  TheoremVerdict v = classify_main(md, n, cstar, x0);
  CHECK(!v.has(BranchKind::kSiOk));
  CHECK(!v.has(BranchKind::kFan));
  CHECK(!v.has(BranchKind::kSegCosegWithE));
  REQUIRE(v.has(BranchKind::kSegCosegFlat));
  for (const Branch& b : v.branches) {
    REQUIRE(b.kind == BranchKind::kSegCosegFlat);
    CHECK(b.extras_ok);
    CHECK((b.pair.l - cstar).size() == 1);
    CHECK(b.flags.empty());
  }

  // The coarser statement fires through the cosimplification.
  TheoremVerdict t1 = classify_thm1(md, n, cstar, x0);
  CHECK(!t1.has(BranchKind::kSiOk));
  REQUIRE(t1.has(BranchKind::kCoSiOk));
  std::set<int> cosi;
  for (const Branch& b : t1.branches)
    if (b.kind == BranchKind::kCoSiOk) cosi.insert(b.x);
  for (int x : cstar.elements()) CHECK(cosi.count(x) == 1);
}

TEST_CASE("deletion-side classification") {
  Matroid m = k5_minus_e();
  Matroid n = graphic(complete_graph(4));
  ElementSet c = labels_set(m, {"a", "b", "c", "d"});
  int x0 = m.index_of_label("a");

  TheoremVerdict v = classify_dual(m, n, c, x0);
  CHECK(!v.has(BranchKind::kCoOk));
  CHECK(v.has(BranchKind::kSiCoOk));

  Matroid u = uniform(3, 6);
  ElementSet cu = circuits(u)[0];
  TheoremVerdict vu = classify_dual(u, uniform(2, 4), cu, cu.elements()[0]);
  CHECK(vu.has(BranchKind::kCoOk));
}

TEST_CASE("deletion side mirrors the dual contraction side") {
  struct Inst {
    Matroid m, n;
    std::vector<std::string> c;
  };
  std::vector<Inst> insts;
  insts.push_back({k5_minus_e(), graphic(complete_graph(4)),
                   {"a", "b", "c", "d"}});
  insts.push_back({uniform(3, 6), uniform(2, 4), {}});
  insts.push_back({graphic(wheel_graph(4)), graphic(complete_graph(4)), {}});

  int checked = 0;
  for (const Inst& inst : insts) {
    ElementSet c = inst.c.empty() ? circuits(inst.m)[0]
                                  : labels_set(inst.m, inst.c);
    Matroid md = dual(inst.m), nd = dual(inst.n);
    MinorSearch eng(inst.n);
    int x0 = -1;
    for (int x : c.elements())
      if (eng.find(deletion(inst.m, ElementSet::empty(inst.m.n).with(x)))) {
        x0 = x;
        break;
      }
    if (x0 < 0) continue;
    ++checked;

    TheoremVerdict del_side = classify_dual(inst.m, inst.n, c, x0);
    TheoremVerdict con_side = classify_thm1(md, nd, c, x0);

    std::set<int> co, si_dual;
    for (const Branch& b : del_side.branches)
      if (b.kind == BranchKind::kCoOk) co.insert(b.x);
    for (const Branch& b : con_side.branches)
      if (b.kind == BranchKind::kSiOk) si_dual.insert(b.x);
    CHECK(co == si_dual);

    std::set<int> sico, cosi_dual;
    for (const Branch& b : del_side.branches)
      if (b.kind == BranchKind::kSiCoOk) sico.insert(b.x);
    for (const Branch& b : con_side.branches)
      if (b.kind == BranchKind::kCoSiOk) cosi_dual.insert(b.x);
    CHECK(sico == cosi_dual);

    std::set<std::vector<int>> fan_del, fan_dual;
    for (const Branch& b : del_side.branches)
      if (b.kind == BranchKind::kFanDel)
        fan_del.insert({b.fan.x1, b.fan.x2, b.fan.x3, b.fan.x4});
    for (const Branch& b : con_side.branches)
      if (b.kind == BranchKind::kFan)
        fan_dual.insert({b.fan.x4, b.fan.x3, b.fan.x2, b.fan.x1});
    CHECK(fan_del == fan_dual);
  }
  CHECK(checked == 3);
}

TEST_CASE("hypothesis violations are named") {
  Matroid k4 = graphic(complete_graph(4));
  Matroid u24 = uniform(2, 4);
  std::string msg;

  Matroid path = graphic(parse_graph("vertices 3\n0 1 a\n1 2 b\n"));
  CHECK(classify_error(path, u24, ElementSet::empty(2).with(0), 0, &msg) ==
        ErrorCode::kHypothesisViolated);
  CHECK(msg.find("M is not 3-connected") != std::string::npos);

  CHECK(classify_error(uniform(3, 6), uniform(2, 3), cocircuits(uniform(3, 6))[0],
                       cocircuits(uniform(3, 6))[0].elements()[0],
                       &msg) == ErrorCode::kHypothesisViolated);
  CHECK(msg.find("|E(N)| < 4") != std::string::npos);

  CHECK(classify_error(k4, u24, ElementSet::empty(6).with(0), 0, &msg) ==
        ErrorCode::kHypothesisViolated);
  CHECK(msg.find("not a cocircuit") != std::string::npos);

  ElementSet triad = cocircuits(k4)[0];
  int outside = triad.complement().elements()[0];
  CHECK(classify_error(k4, u24, triad, outside, &msg) ==
        ErrorCode::kHypothesisViolated);
  CHECK(msg.find("x0 is not in C*") != std::string::npos);

  CHECK(classify_error(k4, k4, triad, triad.elements()[0], &msg) ==
        ErrorCode::kHypothesisViolated);
  CHECK(msg.find("M/x0 has no N-minor") != std::string::npos);
}

TEST_CASE("graphic classifier matches the exact one on small instances") {
  std::mt19937 rng(88);
  int compared = 0;
  for (int trial = 0; trial < 12 && compared < 4; ++trial) {
    Graph g = testutil::random_subgraph(rng, 6, 10 + trial % 3);
    if (!graphic_3_connected(g)) continue;
    Matroid m = graphic(g);
    Graph h = complete_graph(4);
    Matroid n = graphic(h);
    MinorSearch eng(n);

    for (const auto& bond : graph_bonds(g)) {
      ElementSet cstar = m.set_by_labels(bond);
      int x0 = -1;
      for (int x : cstar.elements())
        if (eng.find(contraction(m, ElementSet::empty(m.n).with(x)))) {
          x0 = x;
          break;
        }
      if (x0 < 0) continue;
      ++compared;

      TheoremVerdict exact = classify_main(m, n, cstar, x0, &eng);
      GraphTheoremVerdict fast =
          classify_main_graphic(g, h, bond, m.label_of(x0));

      std::set<std::string> exact_si, fast_si;
      for (const Branch& b : exact.branches)
        if (b.kind == BranchKind::kSiOk) exact_si.insert(m.label_of(b.x));
      for (const GraphBranch& b : fast.branches)
        if (b.kind == BranchKind::kSiOk) fast_si.insert(b.x);
      CHECK(exact_si == fast_si);

      std::set<std::vector<std::string>> exact_fan, fast_fan;
      for (const Branch& b : exact.branches)
        if (b.kind == BranchKind::kFan)
          exact_fan.insert({m.label_of(b.fan.x1), m.label_of(b.fan.x2),
                            m.label_of(b.fan.x3), m.label_of(b.fan.x4)});
      for (const GraphBranch& b : fast.branches)
        if (b.kind == BranchKind::kFan)
          fast_fan.insert({b.fan.x1, b.fan.x2, b.fan.x3, b.fan.x4});
      CHECK(exact_fan == fast_fan);

      std::set<std::vector<std::string>> exact_flat, fast_flat;
      for (const Branch& b : exact.branches)
        if (b.kind == BranchKind::kSegCosegFlat) {
          std::vector<std::string> ls = m.labels_of(b.pair.l);
          std::sort(ls.begin(), ls.end());
          exact_flat.insert(ls);
        }
      for (const GraphBranch& b : fast.branches)
        if (b.kind == BranchKind::kSegCosegFlat) {
          std::vector<std::string> ls = b.l;
          std::sort(ls.begin(), ls.end());
          fast_flat.insert(ls);
        }
      CHECK(exact_flat == fast_flat);
      break;  // one bond per graph keeps this quick
    }
  }
  CHECK(compared >= 3);
}

TEST_CASE("hub-and-cluster instance fires the fan alternative") {
  Graph g = fig1_graph();
  Graph k6 = complete_graph(6);
  std::vector<std::string> cstar = {"ab", "ac", "ad", "ae",
                                    "af", "ah", "ai", "aj"};

  GraphTheoremVerdict v = classify_main_graphic(g, k6, cstar, "ad", true);
  REQUIRE(v.any());
  CHECK(v.branches[0].kind == BranchKind::kFan);

  GraphTheoremVerdict full = classify_main_graphic(g, k6, cstar, "ad");
  CHECK(!full.has(BranchKind::kSiOk));
  CHECK(!full.has(BranchKind::kSegCosegWithE));
  CHECK(!full.has(BranchKind::kSegCosegFlat));
  bool named_fan = false;
  for (const GraphBranch& b : full.branches)
    if (b.kind == BranchKind::kFan)
      named_fan |= b.fan.x1 == "ad" && b.fan.x2 == "cd" &&
                   b.fan.x3 == "ac" && b.fan.x4 == "bc";
  CHECK(named_fan);
}

TEST_CASE("catalogue construction") {
  std::vector<CatalogueEntry> cat = default_catalogue(2);
  CHECK(cat.size() > 30);

  auto find_iso = [&cat](const Matroid& m) {
    for (const CatalogueEntry& e : cat)
      if (e.m.n == m.n && e.m.rank() == m.rank() && is_isomorphic(e.m, m))
        return true;
    return false;
  };
  CHECK(find_iso(uniform(2, 4)));
  CHECK(find_iso(graphic(complete_graph(4))));
  CHECK(find_iso(graphic(complete_graph(5))));
  CHECK(find_iso(k5_minus_e()));
  CHECK(find_iso(dual(theta_double(3, 2))));
  Graph k33 = parse_graph(
      "vertices 6\n"
      "0 3 a\n0 4 b\n0 5 c\n"
      "1 3 d\n1 4 e\n1 5 f\n"
      "2 3 g\n2 4 h\n2 5 i\n");
  CHECK(find_iso(graphic(k33)));

  // No isomorphic duplicates.
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].m.n != cat[j].m.n || cat[i].m.rank() != cat[j].m.rank())
        continue;
      CHECK(!is_isomorphic(cat[i].m, cat[j].m).has_value());
    }
}

TEST_CASE("sweep on a small catalogue") {
  std::vector<CatalogueEntry> cat;
  cat.push_back({"U(3,6)", uniform(3, 6)});
  cat.push_back({"M(W4)", graphic(wheel_graph(4))});
  cat.push_back({"dual(theta-double3)", dual(theta_double(3, 2))});
  cat.push_back({"U(4,4)", uniform(4, 4)});  // not 3-connected: skipped

  SweepReport report = sweep_catalogue(cat, default_targets(), 1, true);
  CHECK(report.violations.empty());
  CHECK(report.instance_count > 0);
  CHECK(report.skipped.size() == 1);
  CHECK(!report.histogram.empty());
  CHECK(report.histogram.count("si-contract") == 1);
  CHECK(report.histogram.count("pair-flat") == 1);
  for (const SweepInstance& inst : report.instances) {
    CHECK(inst.ok);
    CHECK(!inst.valid_x0.empty());
  }

  // Deterministic and independent of the worker count.
  SweepReport again = sweep_catalogue(cat, default_targets(), 3, true);
  CHECK(again.histogram == report.histogram);
  CHECK(again.instance_count == report.instance_count);
  CHECK(again.violations == report.violations);
  CHECK(again.skipped == report.skipped);

  SweepReport empty = sweep_catalogue({}, default_targets(), 1, true);
  CHECK(empty.instance_count == 0);
  CHECK(empty.violations.empty());
}
