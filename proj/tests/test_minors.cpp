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

#include <random>

#include "cocirc/connectivity.hpp"
#include "cocirc/constructions.hpp"
#include "cocirc/graphic.hpp"
#include "cocirc/minors.hpp"
#include "test_util.hpp"

using namespace cocirc;

namespace {

// Retained elements of the witness, as a set of the host matroid.
ElementSet kept_elements(const Matroid& m, const MinorWitness& w) {
  return (w.del | w.contr).complement();
}

Matroid contract_label(const Matroid& m, const std::string& label) {
  return contraction(m, ElementSet::empty(m.n).with(m.index_of_label(label)));
}

}  // namespace

TEST_CASE("identity and impossibility") {
  Matroid k4 = graphic(complete_graph(4));
  auto self = has_minor(k4, k4);
  REQUIRE(self.has_value());
  CHECK(self->del.size() == 0);
  CHECK(self->contr.size() == 0);
  CHECK(verify_minor_witness(k4, k4, *self));

  CHECK(!has_minor(uniform(2, 4), uniform(3, 4)).has_value());
  CHECK(!has_minor(uniform(2, 4), uniform(2, 5)).has_value());

  // Binary matroids have no four-point line.
  CHECK(!has_minor(k4, uniform(2, 4)).has_value());
  CHECK(!has_minor(graphic(k5_minus_e_graph()), uniform(2, 4)).has_value());

  // The rank-3 instance is binary (it is the wheel), but from rank 4 on the
  // collinear class is a four-point line.
  CHECK(!has_minor(theta(3, 2), uniform(2, 4)).has_value());
  CHECK(has_minor(theta(4, 7), uniform(2, 4)).has_value());
}

TEST_CASE("witnesses replay and tampering is caught") {
  Matroid m = graphic(k5_minus_e_graph());
  Matroid k4 = graphic(complete_graph(4));
  auto w = has_minor(m, k4);
  REQUIRE(w.has_value());
  CHECK(w->del.size() + w->contr.size() == 3);
  CHECK(verify_minor_witness(m, k4, *w));

  // Swapping two images breaks the isomorphism.
  MinorWitness bad = *w;
  int a = -1, b = -1;
  for (int e = 0; e < m.n; ++e) {
    if (bad.iso[size_t(e)] < 0) continue;
    if (a < 0) a = e;
    else if (b < 0) b = e;
  }
  std::swap(bad.iso[size_t(a)], bad.iso[size_t(b)]);
  bool still_fine = verify_minor_witness(m, k4, bad);
  // A transposition can land in an automorphism; moving a removed element
  // into the kept set cannot.
  MinorWitness worse = *w;
  worse.del = ElementSet::empty(m.n);
  worse.contr = ElementSet::empty(m.n);
  CHECK((!still_fine || !verify_minor_witness(m, k4, worse)));
}

TEST_CASE("loops and coloops are routed to their only legal move") {
  Graph g = parse_graph(
      "vertices 4\n"
      "0 0 l\n"
      "0 1 a\n"
      "1 2 b\n"
      "0 2 c\n"
      "2 3 d\n");  // loop + triangle + bridge
  Matroid m = graphic(g);
  CHECK(has_minor(m, uniform(2, 3)).has_value());

  // Target containing a loop: only the host loop can serve it.
  Matroid loop_plus_edge = graphic(parse_graph(
      "vertices 2\n"
      "0 0 p\n"
      "0 1 q\n"));
  auto w = has_minor(m, loop_plus_edge);
  REQUIRE(w.has_value());
  CHECK(verify_minor_witness(m, loop_plus_edge, *w));
  CHECK(w->contr.contains(m.index_of_label("l")) == false);

  // Coloop target from the bridge.
  Matroid one_coloop = graphic(parse_graph(
      "vertices 2\n"
      "0 1 q\n"));
  auto w2 = has_minor(m, one_coloop);
  REQUIRE(w2.has_value());
  CHECK(verify_minor_witness(m, one_coloop, *w2));
}

TEST_CASE("dual of the two-hub fixture has wheel minors at every circuit element") {
  Matroid md = dual(k5_minus_e());
  Matroid k4 = graphic(complete_graph(4));
  MinorSearch engine(k4);
  for (const std::string& x : {"a", "b", "c", "d"}) {
    Matroid q = contract_label(md, x);
    auto w = engine.find(q);
    REQUIRE(w.has_value());
    CHECK(verify_minor_witness(q, k4, *w));
  }
  CHECK(engine.memo_size() > 0);
}

TEST_CASE("memoized engine agrees with the naive oracle") {
  std::mt19937 rng(4051);
  Matroid u24 = uniform(2, 4);
  Matroid k4 = graphic(complete_graph(4));
  MinorSearch engine_u(u24), engine_k(k4);

  int present = 0, absent = 0;
  for (int trial = 0; trial < 14; ++trial) {
    Matroid m = trial % 2 == 0
                    ? testutil::random_matroid(rng, 7 + trial % 3, 3, 20)
                    : graphic(testutil::random_subgraph(rng, 5, 8 + trial % 2));
    for (auto* engine : {&engine_u, &engine_k}) {
      auto fast = engine->find(m);
      auto slow = has_minor_naive(m, engine->target());
      CHECK(fast.has_value() == slow.has_value());
      if (fast) {
        ++present;
        CHECK(verify_minor_witness(m, engine->target(), *fast));
        CHECK(verify_minor_witness(m, engine->target(), *slow));
      } else {
        ++absent;
      }
    }
  }
  CHECK(present > 0);
  CHECK(absent > 0);
}

TEST_CASE("contraction minors respect vertical partitions") {
  // For a vertical 3-partition (X1, X2, x) and a 3-connected minor of M/x,
  // the retained elements crowd one side: the other keeps at most one.
  // When the small side is X1, contracting any element of X1 - cl(X2)
  // preserves the minor.
  std::mt19937 rng(77);
  Matroid n = graphic(complete_graph(4));
  MinorSearch engine(n);
  int partitions_seen = 0, contractions_checked = 0;

  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testutil::random_subgraph(rng, 6, 10 + trial % 3);
    Matroid m = graphic(g);
    if (!is_3_connected(m)) continue;
    RankTable rt(m);
    for (int x = 0; x < m.n && partitions_seen < 25; ++x) {
      Matroid q = contraction(m, ElementSet::empty(m.n).with(x));
      auto w = engine.find(q);
      if (!w) continue;
      auto qmap = removal_index_map(m.n, ElementSet::empty(m.n).with(x));
      ElementSet kept_q = kept_elements(q, *w);
      ElementSet kept_m = ElementSet::empty(m.n);
      for (int e = 0; e < m.n; ++e)
        if (e != x && kept_q.contains(qmap[size_t(e)]))
          kept_m = kept_m.with(e);

      for (const VerticalPartition& p : vertical_3_partitions(rt, x)) {
        ++partitions_seen;
        int c1 = (kept_m & p.x1).size();
        int c2 = (kept_m & p.x2).size();
        CHECK((c1 <= 1 || c2 <= 1));

        ElementSet small = c1 <= 1 ? p.x1 : p.x2;
        ElementSet other = c1 <= 1 ? p.x2 : p.x1;
        ElementSet candidates =
            small - ElementSet(rt.closure(other.bits), m.n);
        for (int e : candidates.elements()) {
          ++contractions_checked;
          Matroid qq =
              contraction(m, ElementSet::empty(m.n).with(x).with(e));
          CHECK(engine.find(qq).has_value());
        }
      }
    }
  }
  CHECK(partitions_seen > 0);
  CHECK(contractions_checked > 0);
}

TEST_CASE("caps raise structured errors") {
  CHECK_THROWS_AS((void)has_minor(uniform(2, 15), uniform(2, 4)), Error);
  CHECK_THROWS_AS((void)has_minor_naive(uniform(2, 13), uniform(2, 4)),
                  Error);

  Graph big;
  big.num_vertices = 13;
  for (int v = 1; v < 13; ++v) big.edges.push_back({0, v, "e" + std::to_string(v)});
  CHECK_THROWS_AS((void)graph_has_minor(big, complete_graph(3)), Error);

  Graph loopy = parse_graph("vertices 2\n0 0 l\n0 1 a\n");
  CHECK_THROWS_AS((void)graph_has_minor(complete_graph(4), loopy), Error);
  Graph split = parse_graph("vertices 4\n0 1 a\n2 3 b\n");
  CHECK_THROWS_AS((void)graph_has_minor(complete_graph(4), split), Error);
}

TEST_CASE("graph minor search") {
  auto w = graph_has_minor(complete_graph(6), complete_graph(5));
  REQUIRE(w.has_value());
  CHECK(verify_graph_minor_witness(complete_graph(6), complete_graph(5), *w));

  // Planar graphs carry no K5.
  CHECK(!graph_has_minor(wheel_graph(5), complete_graph(5)).has_value());
  CHECK(graph_has_minor(wheel_graph(5), complete_graph(4)).has_value());

  // Tampered branch sets fail replay.
  GraphMinorWitness bad = *w;
  bad.branch_sets[0] = bad.branch_sets[1];
  CHECK(!verify_graph_minor_witness(complete_graph(6), complete_graph(5), bad));
  GraphMinorWitness oob = *w;
  oob.branch_sets.back().push_back(17);
  CHECK(!verify_graph_minor_witness(complete_graph(6), complete_graph(5),
                                    oob));
}

TEST_CASE("hub contractions and the complete-graph minor") {
  Graph g = fig1_graph();
  Graph k6 = complete_graph(6);

  auto wb = graph_has_minor(contract_edge(g, "ab"), k6);
  REQUIRE(wb.has_value());
  CHECK(verify_graph_minor_witness(contract_edge(g, "ab"), k6, *wb));
  CHECK(graph_has_minor(contract_edge(g, "af"), k6).has_value());
  CHECK(!graph_has_minor(contract_edge(g, "ah"), k6).has_value());
}

TEST_CASE("graph and matroid minor search agree on 3-connected patterns") {
  std::mt19937 rng(555);
  Graph k4 = complete_graph(4);
  Graph w4 = wheel_graph(4);
  Matroid mk4 = graphic(k4), mw4 = graphic(w4);
  MinorSearch ek(mk4), ew(mw4);

  int hits = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testutil::random_subgraph(rng, 6, 8 + trial % 4);
    if (!graph_connected(g)) continue;
    Matroid m = graphic(g);

    auto gk = graph_has_minor(g, k4);
    CHECK(gk.has_value() == ek.find(m).has_value());
    if (gk) {
      ++hits;
      CHECK(verify_graph_minor_witness(g, k4, *gk));
    }

    auto gw = graph_has_minor(g, w4);
    CHECK(gw.has_value() == ew.find(m).has_value());
  }
  CHECK(hits > 0);
}
