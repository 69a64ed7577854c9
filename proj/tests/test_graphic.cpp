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
#include <random>
#include <set>

#include "cocirc/connectivity.hpp"
#include "cocirc/constructions.hpp"
#include "cocirc/graphic.hpp"
#include "cocirc/structures.hpp"
#include "test_util.hpp"

using namespace cocirc;

namespace {

std::set<std::set<std::string>> label_family(
    const Matroid& m, const std::vector<ElementSet>& sets) {
  std::set<std::set<std::string>> out;
  for (ElementSet s : sets) {
    std::set<std::string> one;
    for (int e : s.elements()) one.insert(m.label_of(e));
    out.insert(one);
  }
  return out;
}

std::set<std::set<std::string>> as_family(
    const std::vector<std::vector<std::string>>& sets) {
  std::set<std::set<std::string>> out;
  for (const auto& s : sets) out.insert({s.begin(), s.end()});
  return out;
}

std::vector<ElementSet> size_filter(std::vector<ElementSet> xs, int k) {
  std::erase_if(xs, [k](ElementSet s) { return s.size() != k; });
  return xs;
}

std::set<std::string> edge_labels(const Graph& g) {
  std::set<std::string> out;
  for (const GraphEdge& e : g.edges) out.insert(e.label);
  return out;
}

}  // namespace

TEST_CASE("graph rank and connectivity") {
  Graph k4 = complete_graph(4);
  CHECK(graph_rank(k4) == 3);
  CHECK(graph_connected(k4));

  Graph two_parts = parse_graph(
      "vertices 5\n"
      "0 1 a\n"
      "1 2 b\n"
      "3 4 c\n");
  CHECK(graph_rank(two_parts) == 3);
  CHECK(!graph_connected(two_parts));

  Graph loops = parse_graph(
      "vertices 2\n"
      "0 0 l\n"
      "0 1 a\n");
  CHECK(graph_rank(loops) == 1);
  CHECK(graph_connected(loops));

  Graph edgeless;
  edgeless.num_vertices = 3;
  CHECK(graph_rank(edgeless) == 0);
  CHECK(graph_connected(edgeless));
}

TEST_CASE("edge deletion and contraction") {
  Graph tri = parse_graph(
      "vertices 3\n"
      "0 1 a\n"
      "1 2 b\n"
      "0 2 c\n");

  Graph del = delete_edge(tri, "b");
  CHECK(del.edges.size() == 2);
  CHECK(graph_rank(del) == 2);

  // Contracting one triangle edge leaves a doubled edge.
  Graph con = contract_edge(tri, "a");
  CHECK(con.edges.size() == 2);
  CHECK(con.num_vertices == 2);
  CHECK(graph_rank(con) == 1);

  // Contracting a loop only removes it.
  Graph looped = parse_graph(
      "vertices 2\n"
      "0 0 l\n"
      "0 1 a\n");
  Graph nl = contract_edge(looped, "l");
  CHECK(nl.edges.size() == 1);
  CHECK(nl.edges[0].label == "a");
  CHECK(graph_rank(nl) == 1);

  CHECK_THROWS_AS((void)delete_edge(tri, "zz"), Error);

  Graph batch = contract_edges(complete_graph(4), {"0-1", "2-3"});
  CHECK(batch.num_vertices == 2);
  CHECK(batch.edges.size() == 4);
}

TEST_CASE("graph simplification") {
  Graph doubled = parse_graph(
      "vertices 3\n"
      "0 1 a\n"
      "0 1 b\n"
      "1 2 c\n"
      "0 2 d\n"
      "2 2 l\n");
  Graph s = simplify_graph(doubled);
  CHECK(edge_labels(s) == std::set<std::string>{"a", "c", "d"});

  // Simplification commutes with taking the cycle matroid.
  auto iso = is_isomorphic(graphic(s), simplify(graphic(doubled)).m);
  CHECK(iso.has_value());
}

TEST_CASE("graph cosimplification") {
  // A two-edge bond collapses to a single class; the survivor of the pair
  // keeps the smaller graph honest against the matroid cosimplification.
  Graph twocycle = parse_graph(
      "vertices 2\n"
      "0 1 a\n"
      "0 1 b\n");
  Graph c = cosimplify_graph(twocycle);
  CHECK(c.edges.size() == 1);
  CHECK(graph_rank(c) == 0);
  auto iso = is_isomorphic(graphic(c), cosimplify(graphic(twocycle)).m);
  CHECK(iso.has_value());

  // Bridges contract away.
  Graph path = parse_graph(
      "vertices 3\n"
      "0 1 a\n"
      "1 2 b\n");
  Graph cp = cosimplify_graph(path);
  CHECK(cp.edges.empty());

  // Subdividing one K4 edge creates a series pair; cosimplifying restores a
  // graph with the K4 cycle matroid.
  Graph sub = parse_graph(
      "vertices 5\n"
      "0 1 a\n"
      "0 2 b\n"
      "0 3 c\n"
      "1 2 d\n"
      "2 3 e\n"
      "1 4 f\n"
      "4 3 g\n");
  Graph cs = cosimplify_graph(sub);
  CHECK(cs.edges.size() == 6);
  CHECK(is_isomorphic(graphic(cs), graphic(complete_graph(4))).has_value());
}

TEST_CASE("bonds are the cocircuits of the cycle matroid") {
  Graph k4 = complete_graph(4);
  CHECK(graph_bonds(k4).size() == 7);

  for (const Graph& g :
       {complete_graph(4), k5_minus_e_graph(), wheel_graph(4)}) {
    Matroid m = graphic(g);
    CHECK(as_family(graph_bonds(g)) == label_family(m, cocircuits(m)));
  }
}

TEST_CASE("graphic detectors agree with the matroid ones") {
  std::mt19937 rng(926);
  int three_conn_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testutil::random_subgraph(rng, 6, 9 + trial % 4);
    Matroid m = graphic(g);

    CHECK(graph_rank(g) == m.rank());
    CHECK(graphic_3_connected(g) == is_3_connected(m));
    three_conn_seen += graphic_3_connected(g);

    CHECK(as_family(graph_triangles(g)) ==
          label_family(m, size_filter(circuits(m), 3)));
    CHECK(as_family(graph_triads(g)) ==
          label_family(m, size_filter(cocircuits(m), 3)));
    CHECK(as_family(graph_bonds(g)) == label_family(m, cocircuits(m)));

    std::set<std::vector<std::string>> gf;
    for (const GraphFan& f : graph_fans(g))
      gf.insert({f.x1, f.x2, f.x3, f.x4});
    std::set<std::vector<std::string>> mf;
    for (const Fan& f : fans(m))
      mf.insert({m.label_of(f.x1), m.label_of(f.x2), m.label_of(f.x3),
                 m.label_of(f.x4)});
    CHECK(gf == mf);

    CHECK(is_isomorphic(graphic(simplify_graph(g)), simplify(m).m)
              .has_value());
    CHECK(is_isomorphic(graphic(cosimplify_graph(g)), cosimplify(m).m)
              .has_value());
  }
  CHECK(three_conn_seen > 0);
}

TEST_CASE("vertex-based 3-connectivity on large graphs") {
  // 21 edges forces the non-kernel path.
  CHECK(graphic_3_connected(complete_graph(7)));

  // A pendant vertex is a cut vertex of K7.
  Graph pendant = complete_graph(7);
  pendant.num_vertices = 8;
  pendant.edges.push_back({0, 7, "p"});
  CHECK(!graphic_3_connected(pendant));

  // A parallel class of size two is a 2-element circuit.
  Graph doubled = complete_graph(7);
  doubled.edges.push_back({0, 1, "dup"});
  CHECK(!graphic_3_connected(doubled));

  // Subdividing an edge of K7 leaves a series pair.
  Graph sub = delete_edge(complete_graph(7), "0-1");
  sub.num_vertices = 8;
  sub.edges.push_back({0, 7, "x1"});
  sub.edges.push_back({7, 1, "x2"});
  CHECK(!graphic_3_connected(sub));
}

TEST_CASE("hub-and-cluster fixture sanity") {
  Graph g = fig1_graph();
  CHECK(g.num_vertices == 11);
  CHECK(g.edges.size() == 24);
  CHECK(graphic_3_connected(g));

  // Hub degree 8: its star is the distinguished bond.
  std::vector<std::string> star;
  for (const GraphEdge& e : g.edges)
    if (e.u == 0 || e.v == 0) star.push_back(e.label);
  std::sort(star.begin(), star.end());
  CHECK(star == std::vector<std::string>{"ab", "ac", "ad", "ae", "af", "ah",
                                         "ai", "aj"});
  auto bonds = as_family(graph_bonds(g));
  CHECK(bonds.count({star.begin(), star.end()}) == 1);
  CHECK(bonds.count({"ac", "bc", "cd"}) == 1);

  // The fan used by the contraction analysis.
  bool fan_found = false;
  for (const GraphFan& f : graph_fans(g))
    fan_found |= f.x1 == "ad" && f.x2 == "cd" && f.x3 == "ac" && f.x4 == "bc";
  CHECK(fan_found);

  // Contracting a hub edge leaves a parallel pair, and cosimplifying the
  // simplification still fails 3-connectivity; the fan's middle edge works.
  Graph hub = simplify_graph(contract_edge(g, "ab"));
  CHECK(!graphic_3_connected(hub));
  CHECK(!graphic_3_connected(cosimplify_graph(hub)));
  CHECK(graphic_3_connected(simplify_graph(contract_edge(g, "cd"))));
}
