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

#include "cocirc/graphic.hpp"

#include <algorithm>
#include <set>

#include "cocirc/connectivity.hpp"
#include "cocirc/error.hpp"
#include "cocirc/matroid.hpp"

namespace cocirc {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(size_t(n)) {
    for (int i = 0; i < n; ++i) parent[size_t(i)] = i;
  }
  int find(int a) {
    while (parent[size_t(a)] != a) {
      parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
      a = parent[size_t(a)];
    }
    return a;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[size_t(a)] = b;
    return true;
  }
};

int find_edge(const Graph& g, const std::string& label) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].label == label) return int(i);
  raise(ErrorCode::kBadParams, "no edge labeled '" + label + "'");
}

// Relabels vertices densely after removals/merges so num_vertices stays
// honest; vertices that lost all edges are dropped.
Graph compact(int num_vertices, std::vector<GraphEdge> edges) {
  std::vector<int> seen(size_t(num_vertices), 0);
  for (const GraphEdge& e : edges) seen[size_t(e.u)] = seen[size_t(e.v)] = 1;
  std::vector<int> remap(size_t(num_vertices), -1);
  int next = 0;
  for (int v = 0; v < num_vertices; ++v)
    if (seen[size_t(v)]) remap[size_t(v)] = next++;
  for (GraphEdge& e : edges) {
    e.u = remap[size_t(e.u)];
    e.v = remap[size_t(e.v)];
  }
  Graph out;
  out.num_vertices = next == 0 ? 1 : next;
  for (const GraphEdge& e : edges) out.edges.push_back(e);
  return out;
}

// Component count among vertices that carry at least one edge.
int edge_component_count(const Graph& g, int* spanned_vertices = nullptr) {
  Dsu dsu(g.num_vertices);
  std::vector<int> touched(size_t(g.num_vertices), 0);
  for (const GraphEdge& e : g.edges) {
    touched[size_t(e.u)] = touched[size_t(e.v)] = 1;
    dsu.join(e.u, e.v);
  }
  std::set<int> roots;
  int spanned = 0;
  for (int v = 0; v < g.num_vertices; ++v)
    if (touched[size_t(v)]) {
      ++spanned;
      roots.insert(dsu.find(v));
    }
  if (spanned_vertices != nullptr) *spanned_vertices = spanned;
  return int(roots.size());
}

bool connected_without(const Graph& g, uint32_t dropped_vertices) {
  Dsu dsu(g.num_vertices);
  for (const GraphEdge& e : g.edges) {
    if (dropped_vertices & (1u << e.u)) continue;
    if (dropped_vertices & (1u << e.v)) continue;
    dsu.join(e.u, e.v);
  }
  int root = -1;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (dropped_vertices & (1u << v)) continue;
    if (root == -1) root = dsu.find(v);
    else if (dsu.find(v) != root) return false;
  }
  return true;
}

}  // namespace

int graph_rank(const Graph& g) {
  int spanned = 0;
  int comps = edge_component_count(g, &spanned);
  return spanned - comps;
}

bool graph_connected(const Graph& g) { return edge_component_count(g) <= 1; }

Graph delete_edge(const Graph& g, const std::string& label) {
  int idx = find_edge(g, label);
  std::vector<GraphEdge> edges = g.edges;
  edges.erase(edges.begin() + idx);
  return compact(g.num_vertices, std::move(edges));
}

Graph contract_edge(const Graph& g, const std::string& label) {
  int idx = find_edge(g, label);
  GraphEdge target = g.edges[size_t(idx)];
  std::vector<GraphEdge> edges;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (int(i) == idx) continue;
    GraphEdge e = g.edges[i];
    if (target.u != target.v) {
      if (e.u == target.v) e.u = target.u;
      if (e.v == target.v) e.v = target.u;
    }
    edges.push_back(e);
  }
  return compact(g.num_vertices, std::move(edges));
}

Graph delete_edges(Graph g, const std::vector<std::string>& labels) {
  for (const std::string& l : labels) g = delete_edge(g, l);
  return g;
}

Graph contract_edges(Graph g, const std::vector<std::string>& labels) {
  for (const std::string& l : labels) g = contract_edge(g, l);
  return g;
}

Graph simplify_graph(const Graph& g) {
  std::set<std::pair<int, int>> taken;
  std::vector<GraphEdge> edges;
  for (const GraphEdge& e : g.edges) {
    if (e.u == e.v) continue;
    auto key = std::minmax(e.u, e.v);
    if (!taken.insert({key.first, key.second}).second) continue;
    edges.push_back(e);
  }
  return compact(g.num_vertices, std::move(edges));
}

Graph cosimplify_graph(const Graph& g) {
  Graph cur = g;
  for (;;) {
    // A bridge is a coloop of the cycle matroid: contract it.
    bool changed = false;
    int rank = graph_rank(cur);
    for (const GraphEdge& e : cur.edges) {
      if (e.u == e.v) continue;
      if (graph_rank(delete_edge(cur, e.label)) < rank) {
        cur = contract_edge(cur, e.label);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // With no bridges left, {a, b} is a two-edge bond exactly when the
    // rank drops once both go; such a series pair collapses to one edge.
    for (size_t i = 0; i < cur.edges.size() && !changed; ++i) {
      for (size_t j = i + 1; j < cur.edges.size() && !changed; ++j) {
        const GraphEdge& a = cur.edges[i];
        const GraphEdge& b = cur.edges[j];
        if (a.u == a.v || b.u == b.v) continue;
        Graph both = delete_edge(delete_edge(cur, a.label), b.label);
        if (graph_rank(both) < rank) {
          cur = contract_edge(cur, a.label);
          changed = true;
        }
      }
    }
    if (!changed) return cur;
  }
}

bool graphic_3_connected(const Graph& g) {
  if (int(g.edges.size()) <= ElementSet::kMaxGroundSize)
    return is_3_connected(graphic(g));

  // Tutte: with this many edges the graph spans at least seven vertices,
  // where 3-connectivity of the cycle matroid means a simple, 3-connected
  // graph.
  for (const GraphEdge& e : g.edges)
    if (e.u == e.v) return false;
  std::set<std::pair<int, int>> pairs;
  for (const GraphEdge& e : g.edges) {
    auto key = std::minmax(e.u, e.v);
    if (!pairs.insert({key.first, key.second}).second) return false;
  }
  Graph c = compact(g.num_vertices, g.edges);
  if (c.num_vertices > 31) raise(ErrorCode::kTooLarge, "vertex count");
  if (!connected_without(c, 0)) return false;
  for (int u = 0; u < c.num_vertices; ++u)
    if (!connected_without(c, 1u << u)) return false;
  for (int u = 0; u < c.num_vertices; ++u)
    for (int v = u + 1; v < c.num_vertices; ++v)
      if (!connected_without(c, (1u << u) | (1u << v))) return false;
  return true;
}

std::vector<std::vector<std::string>> graph_bonds(const Graph& g) {
  Graph c = compact(g.num_vertices, g.edges);
  if (c.num_vertices > kGraphVertexCap)
    raise(ErrorCode::kCapExceeded, "bond enumeration needs <= " +
                                       std::to_string(kGraphVertexCap) +
                                       " vertices");
  // Bonds of a connected piece are the cuts with both shores connected;
  // enumerate shores per component.
  Dsu dsu(c.num_vertices);
  for (const GraphEdge& e : c.edges) dsu.join(e.u, e.v);

  std::set<std::vector<std::string>> found;
  uint32_t all = (c.num_vertices >= 31) ? 0x7fffffffu
                                        : ((1u << c.num_vertices) - 1);
  for (uint32_t side = 1; side < all; ++side) {
    // Shore must sit inside one component, with the co-shore of that
    // component nonempty.
    int root = -1;
    bool ok = true;
    for (int v = 0; v < c.num_vertices && ok; ++v) {
      if (!(side & (1u << v))) continue;
      if (root == -1) root = dsu.find(v);
      ok = dsu.find(v) == root;
    }
    if (!ok || root == -1) continue;
    uint32_t coshore = 0;
    for (int v = 0; v < c.num_vertices; ++v)
      if (!(side & (1u << v)) && dsu.find(v) == root) coshore |= 1u << v;
    if (coshore == 0) continue;

    std::vector<std::string> cut;
    for (const GraphEdge& e : c.edges) {
      bool crosses = ((side >> e.u) & 1u) != ((side >> e.v) & 1u);
      if (crosses) cut.push_back(e.label);
    }
    if (cut.empty()) continue;

    // Both shores connected <=> the cut is minimal.
    uint32_t outside = all & ~(side | coshore);
    if (!connected_without(c, outside | coshore)) continue;
    if (!connected_without(c, outside | side)) continue;
    std::sort(cut.begin(), cut.end());
    found.insert(cut);
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::string>> graph_triangles(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  size_t m = g.edges.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        const GraphEdge &a = g.edges[i], &b = g.edges[j], &c = g.edges[k];
        if (a.u == a.v || b.u == b.v || c.u == c.v) continue;
        std::set<int> verts{a.u, a.v, b.u, b.v, c.u, c.v};
        if (verts.size() != 3) continue;
        int deg[3] = {0, 0, 0};
        std::vector<int> vs(verts.begin(), verts.end());
        for (const GraphEdge* e : {&a, &b, &c})
          for (int t = 0; t < 3; ++t)
            deg[t] += int(e->u == vs[size_t(t)]) + int(e->v == vs[size_t(t)]);
        if (deg[0] == 2 && deg[1] == 2 && deg[2] == 2)
          out.push_back({a.label, b.label, c.label});
      }
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> graph_triads(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  for (auto& bond : graph_bonds(g))
    if (bond.size() == 3) out.push_back(bond);
  return out;
}

std::vector<GraphFan> graph_fans(const Graph& g) {
  auto tris = graph_triangles(g);
  auto trds = graph_triads(g);
  std::vector<GraphFan> out;
  for (const auto& tri : tris) {
    for (const auto& trd : trds) {
      std::vector<std::string> shared;
      std::set_intersection(tri.begin(), tri.end(), trd.begin(), trd.end(),
                            std::back_inserter(shared));
      if (shared.size() != 2) continue;
      std::string x1, x4;
      for (const std::string& l : tri)
        if (l != shared[0] && l != shared[1]) x1 = l;
      for (const std::string& l : trd)
        if (l != shared[0] && l != shared[1]) x4 = l;
      if (x1 == x4) continue;
      out.push_back({x1, shared[0], shared[1], x4});
      out.push_back({x1, shared[1], shared[0], x4});
    }
  }
  std::sort(out.begin(), out.end(), [](const GraphFan& a, const GraphFan& b) {
    return std::tie(a.x1, a.x2, a.x3, a.x4) < std::tie(b.x1, b.x2, b.x3, b.x4);
  });
  return out;
}

}  // namespace cocirc
