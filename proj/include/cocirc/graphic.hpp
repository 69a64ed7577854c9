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

#include <string>
#include <vector>

#include "cocirc/constructions.hpp"

// Graph-level routines with cycle-matroid semantics, for graphs whose edge
// count exceeds the 16-element kernel.  Each agrees with the corresponding
// matroid operation on small inputs (tested), and falls back to the exact
// kernel whenever the edge count permits.

namespace cocirc {

// Number of vertices spanned minus number of components spanned: the rank
// of the edge set in the cycle matroid.
int graph_rank(const Graph& g);

// True when the edges of g live in a single component (isolated vertices
// are ignored; an edgeless graph counts as connected).
bool graph_connected(const Graph& g);

Graph delete_edge(const Graph& g, const std::string& label);
// Merges the endpoints; a loop is removed outright since contracting a
// loop and deleting it give the same cycle matroid.
Graph contract_edge(const Graph& g, const std::string& label);
Graph delete_edges(Graph g, const std::vector<std::string>& labels);
Graph contract_edges(Graph g, const std::vector<std::string>& labels);

// Drops loops and keeps the first edge of every parallel class.
Graph simplify_graph(const Graph& g);
// Contracts bridges and collapses every two-edge bond until none remain,
// keeping the first edge of each merged class.  Loops are untouched.
Graph cosimplify_graph(const Graph& g);

// Whether the cycle matroid of g is 3-connected.  Uses the exact kernel
// when |E| <= 16; otherwise simplicity plus vertex 3-connectivity, which
// is equivalent for graphs this size.
bool graphic_3_connected(const Graph& g);

// Minimal edge cuts, as sorted label lists.  Ground graphs stay small
// (vertex count <= kGraphVertexCap), so subset enumeration suffices.
std::vector<std::vector<std::string>> graph_bonds(const Graph& g);

// Three-edge circuits and cocircuits of the cycle matroid.
std::vector<std::vector<std::string>> graph_triangles(const Graph& g);
std::vector<std::vector<std::string>> graph_triads(const Graph& g);

struct GraphFan {
  std::string x1, x2, x3, x4;
};

// Ordered fans, mirroring fans() on the cycle matroid.
std::vector<GraphFan> graph_fans(const Graph& g);

inline constexpr int kGraphVertexCap = 12;

}  // namespace cocirc
