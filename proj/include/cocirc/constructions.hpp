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

#include <cstdint>
#include <string>
#include <vector>

#include "cocirc/matroid.hpp"

namespace cocirc {

struct GraphEdge {
  int u = 0, v = 0;
  std::string label;
};

struct Graph {
  int num_vertices = 0;
  std::vector<GraphEdge> edges;

  int edge_index(const std::string& label) const;
};

// Text format: first line "vertices N", then one "u v label" line per edge
// (0-based endpoints).  Lines starting with '#' are comments.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
Graph load_graph_file(const std::string& path);

Matroid uniform(int r, int n);

// Bases are the maximum spanning forests; labels come from the edges.
Matroid graphic(const Graph& g);

// Complete graph on k vertices, edge labels "u-v".
Graph complete_graph(int k);
// Wheel with k rim vertices: hub 0, spokes "s1".."sk", rim "r1".."rk".
Graph wheel_graph(int k);

// K5 minus one edge, labeled so that {a, b, c, d} is the 4-cycle through the
// two degree-3 vertices.
Graph k5_minus_e_graph();
Matroid k5_minus_e();

// The 11-vertex, 24-edge fixture: hub a joined to 8 of the 10 rim vertices,
// rim cycle b-c-d-e-f-g-h-i-j-k, and the cluster {g,h,i,j,k} completed to a
// K5.  Edge labels are endpoint pairs ("ab", "bc", ...).
Graph fig1_graph();

Matroid direct_sum(const Matroid& m1, const Matroid& m2);

// Glue along the basepoint labeled p1 in m1 and p2 in m2 (kept under p1's
// label).  Circuits are those of each part plus the unions of basepoint
// circuits with the basepoint removed; if the basepoint is a loop on either
// side the result degenerates to a direct sum with the other side's
// basepoint contracted.
Matroid parallel_connection(const Matroid& m1, const Matroid& m2, const std::string& p1,
                            const std::string& p2);

// Parallel connection, then delete the basepoint.  The basepoint must not be
// a loop or coloop on either side.
Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& p1,
                const std::string& p2);

// Rank-r matroid on 2r points: a basis a_1..a_r plus collinear points
// b_1..b_r, with b_i in the hyperplane spanned by the basis minus a_i.
// Realized over the rationals from a seeded draw; the draw is rejected and
// retried until the certificate holds (rank r, the b_i on a common line,
// no parallel pairs, b_i in cl(A - a_i), and a second draw isomorphic).
Matroid theta(int r, uint64_t seed);

// Two copies of theta(r) glued along B: ground set a1..ar, b1..br,
// a1p..arp; flats are the sets whose trace on each copy is a flat there.
Matroid theta_double(int r, uint64_t seed);

}  // namespace cocirc
