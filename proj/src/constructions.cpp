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

#include "cocirc/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace cocirc {

// ----- Graph text format ------------------------------------------------------

int Graph::edge_index(const std::string& label) const {
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].label == label) return int(i);
  }
  raise(ErrorCode::kBadParams, "unknown edge label '" + label + "'");
}

Graph parse_graph(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int lineno = 0;
  std::set<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_header) {
      int nv = 0;
      if (tok != "vertices" || !(ls >> nv) || nv <= 0) {
        raise(ErrorCode::kParse,
              "line " + std::to_string(lineno) + ": expected 'vertices N' header");
      }
      g.num_vertices = nv;
      have_header = true;
      continue;
    }
    GraphEdge e;
    std::istringstream es(line);
    std::string label;
    if (!(es >> e.u >> e.v)) {
      raise(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected 'u v label'");
    }
    if (!(es >> label)) label = "e" + std::to_string(g.edges.size());
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices) {
      raise(ErrorCode::kParse, "line " + std::to_string(lineno) + ": endpoint out of range");
    }
    if (!labels.insert(label).second) {
      raise(ErrorCode::kParse, "line " + std::to_string(lineno) + ": duplicate edge label");
    }
    e.label = std::move(label);
    g.edges.push_back(std::move(e));
  }
  if (!have_header) raise(ErrorCode::kParse, "missing 'vertices N' header");
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.num_vertices << "\n";
  for (const GraphEdge& e : g.edges) out << e.u << " " << e.v << " " << e.label << "\n";
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

// ----- Basic families ---------------------------------------------------------

Matroid uniform(int r, int n) {
  if (n <= 0) raise(ErrorCode::kEmptyGroundSet, "ground set must be nonempty");
  if (n > ElementSet::kMaxGroundSize) raise(ErrorCode::kTooLarge, "too many elements");
  if (r < 0 || r > n) raise(ErrorCode::kBadParams, "rank must lie between 0 and n");
  std::vector<ElementSet> bases;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == r) bases.emplace_back(mask, n);
  }
  return Matroid::from_bases(n, {}, std::move(bases), Validation::kTrusted);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(size_t(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[size_t(a)] != a) {
      parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
      a = parent[size_t(a)];
    }
    return a;
  }
  // Returns false if a and b were already joined.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[size_t(a)] = b;
    return true;
  }
};

}  // namespace

Matroid graphic(const Graph& g) {
  int m = int(g.edges.size());
  if (m == 0) raise(ErrorCode::kEmptyGroundSet, "graph has no edges");
  if (m > ElementSet::kMaxGroundSize) {
    raise(ErrorCode::kTooLarge, "more edges than the ground-set limit; use the graph routines");
  }
  int rank;
  {
    UnionFind uf(g.num_vertices);
    rank = 0;
    for (const GraphEdge& e : g.edges) rank += uf.join(e.u, e.v) ? 1 : 0;
  }
  std::vector<ElementSet> bases;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != rank) continue;
    UnionFind uf(g.num_vertices);
    bool forest = true;
    for (uint32_t rest = mask; rest != 0 && forest; rest &= rest - 1) {
      const GraphEdge& e = g.edges[size_t(std::countr_zero(rest))];
      forest = uf.join(e.u, e.v);
    }
    if (forest) bases.emplace_back(mask, m);
  }
  std::vector<std::string> labels;
  for (const GraphEdge& e : g.edges) labels.push_back(e.label);
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    raise(ErrorCode::kValidation, "edge labels are not distinct");
  }
  return Matroid::from_bases(m, std::move(labels), std::move(bases), Validation::kTrusted);
}

Graph complete_graph(int k) {
  if (k < 1) raise(ErrorCode::kBadParams, "need at least one vertex");
  Graph g;
  g.num_vertices = k;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      g.edges.push_back({u, v, std::to_string(u) + "-" + std::to_string(v)});
    }
  }
  return g;
}

Graph wheel_graph(int k) {
  if (k < 3) raise(ErrorCode::kBadParams, "a wheel needs at least three rim vertices");
  Graph g;
  g.num_vertices = k + 1;
  for (int i = 1; i <= k; ++i) g.edges.push_back({0, i, "s" + std::to_string(i)});
  for (int i = 1; i <= k; ++i) {
    g.edges.push_back({i, i == k ? 1 : i + 1, "r" + std::to_string(i)});
  }
  return g;
}

Graph k5_minus_e_graph() {
  Graph g;
  g.num_vertices = 5;
  // {a, b, c, d} is the cycle 0-3-1-4-0 through the degree-3 vertices 3, 4.
  g.edges = {{0, 3, "a"},  {1, 3, "b"},  {1, 4, "c"},  {0, 4, "d"}, {0, 1, "e1"},
             {0, 2, "e2"}, {1, 2, "e3"}, {2, 3, "e4"}, {2, 4, "e5"}};
  return g;
}

Matroid k5_minus_e() { return graphic(k5_minus_e_graph()); }

Graph fig1_graph() {
  // Vertices 0..10 stand for a..k.
  Graph g;
  g.num_vertices = 11;
  g.edges = {
      // hub a to eight rim vertices (all but g, k)
      {0, 1, "ab"}, {0, 2, "ac"}, {0, 3, "ad"}, {0, 4, "ae"}, {0, 5, "af"},
      {0, 7, "ah"}, {0, 8, "ai"}, {0, 9, "aj"},
      // rim cycle b-c-d-e-f-g-h-i-j-k-b
      {1, 2, "bc"}, {2, 3, "cd"}, {3, 4, "de"}, {4, 5, "ef"}, {5, 6, "fg"},
      {6, 7, "gh"}, {7, 8, "hi"}, {8, 9, "ij"}, {9, 10, "jk"}, {1, 10, "bk"},
      // chords completing {g, h, i, j, k} to a K5
      {6, 8, "gi"}, {6, 9, "gj"}, {6, 10, "gk"}, {7, 9, "hj"}, {7, 10, "hk"},
      {8, 10, "ik"},
  };
  return g;
}

// ----- Sums and connections ---------------------------------------------------

namespace {

// Appends src labels to dst, starring any that collide with what is already
// there so the combined list stays distinct.
void append_unique(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  std::set<std::string> taken(dst.begin(), dst.end());
  for (const std::string& s : src) {
    std::string name = s;
    while (!taken.insert(name).second) name += "*";
    dst.push_back(name);
  }
}

}  // namespace

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  if (m1.n + m2.n > ElementSet::kMaxGroundSize) {
    raise(ErrorCode::kTooLarge, "combined ground set too large");
  }
  std::vector<std::string> labels = m1.labels;
  append_unique(labels, m2.labels);
  std::vector<ElementSet> bases;
  bases.reserve(m1.bases.size() * m2.bases.size());
  for (ElementSet b1 : m1.bases) {
    for (ElementSet b2 : m2.bases) {
      bases.emplace_back(b1.bits | (b2.bits << m1.n), m1.n + m2.n);
    }
  }
  return Matroid::from_bases(m1.n + m2.n, std::move(labels), std::move(bases),
                             Validation::kTrusted);
}

Matroid parallel_connection(const Matroid& m1, const Matroid& m2, const std::string& p1,
                            const std::string& p2) {
  int i1 = m1.index_of_label(p1);
  int i2 = m2.index_of_label(p2);
  RankTable rt1(m1), rt2(m2);
  bool loop1 = rt1.rank(1u << i1) == 0;
  bool loop2 = rt2.rank(1u << i2) == 0;
  if (loop1 || loop2) {
    // A loop basepoint contributes nothing to glue along; the other side's
    // copy collapses onto it.
    Matroid left = loop2 && !loop1 ? contraction(m1, ElementSet::single(i1, m1.n)) : m1;
    Matroid right = contraction(m2, ElementSet::single(i2, m2.n));
    if (loop2 && !loop1) {
      // Keep the basepoint itself: glue the loop from m2 back in as a loop.
      Matroid loop_only = Matroid::from_bases(1, {p1}, {ElementSet::empty(1)},
                                              Validation::kTrusted);
      return direct_sum(direct_sum(left, loop_only), right);
    }
    return direct_sum(left, right);
  }

  int n = m1.n + m2.n - 1;
  if (n > ElementSet::kMaxGroundSize) raise(ErrorCode::kTooLarge, "combined ground set too large");
  std::vector<int> remap2 = removal_index_map(m2.n, ElementSet::single(i2, m2.n));
  auto lift2 = [&](uint32_t mask) {
    uint32_t out = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      out |= e == i2 ? (1u << i1) : (1u << (m1.n + remap2[size_t(e)]));
    }
    return out;
  };

  std::vector<ElementSet> c1 = circuits(m1);
  std::vector<ElementSet> c2 = circuits(m2);
  std::vector<ElementSet> family;
  std::vector<uint32_t> through1, through2;
  for (ElementSet c : c1) {
    family.emplace_back(c.bits, n);
    if (c.contains(i1)) through1.push_back(c.bits & ~(1u << i1));
  }
  for (ElementSet c : c2) {
    family.emplace_back(lift2(c.bits), n);
    if (c.contains(i2)) through2.push_back(lift2(c.bits) & ~(1u << i1));
  }
  // Basepoint circuits from the two sides splice together with p removed.
  for (uint32_t a : through1) {
    for (uint32_t b : through2) family.emplace_back(a | b, n);
  }
  std::vector<std::string> labels = m1.labels;
  std::vector<std::string> rest2;
  for (int e = 0; e < m2.n; ++e) {
    if (e != i2) rest2.push_back(m2.labels[size_t(e)]);
  }
  append_unique(labels, rest2);
  return matroid_from_circuits(n, std::move(labels), family, Validation::kChecked);
}

Matroid two_sum(const Matroid& m1, const Matroid& m2, const std::string& p1,
                const std::string& p2) {
  int i1 = m1.index_of_label(p1);
  int i2 = m2.index_of_label(p2);
  RankTable rt1(m1), rt2(m2);
  auto degenerate = [](const RankTable& rt, int i) {
    uint32_t bit = 1u << i;
    return rt.rank(bit) == 0 || rt.rank(rt.ground_mask() & ~bit) < rt.full_rank();
  };
  if (degenerate(rt1, i1) || degenerate(rt2, i2)) {
    raise(ErrorCode::kBasepointDegenerate,
          "2-sum basepoint must not be a loop or coloop of either part");
  }
  Matroid pc = parallel_connection(m1, m2, p1, p2);
  return deletion(pc, ElementSet::single(pc.index_of_label(p1), pc.n));
}

// ----- Theta ------------------------------------------------------------------

namespace {

// Fraction-free determinant; entries stay within __int128 for r <= 8 with
// starting magnitudes below ~400.
__int128 det_bareiss(std::vector<std::array<__int128, 8>>& m, int r) {
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < r; ++k) {
    int pivot = -1;
    for (int i = k; i < r; ++i) {
      if (m[size_t(i)][size_t(k)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[size_t(pivot)], m[size_t(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) {
        m[size_t(i)][size_t(j)] =
            (m[size_t(i)][size_t(j)] * m[size_t(k)][size_t(k)] -
             m[size_t(i)][size_t(k)] * m[size_t(k)][size_t(j)]) /
            prev;
      }
      m[size_t(i)][size_t(k)] = 0;
    }
    prev = m[size_t(k)][size_t(k)];
  }
  return sign < 0 ? -m[size_t(r - 1)][size_t(r - 1)] : m[size_t(r - 1)][size_t(r - 1)];
}

// Columns: a_i = e_i, b_i = q_i p - p_i q.  The b column i has coordinate i
// zero, so b_i lies in the hyperplane spanned by the other a's, and all b's
// live on the line spanned by p and q.
Matroid theta_from_vectors(int r, const std::vector<int>& p, const std::vector<int>& q) {
  int n = 2 * r;
  std::vector<std::array<int, 8>> col(static_cast<size_t>(n));
  for (int i = 0; i < r; ++i) {
    col[size_t(i)].fill(0);
    col[size_t(i)][size_t(i)] = 1;
    for (int k = 0; k < r; ++k) {
      col[size_t(r + i)][size_t(k)] = q[size_t(i)] * p[size_t(k)] - p[size_t(i)] * q[size_t(k)];
    }
  }
  std::vector<ElementSet> bases;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    std::vector<std::array<__int128, 8>> mat(static_cast<size_t>(r));
    int c = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1, ++c) {
      int e = std::countr_zero(rest);
      for (int k = 0; k < r; ++k) mat[size_t(k)][size_t(c)] = col[size_t(e)][size_t(k)];
    }
    if (det_bareiss(mat, r) != 0) bases.emplace_back(mask, n);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= r; ++i) labels.push_back("b" + std::to_string(i));
  return Matroid::from_bases(n, std::move(labels), std::move(bases), Validation::kTrusted);
}

bool theta_certificate(const Matroid& m, int r) {
  RankTable rt(m);
  if (rt.full_rank() != r) return false;
  uint32_t bmask = ((1u << r) - 1) << r;
  if (rt.rank(bmask) != 2) return false;
  // Simple: no loops or parallel pairs.
  for (int i = 0; i < m.n; ++i) {
    if (rt.rank(1u << i) != 1) return false;
    for (int j = i + 1; j < m.n; ++j) {
      if (rt.rank((1u << i) | (1u << j)) != 2) return false;
    }
  }
  // b_i in the hyperplane of the other a's, and not in any smaller a-span.
  for (int i = 0; i < r; ++i) {
    uint32_t hyp = ((1u << r) - 1) & ~(1u << i);
    if (rt.rank(hyp | (1u << (r + i))) != r - 1) return false;
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      uint32_t smaller = hyp & ~(1u << j);
      if (rt.rank(smaller | (1u << (r + i))) != r - 1) return false;
    }
  }
  return true;
}

Matroid theta_draw(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mag(1, 13);
  std::uniform_int_distribution<int> any(-13, 13);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> p(static_cast<size_t>(r)), q(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      p[size_t(i)] = any(rng);
      q[size_t(i)] = mag(rng) * (coin(rng) ? 1 : -1);
    }
    bool distinct = true;
    for (int i = 0; i < r && distinct; ++i) {
      for (int j = i + 1; j < r && distinct; ++j) {
        if (p[size_t(i)] * q[size_t(j)] == p[size_t(j)] * q[size_t(i)]) distinct = false;
      }
    }
    if (!distinct) continue;
    Matroid m = theta_from_vectors(r, p, q);
    if (theta_certificate(m, r)) return m;
  }
  raise(ErrorCode::kDegenerateRealization, "could not certify a realization");
}

}  // namespace

Matroid theta(int r, uint64_t seed) {
  if (r < 3) raise(ErrorCode::kBadParams, "rank must be at least 3");
  if (2 * r > ElementSet::kMaxGroundSize) raise(ErrorCode::kTooLarge, "rank too large");
  std::mt19937_64 rng(seed);
  Matroid first = theta_draw(r, rng);
  // A second certified draw must give the same matroid: the certificate plus
  // draw-independence pin the isomorphism class.
  Matroid second = theta_draw(r, rng);
  if (!is_isomorphic(first, second)) {
    raise(ErrorCode::kDegenerateRealization, "independent draws disagree");
  }
  return first;
}

Matroid theta_double(int r, uint64_t seed) {
  if (r < 3) raise(ErrorCode::kBadParams, "rank must be at least 3");
  if (3 * r > ElementSet::kMaxGroundSize) raise(ErrorCode::kTooLarge, "rank too large");
  Matroid base = theta(r, seed);
  RankTable rt(base);
  int n = 3 * r;
  uint32_t bshift = uint32_t(r);  // b block sits at r..2r-1 in both layouts

  // Trace of a combined set on one copy, in the copy's own a1..ar, b1..br
  // layout.  Copy 0 reads the a block, copy 1 the a' block.
  auto trace = [&](uint32_t mask, int copy) {
    uint32_t amask = copy == 0 ? mask & ((1u << r) - 1)
                               : (mask >> (2 * r)) & ((1u << r) - 1);
    uint32_t bmask = (mask >> bshift) & ((1u << r) - 1);
    return amask | (bmask << r);
  };

  std::vector<uint32_t> flats;
  std::vector<int> flat_rank;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (rt.is_flat(trace(mask, 0)) && rt.is_flat(trace(mask, 1))) flats.push_back(mask);
  }
  // Rank of a flat: longest chain of flats strictly below it.
  std::sort(flats.begin(), flats.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  flat_rank.assign(flats.size(), 0);
  for (size_t i = 0; i < flats.size(); ++i) {
    int best = -1;
    for (size_t j = 0; j < i; ++j) {
      if (flats[j] != flats[i] && (flats[j] & ~flats[i]) == 0) {
        best = std::max(best, flat_rank[j]);
      }
    }
    flat_rank[i] = best + 1;
  }
  int full = flat_rank.back();
  if (full != 2 * r - 2) raise(ErrorCode::kValidation, "glued rank is off");

  // Bases: full-size sets contained in no lower-rank flat.
  std::vector<ElementSet> bases;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != full) continue;
    bool free_set = true;
    for (size_t i = 0; i < flats.size() && free_set; ++i) {
      if (flat_rank[i] < full && (mask & ~flats[i]) == 0) free_set = false;
    }
    if (free_set) bases.emplace_back(mask, n);
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= r; ++i) labels.push_back("b" + std::to_string(i));
  for (int i = 1; i <= r; ++i) labels.push_back("a" + std::to_string(i) + "p");
  return Matroid::from_bases(n, std::move(labels), std::move(bases), Validation::kChecked);
}

}  // namespace cocirc
