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

#include <optional>
#include <vector>

#include "cocirc/matroid.hpp"

namespace cocirc {

// Ordered: {x1, x2, x3} is a triangle and {x2, x3, x4} is a triad.  Both
// orderings of the shared pair are reported when both qualify; positions
// matter downstream.
struct Fan {
  int x1 = -1, x2 = -1, x3 = -1, x4 = -1;
};

// L = {x1..xt} a segment, L* = {y1..yt} disjoint from L, and
// (cl(L) - xi) u yi a cocircuit for every i.  xs is sorted ascending; ys is
// matched by position.
struct SegCosegPair {
  ElementSet l, lstar;
  std::vector<int> xs, ys;
};

// P a rank-one flat, s outside it, P u s a cocircuit.
struct Spore {
  ElementSet p;
  int s = -1;

  bool operator==(const Spore& o) const { return p == o.p && s == o.s; }
};

std::vector<ElementSet> triangles(const RankTable& rt);
std::vector<ElementSet> triads(const RankTable& rt);
std::vector<ElementSet> triangles(const Matroid& m);
std::vector<ElementSet> triads(const Matroid& m);

std::vector<Fan> fans(const Matroid& m);

// Sets L with |L| >= 3 where every 3-subset is a circuit; maximal ones by
// default, every such set with include_subsets.
std::vector<ElementSet> segments(const Matroid& m, bool include_subsets = false);
std::vector<ElementSet> cosegments(const Matroid& m, bool include_subsets = false);

// Every (L, L*) with matched indexing, over all segments L (not only
// maximal ones) and all distinct assignments of the yi.
std::vector<SegCosegPair> seg_coseg_pairs(const Matroid& m);

std::vector<Spore> spores(const Matroid& m);

// The spore when M has exactly one and every k-separation with k < 3 has a
// side inside P u s; absent otherwise.  All separations are enumerated.
std::optional<Spore> is_3conn_up_to_unique_spore(const Matroid& m);

}  // namespace cocirc
