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
#include <optional>
#include <string>
#include <vector>

#include "cocirc/element_set.hpp"
#include "cocirc/error.hpp"

namespace cocirc {

enum class Validation { kTrusted, kChecked };

// A matroid on ground set {0,...,n-1}, stored as its family of bases.
// Values are immutable after construction; every operation below is a pure
// function returning fresh values, so instances can be shared freely.
struct Matroid {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<ElementSet> bases;  // sorted by bit value, all the same size

  int rank() const { return bases.empty() ? 0 : bases.front().size(); }
  ElementSet ground() const { return ElementSet::full(n); }

  bool is_basis(ElementSet b) const;

  std::string label_of(int e) const { return labels.at(size_t(e)); }
  // Comma-free rendering of a subset as its sorted label list.
  std::vector<std::string> labels_of(ElementSet s) const;
  // Inverse of labels_of; raises kBadParams on unknown labels or duplicates.
  ElementSet set_by_labels(const std::vector<std::string>& names) const;
  int index_of_label(const std::string& name) const;

  // validation == kChecked verifies label uniqueness, equicardinality,
  // duplicate-freeness and the basis-exchange axiom (error messages cite the
  // failing pair).  Known-good recipes construct with kTrusted.
  static Matroid from_bases(int n, std::vector<std::string> labels,
                            std::vector<ElementSet> bases, Validation validation);
  static Matroid from_base_masks(int n, std::vector<std::string> labels,
                                 std::vector<uint32_t> bases, Validation validation);
};

std::vector<std::string> default_labels(int n);

// Precomputed rank over all 2^n subsets.  Build cost O(2^n * n) plus one pass
// over the bases; lookups are O(1).
class RankTable {
 public:
  explicit RankTable(const Matroid& m);

  int n() const { return n_; }
  int full_rank() const { return full_rank_; }
  uint32_t ground_mask() const { return n_ == 0 ? 0u : (1u << n_) - 1u; }

  int rank(uint32_t mask) const { return rank_[mask]; }
  int rank(ElementSet s) const { return rank_[s.bits]; }
  bool independent(uint32_t mask) const {
    return rank_[mask] == std::popcount(mask);
  }
  int lambda(uint32_t mask) const {
    return rank_[mask] + rank_[ground_mask() & ~mask] - full_rank_;
  }
  int local_connectivity(uint32_t a, uint32_t b) const {
    return rank_[a] + rank_[b] - rank_[a | b];
  }
  uint32_t closure(uint32_t mask) const;
  bool is_flat(uint32_t mask) const { return closure(mask) == mask; }
  int corank(uint32_t mask) const {
    return std::popcount(mask) + rank_[ground_mask() & ~mask] - full_rank_;
  }
  uint32_t coclosure(uint32_t mask) const;

 private:
  int n_ = 0;
  int full_rank_ = 0;
  std::vector<uint8_t> rank_;
};

// ----- core operations ------------------------------------------------------

int rank(const Matroid& m, ElementSet x);
ElementSet closure(const Matroid& m, ElementSet x);

// Minimal dependent sets, canonically ordered (size, then bit value).
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> cocircuits(const Matroid& m);
bool is_circuit(const RankTable& rt, uint32_t mask);
// Cocircuit test against the primal table: complement is a hyperplane.
bool is_cocircuit(const RankTable& rt, uint32_t mask);

Matroid dual(const Matroid& m);
Matroid deletion(const Matroid& m, ElementSet d);
Matroid contraction(const Matroid& m, ElementSet c);

// Bases from a circuit family: dependent sets are the supersets of circuits,
// bases the largest independent sets.  The family must be the full circuit
// collection for the result to reproduce it; kChecked re-validates exchange.
Matroid matroid_from_circuits(int n, std::vector<std::string> labels,
                              const std::vector<ElementSet>& circuits, Validation validation);

// Index translation for deletion/contraction results: kept elements stay in
// ascending order.  new_index[old] == -1 for removed elements.
std::vector<int> removal_index_map(int n, ElementSet removed);

struct SimplificationMap {
  // representative[old] = old index the element was merged into
  // (itself if kept, -1 if removed as a loop / coloop).
  std::vector<int> representative;
  std::vector<int> new_index;  // old -> index in the result, -1 if gone
};

struct Simplified {
  Matroid m;
  SimplificationMap map;
};

// Deletes loops, keeps the lowest-index element of every parallel class.
Simplified simplify(const Matroid& m);
// Dual notion: contracts coloops, keeps the lowest-index element of every
// series class.
Simplified cosimplify(const Matroid& m);

// Ground-set bijection carrying bases onto bases, as old->new indices.
std::optional<std::vector<int>> is_isomorphic(const Matroid& a, const Matroid& b);

// Exact equality after aligning ground sets by label.  Requires identical
// label sets; raises kBadParams otherwise.
bool equal_up_to_label_order(const Matroid& a, const Matroid& b);

// Per-element invariants used both for isomorphism pruning and as memo
// fingerprints: (#bases through e, multiset of circuit sizes through e).
std::vector<std::pair<int, std::vector<int>>> element_invariants(const Matroid& m);

// ----- witnesses ------------------------------------------------------------

struct Witness {
  enum class Kind { kCircuit, kCocircuit, kSeparation, kNote };
  Kind kind = Kind::kNote;
  std::vector<ElementSet> sets;
  std::string note;
};

bool witness_checks(const Matroid& m, const Witness& w);

}  // namespace cocirc
