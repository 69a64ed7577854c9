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

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cocirc {

// Subset of a ground set {0,...,n-1} stored as a bitmask.  n <= 16.
struct ElementSet {
  static constexpr int kMaxGroundSize = 16;

  uint32_t bits = 0;
  uint8_t n = 0;

  ElementSet() = default;
  ElementSet(uint32_t bits_in, int n_in) : bits(bits_in), n(uint8_t(n_in)) {
    assert(n_in >= 0 && n_in <= kMaxGroundSize);
    assert(n_in == kMaxGroundSize || (bits_in >> n_in) == 0);
  }

  static ElementSet empty(int n) { return ElementSet(0, n); }
  static ElementSet full(int n) {
    return ElementSet(n == 0 ? 0u : ((1u << n) - 1u), n);
  }
  static ElementSet single(int e, int n) {
    assert(e >= 0 && e < n);
    return ElementSet(1u << e, n);
  }

  int size() const { return std::popcount(bits); }
  bool empty_set() const { return bits == 0; }
  bool contains(int e) const { return (bits >> e) & 1u; }

  ElementSet with(int e) const { return ElementSet(bits | (1u << e), n); }
  ElementSet without(int e) const { return ElementSet(bits & ~(1u << e), n); }

  ElementSet operator|(ElementSet o) const {
    assert(n == o.n);
    return ElementSet(bits | o.bits, n);
  }
  ElementSet operator&(ElementSet o) const {
    assert(n == o.n);
    return ElementSet(bits & o.bits, n);
  }
  // Set difference.
  ElementSet operator-(ElementSet o) const {
    assert(n == o.n);
    return ElementSet(bits & ~o.bits, n);
  }
  ElementSet complement() const {
    return ElementSet(~bits & full(n).bits, n);
  }

  bool subset_of(ElementSet o) const {
    assert(n == o.n);
    return (bits & ~o.bits) == 0;
  }
  bool intersects(ElementSet o) const { return (bits & o.bits) != 0; }

  // Lowest element, -1 if empty.
  int lowest() const { return bits == 0 ? -1 : std::countr_zero(bits); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint32_t m = bits; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  bool operator==(const ElementSet& o) const {
    return bits == o.bits && n == o.n;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }
};

// Canonical order used for set families: cardinality, then bit value.
inline bool canonical_less(ElementSet a, ElementSet b) {
  int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  return a.bits < b.bits;
}

}  // namespace cocirc
