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

#ifndef MIXEDVOL_ELEMENT_SET_HPP_
#define MIXEDVOL_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mixedvol {

// Ground elements are positive integers 1..kMaxElement. Bit 0 is never a
// ground element; it is reserved for synthetic ray labels (see
// SyntheticLabel) so that those can never collide with a flat.
inline constexpr int kMaxElement = 63;

/// A subset of ground elements stored as a 64-bit mask indexed by label.
///
/// Ordering is (cardinality, then lexicographic on the ascending element
/// list). Every deterministic order in the library derives from it.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }
  static constexpr ElementSet FromBits(uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static ElementSet Of(std::span<const int> elements) {
    ElementSet s;
    for (int e : elements) s.bits_ |= bit(e);
    return s;
  }
  static constexpr ElementSet Singleton(int e) { return FromBits(bit(e)); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ & bit(e)) != 0; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSet with(int e) const { return FromBits(bits_ | bit(e)); }
  constexpr ElementSet without(int e) const {
    return FromBits(bits_ & ~bit(e));
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return FromBits(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr std::strong_ordering operator<=>(ElementSet a,
                                                    ElementSet b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    const uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // Same cardinality: the set owning the smallest differing element comes
    // first in lexicographic order of the ascending element lists.
    return (a.bits_ & (diff & -diff)) != 0 ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  /// Comma-joined ascending labels, e.g. "1,2,3"; empty set gives "".
  std::string label() const {
    std::string out;
    for_each([&](int e) {
      if (!out.empty()) out += ',';
      out += std::to_string(e);
    });
    return out;
  }

 private:
  static constexpr uint64_t bit(int e) { return uint64_t{1} << e; }
  uint64_t bits_ = 0;
};

/// Polynomial variables and fan rays are labeled by flats.
using VarId = ElementSet;

/// A label guaranteed not to be a flat of any matroid: `base` plus the
/// reserved element 0. Used for rays introduced by ad-hoc subdivisions.
inline constexpr VarId SyntheticLabel(ElementSet base) {
  return base | ElementSet::FromBits(1);
}

}  // namespace mixedvol

template <>
struct std::hash<mixedvol::ElementSet> {
  size_t operator()(mixedvol::ElementSet s) const noexcept {
    uint64_t x = s.bits() * 0x9E3779B97F4A7C15ull;
    return static_cast<size_t>(x ^ (x >> 29));
  }
};

#endif  // MIXEDVOL_ELEMENT_SET_HPP_
