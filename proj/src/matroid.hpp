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

#ifndef MIXEDVOL_MATROID_HPP_
#define MIXEDVOL_MATROID_HPP_

#include <map>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace mixedvol {

using Flat = ElementSet;

// Upper bound on |E| for the 2^|E| closure enumeration of flats. Can be
// raised with SetFlatEnumerationLimit up to kMaxElement.
inline constexpr int kDefaultFlatEnumerationLimit = 14;
void SetFlatEnumerationLimit(int limit);
int FlatEnumerationLimit();

/// Strictly increasing sequence of nontrivial flats.
struct Chain {
  std::vector<Flat> flats;
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// All flats of a matroid with the cover relation.
///
/// `flats` is sorted by the ElementSet order, so flats.front() is the empty
/// flat and flats.back() is E.
struct FlatLattice {
  std::vector<Flat> flats;
  std::vector<int> rank;                // rank[k] = rank of flats[k]
  std::vector<std::vector<int>> covers;  // covers[k] = indices of flats covering flats[k]

  int index_of(Flat f) const;  // -1 if absent
  std::vector<Flat> nontrivial() const;
};

/// A loopless matroid given by its bases.
///
/// Values are immutable after construction; the flat lattice is computed
/// once in the constructor.
class Matroid {
 public:
  /// Validates equal basis sizes, the basis exchange axiom (exhaustively),
  /// and looplessness. Throws InvalidInput on violation.
  static Matroid FromBases(ElementSet ground, std::vector<ElementSet> bases);
  static Matroid FromBases(std::span<const int> ground,
                           const std::vector<std::vector<int>>& bases);

  /// Accepts an explicit lattice of flats (must contain the empty set and E,
  /// be intersection-closed and satisfy the cover partition axiom), then
  /// reconstructs the bases.
  static Matroid FromFlats(ElementSet ground, std::vector<ElementSet> flats);

  static Matroid Uniform(int rank, int size);  // on {1..size}

  ElementSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  int degree() const { return rank_ - 1; }  // d = rank - 1
  const std::vector<ElementSet>& bases() const { return bases_; }

  int rank_of(ElementSet s) const;
  Flat closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }

  const FlatLattice& lattice() const { return lattice_; }
  std::vector<Flat> nontrivial_flats() const { return lattice_.nontrivial(); }

  /// Maximal chains of nontrivial flats, lexicographic on flat labels.
  std::vector<Chain> maximal_chains() const;

  Matroid deleted(int element) const;
  bool is_coloop(int element) const;

  /// S_i: flats F with F and F u {i} distinct nontrivial flats, ordered by
  /// (|F|, lex). Requires {i} to be a flat.
  std::vector<Flat> s_set(int element) const;

  /// For each nontrivial flat G of M \ i, its closure in M.
  std::map<Flat, Flat> closure_map(int element) const;

  /// Image under a bijection of the ground set onto itself.
  Matroid relabeled(const std::map<int, int>& permutation) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(ElementSet ground, std::vector<ElementSet> bases);
  void BuildLattice();

  ElementSet ground_;
  std::vector<ElementSet> bases_;  // sorted
  int rank_ = 0;
  FlatLattice lattice_;
};

}  // namespace mixedvol

#endif  // MIXEDVOL_MATROID_HPP_
