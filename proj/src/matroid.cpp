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

#include "matroid.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "errors.hpp"

namespace mixedvol {

namespace {

std::atomic<int> g_flat_limit{kDefaultFlatEnumerationLimit};

void ValidateGround(ElementSet ground) {
  Require(!ground.empty(), "ground set is empty");
  Require(!ground.contains(0), "ground elements must be positive integers");
  Require(ground.size() <= FlatEnumerationLimit(),
          "ground set has " + std::to_string(ground.size()) +
              " elements, above the flat enumeration limit of " +
              std::to_string(FlatEnumerationLimit()));
}

// Calls fn(s) for every subset s of `set`, including the empty set.
template <typename Fn>
void ForEachSubset(ElementSet set, Fn&& fn) {
  const uint64_t all = set.bits();
  uint64_t sub = 0;
  do {
    fn(ElementSet::FromBits(sub));
    sub = (sub - all) & all;
  } while (sub != 0);
}

std::vector<ElementSet> SubsetsOfSize(ElementSet set, int k) {
  std::vector<ElementSet> out;
  ForEachSubset(set, [&](ElementSet s) {
    if (s.size() == k) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void SetFlatEnumerationLimit(int limit) {
  Require(limit >= 1 && limit <= kMaxElement, "flat enumeration limit out of range");
  g_flat_limit = limit;
}

int FlatEnumerationLimit() { return g_flat_limit; }

int FlatLattice::index_of(Flat f) const {
  auto it = std::lower_bound(flats.begin(), flats.end(), f);
  if (it == flats.end() || *it != f) return -1;
  return static_cast<int>(it - flats.begin());
}

std::vector<Flat> FlatLattice::nontrivial() const {
  if (flats.size() <= 2) return {};
  return {flats.begin() + 1, flats.end() - 1};
}

Matroid::Matroid(ElementSet ground, std::vector<ElementSet> bases)
    : ground_(ground), bases_(std::move(bases)) {
  rank_ = bases_.front().size();
  BuildLattice();
}

Matroid Matroid::FromBases(ElementSet ground, std::vector<ElementSet> bases) {
  ValidateGround(ground);
  Require(!bases.empty(), "a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  ElementSet covered;
  for (ElementSet b : bases) {
    Require(b.subset_of(ground), "basis {" + b.label() + "} is not a subset of the ground set");
    Require(b.size() == r, "bases have unequal sizes");
    covered = covered | b;
  }
  const ElementSet loops = ground - covered;
  Require(loops.empty(), "loop present: element(s) {" + loops.label() + "} lie in no basis");

  const std::unordered_set<ElementSet> lookup(bases.begin(), bases.end());
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      (b1 - b2).for_each([&](int x) {
        bool found = false;
        (b2 - b1).for_each([&](int y) {
          if (!found && lookup.contains(b1.without(x).with(y))) found = true;
        });
        Require(found, "basis exchange fails for {" + b1.label() + "}, {" +
                           b2.label() + "} at element " + std::to_string(x));
      });
    }
  }
  return Matroid(ground, std::move(bases));
}

Matroid Matroid::FromBases(std::span<const int> ground,
                           const std::vector<std::vector<int>>& bases) {
  for (int e : ground) {
    Require(e >= 1 && e <= kMaxElement,
            "ground element " + std::to_string(e) + " outside 1.." + std::to_string(kMaxElement));
  }
  const ElementSet g = ElementSet::Of(ground);
  Require(g.size() == static_cast<int>(ground.size()), "duplicate ground elements");
  std::vector<ElementSet> bs;
  for (const auto& b : bases) {
    for (int e : b) {
      Require(e >= 1 && e <= kMaxElement && g.contains(e),
              "basis element " + std::to_string(e) + " not in the ground set");
    }
    const ElementSet s = ElementSet::Of(b);
    Require(s.size() == static_cast<int>(b.size()), "duplicate element in a basis");
    bs.push_back(s);
  }
  return FromBases(g, std::move(bs));
}

Matroid Matroid::FromFlats(ElementSet ground, std::vector<ElementSet> flats) {
  ValidateGround(ground);
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  Require(!flats.empty() && flats.front().empty(),
          "flat list must contain the empty set (loops are not allowed)");
  Require(flats.back() == ground, "flat list must contain the ground set");
  for (Flat f : flats) {
    Require(f.subset_of(ground), "flat {" + f.label() + "} is not a subset of the ground set");
  }
  const std::set<Flat> lookup(flats.begin(), flats.end());
  for (Flat a : flats) {
    for (Flat b : flats) {
      Require(lookup.contains(a & b), "flats are not intersection-closed: {" + a.label() +
                                          "} & {" + b.label() + "}");
    }
  }
  // Covers: minimal flats strictly above F. They must partition E \ F.
  for (Flat f : flats) {
    std::vector<Flat> above;
    for (Flat g : flats) {
      if (f.proper_subset_of(g)) above.push_back(g);
    }
    ElementSet seen;
    for (Flat g : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](Flat h) {
        return h.proper_subset_of(g);
      });
      if (!minimal) continue;
      Require((seen & (g - f)).empty(),
              "cover partition axiom fails above flat {" + f.label() + "}");
      seen = seen | (g - f);
    }
    Require(seen == ground - f, "cover partition axiom fails above flat {" + f.label() + "}");
  }
  // Closure = smallest listed flat containing S; rank of a flat = length of
  // a longest chain below it.
  auto closure = [&](ElementSet s) {
    Flat c = ground;
    for (Flat f : flats) {
      if (s.subset_of(f)) c = c & f;
    }
    return c;
  };
  std::vector<int> height(flats.size(), 0);
  for (size_t k = 0; k < flats.size(); ++k) {
    for (size_t j = 0; j < k; ++j) {
      if (flats[j].proper_subset_of(flats[k])) height[k] = std::max(height[k], height[j] + 1);
    }
  }
  const int r = height.back();
  std::vector<ElementSet> bases;
  for (ElementSet b : SubsetsOfSize(ground, r)) {
    if (closure(b) == ground) {
      // A spanning set of size r is independent iff every element is
      // outside the closure of the others.
      bool independent = true;
      b.for_each([&](int e) {
        if (closure(b.without(e)).contains(e)) independent = false;
      });
      if (independent) bases.push_back(b);
    }
  }
  Require(!bases.empty(), "flat list does not determine any basis");
  Matroid m = FromBases(ground, std::move(bases));
  Require(m.lattice().flats == flats, "flat list is not the lattice of flats of a matroid");
  return m;
}

Matroid Matroid::Uniform(int rank, int size) {
  Require(size >= 1 && size <= kMaxElement, "uniform matroid size out of range");
  Require(rank >= 1 && rank <= size, "uniform matroid rank out of range");
  const ElementSet ground = ElementSet::FromBits(((uint64_t{1} << size) - 1) << 1);
  return FromBases(ground, SubsetsOfSize(ground, rank));
}

int Matroid::rank_of(ElementSet s) const {
  int best = 0;
  for (ElementSet b : bases_) {
    best = std::max(best, (s & b).size());
    if (best == rank_) break;
  }
  return best;
}

Flat Matroid::closure(ElementSet s) const {
  const int r = rank_of(s);
  Flat c = s;
  (ground_ - s).for_each([&](int e) {
    if (rank_of(s.with(e)) == r) c = c.with(e);
  });
  return c;
}

void Matroid::BuildLattice() {
  std::set<Flat> found;
  ForEachSubset(ground_, [&](ElementSet s) { found.insert(closure(s)); });
  lattice_.flats.assign(found.begin(), found.end());
  const size_t n = lattice_.flats.size();
  lattice_.rank.resize(n);
  for (size_t k = 0; k < n; ++k) lattice_.rank[k] = rank_of(lattice_.flats[k]);
  lattice_.covers.assign(n, {});
  for (size_t k = 0; k < n; ++k) {
    for (size_t j = 0; j < n; ++j) {
      if (lattice_.flats[k].proper_subset_of(lattice_.flats[j]) &&
          lattice_.rank[j] == lattice_.rank[k] + 1) {
        lattice_.covers[k].push_back(static_cast<int>(j));
      }
    }
  }
}

std::vector<Chain> Matroid::maximal_chains() const {
  std::vector<Chain> out;
  const int top = static_cast<int>(lattice_.flats.size()) - 1;
  std::vector<Flat> path;
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == top) {
      out.push_back(Chain{path});
      return;
    }
    for (int next : lattice_.covers[at]) {
      if (next != top) path.push_back(lattice_.flats[next]);
      self(self, next);
      if (next != top) path.pop_back();
    }
  };
  if (top == 0) {
    out.push_back(Chain{});  // cannot happen for nonempty loopless M
  } else {
    dfs(dfs, 0);
  }
  return out;
}

Matroid Matroid::deleted(int element) const {
  Require(ground_.contains(element), "element " + std::to_string(element) + " not in the ground set");
  Require(ground_.size() >= 2, "cannot delete the last element");
  std::vector<ElementSet> avoiding;
  for (ElementSet b : bases_) {
    if (!b.contains(element)) avoiding.push_back(b);
  }
  if (avoiding.empty()) {
    for (ElementSet b : bases_) avoiding.push_back(b.without(element));
  }
  return Matroid(ground_.without(element), [&] {
    std::sort(avoiding.begin(), avoiding.end());
    avoiding.erase(std::unique(avoiding.begin(), avoiding.end()), avoiding.end());
    return avoiding;
  }());
}

bool Matroid::is_coloop(int element) const {
  Require(ground_.contains(element), "element " + std::to_string(element) + " not in the ground set");
  return rank_of(ground_.without(element)) == rank_ - 1;
}

std::vector<Flat> Matroid::s_set(int element) const {
  Require(ground_.contains(element), "element " + std::to_string(element) + " not in the ground set");
  Require(is_flat(ElementSet::Singleton(element)),
          "{" + std::to_string(element) + "} is not a flat");
  std::vector<Flat> out;
  for (Flat f : nontrivial_flats()) {
    if (f.contains(element)) continue;
    const Flat g = f.with(element);
    if (g != ground_ && lattice_.index_of(g) >= 0) out.push_back(f);
  }
  return out;  // inherits the (|F|, lex) order of the lattice
}

std::map<Flat, Flat> Matroid::closure_map(int element) const {
  const Matroid minor = deleted(element);
  std::map<Flat, Flat> out;
  for (Flat g : minor.nontrivial_flats()) out.emplace(g, closure(g));
  return out;
}

Matroid Matroid::relabeled(const std::map<int, int>& permutation) const {
  ElementSet keys;
  ElementSet values;
  for (auto [from, to] : permutation) {
    Require(from >= 1 && from <= kMaxElement && to >= 1 && to <= kMaxElement,
            "relabeling maps outside the element range");
    Require(!values.contains(to), "relabeling is not injective");
    keys = keys.with(from);
    values = values.with(to);
  }
  Require(keys == ground_ && values == ground_, "relabeling is not a permutation of the ground set");
  std::vector<ElementSet> bases;
  for (ElementSet b : bases_) {
    ElementSet img;
    b.for_each([&](int e) { img = img.with(permutation.at(e)); });
    bases.push_back(img);
  }
  std::sort(bases.begin(), bases.end());
  return Matroid(ground_, std::move(bases));
}

}  // namespace mixedvol
