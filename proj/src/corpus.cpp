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

#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <unordered_set>

#include "errors.hpp"
#include "linalg.hpp"

namespace mixedvol {

namespace {

ElementSet FirstElements(int m) { return ElementSet::FromBits(((uint64_t{1} << m) - 1) << 1); }

std::vector<ElementSet> SubsetsOfSize(ElementSet ground, int r) {
  std::vector<ElementSet> out;
  const auto elems = ground.elements();
  const int n = static_cast<int>(elems.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    ElementSet s;
    for (int k = 0; k < n; ++k) {
      if (mask & (uint64_t{1} << k)) s = s.with(elems[k]);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Plain modulo keeps the stream independent of the standard library.
int Below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }

bool IsBasisFamily(ElementSet ground, const std::vector<ElementSet>& bases) {
  if (bases.empty()) return false;
  ElementSet covered;
  for (ElementSet b : bases) covered = covered | b;
  if (covered != ground) return false;
  const std::unordered_set<ElementSet> lookup(bases.begin(), bases.end());
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      bool ok = true;
      (b1 - b2).for_each([&](int x) {
        bool found = false;
        (b2 - b1).for_each([&](int y) { found = found || lookup.contains(b1.without(x).with(y)); });
        ok = ok && found;
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::optional<Matroid> VectorConfiguration(std::mt19937_64& rng, int n, int r) {
  std::vector<QVector> vectors;
  for (int k = 0; k < n; ++k) {
    QVector v(r);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : v) {
        x = Below(rng, 3) - 1;
        nonzero = nonzero || x != 0;
      }
    }
    vectors.push_back(std::move(v));
  }
  const ElementSet ground = FirstElements(n);
  std::vector<ElementSet> bases;
  for (ElementSet s : SubsetsOfSize(ground, r)) {
    std::vector<QVector> cols;
    s.for_each([&](int e) { cols.push_back(vectors[e - 1]); });
    if (linalg::Determinant(linalg::Matrix::FromColumns(cols, r)) != 0) bases.push_back(s);
  }
  if (!IsBasisFamily(ground, bases)) return std::nullopt;  // rank deficient or a loop
  return Matroid::FromBases(ground, std::move(bases));
}

std::optional<Matroid> SparsePaving(std::mt19937_64& rng, int n, int r) {
  const ElementSet ground = FirstElements(n);
  std::vector<ElementSet> all = SubsetsOfSize(ground, r);
  std::vector<size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  for (size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[Below(rng, static_cast<int>(k))]);
  std::set<ElementSet> removed;
  for (size_t k : order) {
    if (Below(rng, 2) == 0) continue;
    const bool far = std::all_of(removed.begin(), removed.end(),
                                 [&](ElementSet h) { return (h & all[k]).size() <= r - 2; });
    if (far) removed.insert(all[k]);
  }
  std::vector<ElementSet> bases;
  for (ElementSet s : all) {
    if (!removed.contains(s)) bases.push_back(s);
  }
  if (!IsBasisFamily(ground, bases)) return std::nullopt;
  return Matroid::FromBases(ground, std::move(bases));
}

}  // namespace

std::vector<CorpusEntry> UniformCorpus(int max_elements) {
  Require(max_elements >= 1 && max_elements <= kCorpusElementLimit,
          "max elements must lie in 1.." + std::to_string(kCorpusElementLimit));
  std::vector<CorpusEntry> out;
  for (int m = 1; m <= max_elements; ++m) {
    for (int r = 1; r <= m; ++r) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(m) + ")", Matroid::Uniform(r, m)});
    }
  }
  return out;
}

std::vector<CorpusEntry> RandomCorpus(int count, int max_elements, uint64_t seed) {
  Require(count >= 0, "count must be nonnegative");
  Require(max_elements >= 2 && max_elements <= kCorpusElementLimit,
          "random matroids need max elements in 2.." + std::to_string(kCorpusElementLimit));
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  while (static_cast<int>(out.size()) < count) {
    const bool vectors = out.size() % 2 == 0;
    const int n = 2 + Below(rng, max_elements - 1);
    const int r = 1 + Below(rng, n);
    auto m = vectors ? VectorConfiguration(rng, n, r) : SparsePaving(rng, n, r);
    if (!m) continue;
    out.push_back({"random-" + std::to_string(out.size()) + (vectors ? "-vectors" : "-paving"),
                   std::move(*m)});
  }
  return out;
}

std::vector<uint64_t> CanonicalForm(const Matroid& m) {
  const auto elems = m.ground().elements();
  std::vector<int> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint64_t> best;
  do {
    std::vector<uint64_t> image;
    for (ElementSet b : m.bases()) {
      uint64_t mask = 0;
      for (size_t k = 0; k < elems.size(); ++k) {
        if (b.contains(elems[k])) mask |= uint64_t{1} << perm[k];
      }
      image.push_back(mask);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<CorpusEntry> ExhaustiveCorpus(int max_elements) {
  Require(max_elements >= 1 && max_elements <= 5, "exhaustive enumeration supports up to 5 elements");
  std::vector<CorpusEntry> out;
  for (int m = 1; m <= max_elements; ++m) {
    const ElementSet ground = FirstElements(m);
    std::set<std::vector<uint64_t>> seen;
    int index = 0;
    for (int r = 1; r <= m; ++r) {
      const auto candidates = SubsetsOfSize(ground, r);
      for (uint64_t family = 1; family < (uint64_t{1} << candidates.size()); ++family) {
        std::vector<ElementSet> bases;
        for (size_t k = 0; k < candidates.size(); ++k) {
          if (family & (uint64_t{1} << k)) bases.push_back(candidates[k]);
        }
        if (!IsBasisFamily(ground, bases)) continue;
        Matroid mat = Matroid::FromBases(ground, std::move(bases));
        if (!seen.insert(CanonicalForm(mat)).second) continue;
        out.push_back({"all-" + std::to_string(m) + "-" + std::to_string(index++), std::move(mat)});
      }
    }
  }
  return out;
}

}  // namespace mixedvol
