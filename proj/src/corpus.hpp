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

#ifndef MIXEDVOL_CORPUS_HPP_
#define MIXEDVOL_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "matroid.hpp"

namespace mixedvol {

inline constexpr int kCorpusElementLimit = 8;

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

/// U_{r,m} for 1 <= r <= m <= max_elements.
std::vector<CorpusEntry> UniformCorpus(int max_elements);

/// `count` random loopless matroids on 2..max_elements elements.
/// Even-indexed draws realize random {-1,0,1} vector configurations; odd
/// ones are sparse paving matroids obtained by removing a random family of
/// r-sets pairwise meeting in at most r-2 elements from U_{r,m}.
std::vector<CorpusEntry> RandomCorpus(int count, int max_elements, uint64_t seed);

/// Every loopless matroid on {1..m}, 1 <= m <= max_elements, one per
/// isomorphism class. Feasible for max_elements <= 5.
std::vector<CorpusEntry> ExhaustiveCorpus(int max_elements);

/// Sorted basis masks of the lexicographically smallest relabeling.
std::vector<uint64_t> CanonicalForm(const Matroid& m);

}  // namespace mixedvol

#endif  // MIXEDVOL_CORPUS_HPP_
