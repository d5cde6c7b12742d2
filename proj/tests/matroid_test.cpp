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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "corpus.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "test_util.hpp"

namespace mixedvol {
namespace {

using testing::X;

std::vector<CorpusEntry> SmallCorpus() {
  auto c = UniformCorpus(5);
  for (auto& e : RandomCorpus(20, 6, 7)) c.push_back(std::move(e));
  for (auto& e : ExhaustiveCorpus(4)) c.push_back(std::move(e));
  return c;
}

TEST_CASE("construction from bases") {
  const Matroid m = testing::RunningExample();
  CHECK(m.rank() == 3);
  CHECK(m.degree() == 2);

  const Matroid single = Matroid::FromBases(std::vector<int>{1}, {{1}});
  CHECK(single.rank() == 1);
  CHECK(single.nontrivial_flats().empty());

  const Matroid u23 = Matroid::FromBases(std::vector<int>{1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(u23 == Matroid::Uniform(2, 3));
}

TEST_CASE("construction errors") {
  using V = std::vector<int>;
  CHECK_THROWS_AS(Matroid::FromBases(V{1, 2, 3}, {{1, 2}, {3}}), InvalidInput);
  // {1,2},{3,4}: exchanging 1 out of {1,2} needs {2,3} or {2,4}.
  CHECK_THROWS_AS(Matroid::FromBases(V{1, 2, 3, 4}, {{1, 2}, {3, 4}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::FromBases(V{1, 2, 3}, {{1, 2}}), InvalidInput);  // 3 is a loop
  CHECK_THROWS_AS(Matroid::FromBases(V{1, 2}, {}), InvalidInput);
  CHECK_THROWS_AS(Matroid::FromBases(V{0, 1}, {{1}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::FromBases(V{1, 2}, {{1, 5}}), InvalidInput);
}

TEST_CASE("rank and closure") {
  const Matroid m = testing::RunningExample();
  CHECK(m.rank_of(X("123")) == 2);
  CHECK(m.rank_of(ElementSet{}) == 0);
  CHECK(Matroid::Uniform(2, 3).rank_of(X("12")) == 2);
  CHECK(m.closure(X("12")) == X("123"));
  CHECK(m.closure(X("14")) == X("14"));
  CHECK(m.closure(X("24")) == X("24"));
}

TEST_CASE("flat lattice") {
  const Matroid m = testing::RunningExample();
  const std::vector<Flat> expected{X("1"),  X("2"),  X("3"),  X("4"),
                                   X("14"), X("24"), X("34"), X("123")};
  CHECK(m.nontrivial_flats() == expected);

  const Matroid single = Matroid::Uniform(1, 1);
  CHECK(single.lattice().flats.size() == 2);

  const Matroid boolean = Matroid::FromBases(std::vector<int>{1, 2, 4}, {{1, 2, 4}});
  const std::vector<Flat> subsets{X("1"), X("2"), X("4"), X("12"), X("14"), X("24")};
  CHECK(boolean.nontrivial_flats() == subsets);
}

TEST_CASE("construction from flats") {
  const Matroid m = testing::RunningExample();
  const Matroid again = Matroid::FromFlats(m.ground(), m.lattice().flats);
  CHECK(again == m);
  std::vector<ElementSet> broken = m.lattice().flats;
  broken.erase(std::find(broken.begin(), broken.end(), X("14")));
  CHECK_THROWS_AS(Matroid::FromFlats(m.ground(), broken), InvalidInput);
  std::vector<ElementSet> no_empty = m.lattice().flats;
  no_empty.erase(no_empty.begin());
  CHECK_THROWS_AS(Matroid::FromFlats(m.ground(), no_empty), InvalidInput);
}

TEST_CASE("maximal chains") {
  const Matroid m = testing::RunningExample();
  const auto chains = m.maximal_chains();
  CHECK(chains.size() == 9);
  for (const Chain& c : chains) CHECK(c.flats.size() == 2);
  CHECK(chains.front().flats == std::vector<Flat>{X("1"), X("14")});

  const auto trivial = Matroid::Uniform(1, 3).maximal_chains();
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].flats.empty());

  CHECK(Matroid::Uniform(3, 3).maximal_chains().size() == 6);
}

TEST_CASE("deletion") {
  const Matroid m = testing::RunningExample();
  const Matroid boolean = Matroid::FromBases(std::vector<int>{1, 2, 4}, {{1, 2, 4}});
  CHECK(m.deleted(3) == boolean);
  const Matroid rank2 = m.deleted(4);
  CHECK(rank2.rank() == 2);
  CHECK(rank2 == Matroid::Uniform(2, 3));
  CHECK(Matroid::Uniform(2, 3).deleted(3) == Matroid::Uniform(2, 2));
  CHECK_THROWS_AS(Matroid::Uniform(1, 1).deleted(1), InvalidInput);
}

TEST_CASE("coloops") {
  const Matroid m = testing::RunningExample();
  CHECK(m.is_coloop(4));
  CHECK_FALSE(m.is_coloop(3));
  for (int i = 1; i <= 4; ++i) CHECK(Matroid::Uniform(4, 4).is_coloop(i));
}

TEST_CASE("S_i sets") {
  const Matroid m = testing::RunningExample();
  CHECK(m.s_set(3) == std::vector<Flat>{X("4")});
  CHECK(m.s_set(4) == std::vector<Flat>{X("1"), X("2"), X("3")});
  CHECK(Matroid::Uniform(2, 3).s_set(1).empty());
  CHECK_THROWS_AS(Matroid::Uniform(1, 2).s_set(1), InvalidInput);
}

TEST_CASE("closure map") {
  const Matroid m = testing::RunningExample();
  const auto cm = m.closure_map(3);
  CHECK(cm.at(X("12")) == X("123"));
  CHECK(cm.at(X("24")) == X("24"));
  CHECK(cm.at(X("1")) == X("1"));
  CHECK(cm.size() == 6);
}

TEST_CASE("relabeling") {
  const Matroid m = testing::RunningExample();
  CHECK(m.relabeled({{1, 1}, {2, 2}, {3, 3}, {4, 4}}) == m);
  CHECK(m.relabeled({{1, 2}, {2, 1}, {3, 3}, {4, 4}}) == m);
  const Matroid u = Matroid::Uniform(2, 3);
  CHECK(u.relabeled({{1, 3}, {2, 1}, {3, 2}}) == u);
  CHECK_THROWS_AS(m.relabeled({{1, 2}, {2, 2}, {3, 3}, {4, 4}}), InvalidInput);
}

TEST_CASE("flat enumeration guard") {
  const int old = FlatEnumerationLimit();
  SetFlatEnumerationLimit(3);
  CHECK_THROWS_AS(Matroid::Uniform(2, 4), InvalidInput);
  SetFlatEnumerationLimit(old);
  CHECK_NOTHROW(Matroid::Uniform(2, 4));
}

TEST_CASE("exhaustive enumeration counts isomorphism classes") {
  // Loopless matroids on n elements up to isomorphism: 1, 2, 4, 9, 21.
  std::map<int, int> by_size;
  for (const auto& e : ExhaustiveCorpus(5)) ++by_size[e.matroid.size()];
  CHECK(by_size == std::map<int, int>{{1, 1}, {2, 2}, {3, 4}, {4, 9}, {5, 21}});
  std::set<std::vector<uint64_t>> forms;
  for (const auto& e : ExhaustiveCorpus(4)) forms.insert(CanonicalForm(e.matroid));
  CHECK(forms.size() == 16);
  std::mt19937_64 rng(13);
  const Matroid m = testing::RunningExample();
  CHECK(CanonicalForm(m.relabeled(testing::RandomPermutation(m.ground(), rng))) ==
        CanonicalForm(m));
}

TEST_CASE("corpus generators") {
  const auto uniform = UniformCorpus(4);
  CHECK(uniform.size() == 10);
  CHECK(uniform.front().name == "U(1,1)");
  const auto a = RandomCorpus(10, 6, 5);
  const auto b = RandomCorpus(10, 6, 5);
  REQUIRE(a.size() == 10);
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].matroid == b[k].matroid);
    CHECK(a[k].matroid.size() >= 2);
    CHECK(a[k].matroid.size() <= 6);
  }
  CHECK_THROWS_AS(ExhaustiveCorpus(6), InvalidInput);
}

TEST_CASE("property: rank against brute force, monotone and submodular") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const auto subsets = testing::AllSubsets(m.ground());
    for (ElementSet a : subsets) {
      REQUIRE(m.rank_of(a) == testing::OracleRank(m.bases(), a));
    }
    for (ElementSet a : subsets) {
      for (ElementSet b : subsets) {
        if (a.subset_of(b)) CHECK(m.rank_of(a) <= m.rank_of(b));
        CHECK(m.rank_of(a | b) + m.rank_of(a & b) <= m.rank_of(a) + m.rank_of(b));
      }
    }
  }
}

TEST_CASE("property: closure is extensive, idempotent and monotone") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const auto subsets = testing::AllSubsets(m.ground());
    for (ElementSet a : subsets) {
      const Flat c = m.closure(a);
      CHECK(c == testing::OracleClosure(m.bases(), m.ground(), a));
      CHECK(a.subset_of(c));
      CHECK(m.closure(c) == c);
      for (ElementSet b : subsets) {
        if (a.subset_of(b)) CHECK(c.subset_of(m.closure(b)));
      }
    }
  }
}

TEST_CASE("property: lattice is intersection closed and covers partition") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const FlatLattice& lat = m.lattice();
    CHECK(lat.flats == testing::OracleFlats(m.bases(), m.ground()));
    const std::set<ElementSet> all(lat.flats.begin(), lat.flats.end());
    for (Flat f : lat.flats) {
      for (Flat g : lat.flats) CHECK(all.contains(f & g));
    }
    for (size_t k = 0; k < lat.flats.size(); ++k) {
      const Flat f = lat.flats[k];
      ElementSet seen;
      for (int c : lat.covers[k]) {
        const ElementSet part = lat.flats[c] - f;
        CHECK((seen & part).empty());
        seen = seen | part;
      }
      if (f != m.ground()) CHECK(seen == m.ground() - f);
    }
  }
}

TEST_CASE("property: deletion flats are the traces of flats") {
  for (const auto& [name, m] : SmallCorpus()) {
    if (m.size() < 2) continue;
    CAPTURE(name);
    m.ground().for_each([&](int i) {
      std::set<ElementSet> expected;
      for (Flat f : m.lattice().flats) expected.insert(f.without(i));
      const auto got = m.deleted(i).lattice().flats;
      CHECK(std::set<ElementSet>(got.begin(), got.end()) == expected);
    });
  }
}

TEST_CASE("property: S_i order refines inclusion") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    m.ground().for_each([&](int i) {
      if (!m.is_flat(ElementSet::Singleton(i)) || m.size() < 2) return;
      const auto s = m.s_set(i);
      for (size_t l = 0; l < s.size(); ++l) {
        for (size_t j = l + 1; j < s.size(); ++j) CHECK_FALSE(s[j].subset_of(s[l]));
      }
      for (Flat f : m.nontrivial_flats()) {
        const bool member = std::find(s.begin(), s.end(), f) != s.end();
        const bool expected = f.with(i) != f && m.is_flat(f.with(i)) && f.with(i) != m.ground();
        CHECK(member == expected);
      }
    });
  }
}

TEST_CASE("property: chain count matches an independent DFS") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const auto chains = m.maximal_chains();
    CHECK(chains.size() == testing::OracleChainCount(m.bases(), m.ground()));
    for (const Chain& c : chains) {
      CHECK(static_cast<int>(c.flats.size()) == m.degree());
      for (size_t k = 1; k < c.flats.size(); ++k) CHECK(c.flats[k - 1].proper_subset_of(c.flats[k]));
    }
  }
}

TEST_CASE("property: relabeling maps flats to flats") {
  std::mt19937_64 rng(11);
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const auto perm = testing::RandomPermutation(m.ground(), rng);
    const Matroid image = m.relabeled(perm);
    std::set<ElementSet> expected;
    for (Flat f : m.lattice().flats) expected.insert(testing::Apply(perm, f));
    const auto got = image.lattice().flats;
    CHECK(std::set<ElementSet>(got.begin(), got.end()) == expected);
  }
}

}  // namespace
}  // namespace mixedvol
