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

#include "corpus.hpp"
#include "errors.hpp"
#include "fan.hpp"
#include "test_util.hpp"

namespace mixedvol {
namespace {

using testing::X;

std::vector<CorpusEntry> SmallCorpus() {
  auto c = UniformCorpus(5);
  for (auto& e : RandomCorpus(24, 5, 29)) c.push_back(std::move(e));
  return c;
}

TEST_CASE("Bergman fan of the running example") {
  const Matroid m = testing::RunningExample();
  const SimplicialFan fan = BergmanFan(m);
  CHECK(fan.ambient_dimension() == 3);
  CHECK(fan.dimension() == 2);
  CHECK(fan.rays().size() == 8);
  CHECK(fan.cones(2).size() == 9);
  CHECK(fan.cone_count() == 1 + 8 + 9);
  CHECK(fan.is_pure());
  const int r14 = fan.ray_index(X("14"));
  REQUIRE(r14 >= 0);
  CHECK(fan.rays()[r14].vector == QVector{0, -1, -1});
  CHECK(BergmanRayVector(m.ground(), X("4")) == QVector{-1, -1, -1});
  CHECK(BergmanRayVector(m.ground(), X("123")) == QVector{1, 1, 1});
  CHECK(fan.contains(fan.cone_of({X("4"), X("14")})));
  CHECK_THROWS_AS(fan.cone_of({X("1"), X("4")}), InvalidInput);
  CHECK(fan.ray_index(X("12")) == -1);
}

TEST_CASE("fan construction errors") {
  std::vector<Ray> rays{{X("1"), {1, 0}}, {X("2"), {2, 0}}};
  CHECK_THROWS_AS(SimplicialFan(rays, {{0, 1}}, 2), InvalidInput);
  std::vector<Ray> dup{{X("1"), {1, 0}}, {X("1"), {0, 1}}};
  CHECK_THROWS_AS(SimplicialFan(dup, {{0, 1}}, 2), InvalidInput);
  std::vector<Ray> zero{{X("1"), {0, 0}}};
  CHECK_THROWS_AS(SimplicialFan(zero, {{0}}, 2), InvalidInput);
  std::vector<Ray> ok{{X("1"), {1, 0}}};
  CHECK_THROWS_AS(SimplicialFan(ok, {{1}}, 2), InvalidInput);
  CHECK_THROWS_AS(SimplicialFan(ok, {{0}}, 3), InvalidInput);
}

TEST_CASE("star and link") {
  const SimplicialFan fan = BergmanFan(testing::RunningExample());
  const Cone four = fan.cone_of({X("4")});
  const SimplicialFan star = Star(fan, four);
  CHECK(star.cones(2).size() == 3);
  CHECK(star.rays().size() == 4);
  const SimplicialFan link = Link(fan, four);
  CHECK(link.ambient_dimension() == 2);
  CHECK(link.dimension() == 1);
  CHECK(link.rays().size() == 3);
  CHECK(CheckBalancing(link, ConstantWeight(link)).passed);
  const SimplicialFan top = Link(fan, fan.cone_of({X("4"), X("14")}));
  CHECK(top.dimension() == 0);
}

TEST_CASE("codimension-one adjacency") {
  const SimplicialFan fan = BergmanFan(testing::RunningExample());
  const auto adjacency = Codim1Adjacency(fan);
  CHECK(adjacency.size() == 8);
  for (const Adjacency& a : adjacency) {
    size_t containing = 0;
    for (const Cone& sigma : fan.cones(2)) {
      if (std::includes(sigma.begin(), sigma.end(), a.facet.begin(), a.facet.end())) ++containing;
    }
    CHECK(a.cofaces.size() == containing);
    for (const Coface& c : a.cofaces) {
      CHECK(std::find(c.cone.begin(), c.cone.end(), c.opposite_ray) != c.cone.end());
      CHECK(std::find(a.facet.begin(), a.facet.end(), c.opposite_ray) == a.facet.end());
    }
    const VarId label = fan.labels_of(a.facet).front();
    if (label == X("4") || label == X("123")) CHECK(a.cofaces.size() == 3);
    if (label == X("1") || label == X("14")) CHECK(a.cofaces.size() == 2);
  }
}

TEST_CASE("balancing detects a broken weight") {
  const SimplicialFan fan = BergmanFan(testing::RunningExample());
  MinkowskiWeight w = ConstantWeight(fan);
  const BalancingReport good = CheckBalancing(fan, w);
  CHECK(good.passed);
  CHECK(good.facets_checked == 8);
  w[fan.cone_of({X("4"), X("14")})] = 2;
  const BalancingReport bad = CheckBalancing(fan, w, 4);
  CHECK_FALSE(bad.passed);
  CHECK(bad.violations.size() == 2);
  MinkowskiWeight missing = ConstantWeight(fan);
  missing.erase(missing.begin());
  CHECK_THROWS_AS(CheckBalancing(fan, missing), InvalidInput);
}

TEST_CASE("star subdivision") {
  const SimplicialFan fan = BergmanFan(testing::RunningExample());
  const Cone c = fan.cone_of({X("4"), X("14")});
  const SimplicialFan fine = StarSubdivide(fan, c, X("5"));
  CHECK(fine.rays().size() == 9);
  CHECK(fine.cones(2).size() == 10);
  CHECK(fine.rays().back().vector == QVector{-1, -2, -2});
  CHECK_THROWS_AS(fine.cone_of({X("4"), X("14")}), InvalidInput);
  CHECK(CheckBalancing(fine, ConstantWeight(fine)).passed);
  CHECK(SatisfiesLinkProductCriterion(fine, X("5"), {X("4"), X("14")}, fan));
  CHECK_THROWS_AS(StarSubdivide(fan, fan.cone_of({X("4")}), X("5")), InvalidInput);
  CHECK_THROWS_AS(StarSubdivide(fan, c, X("14")), InvalidInput);

  const MinkowskiWeight pulled = PullBackWeight(fan, ConstantWeight(fan, 3), fine,
                                                {X("4"), X("14")}, X("5"));
  CHECK(pulled.size() == 10);
  for (const auto& [cone, value] : pulled) CHECK(value == 3);
}

TEST_CASE("deletion tower of the running example") {
  const Matroid m = testing::RunningExample();
  const auto tower = DeletionTower(m, 4);
  REQUIRE(tower.size() == 4);
  CHECK(SameFan(tower[0], BergmanFan(m)));
  CHECK(tower[3].rays().size() == 5);
  CHECK(tower[3].cones(2).size() == 6);
  const auto s = m.s_set(4);
  for (size_t j = 1; j < tower.size(); ++j) {
    LabeledCone sub{X("4"), s[j - 1]};
    std::sort(sub.begin(), sub.end());
    const SimplicialFan fine = StarSubdivide(tower[j], tower[j].cone_of(sub), s[j - 1].with(4));
    CHECK(SameFan(fine, tower[j - 1]));
    CHECK(SatisfiesLinkProductCriterion(tower[j - 1], s[j - 1].with(4), sub, tower[j]));
  }
  CHECK_FALSE(SatisfiesLinkProductCriterion(tower[0], X("24"), {X("1"), X("4")}, tower[1]));
  CHECK_THROWS_AS(DeletionTower(Matroid::Uniform(1, 2), 1), InvalidInput);
}

TEST_CASE("projection") {
  const SimplicialFan fan = BergmanFan(testing::RunningExample());
  linalg::Matrix map(2, 3);
  map(0, 0) = 1;
  map(1, 1) = 1;
  map(0, 2) = 3;
  map(1, 2) = -5;
  const SimplicialFan image = Project(fan, map);
  CHECK(image.ambient_dimension() == 2);
  CHECK(image.cones(2).size() == 9);
  linalg::Matrix flat(2, 3);
  flat(0, 0) = 1;
  flat(1, 0) = 1;
  CHECK_THROWS_AS(Project(fan, flat), GenericityError);
}

TEST_CASE("property: Bergman fans are balanced with unit weights") {
  for (const auto& [name, m] : SmallCorpus()) {
    CAPTURE(name);
    const SimplicialFan fan = BergmanFan(m);
    CHECK(fan.rays().size() == m.nontrivial_flats().size());
    CHECK(fan.cones(m.degree()).size() == m.maximal_chains().size());
    CHECK(CheckBalancing(fan, ConstantWeight(fan), 2).passed);
    for (size_t r = 0; r < fan.rays().size() && m.degree() >= 2; ++r) {
      const SimplicialFan link = Link(fan, Cone{static_cast<int>(r)});
      CHECK(CheckBalancing(link, ConstantWeight(link)).passed);
    }
  }
}

TEST_CASE("property: each tower step is a star subdivision") {
  for (const auto& [name, m] : SmallCorpus()) {
    if (m.size() < 2) continue;
    CAPTURE(name);
    m.ground().for_each([&](int i) {
      if (!m.is_flat(ElementSet::Singleton(i))) return;
      const auto tower = DeletionTower(m, i);
      const auto s = m.s_set(i);
      REQUIRE(tower.size() == s.size() + 1);
      for (size_t j = 1; j < tower.size(); ++j) {
        LabeledCone sorted{ElementSet::Singleton(i), s[j - 1]};
        std::sort(sorted.begin(), sorted.end());
        const VarId fresh = s[j - 1].with(i);
        const SimplicialFan fine = StarSubdivide(tower[j], tower[j].cone_of(sorted), fresh);
        CHECK(SameFan(fine, tower[j - 1]));
        CHECK(SatisfiesLinkProductCriterion(tower[j - 1], fresh, sorted, tower[j]));
        CHECK(CheckBalancing(tower[j], ConstantWeight(tower[j])).passed);
      }
    });
  }
}

}  // namespace
}  // namespace mixedvol
