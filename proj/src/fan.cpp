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

#include "fan.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "errors.hpp"
#include "parallel.hpp"

namespace mixedvol {

namespace {

std::string Describe(const LabeledCone& c) {
  std::string out = "<";
  for (size_t k = 0; k < c.size(); ++k) {
    if (k) out += " ";
    out += "{" + c[k].label() + "}";
  }
  return out + ">";
}

bool IsSubCone(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Restriction of `fan` to the faces of `generators`, keeping only the rays
// that occur, in their original order.
SimplicialFan Subfan(const SimplicialFan& fan, const std::vector<Cone>& generators) {
  std::vector<int> used;
  for (const Cone& c : generators) used.insert(used.end(), c.begin(), c.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<int, int> remap;
  std::vector<Ray> rays;
  for (int r : used) {
    remap[r] = static_cast<int>(rays.size());
    rays.push_back(fan.rays()[r]);
  }
  std::vector<Cone> gens;
  for (const Cone& c : generators) {
    Cone g;
    for (int r : c) g.push_back(remap.at(r));
    gens.push_back(std::move(g));
  }
  return SimplicialFan(std::move(rays), gens, fan.ambient_dimension());
}

}  // namespace

SimplicialFan::SimplicialFan(size_t ambient) : ambient_(ambient) {
  by_dim_.push_back({Cone{}});
  all_.insert(Cone{});
}

SimplicialFan::SimplicialFan(std::vector<Ray> rays, const std::vector<Cone>& generators,
                             size_t ambient)
    : rays_(std::move(rays)), ambient_(ambient) {
  for (size_t k = 0; k < rays_.size(); ++k) {
    const Ray& r = rays_[k];
    Require(r.vector.size() == ambient_, "ray {" + r.label.label() + "} has the wrong dimension");
    Require(std::any_of(r.vector.begin(), r.vector.end(), [](const Rational& x) { return x != 0; }),
            "ray {" + r.label.label() + "} has a zero vector");
    Require(index_.emplace(r.label, static_cast<int>(k)).second,
            "duplicate ray label {" + r.label.label() + "}");
  }
  all_.insert(Cone{});
  for (Cone g : generators) {
    std::sort(g.begin(), g.end());
    Require(std::adjacent_find(g.begin(), g.end()) == g.end(), "cone repeats a ray");
    for (int r : g) {
      Require(r >= 0 && static_cast<size_t>(r) < rays_.size(), "cone refers to an unknown ray");
    }
    if (all_.contains(g)) continue;
    const auto vecs = vectors_of(g);
    Require(linalg::Rank(linalg::Matrix::FromColumns(vecs, ambient_)) == g.size(),
            "cone " + Describe(labels_of(g)) + " is not simplicial");
    const size_t k = g.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
      Cone face;
      for (size_t t = 0; t < k; ++t) {
        if (mask & (uint64_t{1} << t)) face.push_back(g[t]);
      }
      all_.insert(std::move(face));
    }
  }
  size_t top = 0;
  for (const Cone& c : all_) top = std::max(top, c.size());
  by_dim_.assign(top + 1, {});
  for (const Cone& c : all_) by_dim_[c.size()].push_back(c);
}

const std::vector<Cone>& SimplicialFan::cones(int dim) const {
  static const std::vector<Cone> kNone;
  if (dim < 0 || dim > dimension()) return kNone;
  return by_dim_[dim];
}

std::vector<Cone> SimplicialFan::maximal_cones() const {
  std::vector<Cone> out;
  for (int d = dimension(); d >= 0; --d) {
    for (const Cone& c : by_dim_[d]) {
      const bool covered = std::any_of(out.begin(), out.end(),
                                       [&](const Cone& m) { return IsSubCone(c, m); });
      if (!covered) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialFan::is_pure() const {
  const auto maxi = maximal_cones();
  return std::all_of(maxi.begin(), maxi.end(), [&](const Cone& c) {
    return static_cast<int>(c.size()) == dimension();
  });
}

size_t SimplicialFan::cone_count() const { return all_.size(); }

bool SimplicialFan::contains(const Cone& c) const { return all_.contains(c); }

int SimplicialFan::ray_index(VarId label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

Cone SimplicialFan::cone_of(const LabeledCone& labels) const {
  Cone c;
  for (VarId l : labels) {
    const int k = ray_index(l);
    Require(k >= 0, "no ray labeled {" + l.label() + "}");
    c.push_back(k);
  }
  std::sort(c.begin(), c.end());
  Require(contains(c), "not a cone of the fan: " + Describe(labels));
  return c;
}

LabeledCone SimplicialFan::labels_of(const Cone& c) const {
  LabeledCone out;
  for (int r : c) out.push_back(rays_[r].label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVector> SimplicialFan::vectors_of(const Cone& c) const {
  std::vector<QVector> out;
  for (int r : c) out.push_back(rays_[r].vector);
  return out;
}

std::set<LabeledCone> SimplicialFan::labeled_cones() const {
  std::set<LabeledCone> out;
  for (const Cone& c : all_) out.insert(labels_of(c));
  return out;
}

bool SameFan(const SimplicialFan& a, const SimplicialFan& b) {
  if (a.ambient_dimension() != b.ambient_dimension()) return false;
  if (a.rays().size() != b.rays().size()) return false;
  for (const Ray& r : a.rays()) {
    const int k = b.ray_index(r.label);
    if (k < 0 || b.rays()[k].vector != r.vector) return false;
  }
  return a.labeled_cones() == b.labeled_cones();
}

MinkowskiWeight ConstantWeight(const SimplicialFan& fan, const Rational& value) {
  MinkowskiWeight w;
  for (const Cone& c : fan.maximal_cones()) w.emplace(c, value);
  return w;
}

QVector BergmanRayVector(ElementSet ground, ElementSet flat) {
  const std::vector<int> elems = ground.elements();
  const size_t n = elems.size() - 1;
  QVector v(n);
  for (size_t k = 0; k < n; ++k) {
    if (flat.contains(elems[k])) v[k] += 1;
  }
  if (flat.contains(elems.back())) {
    for (size_t k = 0; k < n; ++k) v[k] -= 1;
  }
  return v;
}

SimplicialFan BergmanFan(const Matroid& m) {
  const auto flats = m.nontrivial_flats();
  const size_t ambient = static_cast<size_t>(m.size() - 1);
  if (flats.empty()) return SimplicialFan(ambient);
  std::vector<Ray> rays;
  std::map<Flat, int> index;
  for (Flat f : flats) {
    index[f] = static_cast<int>(rays.size());
    rays.push_back(Ray{f, BergmanRayVector(m.ground(), f)});
  }
  std::vector<Cone> gens;
  for (const Chain& ch : m.maximal_chains()) {
    Cone c;
    for (Flat f : ch.flats) c.push_back(index.at(f));
    gens.push_back(std::move(c));
  }
  return SimplicialFan(std::move(rays), gens, ambient);
}

SimplicialFan StarSubdivide(const SimplicialFan& fan, const Cone& cone, VarId new_label) {
  Require(fan.contains(cone), "cone to subdivide is not in the fan");
  Require(cone.size() >= 2, "star subdivision needs a cone with at least two rays");
  Require(fan.ray_index(new_label) < 0, "label {" + new_label.label() + "} already used");
  std::vector<Ray> rays = fan.rays();
  QVector sum(fan.ambient_dimension());
  for (int r : cone) {
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += rays[r].vector[k];
  }
  const int fresh = static_cast<int>(rays.size());
  rays.push_back(Ray{new_label, std::move(sum)});
  std::vector<Cone> gens;
  for (const Cone& sigma : fan.maximal_cones()) {
    if (!IsSubCone(cone, sigma)) {
      gens.push_back(sigma);
      continue;
    }
    for (int t : cone) {
      Cone piece;
      for (int r : sigma) {
        if (r != t) piece.push_back(r);
      }
      piece.push_back(fresh);
      gens.push_back(std::move(piece));
    }
  }
  return SimplicialFan(std::move(rays), gens, fan.ambient_dimension());
}

MinkowskiWeight PullBackWeight(const SimplicialFan& coarse, const MinkowskiWeight& weight,
                               const SimplicialFan& fine, const LabeledCone& subdivided,
                               VarId new_label) {
  MinkowskiWeight out;
  for (const Cone& c : fine.cones(fine.dimension())) {
    LabeledCone labels = fine.labels_of(c);
    auto it = std::find(labels.begin(), labels.end(), new_label);
    if (it != labels.end()) {
      labels.erase(it);
      for (VarId l : subdivided) {
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
      }
      std::sort(labels.begin(), labels.end());
    }
    const auto w = weight.find(coarse.cone_of(labels));
    Require(w != weight.end(), "weight has no value on " + Describe(labels));
    out.emplace(c, w->second);
  }
  return out;
}

SimplicialFan Star(const SimplicialFan& fan, const Cone& cone) {
  Require(fan.contains(cone), "cone is not in the fan");
  std::vector<Cone> gens;
  for (const Cone& sigma : fan.maximal_cones()) {
    if (IsSubCone(cone, sigma)) gens.push_back(sigma);
  }
  return Subfan(fan, gens);
}

SimplicialFan Link(const SimplicialFan& fan, const Cone& cone) {
  Require(fan.contains(cone), "cone is not in the fan");
  const auto functionals =
      linalg::Kernel(linalg::Matrix::FromRows(fan.vectors_of(cone), fan.ambient_dimension()));
  const size_t quotient = functionals.size();
  std::vector<Cone> rests;
  std::set<int> used;
  for (const Cone& sigma : fan.maximal_cones()) {
    if (!IsSubCone(cone, sigma)) continue;
    Cone rest;
    std::set_difference(sigma.begin(), sigma.end(), cone.begin(), cone.end(),
                        std::back_inserter(rest));
    used.insert(rest.begin(), rest.end());
    rests.push_back(std::move(rest));
  }
  std::vector<Ray> rays;
  std::map<int, int> remap;
  for (int r : used) {
    QVector v(quotient);
    for (size_t k = 0; k < quotient; ++k) v[k] = linalg::Dot(functionals[k], fan.rays()[r].vector);
    remap[r] = static_cast<int>(rays.size());
    rays.push_back(Ray{fan.rays()[r].label, std::move(v)});
  }
  for (Cone& c : rests) {
    for (int& r : c) r = remap.at(r);
  }
  return SimplicialFan(std::move(rays), rests, quotient);
}

SimplicialFan Project(const SimplicialFan& fan, const linalg::Matrix& map) {
  Require(map.cols() == fan.ambient_dimension(), "projection has the wrong source dimension");
  std::vector<Ray> rays;
  for (const Ray& r : fan.rays()) {
    QVector v = map * r.vector;
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
      throw GenericityError("projection sends ray {" + r.label.label() + "} to zero");
    }
    rays.push_back(Ray{r.label, std::move(v)});
  }
  const auto gens = fan.maximal_cones();
  for (const Cone& c : gens) {
    std::vector<QVector> vecs;
    for (int r : c) vecs.push_back(rays[r].vector);
    if (linalg::Rank(linalg::Matrix::FromColumns(vecs, map.rows())) != c.size()) {
      throw GenericityError("projection collapses cone " + Describe(fan.labels_of(c)));
    }
  }
  return SimplicialFan(std::move(rays), gens, map.rows());
}

std::vector<Adjacency> Codim1Adjacency(const SimplicialFan& fan) {
  Require(fan.is_pure(), "adjacency needs a pure fan");
  const int d = fan.dimension();
  std::map<Cone, std::vector<Coface>> table;
  if (d < 1) return {};
  for (const Cone& facet : fan.cones(d - 1)) table[facet];
  for (const Cone& sigma : fan.cones(d)) {
    for (size_t t = 0; t < sigma.size(); ++t) {
      Cone facet = sigma;
      facet.erase(facet.begin() + static_cast<long>(t));
      table[facet].push_back(Coface{sigma, sigma[t]});
    }
  }
  std::vector<Adjacency> out;
  out.reserve(table.size());
  for (auto& [facet, cofaces] : table) out.push_back(Adjacency{facet, std::move(cofaces)});
  return out;
}

BalancingReport CheckBalancing(const SimplicialFan& fan, const MinkowskiWeight& weight,
                               unsigned threads) {
  const auto adjacency = Codim1Adjacency(fan);
  for (const Cone& sigma : fan.cones(fan.dimension())) {
    Require(weight.contains(sigma), "weight is missing a maximal cone");
  }
  std::vector<char> ok(adjacency.size(), 1);
  ParallelFor(adjacency.size(), threads, [&](size_t k, unsigned) {
    const Adjacency& a = adjacency[k];
    QVector sum(fan.ambient_dimension());
    for (const Coface& f : a.cofaces) {
      const Rational& w = weight.at(f.cone);
      const QVector& v = fan.rays()[f.opposite_ray].vector;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += w * v[i];
    }
    auto vecs = fan.vectors_of(a.facet);
    const size_t base = vecs.size();  // rays of a cone are independent
    vecs.push_back(std::move(sum));
    ok[k] = linalg::Rank(linalg::Matrix::FromColumns(vecs, fan.ambient_dimension())) == base;
  });
  BalancingReport report;
  report.facets_checked = adjacency.size();
  for (size_t k = 0; k < adjacency.size(); ++k) {
    if (!ok[k]) {
      report.passed = false;
      report.violations.push_back(fan.labels_of(adjacency[k].facet));
    }
  }
  return report;
}

std::vector<SimplicialFan> DeletionTower(const Matroid& m, int element) {
  Require(m.size() >= 2, "deletion tower needs at least two elements");
  const auto s = m.s_set(element);  // validates that {i} is a flat
  const auto flats = m.nontrivial_flats();
  const auto chains = m.maximal_chains();
  std::vector<SimplicialFan> tower;
  tower.push_back(BergmanFan(m));
  for (size_t j = 1; j <= s.size(); ++j) {
    // Class representative of each nontrivial flat.
    std::map<Flat, Flat> rep;
    for (Flat f : flats) rep[f] = f;
    for (size_t l = 0; l < j; ++l) rep[s[l].with(element)] = s[l];
    std::vector<Ray> rays;
    std::map<Flat, int> index;
    for (Flat f : flats) {
      if (rep[f] != f) continue;
      index[f] = static_cast<int>(rays.size());
      rays.push_back(Ray{f, BergmanRayVector(m.ground(), f)});
    }
    std::vector<Cone> gens;
    for (const Chain& ch : chains) {
      Cone c;
      for (Flat f : ch.flats) c.push_back(index.at(rep[f]));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      gens.push_back(std::move(c));
    }
    tower.emplace_back(std::move(rays), gens, static_cast<size_t>(m.size() - 1));
  }
  return tower;
}

bool SatisfiesLinkProductCriterion(const SimplicialFan& fine, VarId new_ray,
                                   const LabeledCone& subdivided, const SimplicialFan& coarse) {
  const int r = fine.ray_index(new_ray);
  if (r < 0) return false;
  const SimplicialFan fine_link = Link(fine, Cone{r});
  const SimplicialFan coarse_link = Link(coarse, coarse.cone_of(subdivided));
  std::set<LabeledCone> product;
  const size_t j = subdivided.size();
  for (uint64_t mask = 0; mask + 1 < (uint64_t{1} << j); ++mask) {  // proper faces
    for (const LabeledCone& b : coarse_link.labeled_cones()) {
      LabeledCone c = b;
      for (size_t t = 0; t < j; ++t) {
        if (mask & (uint64_t{1} << t)) c.push_back(subdivided[t]);
      }
      std::sort(c.begin(), c.end());
      product.insert(std::move(c));
    }
  }
  return fine_link.labeled_cones() == product;
}

}  // namespace mixedvol
