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

#ifndef MIXEDVOL_FAN_HPP_
#define MIXEDVOL_FAN_HPP_

#include <map>
#include <set>
#include <vector>

#include "element_set.hpp"
#include "linalg.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace mixedvol {

struct Ray {
  VarId label;
  QVector vector;
};

/// Sorted indices into SimplicialFan::rays().
using Cone = std::vector<int>;
using LabeledCone = std::vector<VarId>;  // sorted labels

/// Simplicial fan with exact ray vectors. All faces are materialized.
class SimplicialFan {
 public:
  /// The zero fan (only the origin) in Q^ambient.
  explicit SimplicialFan(size_t ambient = 0);

  /// Builds the face closure of `generators`. Throws InvalidInput on
  /// duplicate labels, zero or mis-sized vectors, bad indices, or a
  /// generator whose rays are linearly dependent.
  SimplicialFan(std::vector<Ray> rays, const std::vector<Cone>& generators, size_t ambient);

  const std::vector<Ray>& rays() const { return rays_; }
  size_t ambient_dimension() const { return ambient_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Cones with exactly `dim` rays, in lexicographic order of indices.
  const std::vector<Cone>& cones(int dim) const;
  std::vector<Cone> maximal_cones() const;  // inclusion-maximal
  bool is_pure() const;
  size_t cone_count() const;

  bool contains(const Cone& c) const;
  int ray_index(VarId label) const;  // -1 when absent
  Cone cone_of(const LabeledCone& labels) const;  // throws if not a cone
  LabeledCone labels_of(const Cone& c) const;
  std::vector<QVector> vectors_of(const Cone& c) const;
  std::set<LabeledCone> labeled_cones() const;

 private:
  std::vector<Ray> rays_;
  size_t ambient_ = 0;
  std::vector<std::vector<Cone>> by_dim_;
  std::set<Cone> all_;
  std::map<VarId, int> index_;
};

/// Same rays (labels and vectors) and same cones, compared by label.
bool SameFan(const SimplicialFan& a, const SimplicialFan& b);

/// Values on the maximal cones of a pure fan.
using MinkowskiWeight = std::map<Cone, Rational>;
MinkowskiWeight ConstantWeight(const SimplicialFan& fan, const Rational& value = 1);

/// rep(e_F) in Q^n, realizing R^E / e_E by dropping the largest element's
/// coordinate (e_max = -(sum of the other basis vectors)).
QVector BergmanRayVector(ElementSet ground, ElementSet flat);

SimplicialFan BergmanFan(const Matroid& m);

/// Star subdivision at `cone` (at least 2 rays); the new ray is the sum of
/// the cone's ray vectors and is appended last.
SimplicialFan StarSubdivide(const SimplicialFan& fan, const Cone& cone, VarId new_label);

/// Weight on a star subdivision induced from the coarse fan: each new
/// maximal cone inherits the weight of the cone it subdivides.
MinkowskiWeight PullBackWeight(const SimplicialFan& coarse, const MinkowskiWeight& weight,
                               const SimplicialFan& fine, const LabeledCone& subdivided,
                               VarId new_label);

/// Faces of cones containing `cone`, in the ambient space.
SimplicialFan Star(const SimplicialFan& fan, const Cone& cone);

/// sigma \ cone over cones sigma containing `cone`, with vectors mapped to
/// Q^ambient / span(cone) through a fixed basis of functionals vanishing
/// on the cone.
SimplicialFan Link(const SimplicialFan& fan, const Cone& cone);

/// Image of the fan under a linear map given as a (target x ambient)
/// matrix. Throws GenericityError if some cone loses independence.
SimplicialFan Project(const SimplicialFan& fan, const linalg::Matrix& map);

struct Coface {
  Cone cone;
  int opposite_ray;
};
struct Adjacency {
  Cone facet;  // a (d-1)-cone
  std::vector<Coface> cofaces;
};
std::vector<Adjacency> Codim1Adjacency(const SimplicialFan& fan);

struct BalancingReport {
  bool passed = true;
  size_t facets_checked = 0;
  std::vector<LabeledCone> violations;
};
/// At every (d-1)-cone tau, sum of w_sigma * (ray of sigma opposite tau)
/// must lie in span(tau); decided by exact rank comparison.
BalancingReport CheckBalancing(const SimplicialFan& fan, const MinkowskiWeight& weight,
                               unsigned threads = 1);

/// Delta_0 = Bergman fan of M, ..., Delta_k, where Delta_j merges F_l with
/// F_l u {i} for l <= j (F_l the ordered S_i). The merged ray keeps label
/// F_l and vector rep(e_{F_l}). Requires {i} to be a flat.
std::vector<SimplicialFan> DeletionTower(const Matroid& m, int element);

/// Checks that, as abstract fans, Link_fine(new_ray) equals the product of
/// the boundary of `subdivided` with Link_coarse(subdivided).
bool SatisfiesLinkProductCriterion(const SimplicialFan& fine, VarId new_ray,
                                   const LabeledCone& subdivided, const SimplicialFan& coarse);

}  // namespace mixedvol

#endif  // MIXEDVOL_FAN_HPP_
