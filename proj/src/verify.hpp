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

#ifndef MIXEDVOL_VERIFY_HPP_
#define MIXEDVOL_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fan.hpp"
#include "matroid.hpp"
#include "poly.hpp"
#include "volume.hpp"

namespace mixedvol {

struct CheckResult {
  std::string name;
  bool passed = true;
  size_t checked = 0;
  std::vector<std::string> failures;  // first few only

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// The degree map: D applied to vol, which must be a constant. D must be
/// homogeneous of order vol.degree (InvalidInput otherwise).
Rational DegreeOf(const VolPolynomial& vol, const DerivativeMonomial& d);
Rational DegreeOf(const VolPolynomial& vol, const RationalPoly& derivative);

/// d_F d_G vol = 0 for incomparable nontrivial flats.
CheckResult CheckIncomparablePairs(const Matroid& m, const VolPolynomial& vol, unsigned threads = 1);
/// L_ij vol = 0 with L_ij = sum_F ([i in F] - [j in F]) d_F, for i != j.
CheckResult CheckLinearRelations(const Matroid& m, const VolPolynomial& vol, unsigned threads = 1);
/// Every maximal chain monomial has degree 1.
CheckResult CheckChainNormalization(const Matroid& m, const VolPolynomial& vol,
                                    unsigned threads = 1);
CheckResult CheckHomogeneity(const Matroid& m, const VolPolynomial& vol);
CheckResult CheckVariables(const Matroid& m, const VolPolynomial& vol);
CheckResult CheckBergmanBalancing(const Matroid& m, unsigned threads = 1);

/// The three annihilator checks.
std::vector<CheckResult> AnnihilatorCheck(const Matroid& m, const VolPolynomial& vol,
                                          unsigned threads = 1);

// ---------------------------------------------------------------------------
// Chow ring dimensions

/// Rows are the relation vectors l(v_rho) over p-cones tau + rho, one per
/// (p-1)-cone tau and basis functional l vanishing on tau. Columns follow
/// fan.cones(p).
linalg::Matrix RelationMatrix(const SimplicialFan& fan, int p);
size_t ChowDimension(const SimplicialFan& fan, int p);
/// Basis of the Minkowski weights on the maximal cones (kernel of the
/// top-degree relations).
std::vector<QVector> MinkowskiWeightBasis(const SimplicialFan& fan);

struct ChowRank {
  int p = 0;
  size_t dimension = 0;     // from the relation system
  size_t pairing_rank = 0;  // rank of the degree pairing CH^p x CH^{d-p}
};
std::vector<ChowRank> ChowRanks(const SimplicialFan& fan, const VolPolynomial& vol,
                                unsigned threads = 1);
CheckResult ChowRankChecks(const SimplicialFan& fan, const VolPolynomial& vol,
                           unsigned threads = 1);

// ---------------------------------------------------------------------------
// Weight decomposition

struct WeightComponent {
  Cone sigma;            // maximal cone of the input fan
  SimplicialFan fan;     // sigma plus tau + v0 for the facets tau of sigma
  MinkowskiWeight weight;
  bool balanced = false;
};
struct WeightDecomposition {
  VarId v0_label;
  SimplicialFan augmented;
  std::vector<WeightComponent> parts;
  MinkowskiWeight total;  // on the augmented fan
  bool sums_to_weight = false;
};
/// Requires a pure d-fan in Q^d and v0 off every facet hyperplane
/// (GenericityError otherwise).
WeightDecomposition DecomposeWeight(const SimplicialFan& fan, const MinkowskiWeight& weight,
                                    const QVector& v0);

// ---------------------------------------------------------------------------
// Full verification and cross-validation

struct VerifyOptions {
  unsigned threads = 1;
  bool rank_checks = false;
};
VerifyReport VerifyVolume(const Matroid& m, const VolPolynomial& vol,
                          const VerifyOptions& options = {});

/// Terms of a missing from b (or with another coefficient) and vice versa.
std::pair<RationalPoly, RationalPoly> SymmetricDifference(const RationalPoly& a,
                                                          const RationalPoly& b);

struct CrossValidation {
  VolPolynomial deletion;
  std::vector<VolPolynomial> brion;  // one per seed
  bool agree = true;
  std::string divergence;  // first divergence, empty when all agree
  VerifyReport invariants;
  bool passed() const { return agree && invariants.passed(); }
};
CrossValidation CrossValidate(const Matroid& m, const std::vector<uint64_t>& seeds,
                              const ComputeOptions& options = {});

}  // namespace mixedvol

#endif  // MIXEDVOL_VERIFY_HPP_
