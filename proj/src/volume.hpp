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

#ifndef MIXEDVOL_VOLUME_HPP_
#define MIXEDVOL_VOLUME_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fan.hpp"
#include "linalg.hpp"
#include "matroid.hpp"
#include "poly.hpp"

namespace mixedvol {

inline constexpr int kDefaultRetryBudget = 8;
inline constexpr int64_t kInitialCoordinateBound = 16;

struct ComputeOptions {
  unsigned threads = 1;
  int retry_budget = kDefaultRetryBudget;
};

/// The mixed volume together with its degree and variable universe.
struct VolPolynomial {
  RationalPoly poly;
  int degree = 0;
  std::vector<VarId> universe;  // sorted
  std::string method;
  std::optional<uint64_t> seed;

  bool same_value(const VolPolynomial& o) const {
    return degree == o.degree && poly == o.poly;
  }
};

// ---------------------------------------------------------------------------
// Determinant (Brion) formula

/// v_1..v_{n+1} in Q^{d-1} summing to zero, certified so that every maximal
/// chain has all cofactors a_t nonzero.
struct GenericVectors {
  uint64_t seed = 0;
  int64_t bound = 0;
  int attempts = 0;
  std::vector<int> elements;     // ascending ground elements
  std::vector<QVector> vectors;  // vectors[k] belongs to elements[k]
  size_t certified_chains = 0;

  QVector sum_over(ElementSet flat) const;  // v_F
};

/// Samples integer coordinates in [-B, B] from a seeded generator, with
/// v_{n+1} = -(sum of the others). A degenerate draw is retried with the
/// next sub-seed and a doubled bound; GenericityError after `retry_budget`
/// retries.
GenericVectors SampleGenericVectors(const Matroid& m, uint64_t seed,
                                    int retry_budget = kDefaultRetryBudget);

/// Certifies caller-supplied vectors (one per ground element, ascending).
/// InvalidInput if sizes are wrong or they do not sum to zero;
/// GenericityError if some chain has a zero cofactor.
GenericVectors CertifyGenericVectors(const Matroid& m, std::vector<QVector> vectors,
                                     uint64_t seed = 0);

struct ChainMatrix {
  Chain chain;
  linalg::Matrix columns;          // (d-1) x d, column t = v_{F_t}
  std::vector<Rational> cofactors;  // a_1..a_d
  Rational scale;                   // c = d! a_1 ... a_d
};
ChainMatrix BuildChainMatrix(const GenericVectors& gv, const Chain& chain);

/// Sum over maximal chains of (a_1 x_{F_1} + ... + a_d x_{F_d})^d / c.
VolPolynomial BrionVolume(const Matroid& m, const GenericVectors& gv, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Evaluation formula on a fan in Q^d

/// Signed minors X_0..X_d of [v0, v_1, ..., v_d].
std::vector<Rational> SignedMinors(const std::vector<QVector>& cone_vectors, const QVector& v0);

/// Sum over maximal cones of (w/d!) (sum X_i x_i)^d / (X_1 ... X_d). The fan
/// must be pure of dimension d in Q^d; the weight must be balanced
/// (InvalidInput otherwise) and v0 generic (GenericityError otherwise).
VolPolynomial EvaluationVolume(const SimplicialFan& fan, const MinkowskiWeight& weight,
                               const QVector& v0, unsigned threads = 1);

/// A linear map to Q^d and a vector v0 under which every maximal cone stays
/// simplicial and has all signed minors nonzero.
struct GenericProjection {
  linalg::Matrix map;
  QVector v0;
  uint64_t seed = 0;
  int64_t bound = 0;
};
GenericProjection SampleProjection(const SimplicialFan& fan, uint64_t seed,
                                   int retry_budget = kDefaultRetryBudget);

/// Projects with SampleProjection and evaluates. Identity map when the fan
/// already lives in Q^d.
VolPolynomial EvaluationVolumeProjected(const SimplicialFan& fan, const MinkowskiWeight& weight,
                                        uint64_t seed, const ComputeOptions& options = {});

// ---------------------------------------------------------------------------
// Star subdivision operator and deletion recursion

/// Volume of the star subdivision at the 2-cone {p, q} with new ray r:
/// vol - sum_{m=2..d} (z^m/m!) sum_{a+b=m, a,b>=1} d_p^a d_q^b vol, with
/// z = x_r - x_p - x_q substituted after differentiation.
VolPolynomial SubdivisionOperator(const VolPolynomial& vol, VarId p, VarId q, VarId r);

/// Same for a cone with j >= 2 rays:
/// 1 - (-1)^j sum_{m=j..d} (z^m/m!) sum_{all a_t>=1, sum a=m} prod d_t^{a_t}.
VolPolynomial SubdivisionOperatorGeneral(const VolPolynomial& vol, const std::vector<VarId>& rays,
                                         VarId r);

/// b_G = [j in G] - [i in G] for closures G of nontrivial flats of M \ i.
struct BCoefficients {
  int i = 0;
  int j = 0;
  std::map<Flat, Rational> b;  // keyed by the closure in M
};
/// j defaults to min(E \ i). Requires {i} to be a flat and |E| >= 2.
BCoefficients ComputeBCoefficients(const Matroid& m, int i, std::optional<int> j = {});

/// Vol_{M\i}(x_G -> x_closure(G) + b x_i). Asserts the annihilating
/// derivative and the x_i = 0 initial condition.
VolPolynomial LiftNonColoop(const Matroid& m, int i, const VolPolynomial& minor_vol,
                            const BCoefficients& b);

/// Integral of Vol_{M\i}(x + b x_i) in x_i plus integral of
/// Vol_{M\i}(x - b x_{E\i}) in x_{E\i}. Asserts both annihilating
/// derivatives and the linear part in the new variables.
VolPolynomial LiftColoop(const Matroid& m, int i, const VolPolynomial& minor_vol,
                         const BCoefficients& b);

/// Intermediate values of one deletion step (the top level of the recursion).
struct DeletionTrace {
  int element = 0;
  bool is_flat = false;
  bool is_coloop = false;
  std::vector<Flat> s_set;
  VolPolynomial minor;
  /// tower[j] = Vol of Delta_j for j = 0..k (tower[0] is the result).
  std::vector<VolPolynomial> tower;
};

/// Recursive deletion computation. The pivot is max(E) unless `pivot` is
/// given, which then applies to the top level only.
VolPolynomial DeletionVolume(const Matroid& m, DeletionTrace* trace = nullptr,
                             std::optional<int> pivot = {});

}  // namespace mixedvol

#endif  // MIXEDVOL_VOLUME_HPP_
