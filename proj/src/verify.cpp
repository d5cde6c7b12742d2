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

#include "verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"

namespace mixedvol {

namespace {

constexpr size_t kMaxListedFailures = 8;

std::string Braced(VarId v) { return "{" + v.label() + "}"; }

std::string Describe(const LabeledCone& c) {
  std::string s = "[";
  for (size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + Braced(c[k]);
  return s + "]";
}

// Runs `item(k)` for k in [0, count) and records the outcomes in order.
template <typename Fn>
void RecordAll(CheckResult& result, size_t count, unsigned threads, Fn&& item) {
  std::vector<std::pair<bool, std::string>> outcomes(count);
  ParallelFor(count, threads, [&](size_t k, unsigned) { outcomes[k] = item(k); });
  for (const auto& [ok, what] : outcomes) result.record(ok, what);
}

Monomial MonomialOf(const std::vector<VarId>& labels) {
  std::vector<Monomial::Factor> f;
  for (VarId v : labels) f.emplace_back(v, 1u);
  return Monomial(std::move(f));
}

Rational ConstantPart(const RationalPoly& p, const std::string& context) {
  for (const auto& [m, c] : p.term_map()) {
    Require(m.is_one(), context + ": result is not a constant; polynomial is not homogeneous");
  }
  return p.coefficient(Monomial());
}

CheckResult Named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  passed = false;
  if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Rational DegreeOf(const VolPolynomial& vol, const DerivativeMonomial& d) {
  Require(static_cast<int>(d.order()) == vol.degree,
          "degree map needs a derivative of order " + std::to_string(vol.degree));
  return ConstantPart(PartialDerivative(vol.poly, d), "degree map");
}

Rational DegreeOf(const VolPolynomial& vol, const RationalPoly& derivative) {
  Require(derivative.is_homogeneous(vol.degree),
          "degree map needs a derivative homogeneous of order " + std::to_string(vol.degree));
  return ConstantPart(ApplyDerivative(vol.poly, derivative), "degree map");
}

CheckResult CheckIncomparablePairs(const Matroid& m, const VolPolynomial& vol, unsigned threads) {
  CheckResult r = Named("incomparable-annihilators");
  // Distinct monomials stay distinct under d_F d_G, so the derivative
  // vanishes exactly when no term involves both variables.
  std::set<std::pair<VarId, VarId>> together;
  for (const auto& [mono, c] : vol.poly.term_map()) {
    const auto& f = mono.factors();
    for (size_t a = 0; a < f.size(); ++a) {
      for (size_t b = a + 1; b < f.size(); ++b) together.emplace(f[a].first, f[b].first);
    }
  }
  const auto flats = m.nontrivial_flats();
  std::vector<std::pair<Flat, Flat>> pairs;
  for (size_t a = 0; a < flats.size(); ++a) {
    for (size_t b = a + 1; b < flats.size(); ++b) {
      if (!flats[a].subset_of(flats[b]) && !flats[b].subset_of(flats[a])) {
        pairs.emplace_back(flats[a], flats[b]);
      }
    }
  }
  RecordAll(r, pairs.size(), threads, [&](size_t k) {
    const auto& [f, g] = pairs[k];
    const bool ok = !together.contains(std::minmax(f, g));
    return std::pair{ok, "d" + Braced(f) + " d" + Braced(g) + " does not annihilate"};
  });
  return r;
}

CheckResult CheckLinearRelations(const Matroid& m, const VolPolynomial& vol, unsigned threads) {
  CheckResult r = Named("linear-relations");
  const auto flats = m.nontrivial_flats();
  const auto elements = m.ground().elements();
  // L_ij = D_i - D_j with D_i = sum over flats containing i of d_F.
  std::vector<RationalPoly> images(elements.size());
  ParallelFor(elements.size(), threads, [&](size_t k, unsigned) {
    RationalPoly op;
    for (Flat f : flats) {
      if (f.contains(elements[k])) op.add_term(Monomial::Var(f), Rational(1));
    }
    images[k] = ApplyDerivative(vol.poly, op);
  });
  for (size_t a = 0; a < elements.size(); ++a) {
    for (size_t b = 0; b < elements.size(); ++b) {
      if (a == b) continue;
      r.record(images[a] == images[b], "L(" + std::to_string(elements[a]) + "," +
                                           std::to_string(elements[b]) + ") does not annihilate");
    }
  }
  return r;
}

CheckResult CheckChainNormalization(const Matroid& m, const VolPolynomial& vol, unsigned threads) {
  CheckResult r = Named("chain-normalization");
  const auto chains = m.maximal_chains();
  // On a homogeneous polynomial of degree d, a square-free derivative of
  // order d is the coefficient of the matching monomial.
  const bool homogeneous = vol.poly.is_homogeneous(m.degree());
  RecordAll(r, chains.size(), threads, [&](size_t k) {
    const Monomial mono = MonomialOf(chains[k].flats);
    const bool ok = homogeneous
                        ? vol.poly.coefficient(mono) == 1
                        : PartialDerivative(vol.poly, DerivativeMonomial(mono)) == RationalPoly(Rational(1));
    return std::pair{ok, "chain " + Describe(chains[k].flats) + " does not have degree 1"};
  });
  return r;
}

CheckResult CheckHomogeneity(const Matroid& m, const VolPolynomial& vol) {
  CheckResult r = Named("homogeneity");
  r.record(vol.degree == m.degree(), "declared degree " + std::to_string(vol.degree) +
                                         " differs from rank - 1 = " + std::to_string(m.degree()));
  r.record(vol.poly.is_homogeneous(m.degree()),
           "polynomial is not homogeneous of degree " + std::to_string(m.degree()));
  return r;
}

CheckResult CheckVariables(const Matroid& m, const VolPolynomial& vol) {
  CheckResult r = Named("variables");
  const auto flats = m.nontrivial_flats();
  const std::set<VarId> universe(flats.begin(), flats.end());
  for (VarId v : vol.poly.variables()) {
    r.record(universe.contains(v), "x" + Braced(v) + " is not a nontrivial flat");
  }
  if (r.checked == 0) r.record(true, "");
  return r;
}

CheckResult CheckBergmanBalancing(const Matroid& m, unsigned threads) {
  CheckResult r = Named("balancing");
  const SimplicialFan fan = BergmanFan(m);
  const BalancingReport b = CheckBalancing(fan, ConstantWeight(fan), threads);
  for (const auto& v : b.violations) r.record(false, "unbalanced at " + Describe(v));
  r.checked = std::max<size_t>(b.facets_checked, 1);
  return r;
}

std::vector<CheckResult> AnnihilatorCheck(const Matroid& m, const VolPolynomial& vol,
                                          unsigned threads) {
  return {CheckIncomparablePairs(m, vol, threads), CheckLinearRelations(m, vol, threads),
          CheckChainNormalization(m, vol, threads)};
}

linalg::Matrix RelationMatrix(const SimplicialFan& fan, int p) {
  const auto& targets = fan.cones(p);
  std::map<Cone, size_t> column;
  for (size_t k = 0; k < targets.size(); ++k) column.emplace(targets[k], k);
  std::vector<QVector> rows;
  if (p >= 1) {
    for (const Cone& tau : fan.cones(p - 1)) {
      const auto functionals =
          linalg::Kernel(linalg::Matrix::FromRows(fan.vectors_of(tau), fan.ambient_dimension()));
      for (const QVector& l : functionals) {
        QVector row(targets.size());
        for (size_t rho = 0; rho < fan.rays().size(); ++rho) {
          if (std::binary_search(tau.begin(), tau.end(), static_cast<int>(rho))) continue;
          Cone sigma = tau;
          sigma.insert(std::upper_bound(sigma.begin(), sigma.end(), static_cast<int>(rho)),
                       static_cast<int>(rho));
          auto it = column.find(sigma);
          if (it != column.end()) row[it->second] = linalg::Dot(l, fan.rays()[rho].vector);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return linalg::Matrix::FromRows(rows, targets.size());
}

size_t ChowDimension(const SimplicialFan& fan, int p) {
  return fan.cones(p).size() - linalg::Rank(RelationMatrix(fan, p));
}

std::vector<QVector> MinkowskiWeightBasis(const SimplicialFan& fan) {
  return linalg::Kernel(RelationMatrix(fan, fan.dimension()));
}

std::vector<ChowRank> ChowRanks(const SimplicialFan& fan, const VolPolynomial& vol,
                                unsigned threads) {
  const int d = fan.dimension();
  Require(vol.degree == d, "volume degree differs from the fan dimension");
  Require(vol.poly.is_homogeneous(d), "volume is not homogeneous of the fan dimension");
  std::vector<ChowRank> out;
  for (int p = 0; p <= d; ++p) {
    const auto& left = fan.cones(p);
    const auto& right = fan.cones(d - p);
    linalg::Matrix pairing(left.size(), right.size());
    ParallelFor(left.size(), threads, [&](size_t a, unsigned) {
      for (size_t b = 0; b < right.size(); ++b) {
        std::vector<VarId> labels = fan.labels_of(left[a]);
        const auto more = fan.labels_of(right[b]);
        labels.insert(labels.end(), more.begin(), more.end());
        // Degree-d derivative of a degree-d form: alpha! times a coefficient.
        const Monomial mono = MonomialOf(labels);
        Rational value = vol.poly.coefficient(mono);
        for (const auto& [v, e] : mono.factors()) value *= Factorial(e);
        pairing(a, b) = value;
      }
    });
    out.push_back(ChowRank{p, ChowDimension(fan, p), linalg::Rank(pairing)});
  }
  return out;
}

CheckResult ChowRankChecks(const SimplicialFan& fan, const VolPolynomial& vol, unsigned threads) {
  CheckResult r = Named("chow-ranks");
  for (const ChowRank& c : ChowRanks(fan, vol, threads)) {
    r.record(c.pairing_rank == c.dimension,
             "p=" + std::to_string(c.p) + ": pairing rank " + std::to_string(c.pairing_rank) +
                 " but dim CH^p = " + std::to_string(c.dimension));
    if (c.p == fan.dimension()) {
      r.record(c.dimension == 1, "dim CH^d = " + std::to_string(c.dimension));
    }
  }
  return r;
}

WeightDecomposition DecomposeWeight(const SimplicialFan& fan, const MinkowskiWeight& weight,
                                    const QVector& v0) {
  const int d = fan.dimension();
  Require(fan.is_pure(), "decomposition needs a pure fan");
  Require(fan.ambient_dimension() == static_cast<size_t>(d) && v0.size() == fan.ambient_dimension(),
          "decomposition needs a d-dimensional fan in Q^d");
  Require(d >= 1, "decomposition needs d >= 1");
  WeightDecomposition out;
  out.v0_label = SyntheticLabel(ElementSet{});
  Require(fan.ray_index(out.v0_label) < 0, "fan already uses the label reserved for v0");

  std::vector<Ray> rays = fan.rays();
  const int v0_index = static_cast<int>(rays.size());
  rays.push_back(Ray{out.v0_label, v0});
  std::vector<Cone> generators = fan.cones(d);
  for (const Cone& tau : fan.cones(d - 1)) {
    Cone c = tau;
    c.push_back(v0_index);
    generators.push_back(std::move(c));
  }
  try {
    out.augmented = SimplicialFan(rays, generators, fan.ambient_dimension());
  } catch (const InvalidInput&) {
    throw GenericityError("v0 lies on the span of a facet");
  }

  for (const Cone& sigma : fan.cones(d)) {
    WeightComponent part;
    part.sigma = sigma;
    std::vector<Ray> local;
    for (int r : sigma) local.push_back(fan.rays()[r]);
    local.push_back(rays.back());
    std::vector<Cone> gens;
    Cone top(d);
    for (int t = 0; t < d; ++t) top[t] = t;
    gens.push_back(top);
    for (int t = 0; t < d; ++t) {
      Cone c = top;
      c.erase(c.begin() + t);
      c.push_back(d);
      gens.push_back(std::move(c));
    }
    part.fan = SimplicialFan(std::move(local), gens, fan.ambient_dimension());
    const auto basis = MinkowskiWeightBasis(part.fan);
    Ensure(basis.size() == 1, "boundary fan of a simplicial cone must have one weight up to scale");
    const auto& maxi = part.fan.cones(d);
    const size_t own = static_cast<size_t>(
        std::find(maxi.begin(), maxi.end(), top) - maxi.begin());
    if (basis[0][own] == 0) throw GenericityError("boundary weight vanishes on its own cone");
    const Rational scale = weight.at(sigma) / basis[0][own];
    for (size_t k = 0; k < maxi.size(); ++k) part.weight[maxi[k]] = basis[0][k] * scale;
    part.balanced = CheckBalancing(part.fan, part.weight).passed;

    for (const auto& [cone, value] : part.weight) {
      const Cone global = out.augmented.cone_of(part.fan.labels_of(cone));
      out.total[global] += value;
    }
    out.parts.push_back(std::move(part));
  }

  out.sums_to_weight = true;
  for (const Cone& c : out.augmented.cones(d)) {
    auto it = out.total.find(c);
    const Rational got = it == out.total.end() ? Rational(0) : it->second;
    const bool in_fan = std::find(c.begin(), c.end(), v0_index) == c.end();
    const Rational want = in_fan ? weight.at(c) : Rational(0);
    if (got != want) out.sums_to_weight = false;
  }
  return out;
}

VerifyReport VerifyVolume(const Matroid& m, const VolPolynomial& vol, const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(CheckVariables(m, vol));
  report.checks.push_back(CheckHomogeneity(m, vol));
  const bool well_formed = report.passed();
  if (well_formed) {
    for (CheckResult& c : AnnihilatorCheck(m, vol, options.threads)) {
      report.checks.push_back(std::move(c));
    }
  }
  report.checks.push_back(CheckBergmanBalancing(m, options.threads));
  if (options.rank_checks && well_formed) {
    report.checks.push_back(ChowRankChecks(BergmanFan(m), vol, options.threads));
  }
  return report;
}

std::pair<RationalPoly, RationalPoly> SymmetricDifference(const RationalPoly& a,
                                                          const RationalPoly& b) {
  std::pair<RationalPoly, RationalPoly> out;
  for (const auto& [m, c] : a.term_map()) {
    if (b.coefficient(m) != c) out.first.add_term(m, c);
  }
  for (const auto& [m, c] : b.term_map()) {
    if (a.coefficient(m) != c) out.second.add_term(m, c);
  }
  return out;
}

CrossValidation CrossValidate(const Matroid& m, const std::vector<uint64_t>& seeds,
                              const ComputeOptions& options) {
  CrossValidation out;
  out.deletion = DeletionVolume(m);
  for (uint64_t seed : seeds) {
    const GenericVectors gv = SampleGenericVectors(m, seed, options.retry_budget);
    out.brion.push_back(BrionVolume(m, gv, options.threads));
  }
  for (size_t k = 0; k < out.brion.size() && out.agree; ++k) {
    if (out.brion[k].same_value(out.deletion)) continue;
    out.agree = false;
    const auto [only_brion, only_deletion] =
        SymmetricDifference(out.brion[k].poly, out.deletion.poly);
    std::ostringstream msg;
    msg << "brion(seed " << seeds[k] << ") differs from deletion; only in brion: "
        << ToPretty(only_brion) << "; only in deletion: " << ToPretty(only_deletion);
    out.divergence = msg.str();
  }
  out.invariants = VerifyVolume(m, out.deletion, VerifyOptions{options.threads, false});
  return out;
}

}  // namespace mixedvol
