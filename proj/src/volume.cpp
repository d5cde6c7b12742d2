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

#include "volume.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "errors.hpp"
#include "parallel.hpp"

namespace mixedvol {

namespace {

uint64_t SplitMix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Integer uniform on [-bound, bound]. Written out instead of using
// std::uniform_int_distribution so the stream is identical across standard
// library implementations.
class CoordinateSampler {
 public:
  CoordinateSampler(uint64_t seed, int attempt, int64_t bound)
      : rng_(SplitMix(seed ^ SplitMix(static_cast<uint64_t>(attempt) + 1))), bound_(bound) {}
  Rational next() {
    const uint64_t span = static_cast<uint64_t>(2 * bound_ + 1);
    return Rational(static_cast<long>(static_cast<int64_t>(rng_() % span) - bound_));
  }

 private:
  std::mt19937_64 rng_;
  int64_t bound_;
};

int64_t BoundForAttempt(int attempt) { return kInitialCoordinateBound << std::min(attempt, 40); }

RationalPoly LinearForm(const std::vector<VarId>& vars, const std::vector<Rational>& coeffs) {
  RationalPoly form;
  for (size_t t = 0; t < vars.size(); ++t) form.add_term(Monomial::Var(vars[t]), coeffs[t]);
  return form;
}

// Deterministic merge of per-worker partial sums.
RationalPoly SumInParallel(size_t count, unsigned threads,
                           const std::function<RationalPoly(size_t)>& term) {
  const unsigned workers = WorkerCount(threads, count);
  std::vector<RationalPoly> partial(workers);
  ParallelFor(count, workers, [&](size_t k, unsigned w) { partial[w] += term(k); });
  RationalPoly total;
  for (const RationalPoly& p : partial) total += p;
  return total;
}

std::vector<VarId> Sorted(std::set<VarId> s) { return {s.begin(), s.end()}; }

}  // namespace

QVector GenericVectors::sum_over(ElementSet flat) const {
  QVector v(vectors.empty() ? 0 : vectors.front().size());
  for (size_t k = 0; k < elements.size(); ++k) {
    if (!flat.contains(elements[k])) continue;
    for (size_t c = 0; c < v.size(); ++c) v[c] += vectors[k][c];
  }
  return v;
}

ChainMatrix BuildChainMatrix(const GenericVectors& gv, const Chain& chain) {
  const size_t d = chain.flats.size();
  ChainMatrix cm;
  cm.chain = chain;
  std::vector<QVector> cols;
  for (Flat f : chain.flats) cols.push_back(gv.sum_over(f));
  cm.columns = linalg::Matrix::FromColumns(cols, d == 0 ? 0 : d - 1);
  // Cofactor expansion of det [x_{F_1} ... x_{F_d}; A] along the first row.
  cm.scale = Factorial(static_cast<unsigned>(d));
  for (size_t t = 0; t < d; ++t) {
    Rational a = linalg::Determinant(cm.columns.WithoutColumn(t));
    if (t % 2 == 1) a = -a;
    cm.scale *= a;
    cm.cofactors.push_back(std::move(a));
  }
  return cm;
}

GenericVectors CertifyGenericVectors(const Matroid& m, std::vector<QVector> vectors,
                                     uint64_t seed) {
  const size_t dim = m.degree() >= 1 ? static_cast<size_t>(m.degree() - 1) : 0;
  Require(vectors.size() == static_cast<size_t>(m.size()), "need one vector per ground element");
  QVector total(dim);
  for (const QVector& v : vectors) {
    Require(v.size() == dim, "generic vectors must have dimension d-1 = " + std::to_string(dim));
    for (size_t c = 0; c < dim; ++c) total[c] += v[c];
  }
  Require(std::all_of(total.begin(), total.end(), [](const Rational& x) { return x == 0; }),
          "generic vectors must sum to zero");
  GenericVectors gv;
  gv.seed = seed;
  gv.elements = m.ground().elements();
  gv.vectors = std::move(vectors);
  for (const Chain& ch : m.maximal_chains()) {
    const ChainMatrix cm = BuildChainMatrix(gv, ch);
    for (const Rational& a : cm.cofactors) {
      if (a == 0) throw GenericityError("vectors are not generic: a chain has a zero cofactor");
    }
    ++gv.certified_chains;
  }
  return gv;
}

GenericVectors SampleGenericVectors(const Matroid& m, uint64_t seed, int retry_budget) {
  const size_t dim = m.degree() >= 1 ? static_cast<size_t>(m.degree() - 1) : 0;
  const size_t n = static_cast<size_t>(m.size());
  for (int attempt = 0; attempt <= retry_budget; ++attempt) {
    const int64_t bound = BoundForAttempt(attempt);
    CoordinateSampler sample(seed, attempt, bound);
    std::vector<QVector> vectors(n, QVector(dim));
    for (size_t k = 0; k + 1 < n; ++k) {
      for (size_t c = 0; c < dim; ++c) {
        vectors[k][c] = sample.next();
        vectors[n - 1][c] -= vectors[k][c];
      }
    }
    try {
      GenericVectors gv = CertifyGenericVectors(m, std::move(vectors), seed);
      gv.bound = bound;
      gv.attempts = attempt + 1;
      return gv;
    } catch (const GenericityError&) {
      // next attempt
    }
  }
  throw GenericityError("no generic vectors found within the retry budget of " +
                        std::to_string(retry_budget));
}

VolPolynomial BrionVolume(const Matroid& m, const GenericVectors& gv, unsigned threads) {
  const auto chains = m.maximal_chains();
  const unsigned d = static_cast<unsigned>(m.degree());
  VolPolynomial out;
  out.degree = static_cast<int>(d);
  out.universe = m.nontrivial_flats();
  out.method = "brion";
  out.seed = gv.seed;
  out.poly = SumInParallel(chains.size(), threads, [&](size_t k) {
    const ChainMatrix cm = BuildChainMatrix(gv, chains[k]);
    Ensure(cm.scale != 0, "stale genericity certificate: chain with a zero cofactor");
    return PowerOfLinearForm(LinearForm(chains[k].flats, cm.cofactors), d) / cm.scale;
  });
  return out;
}

std::vector<Rational> SignedMinors(const std::vector<QVector>& cone_vectors, const QVector& v0) {
  const size_t d = v0.size();
  Require(cone_vectors.size() == d, "signed minors need d vectors in Q^d");
  std::vector<QVector> cols;
  cols.push_back(v0);
  cols.insert(cols.end(), cone_vectors.begin(), cone_vectors.end());
  const linalg::Matrix a = linalg::Matrix::FromColumns(cols, d);
  std::vector<Rational> x;
  for (size_t i = 0; i <= d; ++i) {
    Rational m = linalg::Determinant(a.WithoutColumn(i));
    if (i % 2 == 1) m = -m;
    x.push_back(std::move(m));
  }
  return x;
}

VolPolynomial EvaluationVolume(const SimplicialFan& fan, const MinkowskiWeight& weight,
                               const QVector& v0, unsigned threads) {
  const int d = fan.dimension();
  Require(fan.is_pure(), "evaluation needs a pure fan");
  Require(fan.ambient_dimension() == static_cast<size_t>(d),
          "evaluation needs a d-dimensional fan in Q^d");
  Require(v0.size() == static_cast<size_t>(d), "v0 must lie in Q^d");
  Require(CheckBalancing(fan, weight, threads).passed, "weight is not balanced");
  const auto& cones = fan.cones(d);
  VolPolynomial out;
  out.degree = d;
  out.method = "evaluation";
  for (const Ray& r : fan.rays()) out.universe.push_back(r.label);
  std::sort(out.universe.begin(), out.universe.end());
  const Rational dfact = Factorial(static_cast<unsigned>(d));
  out.poly = SumInParallel(cones.size(), threads, [&](size_t k) {
    const Cone& sigma = cones[k];
    const Rational& w = weight.at(sigma);
    if (d == 0) return RationalPoly(w);
    const auto x = SignedMinors(fan.vectors_of(sigma), v0);
    Rational denom = dfact;
    std::vector<VarId> vars;
    std::vector<Rational> coeffs;
    for (size_t i = 0; i <= static_cast<size_t>(d); ++i) {
      if (x[i] == 0) throw GenericityError("v0 is not generic for this fan");
      if (i == 0) continue;
      denom *= x[i];
      vars.push_back(fan.rays()[sigma[i - 1]].label);
      coeffs.push_back(x[i]);
    }
    return PowerOfLinearForm(LinearForm(vars, coeffs), static_cast<unsigned>(d)) * (w / denom);
  });
  return out;
}

GenericProjection SampleProjection(const SimplicialFan& fan, uint64_t seed, int retry_budget) {
  const size_t d = static_cast<size_t>(fan.dimension());
  const size_t m = fan.ambient_dimension();
  for (int attempt = 0; attempt <= retry_budget; ++attempt) {
    GenericProjection gp;
    gp.seed = seed;
    gp.bound = BoundForAttempt(attempt);
    CoordinateSampler sample(seed, attempt, gp.bound);
    gp.map = linalg::Matrix(d, m);
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < m; ++c) gp.map(r, c) = m == d ? Rational(r == c ? 1 : 0) : sample.next();
    }
    gp.v0.resize(d);
    for (size_t r = 0; r < d; ++r) gp.v0[r] = sample.next();
    try {
      const SimplicialFan projected = Project(fan, gp.map);
      for (const Cone& sigma : projected.cones(static_cast<int>(d))) {
        if (d == 0) break;
        for (const Rational& x : SignedMinors(projected.vectors_of(sigma), gp.v0)) {
          if (x == 0) throw GenericityError("degenerate v0");
        }
      }
      return gp;
    } catch (const GenericityError&) {
      // next attempt
    }
  }
  throw GenericityError("no generic projection found within the retry budget of " +
                        std::to_string(retry_budget));
}

VolPolynomial EvaluationVolumeProjected(const SimplicialFan& fan, const MinkowskiWeight& weight,
                                        uint64_t seed, const ComputeOptions& options) {
  const GenericProjection gp = SampleProjection(fan, seed, options.retry_budget);
  const SimplicialFan projected = Project(fan, gp.map);
  // Cone indices are unchanged by projection, so the weight carries over.
  VolPolynomial v = EvaluationVolume(projected, weight, gp.v0, options.threads);
  v.seed = seed;
  return v;
}

namespace {

void RequireFresh(const VolPolynomial& vol, VarId r) {
  Require(!vol.poly.variables().contains(r) &&
              std::find(vol.universe.begin(), vol.universe.end(), r) == vol.universe.end(),
          "subdivision variable x{" + r.label() + "} is already present");
}

VolPolynomial WithNewVariable(const VolPolynomial& vol, RationalPoly poly, VarId r) {
  VolPolynomial out = vol;
  out.poly = std::move(poly);
  out.universe.push_back(r);
  std::sort(out.universe.begin(), out.universe.end());
  return out;
}

}  // namespace

VolPolynomial SubdivisionOperator(const VolPolynomial& vol, VarId p, VarId q, VarId r) {
  Require(p != q, "subdivision rays must be distinct");
  RequireFresh(vol, r);
  const RationalPoly z = RationalPoly::Var(r) - RationalPoly::Var(p) - RationalPoly::Var(q);
  RationalPoly correction;
  for (int m = 2; m <= vol.degree; ++m) {
    RationalPoly inner;
    for (int a = 1; a < m; ++a) {
      inner += PartialDerivative(
          vol.poly, DerivativeMonomial(Monomial({{p, static_cast<uint32_t>(a)},
                                                 {q, static_cast<uint32_t>(m - a)}})));
    }
    if (inner.is_zero()) continue;
    correction += Power(z, static_cast<unsigned>(m)) * inner / Factorial(static_cast<unsigned>(m));
  }
  return WithNewVariable(vol, vol.poly - correction, r);
}

VolPolynomial SubdivisionOperatorGeneral(const VolPolynomial& vol, const std::vector<VarId>& rays,
                                         VarId r) {
  const size_t j = rays.size();
  Require(j >= 2, "subdivided cone needs at least two rays");
  Require(std::set<VarId>(rays.begin(), rays.end()).size() == j, "subdivision rays must be distinct");
  RequireFresh(vol, r);
  RationalPoly z = RationalPoly::Var(r);
  for (VarId p : rays) z -= RationalPoly::Var(p);
  RationalPoly series;
  std::vector<uint32_t> alpha(j);
  for (int m = static_cast<int>(j); m <= vol.degree; ++m) {
    RationalPoly inner;
    // Compositions of m into j positive parts.
    auto rec = [&](auto&& self, size_t t, int remaining) -> void {
      if (t + 1 == j) {
        alpha[t] = static_cast<uint32_t>(remaining);
        std::vector<Monomial::Factor> f;
        for (size_t s = 0; s < j; ++s) f.emplace_back(rays[s], alpha[s]);
        inner += PartialDerivative(vol.poly, DerivativeMonomial(Monomial(std::move(f))));
        return;
      }
      for (int a = 1; a <= remaining - static_cast<int>(j - t - 1); ++a) {
        alpha[t] = static_cast<uint32_t>(a);
        self(self, t + 1, remaining - a);
      }
    };
    rec(rec, 0, m);
    if (inner.is_zero()) continue;
    series += Power(z, static_cast<unsigned>(m)) * inner / Factorial(static_cast<unsigned>(m));
  }
  if (j % 2 == 1) series = -series;
  return WithNewVariable(vol, vol.poly - series, r);
}

BCoefficients ComputeBCoefficients(const Matroid& m, int i, std::optional<int> j) {
  Require(m.size() >= 2, "b coefficients need |E| >= 2");
  Require(m.ground().contains(i), "element " + std::to_string(i) + " not in the ground set");
  Require(m.is_flat(ElementSet::Singleton(i)), "{" + std::to_string(i) + "} is not a flat");
  BCoefficients out;
  out.i = i;
  out.j = j.value_or(m.ground().without(i).min());
  Require(out.j != i && m.ground().contains(out.j), "j must be an element of E other than i");
  for (const auto& [g, closed] : m.closure_map(i)) {
    out.b[closed] = Rational((closed.contains(out.j) ? 1 : 0) - (closed.contains(i) ? 1 : 0));
  }
  return out;
}

namespace {

// d_first - sum_G b_G d_G written as a polynomial in the derivative symbols.
RationalPoly RelationDerivative(const std::vector<std::pair<VarId, Rational>>& leading,
                                const BCoefficients& b) {
  RationalPoly op;
  for (const auto& [v, c] : leading) op.add_term(Monomial::Var(v), c);
  for (const auto& [g, c] : b.b) op.add_term(Monomial::Var(g), -c);
  return op;
}

std::map<VarId, RationalPoly> ShiftedImages(const std::map<Flat, Flat>& closures,
                                            const BCoefficients& b, VarId shift,
                                            const Rational& sign) {
  std::map<VarId, RationalPoly> images;
  for (const auto& [g, closed] : closures) {
    RationalPoly img = RationalPoly::Var(closed);
    auto it = b.b.find(closed);
    if (it != b.b.end() && it->second != 0) img += RationalPoly::Var(shift) * (sign * it->second);
    images.emplace(g, std::move(img));
  }
  return images;
}

std::map<VarId, VarId> AsRenaming(const std::map<Flat, Flat>& closures) {
  return {closures.begin(), closures.end()};
}

}  // namespace

VolPolynomial LiftNonColoop(const Matroid& m, int i, const VolPolynomial& minor_vol,
                            const BCoefficients& b) {
  Require(!m.is_coloop(i), "element " + std::to_string(i) + " is a coloop");
  const VarId xi = ElementSet::Singleton(i);
  const auto closures = m.closure_map(i);
  VolPolynomial out;
  out.degree = minor_vol.degree;
  out.method = minor_vol.method;
  out.poly = LinearSubstitute(minor_vol.poly, ShiftedImages(closures, b, xi, 1));
  std::set<VarId> universe{xi};
  for (const auto& [g, closed] : closures) universe.insert(closed);
  out.universe = Sorted(std::move(universe));

  Ensure(ApplyDerivative(out.poly, RelationDerivative({{xi, 1}}, b)).is_zero(),
         "non-coloop lift is not annihilated by its linear relation");
  Ensure(SetToZero(out.poly, {xi}) == Rename(minor_vol.poly, AsRenaming(closures)),
         "non-coloop lift violates the x_i = 0 initial condition");
  return out;
}

VolPolynomial LiftColoop(const Matroid& m, int i, const VolPolynomial& minor_vol,
                         const BCoefficients& b) {
  Require(m.is_coloop(i), "element " + std::to_string(i) + " is not a coloop");
  const VarId xi = ElementSet::Singleton(i);
  const VarId xrest = m.ground().without(i);
  const auto closures = m.closure_map(i);
  const RationalPoly v1 = LinearSubstitute(minor_vol.poly, ShiftedImages(closures, b, xi, 1));
  const RationalPoly v2 = LinearSubstitute(minor_vol.poly, ShiftedImages(closures, b, xrest, -1));
  VolPolynomial out;
  out.degree = minor_vol.degree + 1;
  out.method = minor_vol.method;
  out.poly = Antiderivative(v1, xi) + Antiderivative(v2, xrest);
  std::set<VarId> universe{xi, xrest};
  for (const auto& [g, closed] : closures) universe.insert(closed);
  out.universe = Sorted(std::move(universe));

  Ensure(ApplyDerivative(out.poly, RelationDerivative({{xi, 1}, {xrest, -1}}, b)).is_zero(),
         "coloop lift is not annihilated by its linear relation");
  Ensure(PartialDerivative(out.poly, DerivativeMonomial::Of({xi, xrest})).is_zero(),
         "coloop lift is not annihilated by d_i d_{E\\i}");
  const RationalPoly renamed = Rename(minor_vol.poly, AsRenaming(closures));
  Ensure(PartInVariables(out.poly, {xi, xrest}, 1) ==
             (RationalPoly::Var(xi) + RationalPoly::Var(xrest)) * renamed,
         "coloop lift has the wrong linear part in x_i, x_{E\\i}");
  return out;
}

VolPolynomial DeletionVolume(const Matroid& m, DeletionTrace* trace, std::optional<int> pivot) {
  VolPolynomial out;
  out.method = "deletion";
  out.degree = m.degree();
  out.universe = m.nontrivial_flats();
  if (m.size() == 1) {
    out.poly = RationalPoly(Rational(1));
    return out;
  }
  const int i = pivot.value_or(m.ground().max());
  Require(m.ground().contains(i), "pivot " + std::to_string(i) + " not in the ground set");
  const Matroid minor = m.deleted(i);
  const VolPolynomial minor_vol = DeletionVolume(minor);
  const bool flat = m.is_flat(ElementSet::Singleton(i));
  if (trace != nullptr) {
    trace->element = i;
    trace->is_flat = flat;
    trace->minor = minor_vol;
    trace->tower.clear();
    trace->s_set.clear();
  }
  if (!flat) {
    out.poly = Rename(minor_vol.poly, AsRenaming(m.closure_map(i)));
  } else {
    const BCoefficients b = ComputeBCoefficients(m, i);
    const bool coloop = m.is_coloop(i);
    VolPolynomial current = coloop ? LiftColoop(m, i, minor_vol, b) : LiftNonColoop(m, i, minor_vol, b);
    const auto s = m.s_set(i);
    std::vector<VolPolynomial> tower(s.size() + 1);
    tower[s.size()] = current;
    const VarId xi = ElementSet::Singleton(i);
    for (size_t j = s.size(); j >= 1; --j) {
      current = SubdivisionOperator(current, xi, s[j - 1], s[j - 1].with(i));
      tower[j - 1] = current;
    }
    out.poly = std::move(current.poly);
    if (trace != nullptr) {
      trace->is_coloop = coloop;
      trace->s_set = s;
      for (auto& v : tower) v.method = "deletion";
      trace->tower = std::move(tower);
    }
  }
  const auto vars = out.poly.variables();
  const std::set<VarId> universe(out.universe.begin(), out.universe.end());
  Ensure(m.degree() == 0 ? vars.empty() : vars == universe,
         "deletion result's variables differ from the nontrivial flats");
  Ensure(out.poly.is_homogeneous(out.degree), "deletion result is not homogeneous");
  return out;
}

}  // namespace mixedvol
