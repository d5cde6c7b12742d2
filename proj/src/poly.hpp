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

#ifndef MIXEDVOL_POLY_HPP_
#define MIXEDVOL_POLY_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "rational.hpp"

namespace mixedvol {

/// Power product of variables. Factors are kept sorted by VarId with
/// strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<VarId, uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);  // normalizes
  static Monomial Var(VarId v, uint32_t exponent = 1);
  static Monomial Product(std::initializer_list<VarId> vars);

  const std::vector<Factor>& factors() const { return factors_; }
  uint32_t exponent(VarId v) const;
  uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  size_t hash() const;

 private:
  std::vector<Factor> factors_;
  uint32_t degree_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical term order: higher total degree first, then lexicographic on
/// the exponent vectors with variables taken in ascending VarId order (a
/// larger exponent on an earlier variable comes first).
bool GradedLexBefore(const Monomial& a, const Monomial& b);

/// Constant-coefficient differential operator d^alpha; same shape as a
/// monomial, kept as a distinct type so the two are never confused.
class DerivativeMonomial {
 public:
  DerivativeMonomial() = default;
  explicit DerivativeMonomial(Monomial exponents) : exps_(std::move(exponents)) {}
  static DerivativeMonomial Of(std::initializer_list<VarId> vars) {
    return DerivativeMonomial(Monomial::Product(vars));
  }
  const Monomial& exponents() const { return exps_; }
  uint32_t order() const { return exps_.degree(); }

 private:
  Monomial exps_;
};

using Term = std::pair<Monomial, Rational>;

/// Sparse polynomial over Q. No zero coefficients are ever stored.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(const Rational& constant);  // NOLINT: implicit by design of ring literals
  static RationalPoly Var(VarId v);
  static RationalPoly FromTerm(Monomial m, Rational c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Monomial, Rational, MonomialHash>& term_map() const { return terms_; }

  /// Terms in canonical graded-lex order.
  std::vector<Term> sorted_terms() const;
  std::set<VarId> variables() const;
  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& c);
  RationalPoly& operator/=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator/(RationalPoly a, const Rational& c) { return a /= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> terms_;
};

RationalPoly Power(const RationalPoly& p, unsigned k);

/// (sum_t c_t y_t)^k expanded with multinomial coefficients. `form` must be
/// linear (every term of degree 1).
RationalPoly PowerOfLinearForm(const RationalPoly& form, unsigned k);

RationalPoly PartialDerivative(const RationalPoly& p, const DerivativeMonomial& d);
RationalPoly PartialDerivative(const RationalPoly& p, VarId v, unsigned times = 1);

/// Applies a constant-coefficient differential operator, written as a
/// polynomial D in the symbols d_F, to p.
RationalPoly ApplyDerivative(const RationalPoly& p, const RationalPoly& derivative);

/// Replaces each variable by the given polynomial. Every variable of p must
/// be mapped (InvalidInput otherwise); extra entries are ignored.
RationalPoly LinearSubstitute(const RationalPoly& p,
                              const std::map<VarId, RationalPoly>& images);

/// Variable renaming; unmapped variables are kept.
RationalPoly Rename(const RationalPoly& p, const std::map<VarId, VarId>& names);

/// Antiderivative in v with no v-free term added: d/dv of the result is p.
RationalPoly Antiderivative(const RationalPoly& p, VarId v);

/// Every variable of p must have a value in `point`.
Rational Evaluate(const RationalPoly& p, const std::map<VarId, Rational>& point);

/// Sets the listed variables to zero.
RationalPoly SetToZero(const RationalPoly& p, const std::set<VarId>& vars);

/// Sum of the terms whose total degree in `vars` equals k.
RationalPoly PartInVariables(const RationalPoly& p, const std::set<VarId>& vars, unsigned k);

/// Human-readable form, e.g. "-1/2·x{4}^2 + 1·x{4}x{1,4}"; "0" for zero.
std::string ToPretty(const RationalPoly& p);

}  // namespace mixedvol

#endif  // MIXEDVOL_POLY_HPP_
