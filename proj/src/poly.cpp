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

#include "poly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mixedvol {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::Var(VarId v, uint32_t exponent) {
  return Monomial({{v, exponent}});
}

Monomial Monomial::Product(std::initializer_list<VarId> vars) {
  std::vector<Factor> f;
  for (VarId v : vars) f.emplace_back(v, 1);
  return Monomial(std::move(f));
}

uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

size_t Monomial::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  for (const auto& [v, e] : factors_) {
    h ^= std::hash<VarId>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool GradedLexBefore(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t i = 0;
  size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) {
      // The monomial holding the earlier variable has the larger exponent
      // there (the other one has exponent 0).
      return fa[i].first < fb[j].first;
    }
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return i < fa.size() && j == fb.size();
}

RationalPoly::RationalPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

RationalPoly RationalPoly::Var(VarId v) { return FromTerm(Monomial::Var(v), 1); }

RationalPoly RationalPoly::FromTerm(Monomial m, Rational c) {
  RationalPoly p;
  p.add_term(m, c);
  return p;
}

void RationalPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Term> RationalPoly::sorted_terms() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return GradedLexBefore(a.first, b.first); });
  return out;
}

std::set<VarId> RationalPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) out.insert(v);
  }
  return out;
}

int RationalPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool RationalPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return static_cast<int>(t.first.degree()) == degree;
  });
}

Rational RationalPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

RationalPoly& RationalPoly::operator/=(const Rational& c) {
  Require(c != 0, "division of a polynomial by zero");
  for (auto& [m, coeff] : terms_) coeff /= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

RationalPoly Power(const RationalPoly& p, unsigned k) {
  RationalPoly result(Rational(1));
  RationalPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

RationalPoly PowerOfLinearForm(const RationalPoly& form, unsigned k) {
  std::vector<std::pair<VarId, Rational>> coeffs;
  for (const auto& [m, c] : form.sorted_terms()) {
    Require(m.degree() == 1, "PowerOfLinearForm needs a linear form");
    coeffs.emplace_back(m.factors().front().first, c);
  }
  RationalPoly out;
  if (k == 0) return RationalPoly(Rational(1));
  if (coeffs.empty()) return out;
  const size_t n = coeffs.size();
  // powers[t][e] = c_t^e
  std::vector<std::vector<Rational>> powers(n, std::vector<Rational>(k + 1));
  for (size_t t = 0; t < n; ++t) {
    powers[t][0] = 1;
    for (unsigned e = 1; e <= k; ++e) powers[t][e] = powers[t][e - 1] * coeffs[t].second;
  }
  std::vector<Rational> fact(k + 1);
  fact[0] = 1;
  for (unsigned e = 1; e <= k; ++e) fact[e] = fact[e - 1] * e;

  std::vector<uint32_t> alpha(n, 0);
  auto rec = [&](auto&& self, size_t t, unsigned remaining) -> void {
    if (t + 1 == n) {
      alpha[t] = remaining;
      Rational c = fact[k];
      std::vector<Monomial::Factor> f;
      for (size_t s = 0; s < n; ++s) {
        c /= fact[alpha[s]];
        c *= powers[s][alpha[s]];
        if (alpha[s] > 0) f.emplace_back(coeffs[s].first, alpha[s]);
      }
      out.add_term(Monomial(std::move(f)), c);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      alpha[t] = e;
      self(self, t + 1, remaining - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

RationalPoly PartialDerivative(const RationalPoly& p, const DerivativeMonomial& d) {
  RationalPoly out;
  const auto& ops = d.exponents().factors();
  for (const auto& [m, c] : p.term_map()) {
    Rational coeff = c;
    std::vector<Monomial::Factor> rest;
    bool vanishes = false;
    size_t j = 0;
    for (const auto& [v, e] : m.factors()) {
      while (j < ops.size() && ops[j].first < v) {
        vanishes = true;  // differentiating by a variable that is absent
        ++j;
      }
      if (vanishes) break;
      uint32_t k = 0;
      if (j < ops.size() && ops[j].first == v) k = ops[j++].second;
      if (k > e) {
        vanishes = true;
        break;
      }
      for (uint32_t s = 0; s < k; ++s) coeff *= e - s;
      if (e > k) rest.emplace_back(v, e - k);
    }
    if (vanishes || j < ops.size()) continue;
    out.add_term(Monomial(std::move(rest)), coeff);
  }
  return out;
}

RationalPoly PartialDerivative(const RationalPoly& p, VarId v, unsigned times) {
  return PartialDerivative(p, DerivativeMonomial(Monomial::Var(v, times)));
}

RationalPoly ApplyDerivative(const RationalPoly& p, const RationalPoly& derivative) {
  RationalPoly out;
  for (const auto& [m, c] : derivative.term_map()) {
    out += PartialDerivative(p, DerivativeMonomial(m)) * c;
  }
  return out;
}

RationalPoly LinearSubstitute(const RationalPoly& p,
                              const std::map<VarId, RationalPoly>& images) {
  // Cache of powers image(v)^e, filled lazily.
  std::map<VarId, std::vector<RationalPoly>> powers;
  auto power_of = [&](VarId v, uint32_t e) -> const RationalPoly& {
    auto it = images.find(v);
    Require(it != images.end(), "substitution does not map variable x{" + v.label() + "}");
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  RationalPoly out;
  for (const auto& [m, c] : p.term_map()) {
    RationalPoly term(c);
    for (const auto& [v, e] : m.factors()) term = term * power_of(v, e);
    out += term;
  }
  return out;
}

RationalPoly Rename(const RationalPoly& p, const std::map<VarId, VarId>& names) {
  RationalPoly out;
  for (const auto& [m, c] : p.term_map()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : m.factors()) {
      auto it = names.find(v);
      f.emplace_back(it == names.end() ? v : it->second, e);
    }
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

RationalPoly Antiderivative(const RationalPoly& p, VarId v) {
  RationalPoly out;
  const Monomial x = Monomial::Var(v);
  for (const auto& [m, c] : p.term_map()) {
    out.add_term(m * x, c / (m.exponent(v) + 1));
  }
  return out;
}

Rational Evaluate(const RationalPoly& p, const std::map<VarId, Rational>& point) {
  Rational total;
  for (const auto& [m, c] : p.term_map()) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      Require(it != point.end(), "no value for variable x{" + v.label() + "}");
      Rational pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), it->second.get_den_mpz_t(), e);
      t *= pw;
    }
    total += t;
  }
  return total;
}

RationalPoly SetToZero(const RationalPoly& p, const std::set<VarId>& vars) {
  RationalPoly out;
  for (const auto& [m, c] : p.term_map()) {
    const bool hit = std::any_of(m.factors().begin(), m.factors().end(),
                                 [&](const auto& f) { return vars.contains(f.first); });
    if (!hit) out.add_term(m, c);
  }
  return out;
}

RationalPoly PartInVariables(const RationalPoly& p, const std::set<VarId>& vars, unsigned k) {
  RationalPoly out;
  for (const auto& [m, c] : p.term_map()) {
    unsigned deg = 0;
    for (const auto& [v, e] : m.factors()) {
      if (vars.contains(v)) deg += e;
    }
    if (deg == k) out.add_term(m, c);
  }
  return out;
}

std::string ToPretty(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    Rational mag = c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    out += ToString(mag);
    first = false;
    if (m.is_one()) continue;
    out += "·";
    for (const auto& [v, e] : m.factors()) {
      out += "x{" + v.label() + "}";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace mixedvol
