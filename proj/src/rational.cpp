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

#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace mixedvol {

std::string ToString(const Rational& q) {
  // mpq get_str omits "/1" for integers.
  return q.get_str(10);
}

namespace {

bool IsSignedDigits(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  Require(IsSignedDigits(num, true), "malformed rational '" + std::string(text) + "'");
  Integer p(std::string(num), 10);
  Integer q(1);
  if (slash != std::string_view::npos) {
    Require(IsSignedDigits(den, false), "malformed rational '" + std::string(text) + "'");
    q = Integer(std::string(den), 10);
    Require(q != 0, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational Factorial(unsigned n) {
  Integer f(1);
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace mixedvol
