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

#ifndef MIXEDVOL_RATIONAL_HPP_
#define MIXEDVOL_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mixedvol {

// Always kept canonical: reduced, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// "p/q" reduced with q > 0, or "p" when the value is an integer.
std::string ToString(const Rational& q);

/// Inverse of ToString. Also accepts non-reduced input ("2/4") and reduces
/// it; rejects zero denominators and anything that is not [-]digits[/digits].
Rational ParseRational(std::string_view text);

Rational Factorial(unsigned n);

}  // namespace mixedvol

#endif  // MIXEDVOL_RATIONAL_HPP_
