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

#ifndef MIXEDVOL_IO_HPP_
#define MIXEDVOL_IO_HPP_

#include <string>

#include "matroid.hpp"
#include "volume.hpp"

namespace mixedvol {

/// {"ground_set":[...], "bases":[[...],...]} or
/// {"ground_set":[...], "flats":[[],...,[...E]]}. Exactly one of "bases"
/// and "flats" must be present.
Matroid ParseMatroidJson(const std::string& text);
/// Bases form, ground set and bases in ascending order.
std::string MatroidToJson(const Matroid& m);

/// {"degree":d,"terms":[{"coeff":"p/q","exponents":{"1,4":1}}]} with terms
/// in canonical graded-lex order. Ends with a newline.
std::string PolyToJson(const VolPolynomial& vol);
/// Parses the format above. The universe is left empty.
VolPolynomial ParsePolyJson(const std::string& text);

/// "1,2,3" -> {1,2,3}. Elements ascending, each in 0..kMaxElement.
VarId ParseLabel(const std::string& label);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

}  // namespace mixedvol

#endif  // MIXEDVOL_IO_HPP_
