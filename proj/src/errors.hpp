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

#ifndef MIXEDVOL_ERRORS_HPP_
#define MIXEDVOL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mixedvol {

// Malformed or mathematically invalid input (bad bases, loops, unknown
// variables, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Random sampling could not find a generic choice within the retry budget.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition asserted at runtime did not hold. Signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void Require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

inline void Ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace mixedvol

#endif  // MIXEDVOL_ERRORS_HPP_
