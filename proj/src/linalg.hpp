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

#ifndef MIXEDVOL_LINALG_HPP_
#define MIXEDVOL_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rational.hpp"

namespace mixedvol::linalg {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds the matrix whose columns are the given vectors (all of length
  /// `rows`; needed explicitly when `columns` is empty).
  static Matrix FromColumns(std::span<const QVector> columns, size_t rows);
  static Matrix FromRows(std::span<const QVector> rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix WithoutColumn(size_t c) const;
  Matrix Transposed() const;
  QVector operator*(std::span<const Rational> v) const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Determinant of a square matrix. Rows are scaled to integers and reduced
// with Bareiss' fraction-free elimination. The 0x0 determinant is 1.
Rational Determinant(const Matrix& m);

// Rank via fraction-free elimination on the integer-scaled rows.
size_t Rank(const Matrix& m);

// Basis of the right null space {x : m x = 0}, read off the reduced row
// echelon form; one vector per free column, in column order.
std::vector<QVector> Kernel(const Matrix& m);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace mixedvol::linalg

#endif  // MIXEDVOL_LINALG_HPP_
