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

#include "linalg.hpp"

#include <utility>

#include "errors.hpp"

namespace mixedvol::linalg {

Matrix Matrix::FromColumns(std::span<const QVector> columns, size_t rows) {
  Matrix m(rows, columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    Require(columns[c].size() == rows, "column length mismatch");
    for (size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::FromRows(std::span<const QVector> rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    Require(rows[r].size() == cols, "row length mismatch");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::WithoutColumn(size_t skip) const {
  Matrix out(rows_, cols_ - 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0, k = 0; c < cols_; ++c) {
      if (c != skip) out(r, k++) = (*this)(r, c);
    }
  }
  return out;
}

Matrix Matrix::Transposed() const {
  Matrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

QVector Matrix::operator*(std::span<const Rational> v) const {
  Require(v.size() == cols_, "matrix-vector size mismatch");
  QVector out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  Require(a.size() == b.size(), "dot product size mismatch");
  Rational s;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

namespace {

struct IntegerRows {
  std::vector<std::vector<Integer>> rows;
  Rational scale = 1;  // product of the per-row multipliers
};

IntegerRows ScaleToIntegers(const Matrix& m) {
  IntegerRows out;
  out.rows.assign(m.rows(), std::vector<Integer>(m.cols()));
  for (size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (size_t c = 0; c < m.cols(); ++c) {
      out.rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    out.scale *= l;
  }
  return out;
}

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` ends as the determinant of the leading rank x rank block
// (up to sign) for square full-rank input.
size_t Bareiss(std::vector<std::vector<Integer>>& a, size_t cols, int& sign,
               Integer& last_pivot) {
  const size_t rows = a.size();
  sign = 1;
  last_pivot = 1;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / last_pivot;
      }
      a[r][col] = 0;
    }
    last_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

Rational Determinant(const Matrix& m) {
  Require(m.rows() == m.cols(), "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerRows ints = ScaleToIntegers(m);
  int sign = 1;
  Integer pivot;
  const size_t rank = Bareiss(ints.rows, m.cols(), sign, pivot);
  if (rank < m.rows()) return 0;
  Rational det(pivot * sign);
  det /= ints.scale;
  return det;
}

size_t Rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntegerRows ints = ScaleToIntegers(m);
  int sign = 1;
  Integer pivot;
  return Bareiss(ints.rows, m.cols(), sign, pivot);
}

std::vector<QVector> Kernel(const Matrix& m) {
  Matrix a = m;
  const size_t rows = a.rows();
  const size_t cols = a.cols();
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    }
    const Rational inv = 1 / a(r, c);
    for (size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (size_t o = 0; o < rows; ++o) {
      if (o == r || a(o, c) == 0) continue;
      const Rational f = a(o, c);
      for (size_t k = c; k < cols; ++k) a(o, k) -= f * a(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols);
    v[free] = 1;
    for (size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mixedvol::linalg
