// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0

#include "varcodes/linalg.h"

#include <algorithm>
#include <string>
#include <utility>

namespace varcodes {

Matrix Matrix::FromRows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::kLengthMismatch, "row " + std::to_string(r) + " has length " +
                                             std::to_string(rows[r].size()) + ", expected " +
                                             std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Multiply(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::kDimensionMismatch, "matrix product shapes");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

std::vector<std::size_t> Rref(const FieldSpec& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      auto a = m.row(p), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem inv = f.inv(m.at(r, c));
    for (Elem& x : m.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Rank(const FieldSpec& f, Matrix m) { return Rref(f, m).size(); }

std::vector<Vec> NullSpace(const FieldSpec& f, Matrix m) {
  const std::vector<std::size_t> pivots = Rref(f, m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Inverse(const FieldSpec& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::kDimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const auto pivots = Rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(Errc::kSingularMatrix, "matrix of size " + std::to_string(n) + " is singular");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  }
  return inv;
}

Matrix RowSpaceBasis(const FieldSpec& f, Matrix m) {
  const std::size_t rank = Rref(f, m).size();
  Matrix out(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), out.row(r).begin());
  }
  return out;
}

bool SameRowSpace(const FieldSpec& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return RowSpaceBasis(f, a) == RowSpaceBasis(f, b);
}

bool RowSpaceContains(const FieldSpec& f, const Matrix& m, const Matrix& sub) {
  if (m.cols() != sub.cols()) return false;
  Matrix stacked(m.rows() + sub.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), stacked.row(r).begin());
  }
  for (std::size_t r = 0; r < sub.rows(); ++r) {
    std::copy(sub.row(r).begin(), sub.row(r).end(), stacked.row(m.rows() + r).begin());
  }
  return Rank(f, stacked) == Rank(f, m);
}

Elem Dot(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) throw Error(Errc::kLengthMismatch, "dot product lengths differ");
  Elem s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

Vec StarProduct(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) {
    throw Error(Errc::kLengthMismatch, "star product of lengths " + std::to_string(u.size()) +
                                           " and " + std::to_string(v.size()));
  }
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.mul(u[i], v[i]);
  return out;
}

std::size_t HammingWeight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

}  // namespace varcodes
