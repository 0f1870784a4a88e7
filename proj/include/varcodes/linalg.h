// Copyright 2026 The varcodes Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices over a FieldSpec and Gaussian elimination.

#ifndef VARCODES_LINALG_H_
#define VARCODES_LINALG_H_

#include <cstddef>
#include <span>
#include <vector>

#include "varcodes/gf.h"

namespace varcodes {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix FromRows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec col_vec(std::size_t c) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix Multiply(const FieldSpec& f, const Matrix& a, const Matrix& b);

// In-place reduced row echelon form with first-nonzero pivoting. Returns
// pivot columns; rows past the rank are zero.
std::vector<std::size_t> Rref(const FieldSpec& f, Matrix& m);
std::size_t Rank(const FieldSpec& f, Matrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> NullSpace(const FieldSpec& f, Matrix m);
// Throws Error{kSingularMatrix}.
Matrix Inverse(const FieldSpec& f, const Matrix& m);
// Nonzero rows of the RREF: a canonical basis of the row space.
Matrix RowSpaceBasis(const FieldSpec& f, Matrix m);
bool SameRowSpace(const FieldSpec& f, const Matrix& a, const Matrix& b);
// Whether every row of `sub` lies in the row space of `m`.
bool RowSpaceContains(const FieldSpec& f, const Matrix& m, const Matrix& sub);

Elem Dot(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v);
// Throws Error{kLengthMismatch}.
Vec StarProduct(const FieldSpec& f, std::span<const Elem> u, std::span<const Elem> v);
std::size_t HammingWeight(std::span<const Elem> v);

}  // namespace varcodes

#endif  // VARCODES_LINALG_H_
