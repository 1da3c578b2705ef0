// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace permion {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  // rows x cols zero matrix.
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Row-list literal; throws dimension_error on ragged rows.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  // Bounds-checked access; throws range_error.
  const Rational& at(std::size_t r, std::size_t c) const;

  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Exact product. Throws dimension_error when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

// Exact inverse by fraction-free Gauss-Jordan elimination.
// Throws dimension_error for non-square input, singular_matrix_error when singular.
RationalMatrix mat_inverse(const RationalMatrix& a);

// Exact determinant (Bareiss). Throws dimension_error for non-square input.
Rational determinant(const RationalMatrix& a);

// Block-diagonal [a 0; 0 b].
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

// Throws dimension_error for non-square input.
Rational trace(const RationalMatrix& a);

RationalMatrix transpose(const RationalMatrix& a);

// Rows [r0, r0+nr) and columns [c0, c0+nc).
RationalMatrix block(const RationalMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);

// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
nlohmann::json to_json(const RationalMatrix& m);
// Inverse of to_json; throws parse_error on schema violations.
RationalMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace permion
