// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/rational_matrix.hpp>

#include <permion/errors.hpp>

#include <string>
#include <utility>

namespace permion {

namespace {

std::string shape(const RationalMatrix& m) {
  return "[" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "]";
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw dimension_error("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw range_error("matrix index out of range");
  return (*this)(r, c);
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("cannot add " + shape(*this) + " and " + shape(o));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw dimension_error("cannot subtract " + shape(o) + " from " + shape(*this));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("cannot multiply " + shape(a) + " by " + shape(b));
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

namespace {

using IntGrid = std::vector<std::vector<BigInt>>;

// Scales each row of a by the lcm of its denominators. Returns the integer
// rows and the scale factors, so that ints = diag(scale) * a.
std::pair<IntGrid, std::vector<BigInt>> clear_denominators(const RationalMatrix& a) {
  IntGrid ints(a.rows(), std::vector<BigInt>(a.cols()));
  std::vector<BigInt> scale(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) l = boost::multiprecision::lcm(l, a(i, j).denominator());
    scale[i] = l;
    for (std::size_t j = 0; j < a.cols(); ++j) ints[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
  }
  return {std::move(ints), std::move(scale)};
}

void exact_divide(BigInt& value, const BigInt& divisor) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(value, divisor, q, r);
  if (!r.is_zero()) throw verification_error("fraction-free elimination produced an inexact division");
  value = std::move(q);
}

}  // namespace

RationalMatrix mat_inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw dimension_error("cannot invert non-square " + shape(a));
  const std::size_t n = a.rows();
  auto [m, scale] = clear_denominators(a);
  // Augment with the identity: [M | I].
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  // Fraction-free Gauss-Jordan: every division by the previous pivot is exact.
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw singular_matrix_error("matrix " + shape(a) + " is singular");
    if (pivot != k) std::swap(m[pivot], m[k]);
    const BigInt pk = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        BigInt v = pk * m[i][j] - factor * m[k][j];
        exact_divide(v, previous);
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    previous = pk;
  }
  // Left block is now previous * I; right block is previous * M^{-1}.
  // a^{-1} = M^{-1} * diag(scale).
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = Rational(m[i][n + j] * scale[j], m[i][i]);
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw dimension_error("determinant of non-square " + shape(a));
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  auto [m, scale] = clear_denominators(a);
  BigInt previous = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        exact_divide(v, previous);
        m[i][j] = std::move(v);
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  BigInt scale_product = 1;
  for (const auto& s : scale) scale_product *= s;
  BigInt det = m[n - 1][n - 1];
  if (swaps % 2 != 0) det = -det;
  return Rational(std::move(det), std::move(scale_product));
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

Rational trace(const RationalMatrix& a) {
  if (!a.is_square()) throw dimension_error("trace of non-square " + shape(a));
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

RationalMatrix block(const RationalMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw range_error("block outside " + shape(a));
  RationalMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(r0 + i, c0 + j);
  }
  return out;
}

nlohmann::json to_json(const RationalMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw parse_error("matrix JSON: row count mismatch");
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& row = entries[r];
      if (!row.is_array() || row.size() != cols) throw parse_error("matrix JSON: column count mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational::parse(row[c].get<std::string>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace permion
