// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/permutation.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace permion {

// Small dense complex matrix used only by the Schur-Weyl check.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
// max_ij |a_ij - b_ij|
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Gram-Schmidt orthonormalized complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng);

// Permutes the n tensor factors of (C^d)^{(x)n}: factor k moves to slot sigma(k).
ComplexMatrix tensor_permutation(const Permutation& sigma, std::size_t d);

// max over sigma in S_n of max-entry |P^sigma U - U P^sigma| where U = u^{(x)n}.
double commutator_norm(const ComplexMatrix& u, std::size_t n);

struct SchurWeylReport {
  bool ok = false;
  double max_norm = 0.0;
  std::size_t trials = 0;
  std::size_t permutations = 0;
};

SchurWeylReport schur_weyl_commutation_check(std::size_t n, std::size_t d, std::size_t trials, double tol,
                                             std::uint64_t seed = 0);

}  // namespace permion
