// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/schur_weyl.hpp>

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/limits.hpp>

#include <algorithm>
#include <cmath>

namespace permion {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("complex matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_error("complex matrix shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix u(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) u(i, j) = {gauss(rng), gauss(rng)};
  }
  // Modified Gram-Schmidt on the columns.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      std::complex<double> overlap = 0.0;
      for (std::size_t i = 0; i < d; ++i) overlap += std::conj(u(i, k)) * u(i, j);
      for (std::size_t i = 0; i < d; ++i) u(i, j) -= overlap * u(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(u(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) u(i, j) /= norm;
  }
  return u;
}

ComplexMatrix tensor_permutation(const Permutation& sigma, std::size_t d) {
  const std::size_t n = sigma.degree();
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= d;
  ComplexMatrix p(dim, dim);
  std::vector<std::size_t> digits(n);
  std::vector<std::size_t> moved(n);
  for (std::size_t col = 0; col < dim; ++col) {
    // Factor 1 is the most significant digit.
    std::size_t rest = col;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % d;
      rest /= d;
    }
    for (std::size_t k = 0; k < n; ++k) moved[sigma(k + 1) - 1] = digits[k];
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) row = row * d + moved[k];
    p(row, col) = 1.0;
  }
  return p;
}

double commutator_norm(const ComplexMatrix& u, std::size_t n) {
  const std::size_t d = u.rows();
  ComplexMatrix big = u;
  for (std::size_t k = 1; k < n; ++k) big = kron(big, u);
  double worst = 0.0;
  for (const auto& sigma : enumerate_group(n)) {
    const ComplexMatrix p = tensor_permutation(sigma, d);
    worst = std::max(worst, max_entry_distance(p * big, big * p));
  }
  return worst;
}

SchurWeylReport schur_weyl_commutation_check(std::size_t n, std::size_t d, std::size_t trials, double tol,
                                             std::uint64_t seed) {
  if (n == 0 || d == 0) throw range_error("Schur-Weyl check needs n >= 1 and d >= 1");
  caps::require_at_most(n, caps::schur_weyl_copies, "Schur-Weyl copies");
  caps::require_at_most(d, caps::schur_weyl_local_dim, "Schur-Weyl local dimension");
  std::mt19937_64 rng(seed);
  SchurWeylReport report;
  report.trials = trials;
  report.permutations = factorial(n);
  for (std::size_t t = 0; t < trials; ++t) {
    report.max_norm = std::max(report.max_norm, commutator_norm(random_unitary(d, rng), n));
  }
  report.ok = report.max_norm < tol;
  return report;
}

}  // namespace permion
