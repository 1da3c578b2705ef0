// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/permutation.hpp>
#include <permion/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace permion {

// N-particle amplitude tensor over a d-dimensional single-particle space.
// Indices are 1-based, (x_1, ..., x_N) with each x_j in 1..d, laid out
// row-major (x_1 most significant).
class NBodyTensor {
 public:
  // Zero tensor. Throws range_error past the size cap.
  NBodyTensor(std::size_t d, std::size_t particles);
  // Throws dimension_error unless amplitudes.size() == d^N.
  NBodyTensor(std::size_t d, std::size_t particles, std::vector<Rational> amplitudes);

  // e_{k_1} (x) ... (x) e_{k_N} for 1-based modes.
  static NBodyTensor product_state(std::size_t d, const std::vector<std::size_t>& modes);

  std::size_t local_dim() const noexcept { return d_; }
  std::size_t particles() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }

  const std::vector<Rational>& amplitudes() const noexcept { return amps_; }
  const Rational& operator[](std::size_t flat) const { return amps_[flat]; }
  Rational& operator[](std::size_t flat) { return amps_[flat]; }

  // Amplitude at 1-based coordinates.
  const Rational& at(const std::vector<std::size_t>& coords) const;
  Rational& at(const std::vector<std::size_t>& coords);

  std::size_t flat_index(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> coords(std::size_t flat) const;

  bool is_zero() const;

  NBodyTensor& operator+=(const NBodyTensor& o);
  NBodyTensor& operator-=(const NBodyTensor& o);
  NBodyTensor& operator*=(const Rational& s);
  friend NBodyTensor operator+(NBodyTensor a, const NBodyTensor& b) { return a += b; }
  friend NBodyTensor operator-(NBodyTensor a, const NBodyTensor& b) { return a -= b; }
  friend NBodyTensor operator*(NBodyTensor a, const Rational& s) { return a *= s; }
  friend NBodyTensor operator*(const Rational& s, NBodyTensor a) { return a *= s; }

  friend bool operator==(const NBodyTensor&, const NBodyTensor&) = default;

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<Rational> amps_;
};

// Sum of amplitude products.
Rational dot(const NBodyTensor& a, const NBodyTensor& b);

// out(x_1..x_N) = in(x_{sigma(1)}..x_{sigma(N)}): sigma acts on particle slots.
// Throws dimension_error when sigma.degree() != N.
NBodyTensor permute_particles(const NBodyTensor& psi, const Permutation& sigma);

// (1/N!) sum_sigma permute_particles(psi, sigma).
NBodyTensor symmetrize(const NBodyTensor& psi);
// (1/N!) sum_sigma sign(sigma) permute_particles(psi, sigma).
NBodyTensor antisymmetrize(const NBodyTensor& psi);

// both: the tensor satisfies both laws (zero tensor, or N <= 1).
enum class Symmetry { bosonic, fermionic, neither, both };

std::string to_string(Symmetry s);
inline bool is_bosonic(Symmetry s) { return s == Symmetry::bosonic || s == Symmetry::both; }
inline bool is_fermionic(Symmetry s) { return s == Symmetry::fermionic || s == Symmetry::both; }

// Checks the adjacent transpositions (k, k+1), which generate S_N.
Symmetry classify_symmetry(const NBodyTensor& psi);

// {"d": d, "particles": N, "amplitudes": ["p/q", ...]}
nlohmann::json to_json(const NBodyTensor& t);
NBodyTensor tensor_from_json(const nlohmann::json& j);

}  // namespace permion
