// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/permutation.hpp>
#include <permion/rational_matrix.hpp>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permion {

enum class RepKind { trivial, alternating, natural, regular, standard, custom };

std::string to_string(RepKind kind);
// Throws parse_error for unknown names.
RepKind rep_kind_from_string(std::string_view name);

// An ordering of all h elements of S_n, used as the basis of the regular
// representation.
class ElementOrdering {
 public:
  // Throws invalid_argument unless elements lists every element of S_n once.
  explicit ElementOrdering(std::vector<Permutation> elements);

  // Lexicographic one-line order.
  static ElementOrdering lexicographic(std::size_t n);

  std::size_t degree() const noexcept { return elements_.front().degree(); }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  // Basis position of p.
  std::size_t index_of(const Permutation& p) const { return position_.at(lex_rank(p)); }

 private:
  std::vector<Permutation> elements_;
  std::vector<std::size_t> position_;  // lex rank -> basis position
};

// A matrix for every element of S_n, stored eagerly.
class Representation {
 public:
  // matrices are listed in lexicographic element order and must all be
  // dim x dim; throws dimension_error otherwise.
  Representation(RepKind label, std::size_t n, std::size_t dim, std::vector<RationalMatrix> matrices);

  RepKind label() const noexcept { return label_; }
  std::size_t degree() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<RationalMatrix>& matrices() const noexcept { return matrices_; }

  // Matrix of g. Throws dimension_error when g has the wrong degree.
  const RationalMatrix& at(const Permutation& g) const;

  // Copy with the matrix of g replaced; the label becomes custom.
  Representation with_matrix(const Permutation& g, RationalMatrix m) const;

 private:
  RepKind label_;
  std::size_t n_;
  std::size_t dim_;
  std::vector<Permutation> elements_;
  std::vector<RationalMatrix> matrices_;
};

// kind must be trivial or alternating.
Representation one_dim_rep(std::size_t n, RepKind kind);

// Permutation matrices with entry 1 at (sigma(k), k).
Representation natural_rep(std::size_t n);

// D^g sends basis vector |g'> to |g * g'> under ordering.
Representation regular_rep(std::size_t n, const ElementOrdering& ordering);
Representation regular_rep(std::size_t n);

// Change of basis whose first column is the uniform vector and whose
// remaining columns are e_k - e_{k+1}.
RationalMatrix standard_change_of_basis(std::size_t n);

// The (n-1)-dimensional block of B^{-1} D^sigma(nat) B in the difference
// basis {e_k - e_{k+1}}. Requires n >= 2.
Representation standard_rep(std::size_t n);

// Builds any of the five named representations (regular uses lex order).
Representation make_rep(std::size_t n, RepKind kind);

struct HomomorphismReport {
  bool ok = true;
  bool identity_ok = true;
  std::size_t pairs_checked = 0;
  // First (a, b) in lexicographic pair order with D^{a*b} != D^a D^b.
  std::optional<std::pair<Permutation, Permutation>> first_failure;
};

HomomorphismReport verify_homomorphism(const Representation& r);

// Trace per cycle type. Throws verification_error when two elements of one
// class have different traces.
std::map<CycleType, Rational> character(const Representation& r);

// Sum of all representation matrices.
RationalMatrix symmetrizer_image(const Representation& r);
// Sign-weighted sum of all representation matrices.
RationalMatrix antisymmetrizer_image(const Representation& r);

struct RegularDecompositionReport {
  bool ok = false;
  BigInt group_order;
  BigInt sum_of_squares;
  // chi_e(reg), taken from a constructed regular representation when the
  // degree allows it, otherwise its dimension.
  BigInt regular_identity_character;
  // sum_lambda chi_e(lambda) d(lambda) = sum_lambda d(lambda)^2.
  BigInt character_sum;
};

RegularDecompositionReport verify_regular_decomposition(std::size_t n, const std::vector<std::size_t>& irrep_dims);

// {"label", "n", "dim", "matrices": {"(12)": <matrix>, ...}}
nlohmann::json to_json(const Representation& r);

}  // namespace permion
