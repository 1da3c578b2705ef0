// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/permutation.hpp>
#include <permion/rational.hpp>
#include <permion/rational_matrix.hpp>
#include <permion/representation.hpp>
#include <permion/young.hpp>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>

namespace permion {

// Finite formal sum of permutations of one degree with rational coefficients.
// Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  // The zero element of Q[S_n].
  explicit GroupAlgebraElement(std::size_t n);
  // A single permutation with coefficient c.
  explicit GroupAlgebraElement(const Permutation& p, const Rational& c = 1);

  static GroupAlgebraElement identity(std::size_t n) { return GroupAlgebraElement(Permutation::identity(n)); }

  std::size_t degree() const noexcept { return n_; }
  const std::map<Permutation, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(const Permutation& p) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c * p.
  void add_term(const Permutation& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& s);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::size_t n_;
  std::map<Permutation, Rational> terms_;
};

// Bilinear extension of compose. Throws dimension_error on degree mismatch.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return ga_multiply(a, b);
}

// Sum of every element of S_n.
GroupAlgebraElement full_symmetrizer(std::size_t n);
// Sign-weighted sum of every element of S_n.
GroupAlgebraElement full_antisymmetrizer(std::size_t n);

// Product over rows of the sum of all permutations of that row's entries.
GroupAlgebraElement row_symmetrizer(const YoungTableau& t);
// Product over columns of the signed sum of permutations of that column's entries.
GroupAlgebraElement col_antisymmetrizer(const YoungTableau& t);

// col_antisymmetrizer(t) * row_symmetrizer(t); throws invalid_argument for
// non-standard tableaux.
GroupAlgebraElement young_operator(const YoungTableau& t);

struct IdempotentReport {
  bool is_proportional = false;
  // c with x^2 = c x; absent when x^2 is not a multiple of x.
  std::optional<Rational> constant;
};

IdempotentReport verify_idempotent(const GroupAlgebraElement& x);

// The permutation sending the entry of tb in each box to the entry of ta in
// the same box. Throws dimension_error when the frames differ.
Permutation transfer_permutation(const YoungTableau& ta, const YoungTableau& tb);

// sum_g x_g D^g. Throws dimension_error on degree mismatch.
RationalMatrix ga_to_matrix(const GroupAlgebraElement& x, const Representation& r);

// {"degree": n, "terms": {"(12)": "1", ...}}
nlohmann::json to_json(const GroupAlgebraElement& x);

}  // namespace permion
