// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace permion {

// A bijection of {1..n} in one-line form.
//
// All public interfaces speak 1-based points. Composition is function style:
// (a * b)(i) = a(b(i)), so the right factor acts first.
class Permutation {
 public:
  // Identity on n points.
  static Permutation identity(std::size_t n);

  // Builds from 1-based one-line images, images[i-1] = sigma(i).
  // Throws invalid_argument unless the images are a permutation of {1..n}.
  explicit Permutation(const std::vector<std::size_t>& images);

  std::size_t degree() const noexcept { return image_.size(); }

  // sigma(point) for a 1-based point.
  std::size_t operator()(std::size_t point) const;

  // 1-based one-line form.
  std::vector<std::size_t> images() const;

  bool is_identity() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct raw_tag {};
  Permutation(raw_tag, std::vector<std::uint32_t> zero_based) noexcept
      : image_(std::move(zero_based)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& p);

  std::vector<std::uint32_t> image_;  // 0-based
};

// Cycle structure: orbit lengths in descending order, fixed points as 1s.
struct CycleType {
  std::vector<std::size_t> parts;

  CycleType() = default;
  // Sorts descending; throws invalid_argument on zero parts.
  explicit CycleType(std::vector<std::size_t> p);

  std::size_t total() const noexcept;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

// (a * b)(i) = a(b(i)). Throws dimension_error on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation inverse(const Permutation& p);

// +1 for even permutations, -1 for odd.
int sign(const Permutation& p);

// Disjoint cycles (length >= 2), each starting at its smallest point and
// ordered by smallest point.
std::vector<std::vector<std::size_t>> cycles(const Permutation& p);

CycleType cycle_type(const Permutation& p);

// Parses cycle notation such as "(134)(25)", "(1,13)" or "e".
// Throws parse_error on malformed input, repeated points or points > n.
Permutation parse_cycles(std::string_view text, std::size_t n);

// Canonical cycle notation; the identity prints as "e".
std::string format_cycles(const Permutation& p);

// Position of p in the lexicographic enumeration of S_n (identity is 0).
std::size_t lex_rank(const Permutation& p);

// Text like "[3,2]" for a cycle type.
std::string to_string(const CycleType& t);

}  // namespace permion

template <>
struct std::hash<permion::Permutation> {
  std::size_t operator()(const permion::Permutation& p) const noexcept;
};

namespace permion {

// Parses a product of cycle-notation factors joined by '*', e.g.
// "(13)*(12)", evaluated with the right factor acting first.
Permutation parse_word(std::string_view text, std::size_t n);

}  // namespace permion
