// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/permutation.hpp>

#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace permion {

// All n! elements of S_n in lexicographic one-line order; identity first.
std::vector<Permutation> enumerate_group(std::size_t n);

// Closure of the generators under composition and inversion. An empty list
// yields the trivial group on degree points.
std::set<Permutation> generate_from(const std::vector<Permutation>& gens, std::size_t degree = 1);

// Cayley table of S_n over enumerate_group(n).
struct MultiplicationTable {
  std::vector<Permutation> elements;
  // table[i][j] = index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const noexcept { return elements.size(); }
  bool is_latin_square() const;
};

MultiplicationTable multiplication_table(std::size_t n);

// Conjugacy classes of S_n keyed by cycle type. Each class is checked by
// brute-force conjugation; a class that is not closed throws verification_error.
std::map<CycleType, std::vector<Permutation>> conjugacy_classes(std::size_t n);

std::size_t factorial(std::size_t n);

}  // namespace permion
