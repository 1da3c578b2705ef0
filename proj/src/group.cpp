// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/group.hpp>

#include <permion/errors.hpp>
#include <permion/limits.hpp>

#include <algorithm>
#include <deque>
#include <numeric>

namespace permion {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Permutation> enumerate_group(std::size_t n) {
  if (n == 0) throw range_error("group degree must be at least 1");
  caps::require_at_most(n, caps::enumerate_degree, "group degree");
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{1});
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::set<Permutation> generate_from(const std::vector<Permutation>& gens, std::size_t degree) {
  if (!gens.empty()) degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw dimension_error("generators must share one degree");
  }
  caps::require_at_most(degree, caps::enumerate_degree, "group degree");
  // In a finite group the inverse of g is a positive power of g, so closing
  // under right multiplication by the generators suffices.
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = current * g;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

bool MultiplicationTable::is_latin_square() const {
  const std::size_t h = order();
  if (table.size() != h) return false;
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<bool> row(h, false);
    std::vector<bool> col(h, false);
    if (table[i].size() != h) return false;
    for (std::size_t j = 0; j < h; ++j) {
      if (table[i][j] >= h || table[j][i] >= h) return false;
      if (row[table[i][j]] || col[table[j][i]]) return false;
      row[table[i][j]] = true;
      col[table[j][i]] = true;
    }
  }
  return true;
}

MultiplicationTable multiplication_table(std::size_t n) {
  caps::require_at_most(n, caps::table_degree, "multiplication table degree");
  MultiplicationTable out;
  out.elements = enumerate_group(n);
  const std::size_t h = out.elements.size();
  out.table.assign(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      out.table[i][j] = lex_rank(out.elements[i] * out.elements[j]);
    }
  }
  return out;
}

std::map<CycleType, std::vector<Permutation>> conjugacy_classes(std::size_t n) {
  caps::require_at_most(n, caps::classes_degree, "conjugacy class degree");
  const auto elements = enumerate_group(n);
  std::map<CycleType, std::vector<Permutation>> classes;
  for (const auto& p : elements) classes[cycle_type(p)].push_back(p);

  // Orbit of one representative under conjugation must be exactly its class.
  for (const auto& [type, members] : classes) {
    const Permutation& rep = members.front();
    std::set<Permutation> orbit;
    for (const auto& g : elements) orbit.insert(g * rep * inverse(g));
    if (orbit.size() != members.size() ||
        !std::equal(orbit.begin(), orbit.end(), members.begin(), members.end())) {
      throw verification_error("conjugation orbit of " + format_cycles(rep) + " differs from class " +
                               to_string(type));
    }
  }
  return classes;
}

}  // namespace permion
