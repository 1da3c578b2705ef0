// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations on raw vectors. Nothing here calls into
// the library, so tests can compare the two paths.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using OneLine = std::vector<std::size_t>;  // 1-based images

inline OneLine compose(const OneLine& a, const OneLine& b) {
  OneLine out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
  return out;
}

inline OneLine identity(std::size_t n) {
  OneLine e(n);
  std::iota(e.begin(), e.end(), std::size_t{1});
  return e;
}

inline OneLine inverse_by_search(const OneLine& p) {
  OneLine out(p.size());
  for (std::size_t target = 1; target <= p.size(); ++target) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == target) out[target - 1] = j + 1;
    }
  }
  return out;
}

inline std::vector<OneLine> all_permutations(std::size_t n) {
  std::vector<OneLine> out;
  OneLine p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Repeatedly multiplies everything seen by everything seen until stable.
inline std::set<OneLine> closure(const std::vector<OneLine>& gens, std::size_t n) {
  std::set<OneLine> seen{identity(n)};
  seen.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<OneLine> snapshot(seen.begin(), seen.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) grew |= seen.insert(compose(a, b)).second;
    }
  }
  return seen;
}

// Sizes of conjugacy classes by explicit orbit search.
inline std::vector<std::size_t> class_sizes(std::size_t n) {
  const auto all = all_permutations(n);
  std::set<OneLine> assigned;
  std::vector<std::size_t> sizes;
  for (const auto& b : all) {
    if (assigned.count(b)) continue;
    std::set<OneLine> orbit;
    for (const auto& g : all) orbit.insert(compose(compose(g, b), inverse_by_search(g)));
    assigned.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Number of partitions of n by dynamic programming.
inline std::size_t partition_count(std::size_t n) {
  std::vector<std::size_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

// Standard tableaux of a shape counted by trying every filling.
inline std::size_t brute_force_tableaux(const std::vector<std::size_t>& shape) {
  const std::size_t n = std::accumulate(shape.begin(), shape.end(), std::size_t{0});
  std::size_t count = 0;
  OneLine word = identity(n);
  do {
    // word laid out row by row
    std::vector<std::vector<std::size_t>> rows;
    std::size_t pos = 0;
    for (std::size_t len : shape) {
      rows.emplace_back(word.begin() + static_cast<long>(pos), word.begin() + static_cast<long>(pos + len));
      pos += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c] < rows[r][c - 1]) ok = false;
        if (r > 0 && rows[r][c] < rows[r - 1][c]) ok = false;
      }
    }
    count += ok;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

// Occupation vectors over d modes with total N, by counting through every
// vector in {0..N}^d.
inline std::size_t brute_force_boson_sector(std::size_t d, std::size_t n) {
  std::size_t count = 0;
  std::vector<std::size_t> k(d, 0);
  for (;;) {
    count += std::accumulate(k.begin(), k.end(), std::size_t{0}) == n;
    std::size_t j = 0;
    while (j < d && k[j] == n) k[j++] = 0;
    if (j == d) break;
    ++k[j];
  }
  return count;
}

// Group-algebra element as a map from one-line form to an integer coefficient.
using Algebra = std::map<OneLine, std::int64_t>;

inline Algebra multiply(const Algebra& a, const Algebra& b) {
  Algebra out;
  for (const auto& [p, c] : a) {
    for (const auto& [q, d] : b) out[compose(p, q)] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Dense integer matrices for the fermionic ladder operators, built from
// the sign rule on bitstrings.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix dense_create(std::size_t mode, std::size_t d) {
  const std::size_t dim = std::size_t{1} << d;
  IntMatrix m(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t k = 0; k < dim; ++k) {
    if ((k >> (mode - 1)) & 1u) continue;
    int parity = 0;
    for (std::size_t i = 0; i + 1 < mode; ++i) parity ^= static_cast<int>((k >> i) & 1u);
    m[k | (std::size_t{1} << (mode - 1))][k] = parity ? -1 : 1;
  }
  return m;
}

inline IntMatrix dense_transpose(const IntMatrix& a) {
  IntMatrix t(a.size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

inline IntMatrix dense_mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace oracle
