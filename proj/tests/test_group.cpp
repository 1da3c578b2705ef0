// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/errors.hpp>
#include <permion/group.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace permion;

TEST_CASE("enumerate_group sizes and ordering") {
  CHECK(enumerate_group(3).size() == 6);
  CHECK(enumerate_group(1).size() == 1);
  CHECK(enumerate_group(7).size() == 5040);
  const auto g = enumerate_group(4);
  CHECK(g.front().is_identity());
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK_THROWS_AS(enumerate_group(9), range_error);
  CHECK_THROWS_AS(enumerate_group(0), range_error);
}

TEST_CASE("group axioms hold on S_n for n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = enumerate_group(n);
    const std::set<Permutation> members(g.begin(), g.end());
    std::size_t identities = 0;
    for (const auto& a : g) {
      identities += a.is_identity();
      std::size_t inverses = 0;
      for (const auto& b : g) {
        CHECK(members.count(a * b) == 1);
        inverses += (a * b).is_identity();
      }
      CHECK(inverses == 1);
    }
    CHECK(identities == 1);
  }
}

TEST_CASE("associativity on all triples of S_4") {
  const auto g = enumerate_group(4);
  for (const auto& a : g) {
    for (const auto& b : g) {
      const Permutation ab = a * b;
      for (const auto& c : g) REQUIRE(ab * c == a * (b * c));
    }
  }
}

TEST_CASE("generate_from closes generators") {
  const auto t12 = parse_cycles("(12)", 3);
  const auto t23 = parse_cycles("(23)", 3);
  CHECK(generate_from({t12, t23}).size() == 6);

  const auto trivial = generate_from({}, 3);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.begin()->is_identity());

  const auto c3 = generate_from({parse_cycles("(123)", 3)});
  const auto expected = oracle::closure({{2, 3, 1}}, 3);
  REQUIRE(c3.size() == expected.size());
  CHECK(c3.size() == 3);
  for (const auto& p : c3) CHECK(expected.count(p.images()) == 1);

  CHECK_THROWS_AS(generate_from({t12, parse_cycles("(12)", 4)}), dimension_error);
}

TEST_CASE("generate_from agrees with the closure oracle on S_4 subgroups") {
  const std::vector<std::vector<std::string>> gen_sets = {
      {"(12)(34)"}, {"(1234)"}, {"(12)", "(34)"}, {"(123)", "(234)"}, {"(12)", "(1234)"}};
  for (const auto& set : gen_sets) {
    std::vector<Permutation> gens;
    std::vector<oracle::OneLine> raw;
    for (const auto& s : set) {
      gens.push_back(parse_cycles(s, 4));
      raw.push_back(gens.back().images());
    }
    const auto got = generate_from(gens);
    const auto want = oracle::closure(raw, 4);
    CHECK(got.size() == want.size());
  }
}

TEST_CASE("multiplication table of S_3") {
  const auto t = multiplication_table(3);
  REQUIRE(t.order() == 6);
  CHECK(t.is_latin_square());
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(t.table[0][j] == j);
    CHECK(t.table[j][0] == j);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) CHECK(t.elements[t.table[i][j]] == t.elements[i] * t.elements[j]);
  }
  CHECK_THROWS_AS(multiplication_table(7), range_error);
}

TEST_CASE("multiplication table of S_2") {
  const auto t = multiplication_table(2);
  CHECK(t.table == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  CHECK(format_cycles(t.elements[1]) == "(12)");
}

TEST_CASE("latin square check rejects a broken table") {
  auto t = multiplication_table(3);
  t.table[2][3] = t.table[2][4];
  CHECK_FALSE(t.is_latin_square());
}

TEST_CASE("conjugacy classes of S_3") {
  const auto classes = conjugacy_classes(3);
  REQUIRE(classes.size() == 3);
  CHECK(classes.at(CycleType({1, 1, 1})).size() == 1);
  CHECK(classes.at(CycleType({2, 1})).size() == 3);
  CHECK(classes.at(CycleType({3})).size() == 2);
  CHECK(oracle::class_sizes(3) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("conjugacy classes partition S_n and match the orbit oracle") {
  CHECK(conjugacy_classes(1).size() == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto classes = conjugacy_classes(n);
    CHECK(classes.size() == oracle::partition_count(n));
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (const auto& [type, members] : classes) {
      sizes.push_back(members.size());
      total += members.size();
      for (const auto& m : members) CHECK(cycle_type(m) == type);
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(total == factorial(n));
    CHECK(sizes == oracle::class_sizes(n));
  }
  CHECK(conjugacy_classes(4).size() == 5);
}
