// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/group_algebra.hpp>
#include <permion/representation.hpp>
#include <permion/young.hpp>

#include <doctest.h>

#include <random>

using namespace permion;

namespace {

Permutation cyc(const char* text, std::size_t n) { return parse_cycles(text, n); }

GroupAlgebraElement term(const char* word, std::size_t n, std::int64_t c = 1) {
  return GroupAlgebraElement(parse_word(word, n), Rational(c));
}

oracle::Algebra to_oracle(const GroupAlgebraElement& x) {
  oracle::Algebra out;
  for (const auto& [p, c] : x.terms()) {
    REQUIRE(c.is_integer());
    out[p.images()] = static_cast<std::int64_t>(c.numerator());
  }
  return out;
}

GroupAlgebraElement random_element(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupAlgebraElement x(n);
  for (const auto& g : enumerate_group(n)) {
    if (rng() % 2 == 0) x.add_term(g, Rational(coeff(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("multiplication") {
  const auto e = GroupAlgebraElement::identity(3);
  const auto s = e + term("(12)", 3);
  CHECK(s * s == term("e", 3, 2) + term("(12)", 3, 2));

  const auto a = e - term("(13)", 3);
  const auto want = e + term("(12)", 3) - term("(13)", 3) - term("(13)*(12)", 3);
  CHECK(a * s == want);
  CHECK((a * s).terms().size() == 4);

  std::mt19937_64 rng(2);
  const auto x = random_element(rng, 3);
  CHECK(e * x == x);
  CHECK(x * e == x);
  CHECK_THROWS_AS(e * GroupAlgebraElement::identity(4), dimension_error);
}

TEST_CASE("multiplication agrees with the brute-force algebra") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto x = random_element(rng, n);
      const auto y = random_element(rng, n);
      CHECK(to_oracle(x * y) == oracle::multiply(to_oracle(x), to_oracle(y)));
    }
  }
}

TEST_CASE("zero coefficients are dropped") {
  auto x = term("(12)", 3);
  x.add_term(cyc("(12)", 3), Rational(-1));
  CHECK(x.is_zero());
  CHECK((term("(13)", 3) - term("(13)", 3)).terms().empty());
}

TEST_CASE("row symmetrizer") {
  CHECK(row_symmetrizer(YoungTableau({{1, 2}, {3}})) == term("e", 3) + term("(12)", 3));
  CHECK(row_symmetrizer(YoungTableau({{1, 2, 3}})) == full_symmetrizer(3));
  CHECK(row_symmetrizer(YoungTableau({{1}, {2}, {3}})) == GroupAlgebraElement::identity(3));
}

TEST_CASE("column antisymmetrizer") {
  CHECK(col_antisymmetrizer(YoungTableau({{1, 2}, {3}})) == term("e", 3) - term("(13)", 3));
  CHECK(col_antisymmetrizer(YoungTableau({{1}, {2}, {3}})) == full_antisymmetrizer(3));
  CHECK(col_antisymmetrizer(YoungTableau({{1, 2, 3}})) == GroupAlgebraElement::identity(3));
  const auto a4 = full_antisymmetrizer(4);
  CHECK(a4.terms().size() == 24);
  for (const auto& [g, c] : a4.terms()) CHECK(c == Rational(sign(g)));
}

TEST_CASE("young operator") {
  const auto e21 = young_operator(YoungTableau({{1, 2}, {3}}));
  CHECK(e21 == term("e", 3) + term("(12)", 3) - term("(13)", 3) - term("(13)*(12)", 3));
  CHECK(young_operator(YoungTableau({{1, 2, 3}})) == full_symmetrizer(3));
  CHECK(young_operator(YoungTableau({{1}, {2}, {3}})) == full_antisymmetrizer(3));
  CHECK_THROWS_AS(young_operator(YoungTableau({{2, 1}, {3}})), invalid_argument);

  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(young_operator(standard_tableaux(YoungFrame({n})).front()) == full_symmetrizer(n));
    CHECK(young_operator(standard_tableaux(YoungFrame(std::vector<std::size_t>(n, 1))).front()) ==
          full_antisymmetrizer(n));
  }
}

TEST_CASE("idempotent constants") {
  auto s = verify_idempotent(full_symmetrizer(3));
  CHECK(s.is_proportional);
  CHECK(s.constant == Rational(6));
  auto a = verify_idempotent(full_antisymmetrizer(3));
  CHECK(a.is_proportional);
  CHECK(a.constant == Rational(6));
  const auto e21 = young_operator(YoungTableau({{1, 2}, {3}}));
  auto y = verify_idempotent(e21);
  CHECK(y.is_proportional);
  CHECK(y.constant == Rational(3));
  // Independent square through the raw algebra.
  oracle::Algebra tripled;
  for (const auto& [p, c] : to_oracle(e21)) tripled[p] = 3 * c;
  CHECK(oracle::multiply(to_oracle(e21), to_oracle(e21)) == tripled);

  auto z = verify_idempotent(GroupAlgebraElement(3));
  CHECK(z.is_proportional);

  auto not_proj = verify_idempotent(term("e", 3) + term("(123)", 3));
  CHECK_FALSE(not_proj.is_proportional);
  CHECK_FALSE(not_proj.constant.has_value());
}

TEST_CASE("every standard young operator up to n = 5 squares to (n!/d) times itself") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& f : partitions(n)) {
      const Rational c(static_cast<std::int64_t>(factorial(n) / tableau_count_hook(f)));
      for (const auto& t : standard_tableaux(f)) {
        const auto report = verify_idempotent(young_operator(t));
        CHECK(report.is_proportional);
        CHECK(report.constant == c);
      }
    }
  }
}

TEST_CASE("transfer permutation") {
  const YoungTableau ta({{1, 2}, {3}});
  const YoungTableau tb({{1, 3}, {2}});
  CHECK(transfer_permutation(ta, ta).is_identity());
  CHECK(transfer_permutation(ta, tb) == cyc("(23)", 3));
  CHECK_THROWS_AS(transfer_permutation(ta, YoungTableau({{1, 2, 3}})), dimension_error);

  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& f : partitions(n)) {
      const auto ts = standard_tableaux(f);
      for (const auto& x : ts) {
        for (const auto& y : ts) {
          const auto p = transfer_permutation(x, y);
          CHECK(p == inverse(transfer_permutation(y, x)));
          // Carries every entry of y onto the entry of x in the same box.
          for (std::size_t r = 0; r < f.rows().size(); ++r) {
            for (std::size_t c = 0; c < f.rows()[r]; ++c) CHECK(p(y.at(r, c)) == x.at(r, c));
          }
        }
      }
    }
  }
}

TEST_CASE("group-algebra elements inside representations") {
  CHECK(ga_to_matrix(full_symmetrizer(3), natural_rep(3)) == symmetrizer_image(natural_rep(3)));
  CHECK(ga_to_matrix(GroupAlgebraElement::identity(3), natural_rep(3)) == RationalMatrix::identity(3));
  CHECK_THROWS_AS(ga_to_matrix(GroupAlgebraElement::identity(4), natural_rep(3)), dimension_error);

  const auto reg = regular_rep(3);
  const auto m = ga_to_matrix(young_operator(YoungTableau({{1, 2}, {3}})), reg);
  CHECK(m * m == m * Rational(3));

  std::mt19937_64 rng(4);
  for (RepKind k : {RepKind::natural, RepKind::regular, RepKind::standard, RepKind::alternating}) {
    const auto r = make_rep(3, k);
    for (int t = 0; t < 10; ++t) {
      const auto x = random_element(rng, 3);
      const auto y = random_element(rng, 3);
      CHECK(ga_to_matrix(x * y, r) == ga_to_matrix(x, r) * ga_to_matrix(y, r));
      CHECK(ga_to_matrix(x + y, r) == ga_to_matrix(x, r) + ga_to_matrix(y, r));
    }
  }
}

TEST_CASE("JSON form") {
  const auto j = to_json(term("e", 3) - term("(13)", 3));
  CHECK(j.at("degree") == 3);
  CHECK(j.at("terms").at("e") == "1");
  CHECK(j.at("terms").at("(13)") == "-1");
}
