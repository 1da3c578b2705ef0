// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/permutation.hpp>
#include <permion/representation.hpp>

#include <doctest.h>

#include <set>

using namespace permion;

namespace {

Permutation cyc(const char* text, std::size_t n) { return parse_cycles(text, n); }

ElementOrdering s3_word_ordering() {
  std::vector<Permutation> els;
  for (const char* w : {"e", "(12)", "(13)*(12)", "(13)", "(12)*(13)", "(23)"}) els.push_back(parse_word(w, 3));
  return ElementOrdering(els);
}

RationalMatrix ones(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  }
  return m;
}

RationalMatrix column(const std::vector<int>& v) {
  RationalMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

const RepKind all_kinds[] = {RepKind::trivial, RepKind::alternating, RepKind::natural, RepKind::regular,
                             RepKind::standard};

}  // namespace

TEST_CASE("trivial and alternating") {
  const auto triv = one_dim_rep(3, RepKind::trivial);
  const auto alt = one_dim_rep(3, RepKind::alternating);
  CHECK(triv.at(cyc("(12)", 3)) == RationalMatrix{{1}});
  CHECK(alt.at(cyc("(12)", 3)) == RationalMatrix{{-1}});
  CHECK(alt.at(cyc("(13)", 3)) == RationalMatrix{{-1}});
  CHECK(alt.at(cyc("(123)", 3)) == RationalMatrix{{1}});
  CHECK_THROWS_AS(one_dim_rep(3, RepKind::natural), invalid_argument);
}

TEST_CASE("natural representation of S_3 golden matrices") {
  const auto nat = natural_rep(3);
  const RationalMatrix d12 = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const RationalMatrix d23 = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  CHECK(nat.at(cyc("(12)", 3)) == d12);
  CHECK(nat.at(cyc("(23)", 3)) == d23);
  CHECK(nat.at(Permutation::identity(3)) == RationalMatrix::identity(3));
  // (12) swaps the first two components of a vector.
  CHECK(d12 * column({7, 8, 9}) == column({8, 7, 9}));
  CHECK_THROWS_AS(nat.at(Permutation::identity(4)), dimension_error);
}

TEST_CASE("regular representation under a word ordering") {
  const auto reg = regular_rep(3, s3_word_ordering());
  const RationalMatrix want = {
      {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0},
  };
  CHECK(reg.at(cyc("(12)", 3)) == want);
  CHECK(reg.at(Permutation::identity(3)) == RationalMatrix::identity(6));
  CHECK(verify_homomorphism(reg).ok);
  for (const auto& g : enumerate_group(3)) {
    if (!g.is_identity()) CHECK(trace(reg.at(g)) == Rational(0));
  }
}

TEST_CASE("regular representation sends g' to g*g'") {
  const auto ord = ElementOrdering::lexicographic(3);
  const auto reg = regular_rep(3, ord);
  for (const auto& g : ord.elements()) {
    for (const auto& h : ord.elements()) {
      const auto& m = reg.at(g);
      CHECK(m(ord.index_of(g * h), ord.index_of(h)) == Rational(1));
    }
  }
}

TEST_CASE("ordering validation") {
  auto els = enumerate_group(3);
  els.pop_back();
  CHECK_THROWS_AS(ElementOrdering{els}, invalid_argument);
  els.push_back(els.front());
  CHECK_THROWS_AS(ElementOrdering{els}, invalid_argument);
}

TEST_CASE("homomorphism holds for every built representation") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (RepKind k : all_kinds) {
      const auto rep = make_rep(n, k);
      const auto report = verify_homomorphism(rep);
      CHECK_MESSAGE(report.ok, to_string(k), " n=", n);
      CHECK(report.identity_ok);
      CHECK(report.pairs_checked == rep.order() * rep.order());
    }
  }
}

TEST_CASE("corrupted representation is rejected") {
  const auto nat = natural_rep(3);
  auto bad = nat.at(cyc("(12)", 3));
  bad(2, 2) = -1;
  const auto broken = nat.with_matrix(cyc("(12)", 3), bad);
  CHECK(broken.label() == RepKind::custom);
  const auto report = verify_homomorphism(broken);
  CHECK_FALSE(report.ok);
  REQUIRE(report.first_failure.has_value());
  const auto [a, b] = *report.first_failure;
  CHECK_FALSE(broken.at(a * b) == broken.at(a) * broken.at(b));

  auto bad_identity = nat.with_matrix(Permutation::identity(3), RationalMatrix::identity(3) * Rational(2));
  CHECK_FALSE(verify_homomorphism(bad_identity).identity_ok);
}

TEST_CASE("characters") {
  const auto nat = character(natural_rep(3));
  CHECK(nat.at(CycleType({1, 1, 1})) == Rational(3));
  CHECK(nat.at(CycleType({2, 1})) == Rational(1));
  CHECK(nat.at(CycleType({3})) == Rational(0));

  const auto reg = character(regular_rep(3));
  CHECK(reg.at(CycleType({1, 1, 1})) == Rational(6));
  CHECK(reg.at(CycleType({2, 1})) == Rational(0));
  CHECK(reg.at(CycleType({3})) == Rational(0));

  CHECK(trace(natural_rep(3).at(cyc("(12)", 3))) == Rational(1));
  CHECK(trace(regular_rep(3).at(cyc("(12)", 3))) == Rational(0));

  // natural = trivial + standard, class by class.
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto cn = character(natural_rep(n));
    const auto cs = character(standard_rep(n));
    for (const auto& [cls, v] : cn) CHECK(v == cs.at(cls) + Rational(1));
  }
}

TEST_CASE("class function check flags a non-representation") {
  const auto nat = natural_rep(3);
  const auto skewed = nat.with_matrix(cyc("(12)", 3), RationalMatrix::identity(3));
  CHECK_THROWS_AS(character(skewed), verification_error);
}

TEST_CASE("symmetrizer and antisymmetrizer") {
  const auto nat = natural_rep(3);
  CHECK(symmetrizer_image(nat) == ones(3) * Rational(2));
  CHECK(antisymmetrizer_image(nat).is_zero());
  for (std::size_t n = 3; n <= 4; ++n) {
    for (RepKind k : all_kinds) {
      const auto rep = make_rep(n, k);
      const Rational h(static_cast<std::int64_t>(rep.order()));
      const auto s = symmetrizer_image(rep);
      const auto a = antisymmetrizer_image(rep);
      CHECK(s * s == s * h);
      CHECK(a * a == a * h);
      CHECK((s * a).is_zero());
    }
  }
}

TEST_CASE("standard representation") {
  const auto std3 = standard_rep(3);
  CHECK(std3.dim() == 2);
  const RationalMatrix d12 = {{-1, 1}, {0, 1}};
  CHECK(std3.at(cyc("(12)", 3)) == d12);
  CHECK(std3.at(cyc("(12)", 3)) * std3.at(cyc("(12)", 3)) == RationalMatrix::identity(2));
  CHECK(std3.at(cyc("(13)", 3)) * std3.at(cyc("(13)", 3)) == RationalMatrix::identity(2));
  CHECK(verify_homomorphism(std3).ok);

  // The change of basis splits off the trivial block for every element.
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = standard_change_of_basis(n);
    const auto binv = mat_inverse(b);
    const auto nat = natural_rep(n);
    const auto st = standard_rep(n);
    for (const auto& g : enumerate_group(n)) {
      const auto c = binv * nat.at(g) * b;
      CHECK(c(0, 0) == Rational(1));
      for (std::size_t k = 1; k < n; ++k) {
        CHECK(c(0, k).is_zero());
        CHECK(c(k, 0).is_zero());
      }
      CHECK(block(c, 1, 1, n - 1, n - 1) == st.at(g));
    }
  }
  CHECK_THROWS_AS(standard_rep(1), range_error);
}

TEST_CASE("uniform vector is invariant") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto nat = natural_rep(n);
    const auto u = column(std::vector<int>(n, 1));
    for (const auto& g : nat.elements()) CHECK(nat.at(g) * u == u);
  }
}

TEST_CASE("group action axioms on a spanning set") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto nat = natural_rep(n);
    std::vector<RationalMatrix> basis;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> v(n, 0);
      v[k] = 1;
      basis.push_back(column(v));
    }
    for (const auto& v : basis) {
      CHECK(nat.at(Permutation::identity(n)) * v == v);
      for (const auto& g : nat.elements()) {
        for (const auto& h : nat.elements()) CHECK(nat.at(g * h) * v == nat.at(g) * (nat.at(h) * v));
      }
    }
  }
}

TEST_CASE("faithfulness") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (RepKind k : {RepKind::natural, RepKind::regular}) {
      const auto rep = make_rep(n, k);
      std::set<std::string> seen;
      for (const auto& m : rep.matrices()) seen.insert(to_json(m).dump());
      CHECK(seen.size() == rep.order());
    }
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto triv = one_dim_rep(n, RepKind::trivial);
    CHECK(triv.at(Permutation::identity(n)) == triv.at(cyc("(12)", n)));
  }
}

TEST_CASE("regular decomposition bookkeeping") {
  auto r1 = verify_regular_decomposition(1, {1});
  CHECK(r1.ok);
  CHECK(r1.group_order == 1);

  auto r3 = verify_regular_decomposition(3, {1, 1, 2});
  CHECK(r3.ok);
  CHECK(r3.sum_of_squares == 6);
  CHECK(r3.regular_identity_character == 6);
  CHECK(r3.character_sum == 6);

  auto r5 = verify_regular_decomposition(5, {1, 4, 5, 6, 5, 4, 1});
  CHECK(r5.ok);
  CHECK(r5.sum_of_squares == 120);

  CHECK_FALSE(verify_regular_decomposition(3, {1, 1, 1}).ok);
  CHECK_FALSE(verify_regular_decomposition(4, {1, 3, 2, 3}).ok);
}

TEST_CASE("rep kind names") {
  for (RepKind k : all_kinds) CHECK(rep_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(rep_kind_from_string("spinor"), parse_error);
}

TEST_CASE("JSON output keys matrices by cycle notation") {
  const auto j = to_json(natural_rep(2));
  CHECK(j.at("dim") == 2);
  CHECK(j.at("matrices").contains("(12)"));
  CHECK(j.at("matrices").contains("e"));
}
