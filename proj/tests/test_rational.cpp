// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/errors.hpp>
#include <permion/rational.hpp>

#include <doctest.h>

#include <random>

using namespace permion;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == 1);
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), range_error);
}

TEST_CASE("arithmetic") {
  const Rational half(BigInt(1), BigInt(2));
  const Rational third(BigInt(1), BigInt(3));
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(half + half == Rational(1));
  CHECK(half < third + third);
  CHECK_THROWS_AS(half / Rational(0), range_error);
  Rational x = half;
  x /= x;
  CHECK(x == Rational(1));
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-1/2").str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("4/-2"), parse_error);
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse(""), parse_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), parse_error);
  CHECK_THROWS_AS(Rational::parse("/3"), parse_error);
}

TEST_CASE("field laws on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int t = 0; t < 200; ++t) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("to_double") {
  CHECK(Rational(BigInt(1), BigInt(4)).to_double() == doctest::Approx(0.25));
  CHECK(Rational(BigInt(-2), BigInt(3)).to_double() == doctest::Approx(-2.0 / 3.0));
}
