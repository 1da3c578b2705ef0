// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace permion {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)) {}
  // Throws range_error on a zero denominator.
  Rational(BigInt numerator, BigInt denominator);

  // Parses "p", "-p" or "p/q". Throws parse_error.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int signum() const noexcept { return num_.sign(); }

  double to_double() const;
  // Lowest-term text: "3", "-1/2".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws range_error on division by zero.
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rational abs(const Rational& r);

}  // namespace permion
