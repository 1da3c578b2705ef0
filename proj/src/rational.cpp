// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/rational.hpp>

#include <permion/errors.hpp>

#include <cctype>

namespace permion {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw range_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = mp::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw parse_error("malformed rational \"" + std::string(whole) + "\"");
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) throw parse_error("malformed rational \"" + std::string(text) + "\"");
  BigInt d(std::string{den});
  if (d.is_zero()) throw parse_error("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_int(text.substr(0, slash), text), std::move(d));
}

double Rational::to_double() const {
  return static_cast<double>(mp::cpp_rational(num_, den_));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ -= o.num_;
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  if (den_ == 1 && o.den_ == 1) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw range_error("rational division by zero");
  BigInt n = o.num_;
  num_ *= o.den_;
  den_ *= n;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.signum() < 0 ? -r : r; }

}  // namespace permion
