#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "chowbound/big_int.hpp"

namespace chowbound {

// Exact rational number. Invariant: denominator > 0, gcd(|num|, den) == 1,
// and zero is represented as 0/1. Every constructor and operation restores
// this canonical form, so operator== is plain memberwise comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  static Rational from_string(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  Rational pow(long long e) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

Rational abs(const Rational& q);
std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace chowbound
