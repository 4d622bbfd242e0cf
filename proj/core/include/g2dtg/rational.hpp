#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "g2dtg/bigint.hpp"

namespace g2dtg {

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(const BigInt &integer) : value_(integer.raw()) {}
  Rational(int integer) : value_(integer) {}
  /// Throws std::domain_error when the denominator is zero.
  Rational(const BigInt &numerator, const BigInt &denominator);

  BigInt numerator() const { return BigInt(mpz_class(value_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(value_.get_den())); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Numerator of an integral value; throws std::domain_error otherwise.
  BigInt to_integer() const;

  /// "n" or "n/d".
  std::string to_string() const;

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &v);

} // namespace g2dtg
