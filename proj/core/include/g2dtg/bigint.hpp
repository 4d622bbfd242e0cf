#pragma once

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace g2dtg {

/// Arbitrary-precision signed integer.
///
/// Thin value type over GMP's mpz_class. All arithmetic is exact; division
/// comes in two explicit flavours (`divexact`, `div_floor`) instead of an
/// ambiguous operator/.
class BigInt {
public:
  BigInt() = default;
  template <std::integral I>
    requires(!std::same_as<I, bool> && sizeof(I) <= sizeof(long))
  BigInt(I v) {
    if constexpr (std::is_signed_v<I>)
      value_ = static_cast<long>(v);
    else
      value_ = static_cast<unsigned long>(v);
  }
  explicit BigInt(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static BigInt parse(std::string_view text);

  std::string to_string() const { return value_.get_str(10); }

  const mpz_class &raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  /// Number of bits in |x|; 0 for zero.
  std::uint64_t bit_length() const;

  bool fits_u64() const { return value_.fits_ulong_p(); }
  std::uint64_t to_u64() const;

  BigInt abs() const { return BigInt(mpz_class(::abs(value_))); }
  BigInt pow(std::uint64_t exponent) const;

  BigInt &operator+=(const BigInt &o) { value_ += o.value_; return *this; }
  BigInt &operator-=(const BigInt &o) { value_ -= o.value_; return *this; }
  BigInt &operator*=(const BigInt &o) { value_ *= o.value_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt &b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt &b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt &b) { return a *= b; }
  BigInt operator-() const { return BigInt(mpz_class(-value_)); }

  friend bool operator==(const BigInt &a, const BigInt &b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt &a, const BigInt &b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

private:
  mpz_class value_;
};

/// a / b, requiring b | a. Throws std::domain_error otherwise.
BigInt divexact(const BigInt &a, const BigInt &b);
/// floor(a / b); b != 0.
BigInt div_floor(const BigInt &a, const BigInt &b);
/// Least non-negative residue of a mod |b|; b != 0.
BigInt mod(const BigInt &a, const BigInt &b);
bool divides(const BigInt &d, const BigInt &n);
/// Non-negative gcd; gcd(0, 0) = 0.
BigInt gcd(const BigInt &a, const BigInt &b);

std::ostream &operator<<(std::ostream &os, const BigInt &v);

} // namespace g2dtg
