#include "g2dtg/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace g2dtg {

BigInt BigInt::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size())
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("not a decimal integer: '" + s + "'");
  if (s[0] == '+')
    s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

std::uint64_t BigInt::bit_length() const {
  if (is_zero())
    return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::uint64_t BigInt::to_u64() const {
  if (!fits_u64())
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return value_.get_ui();
}

BigInt BigInt::pow(std::uint64_t exponent) const {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), exponent);
  return BigInt(std::move(out));
}

BigInt divexact(const BigInt &a, const BigInt &b) {
  if (b.is_zero() || !divides(b, a))
    throw std::domain_error("inexact division " + a.to_string() + " / " +
                            b.to_string());
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(out));
}

BigInt div_floor(const BigInt &a, const BigInt &b) {
  if (b.is_zero())
    throw std::domain_error("division by zero");
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(out));
}

BigInt mod(const BigInt &a, const BigInt &b) {
  if (b.is_zero())
    throw std::domain_error("modulus is zero");
  mpz_class out;
  mpz_mod(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(out));
}

bool divides(const BigInt &d, const BigInt &n) {
  if (d.is_zero())
    return n.is_zero();
  return mpz_divisible_p(n.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

BigInt gcd(const BigInt &a, const BigInt &b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(out));
}

std::ostream &operator<<(std::ostream &os, const BigInt &v) {
  return os << v.to_string();
}

} // namespace g2dtg
