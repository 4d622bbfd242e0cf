#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "g2dtg/bigint.hpp"

namespace g2dtg {

/// Prime factorization: prime -> exponent, primes ascending.
class Factorization {
public:
  using Map = std::map<BigInt, unsigned>;

  Factorization() = default;
  explicit Factorization(Map factors) : factors_(std::move(factors)) {}

  const Map &factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  unsigned exponent_of(const BigInt &p) const;
  /// Product of prime^exponent over all entries.
  BigInt product() const;
  /// "1", "2269", "7^2 * 43".
  std::string to_string() const;

  void add(const BigInt &prime, unsigned exponent = 1) { factors_[prime] += exponent; }

  friend bool operator==(const Factorization &, const Factorization &) = default;

private:
  Map factors_;
};

/// Deterministic primality test.
///
/// Miller-Rabin with the first 13 prime bases below 3.3e24 (deterministic in
/// that range); GMP's BPSW-based test above it.
bool is_prime(const BigInt &n);

/// Complete factorization of n >= 1: trial division to 10^6, then Brent's
/// variant of Pollard rho with fixed seeds. Throws std::domain_error for n <= 0.
Factorization factorize(const BigInt &n);

/// Order of the i-th power of a generator of a cyclic group of order n,
/// i.e. n / gcd(n, i). Requires n >= 1.
BigInt cyclic_order(const BigInt &n, const BigInt &i);

/// e with p^e = n, if any. Requires n >= 1, p >= 2.
std::optional<std::uint64_t> is_power_of(const BigInt &n, const BigInt &p);

/// Exact comparison of base_a^exp_a with base_b^exp_b (bases >= 1, exps >= 0).
///
/// Bit-length bounds decide most inputs; the remainder is settled by exact
/// powering, which throws std::length_error if an exponent exceeds 64 bits.
std::strong_ordering exp_compare(const BigInt &base_a, const BigInt &exp_a,
                                 const BigInt &base_b, const BigInt &exp_b);

} // namespace g2dtg
