#include "g2dtg/number_theory.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace g2dtg {
namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t> &small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i])
        continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Deterministic for n < 3317044064679887385961981 with these bases.
constexpr std::array<unsigned long, 13> kMillerRabinBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const mpz_class &mr_deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981", 10);
  return bound;
}

bool miller_rabin(const mpz_class &n, unsigned long base) {
  mpz_class n_minus_1 = n - 1;
  mpz_class d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class a = base;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1)
    return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1)
      return true;
    if (x == 1)
      return false;
  }
  return false;
}

// Brent's cycle detection on x -> x^2 + c mod n. Returns a nontrivial factor
// or n on failure for this c.
mpz_class brent_rho(const mpz_class &n, unsigned long c) {
  constexpr unsigned long kBatch = 128;
  mpz_class y = 2, x, ys, q = 1, g = 1, tmp;
  unsigned long r = 1;
  auto step = [&](mpz_class &v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        tmp = x - y;
        q = q * ::abs(tmp);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
    }
    r *= 2;
  } while (g == 1);

  if (g == n) {
    // Batched product overshot; replay one step at a time.
    do {
      step(ys);
      tmp = x - ys;
      tmp = ::abs(tmp);
      mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_large(const mpz_class &n, Factorization &out) {
  if (n == 1)
    return;
  if (is_prime(BigInt(n))) {
    out.add(BigInt(n));
    return;
  }
  mpz_class root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_large(root, out);
    factor_large(root, out);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class d = brent_rho(n, c);
    if (d != n) {
      factor_large(d, out);
      factor_large(n / d, out);
      return;
    }
  }
}

} // namespace

unsigned Factorization::exponent_of(const BigInt &p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

BigInt Factorization::product() const {
  BigInt acc(1);
  for (const auto &[p, e] : factors_)
    acc *= p.pow(e);
  return acc;
}

std::string Factorization::to_string() const {
  if (factors_.empty())
    return "1";
  std::string out;
  for (const auto &[p, e] : factors_) {
    if (!out.empty())
      out += " * ";
    out += p.to_string();
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

bool is_prime(const BigInt &n) {
  const mpz_class &v = n.raw();
  if (v < 2)
    return false;
  for (unsigned long p : kMillerRabinBases) {
    if (v == p)
      return true;
    if (mpz_divisible_ui_p(v.get_mpz_t(), p))
      return false;
  }
  if (v < mr_deterministic_bound()) {
    for (unsigned long base : kMillerRabinBases)
      if (!miller_rabin(v, base))
        return false;
    return true;
  }
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

Factorization factorize(const BigInt &n) {
  if (n.sign() <= 0)
    throw std::domain_error("factorize requires n >= 1, got " + n.to_string());
  Factorization out;
  mpz_class rest = n.raw();
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0)
      break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0)
      out.add(BigInt(std::uint64_t{p}), e);
  }
  factor_large(rest, out);
  return out;
}

BigInt cyclic_order(const BigInt &n, const BigInt &i) {
  if (n.sign() <= 0)
    throw std::domain_error("cyclic group order must be positive");
  return divexact(n, gcd(n, i));
}

std::optional<std::uint64_t> is_power_of(const BigInt &n, const BigInt &p) {
  if (n.sign() <= 0 || p < BigInt(2))
    return std::nullopt;
  BigInt rest = n;
  std::uint64_t e = 0;
  while (!rest.is_one()) {
    if (!divides(p, rest))
      return std::nullopt;
    rest = divexact(rest, p);
    ++e;
  }
  return e;
}

std::strong_ordering exp_compare(const BigInt &base_a, const BigInt &exp_a,
                                 const BigInt &base_b, const BigInt &exp_b) {
  if (base_a.sign() <= 0 || base_b.sign() <= 0 || exp_a.sign() < 0 ||
      exp_b.sign() < 0)
    throw std::domain_error("exp_compare requires bases >= 1 and exponents >= 0");

  const bool a_is_one = base_a.is_one() || exp_a.is_zero();
  const bool b_is_one = base_b.is_one() || exp_b.is_zero();
  if (a_is_one || b_is_one) {
    if (a_is_one && b_is_one)
      return std::strong_ordering::equal;
    return a_is_one ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  // For x >= 2 with L bits, 2^(L-1) <= x < 2^L.
  const BigInt bits_a(base_a.bit_length());
  const BigInt bits_b(base_b.bit_length());
  const BigInt a_hi = bits_a * exp_a;             // a < 2^a_hi
  const BigInt a_lo = (bits_a - 1) * exp_a;       // a >= 2^a_lo
  const BigInt b_hi = bits_b * exp_b;
  const BigInt b_lo = (bits_b - 1) * exp_b;
  if (a_hi <= b_lo)
    return std::strong_ordering::less;
  if (b_hi <= a_lo)
    return std::strong_ordering::greater;

  if (!exp_a.fits_u64() || !exp_b.fits_u64())
    throw std::length_error("exp_compare: exponent too large for exact powering");
  return base_a.pow(exp_a.to_u64()) <=> base_b.pow(exp_b.to_u64());
}

} // namespace g2dtg
