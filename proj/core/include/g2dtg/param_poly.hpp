#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "g2dtg/rational.hpp"

namespace g2dtg {

/// Univariate polynomial with rational coefficients in a formal parameter t.
///
/// Dense storage, ascending degree. The coefficient vector never ends in a
/// zero, so the zero polynomial has no coefficients and degree -1.
class ParamPoly {
public:
  ParamPoly() = default;
  ParamPoly(const Rational &constant);
  ParamPoly(int constant) : ParamPoly(Rational(constant)) {}
  /// Coefficients ordered by ascending degree.
  explicit ParamPoly(std::vector<Rational> coefficients);
  ParamPoly(std::initializer_list<Rational> coefficients)
      : ParamPoly(std::vector<Rational>(coefficients)) {}

  /// The polynomial t.
  static ParamPoly variable();
  /// c * t^k.
  static ParamPoly monomial(const Rational &c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  /// Replaces the coefficient of t^k, extending or trimming as needed.
  void set_coefficient(std::size_t k, const Rational &c);

  Rational evaluate(const Rational &t) const;
  Rational evaluate(const BigInt &t) const { return evaluate(Rational(t)); }
  /// p(inner(t)).
  ParamPoly compose(const ParamPoly &inner) const;
  ParamPoly pow(unsigned exponent) const;

  ParamPoly &operator+=(const ParamPoly &o);
  ParamPoly &operator-=(const ParamPoly &o);
  ParamPoly &operator*=(const ParamPoly &o);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly &b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly &b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly &b) { return a *= b; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly &a, const ParamPoly &b) = default;

  /// Human-readable expanded form, highest degree first, e.g. "t^2 - 1".
  std::string to_string(std::string_view var = "t") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const ParamPoly &p);

} // namespace g2dtg
