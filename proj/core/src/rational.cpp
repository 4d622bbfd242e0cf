#include "g2dtg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace g2dtg {

Rational::Rational(const BigInt &numerator, const BigInt &denominator) {
  if (denominator.is_zero())
    throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator.raw(), denominator.raw());
  value_.canonicalize();
}

BigInt Rational::to_integer() const {
  if (!is_integer())
    throw std::domain_error("not an integer: " + to_string());
  return numerator();
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream &operator<<(std::ostream &os, const Rational &v) {
  return os << v.to_string();
}

} // namespace g2dtg
