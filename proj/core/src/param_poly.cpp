#include "g2dtg/param_poly.hpp"

#include <algorithm>
#include <ostream>

namespace g2dtg {

ParamPoly::ParamPoly(const Rational &constant) {
  if (!constant.is_zero())
    coeffs_.push_back(constant);
}

ParamPoly::ParamPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

ParamPoly ParamPoly::variable() { return ParamPoly({Rational(0), Rational(1)}); }

ParamPoly ParamPoly::monomial(const Rational &c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return ParamPoly(std::move(v));
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Rational ParamPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void ParamPoly::set_coefficient(std::size_t k, const Rational &c) {
  if (k >= coeffs_.size())
    coeffs_.resize(k + 1);
  coeffs_[k] = c;
  trim();
}

Rational ParamPoly::evaluate(const Rational &t) const {
  // Horner
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

ParamPoly ParamPoly::compose(const ParamPoly &inner) const {
  ParamPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += ParamPoly(*it);
  }
  return acc;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u)
      result *= base;
    exponent >>= 1u;
    if (exponent > 0)
      base *= base;
  }
  return result;
}

ParamPoly &ParamPoly::operator+=(const ParamPoly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ParamPoly &ParamPoly::operator-=(const ParamPoly &o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ParamPoly &ParamPoly::operator*=(const ParamPoly &o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto &c : out.coeffs_)
    c = -c;
  return out;
}

std::string ParamPoly::to_string(std::string_view var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational &c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero())
      continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    bool unit = mag == Rational(1);
    if (!unit || k == 0)
      out += mag.to_string();
    if (k > 0) {
      if (!unit)
        out += "*";
      out += var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const ParamPoly &p) {
  return os << p.to_string();
}

} // namespace g2dtg
