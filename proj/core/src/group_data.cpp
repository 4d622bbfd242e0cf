#include "g2dtg/group_data.hpp"

#include <stdexcept>

#include "g2dtg/number_theory.hpp"

namespace g2dtg {
namespace {

ParamPoly g2_order(const ParamPoly &q) {
  return q.pow(6) * (q.pow(6) - 1) * (q.pow(2) - 1);
}

CaseFamily make_subfield() {
  const ParamPoly r = ParamPoly::variable();
  CaseFamily f;
  f.kind = FamilyKind::Subfield;
  f.variable = "r";
  f.q = r.pow(2);
  f.group_order = g2_order(f.q);
  f.subgroup_order = g2_order(r);
  f.index = r.pow(6) * (r.pow(6) + 1) * (r.pow(2) + 1);
  return f;
}

CaseFamily make_ree() {
  const ParamPoly m = ParamPoly::variable();
  CaseFamily f;
  f.kind = FamilyKind::Ree;
  f.variable = "m";
  f.q = ParamPoly(3) * m.pow(2);
  f.group_order = g2_order(f.q);
  f.subgroup_order = f.q.pow(3) * (f.q.pow(3) + 1) * (f.q - 1);
  f.index = f.q.pow(3) * (f.q.pow(3) - 1) * (f.q + 1);
  return f;
}

BigInt eval_int(const ParamPoly &p, const BigInt &t) { return p.evaluate(t).to_integer(); }

} // namespace

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::Subfield ? "subfield" : "ree";
}

FamilyKind parse_family(std::string_view text) {
  if (text == "subfield")
    return FamilyKind::Subfield;
  if (text == "ree")
    return FamilyKind::Ree;
  throw std::invalid_argument("unknown case family '" + std::string(text) +
                              "' (expected subfield or ree)");
}

CaseParameter CaseParameter::from_n(FamilyKind kind, std::uint32_t n) {
  CaseParameter p;
  p.kind = kind;
  p.n = n;
  if (kind == FamilyKind::Subfield) {
    if (n < 1)
      throw InadmissibleParameter("subfield family requires n >= 1");
    p.t = BigInt(3).pow(n);
    p.q = p.t * p.t;
  } else {
    p.t = BigInt(3).pow(n);
    p.q = BigInt(3) * p.t * p.t;
  }
  return p;
}

CaseParameter CaseParameter::from_value(FamilyKind kind, const BigInt &value) {
  auto e = is_power_of(value, BigInt(3));
  if (!e)
    throw InadmissibleParameter(std::string(to_string(kind)) + " parameter " +
                                value.to_string() + " is not a power of 3");
  if (kind == FamilyKind::Subfield) {
    if (*e < 1)
      throw InadmissibleParameter("subfield parameter r must be 3^n with n >= 1");
    return from_n(kind, static_cast<std::uint32_t>(*e));
  }
  if (*e % 2 == 0)
    throw InadmissibleParameter("ree parameter q must be an odd power of 3, got " +
                                value.to_string());
  return from_n(kind, static_cast<std::uint32_t>((*e - 1) / 2));
}

const CaseFamily &case_family(FamilyKind kind) {
  static const CaseFamily subfield = make_subfield();
  static const CaseFamily ree = make_ree();
  return kind == FamilyKind::Subfield ? subfield : ree;
}

BigInt group_order(const CaseParameter &param) {
  return eval_int(case_family(param.kind).group_order, param.t);
}

BigInt subgroup_order(const CaseParameter &param) {
  return eval_int(case_family(param.kind).subgroup_order, param.t);
}

BigInt coset_index(const CaseParameter &param) {
  return eval_int(case_family(param.kind).index, param.t);
}

BigInt coset_index(const CaseFamily &family, const BigInt &value) {
  return eval_int(family.index, CaseParameter::from_value(family.kind, value).t);
}

std::vector<OuterStructure> outer_subgroup_options(const CaseParameter &param) {
  const std::uint64_t f = param.field_degree();
  std::vector<OuterStructure> out;
  for (std::uint64_t d = 1; d <= 2 * f; ++d)
    if ((2 * f) % d == 0)
      out.push_back({d, f % d != 0});
  return out;
}

TorusData torus_orders(const BigInt &r) {
  auto e = is_power_of(r, BigInt(3));
  if (!e || *e < 1)
    throw InadmissibleParameter("torus_orders requires r = 3^n, n >= 1");
  const BigInt q = r * r;
  const BigInt r3 = r.pow(3);
  TorusData d;
  d.r = r;
  d.kappa_order = q.pow(3) - 1;
  const BigInt theta_exp = q * q + q + 1;
  d.theta_order = cyclic_order(d.kappa_order, theta_exp);
  d.eta_order = cyclic_order(d.kappa_order, theta_exp * (r - 1));
  d.gamma_order = cyclic_order(d.kappa_order, theta_exp * (r + 1));
  d.sigma_order = cyclic_order(d.kappa_order, (r + 1) * (r3 - 1));
  d.tau_order = cyclic_order(d.kappa_order, (r - 1) * (r3 + 1));

  if (d.theta_order != q - 1 || d.eta_order != r + 1 || d.gamma_order != r - 1 ||
      d.sigma_order != r * r - r + 1 || d.tau_order != r * r + r + 1)
    throw std::logic_error("torus element orders disagree with closed forms at r = " +
                           r.to_string());
  return d;
}

} // namespace g2dtg
