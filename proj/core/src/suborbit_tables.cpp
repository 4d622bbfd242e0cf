#include "g2dtg/suborbit_tables.hpp"

#include <algorithm>
#include <sstream>

namespace g2dtg {
namespace {

using P = ParamPoly;

const Rational kHalf(BigInt(1), BigInt(2));

ZClassDescriptor unipotent(std::string label) {
  return {std::move(label), ZOrder::Three, std::nullopt};
}
ZClassDescriptor unknown(std::string label) {
  return {std::move(label), ZOrder::Unknown, std::nullopt};
}
ZClassDescriptor torus(std::string label, TorusBase base) {
  return {std::move(label), ZOrder::TorusPower, base};
}

void add_row(SuborbitTable &t, ZClassDescriptor z, int half, std::string length_formula,
             P length, std::string count_formula, P count) {
  SuborbitRow row;
  row.id = z.label.empty() ? length_formula : z.label;
  if (half > 0)
    row.id += "#" + std::to_string(half);
  row.z = std::move(z);
  row.half = half;
  row.length_formula = std::move(length_formula);
  row.length = std::move(length);
  row.count_formula = std::move(count_formula);
  row.count = std::move(count);
  t.rows.push_back(std::move(row));
}

SuborbitTable subfield_table() {
  const P r = P::variable();
  const P r2 = r.pow(2), r3 = r.pow(3), r4 = r.pow(4), r5 = r.pow(5), r6 = r.pow(6);
  const P one(1);
  const P half(kHalf);
  const P u6 = r6 - 1;  // r^6 - 1

  SuborbitTable t;
  t.family = FamilyKind::Subfield;

  add_row(t, {"1", ZOrder::One, std::nullopt}, 0, "1", one, "1", one);

  // Unipotent classes.
  add_row(t, unipotent("x_{3a+2b}(1)"), 0, "(r^6-1)", u6, "1", one);
  add_row(t, unipotent("x_{2a+b}(1)"), 0, "(r^6-1)", u6, "1", one);
  add_row(t, unipotent("x_{2a+b}(1)x_{3a+2b}(1)"), 0, "(r^6-1)(r^2-1)", u6 * (r2 - 1),
          "1", one);
  for (int h : {1, 2})
    add_row(t, unipotent("x_{a+b}(1)x_{3a+b}(1)"), h, "r^2(r^6-1)(r^2-1)/2",
            half * r2 * u6 * (r2 - 1), "1", one);
  // Regular unipotent; its order is not 3 in characteristic 3.
  add_row(t, unknown("x_a(1)x_b(1)"), 0, "r^4(r^6-1)(r^2-1)", r4 * u6 * (r2 - 1), "1",
          one);

  // Classes through the involution h(-1,-1,1).
  add_row(t, {"h(-1,-1,1)", ZOrder::Two, std::nullopt}, 0, "r^4(r^4+r^2+1)",
          r4 * (r4 + r2 + 1), "1", one);
  add_row(t, unknown("h(-1,-1,1)x_b(1)"), 0, "r^4(r^6-1)", r4 * u6, "1", one);
  add_row(t, unknown("h(-1,-1,1)x_{2a+b}(1)"), 0, "r^4(r^6-1)", r4 * u6, "1", one);
  for (int h : {1, 2})
    add_row(t, unknown("h(-1,-1,1)x_b(1)x_{2a+b}(1)"), h, "r^4(r^6-1)(r^2-1)/2",
            half * r4 * u6 * (r2 - 1), "1", one);

  // gamma block, order r - 1.
  const P gamma_count = half * (r - 3);
  add_row(t, torus("h_gamma(i,-2i,i)", TorusBase::Gamma), 0, "r^5(r^3-1)(r^2-r+1)",
          r5 * (r3 - 1) * (r2 - r + 1), "(r-3)/2", gamma_count);
  add_row(t, unknown("h_gamma(i,-2i,i)x_{3a+2b}(1)"), 0, "r^5(r^6-1)(r-1)",
          r5 * u6 * (r - 1), "(r-3)/2", gamma_count);
  add_row(t, torus("h_gamma(i,-i,0)", TorusBase::Gamma), 0, "r^5(r^3-1)(r^2-r+1)",
          r5 * (r3 - 1) * (r2 - r + 1), "(r-3)/2", gamma_count);
  add_row(t, unknown("h_gamma(i,-i,0)x_{2a+b}(1)"), 0, "r^5(r^6-1)(r-1)",
          r5 * u6 * (r - 1), "(r-3)/2", gamma_count);
  add_row(t, torus("h_gamma(i,j,-i-j)", TorusBase::Gamma), 0,
          "r^6(r^3-1)(r^2-r+1)(r-1)", r6 * (r3 - 1) * (r2 - r + 1) * (r - 1),
          "(r^2-8r+15)/12", P(Rational(BigInt(1), BigInt(12))) * (r2 - P(8) * r + 15));

  // eta block, order r + 1.
  const P eta_count = half * (r - 1);
  add_row(t, torus("h_eta(i,-2i,i)", TorusBase::Eta), 0, "r^5(r^3+1)(r^2+r+1)",
          r5 * (r3 + 1) * (r2 + r + 1), "(r-1)/2", eta_count);
  add_row(t, unknown("h_eta(i,-2i,i)x_{3a+2b}(1)"), 0, "r^5(r^6-1)(r+1)",
          r5 * u6 * (r + 1), "(r-1)/2", eta_count);
  add_row(t, torus("h_eta(i,-i,0)", TorusBase::Eta), 0, "r^5(r^3+1)(r^2+r+1)",
          r5 * (r3 + 1) * (r2 + r + 1), "(r-1)/2", eta_count);
  add_row(t, unknown("h_eta(i,-i,0)x_{2a+b}(1)"), 0, "r^5(r^6-1)(r+1)",
          r5 * u6 * (r + 1), "(r-1)/2", eta_count);
  add_row(t, torus("h_eta(i,j,-i-j)", TorusBase::Eta), 0, "r^6(r^3+1)(r^2+r+1)(r+1)",
          r6 * (r3 + 1) * (r2 + r + 1) * (r + 1), "(r^2-4r+3)/12",
          P(Rational(BigInt(1), BigInt(12))) * (r2 - P(4) * r + 3));

  // theta, tau, sigma.
  const P theta_count = P(Rational(BigInt(1), BigInt(4))) * (r - 1).pow(2);
  add_row(t, torus("h_theta(i,(r-1)i,-ri)", TorusBase::Theta), 0, "r^6(r^6-1)", r6 * u6,
          "(r-1)^2/4", theta_count);
  add_row(t, torus("h_theta(i,ri,-(r+1)i)", TorusBase::Theta), 0, "r^6(r^6-1)", r6 * u6,
          "(r-1)^2/4", theta_count);
  add_row(t, torus("h_tau(i,ri,r^2i)", TorusBase::Tau), 0, "r^6(r^3-1)(r^2-1)(r+1)",
          r6 * (r3 - 1) * (r2 - 1) * (r + 1), "r(r+1)/6",
          P(Rational(BigInt(1), BigInt(6))) * r * (r + 1));
  add_row(t, torus("h_sigma(i,-ri,r^2i)", TorusBase::Sigma), 0, "r^6(r^3+1)(r^2-1)(r-1)",
          r6 * (r3 + 1) * (r2 - 1) * (r - 1), "r(r-1)/6",
          P(Rational(BigInt(1), BigInt(6))) * r * (r - 1));
  return t;
}

SuborbitTable ree_table() {
  const P m = P::variable();
  const P q = P(3) * m.pow(2);
  const P q2 = q.pow(2), q3 = q.pow(3);
  const P one(1);
  const P half(kHalf);
  const P sixth(Rational(BigInt(1), BigInt(6)));
  const P big = (q3 + 1) * (q - 1);  // (q^3+1)(q-1) = |H| / q^3

  SuborbitTable t;
  t.family = FamilyKind::Ree;
  const ZClassDescriptor none{};

  add_row(t, {"1", ZOrder::One, std::nullopt}, 0, "1", one, "1", one);
  add_row(t, none, 0, "(q^3+1)(q-1)", big, "1", one);
  for (int h : {1, 2})
    add_row(t, none, h, "q(q^3+1)(q-1)/2", half * q * big, "1", one);
  add_row(t, none, 0, "q^2(q^3+1)(q-1)", q2 * big, "1", one);
  add_row(t, none, 0, "q^2(q^2-q+1)", q2 * (q2 - q + 1), "1", one);
  for (int h : {1, 2})
    add_row(t, none, h, "q^2(q^3+1)(q-1)/2", half * q2 * big, "1", one);
  add_row(t, none, 0, "q^3(q^3+1)", q3 * (q3 + 1), "(q-3)/2", half * (q - 3));
  add_row(t, none, 0, "q^3(q^2-q+1)(q-1)", q3 * (q2 - q + 1) * (q - 1), "(q-3)/6",
          sixth * (q - 3));
  add_row(t, none, 0, "q^3(q^2-1)(q-3m+1)", q3 * (q2 - 1) * (q - P(3) * m + 1),
          "(q-3m)/6", sixth * (q - P(3) * m));
  add_row(t, none, 0, "q^3(q^2-1)(q+3m+1)", q3 * (q2 - 1) * (q + P(3) * m + 1),
          "(q+3m)/6", sixth * (q + P(3) * m));
  return t;
}

} // namespace

std::string_view to_string(TorusBase base) {
  switch (base) {
  case TorusBase::Gamma: return "gamma";
  case TorusBase::Eta: return "eta";
  case TorusBase::Theta: return "theta";
  case TorusBase::Sigma: return "sigma";
  case TorusBase::Tau: return "tau";
  }
  return "?";
}

const SuborbitRow *SuborbitTable::find(std::string_view id) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const auto &r) { return r.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

SuborbitRow *SuborbitTable::find(std::string_view id) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const auto &r) { return r.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

const ConcreteRow *ConcreteTable::find(std::string_view id) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const auto &r) { return r.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

SuborbitTable build_table(FamilyKind family) {
  return family == FamilyKind::Subfield ? subfield_table() : ree_table();
}

ConcreteTable instantiate(const SuborbitTable &table, const CaseParameter &param) {
  if (table.family != param.kind)
    throw std::invalid_argument("parameter family does not match table family");
  ConcreteTable ct;
  ct.param = param;
  ct.group_order = group_order(param);
  ct.subgroup_order = subgroup_order(param);
  ct.index = coset_index(param);

  for (const auto &row : table.rows) {
    const Rational count = row.count.evaluate(param.t);
    if (!count.is_integer() || count.sign() < 0)
      throw TranscriptionError("row '" + row.id + "': count " + count.to_string() +
                               " at " + std::string(to_string(param.kind)) + " parameter " +
                               param.natural_value().to_string() +
                               " is not a non-negative integer");
    if (count.is_zero())
      continue;
    const Rational length = row.length.evaluate(param.t);
    if (!length.is_integer() || length.sign() <= 0)
      throw TranscriptionError("row '" + row.id + "': length " + length.to_string() +
                               " is not a positive integer");
    ct.rows.push_back({row.id, row.z, row.length_formula, length.to_integer(),
                       count.to_integer()});
  }
  return ct;
}

MassCheck verify_mass(const ConcreteTable &ct) {
  MassCheck m;
  for (const auto &row : ct.rows)
    m.total += row.length * row.count;
  m.index = ct.index;
  m.residual = m.total - m.index;
  m.holds = m.residual.is_zero();
  return m;
}

bool verify_mass_symbolic(const SuborbitTable &table, const ParamPoly &index) {
  ParamPoly total;
  for (const auto &row : table.rows)
    total += row.length * row.count;
  return total == index;
}

bool verify_mass_symbolic(const SuborbitTable &table) {
  return verify_mass_symbolic(table, case_family(table.family).index);
}

BigInt stabilizer_order(const ConcreteTable &ct, const ConcreteRow &row) {
  if (row.length.sign() <= 0 || !divides(row.length, ct.subgroup_order))
    throw TableCorruption("row '" + row.id + "': length " + row.length.to_string() +
                          " does not divide |H| = " + ct.subgroup_order.to_string());
  return divexact(ct.subgroup_order, row.length);
}

BigInt suborbit_count(const ConcreteTable &ct) {
  BigInt total;
  for (const auto &row : ct.rows)
    total += row.count;
  return total;
}

std::vector<BigInt> distinct_nontrivial_lengths(const ConcreteTable &ct) {
  std::vector<BigInt> out;
  for (const auto &row : ct.rows)
    if (!row.trivial())
      out.push_back(row.length);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string dump_table(const ConcreteTable &ct) {
  std::ostringstream os;
  os << "# case=" << to_string(ct.param.kind)
     << "\tparameter=" << ct.param.natural_value() << "\tindex=" << ct.index << '\n';
  for (const auto &row : ct.rows)
    os << row.id << '\t' << row.length << '\t' << row.count << '\n';
  return os.str();
}

} // namespace g2dtg
