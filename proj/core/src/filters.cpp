#include "g2dtg/filters.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2dtg {
namespace {

template <typename Range, typename Fn>
std::string join(const Range &items, Fn &&fmt, std::string_view sep = ", ") {
  std::string out;
  for (const auto &item : items) {
    if (!out.empty())
      out += sep;
    out += fmt(item);
  }
  return out;
}

std::string join_ints(const auto &items) {
  return join(items, [](const BigInt &v) { return v.to_string(); });
}

std::string join_strings(const std::vector<std::string> &items, std::string_view sep = "; ") {
  return join(items, [](const std::string &s) { return s; }, sep);
}

GateVerdict make(std::string name, std::string anchor) {
  GateVerdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  return v;
}

constexpr std::string_view kRowMinus = "q^3(q^2-1)(q-3m+1)";
constexpr std::string_view kRowPlus = "q^3(q^2-1)(q+3m+1)";

} // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
  case Outcome::Excludes: return "Excludes";
  case Outcome::Inconclusive: return "Inconclusive";
  case Outcome::NotApplicable: return "NotApplicable";
  case Outcome::AssumedExternal: return "AssumedExternal";
  }
  return "?";
}

std::string_view to_json_name(Outcome outcome) {
  switch (outcome) {
  case Outcome::Excludes: return "excludes";
  case Outcome::Inconclusive: return "inconclusive";
  case Outcome::NotApplicable: return "not_applicable";
  case Outcome::AssumedExternal: return "assumed_external";
  }
  return "?";
}

Outcome outcome_from_json_name(std::string_view name) {
  for (auto o : {Outcome::Excludes, Outcome::Inconclusive, Outcome::NotApplicable,
                 Outcome::AssumedExternal})
    if (to_json_name(o) == name)
      return o;
  throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

const std::string *GateVerdict::witness(std::string_view key) const {
  for (const auto &[k, v] : witnesses)
    if (k == key)
      return &v;
  return nullptr;
}

GateVerdict enforce_witnessed(GateVerdict v) {
  if (v.outcome == Outcome::Excludes && v.witnesses.empty()) {
    v.outcome = Outcome::Inconclusive;
    v.narrative += " [demoted: exclusion carried no witnesses]";
  }
  return v;
}

GateVerdict multiplicity_free_gate(const BigInt &q, const OuterStructure &x) {
  GateVerdict v = make("multiplicity_free", "subfield/multiplicity-free-criterion");
  const auto e = is_power_of(q, BigInt(3));
  if (!e) {
    v.outcome = Outcome::Excludes;
    v.add("q_power_of_3", "false");
    v.narrative = "q is not a power of 3, so the permutation character is not "
                  "multiplicity-free";
  } else if (!x.contains_graph_auto) {
    v.outcome = Outcome::Excludes;
    v.add("x_contains_graph_auto", "false");
    v.narrative = "X lacks the graph automorphism, so the permutation character is "
                  "not multiplicity-free";
  } else {
    v.outcome = Outcome::Inconclusive;
    v.add("x_contains_graph_auto", "true");
    v.narrative = "action is multiplicity-free; later gates decide";
  }
  v.add("q", q.to_string());
  v.add("log3_q", e ? std::to_string(*e) : std::string("none"));
  v.add("x_order", std::to_string(x.order));
  return v;
}

GateVerdict sigma_in_x_gate(const ConcreteTable &ct, const FusionConstraint &c) {
  GateVerdict v = make("sigma_in_x", "subfield/diameter-at-least-3");
  const auto lengths = distinct_nontrivial_lengths(ct);
  v.add("distinct_nontrivial_lengths", std::to_string(lengths.size()));
  if (!excludes_diameter_two(ct, c)) {
    v.outcome = Outcome::NotApplicable;
    v.narrative = "fewer than three distinct nontrivial suborbit lengths; diameter 2 "
                  "is not ruled out";
    return v;
  }
  std::vector<BigInt> smallest(lengths.begin(), lengths.begin() + 3);
  v.outcome = Outcome::Inconclusive;
  v.add("smallest_lengths", join_ints(smallest));
  v.add("diameter_lower_bound", "3");
  v.add("sigma_in_x", "assumed");
  v.narrative = "equal-length fusion leaves at least three nontrivial orbits, so the "
                "diameter is at least 3 and sigma may be adjoined to X; the bound is "
                "applied to the fused table";
  return v;
}

std::string Order4Witness::to_string() const {
  return std::string(g2dtg::to_string(base)) + ", i=" + exponent.to_string() +
         ", base_order=" + base_order.to_string();
}

std::optional<Order4Witness> find_order4_witness(const ConcreteTable &ct,
                                                 const TorusData &torus) {
  auto try_base = [&](TorusBase base, const BigInt &order,
                      std::string_view label) -> std::optional<Order4Witness> {
    if (!divides(BigInt(4), order))
      return std::nullopt;
    for (const auto &row : ct.rows) {
      if (row.z.label != label || row.z.order != ZOrder::TorusPower || row.z.torus != base)
        continue;
      Order4Witness w{base, divexact(order, BigInt(4)), order, row.id};
      if (cyclic_order(w.base_order, w.exponent) == BigInt(4))
        return w;
    }
    return std::nullopt;
  };
  if (auto w = try_base(TorusBase::Gamma, torus.gamma_order, "h_gamma(i,-2i,i)"))
    return w;
  return try_base(TorusBase::Eta, torus.eta_order, "h_eta(i,-2i,i)");
}

Order4Witness order4_witness(const BigInt &r, const ConcreteTable &ct) {
  auto w = find_order4_witness(ct, torus_orders(r));
  if (!w)
    throw std::logic_error("no order-4 torus witness at r = " + r.to_string());
  return *w;
}

GateVerdict involution_gate(const ConcreteTable &ct, const FusionConstraint &c) {
  return involution_gate(ct, c, torus_orders(ct.param.t));
}

GateVerdict involution_gate(const ConcreteTable &ct, const FusionConstraint &c,
                            const TorusData &torus) {
  GateVerdict v = make("involution", "subfield/involution-class-theorem");
  if (ct.param.kind != FamilyKind::Subfield) {
    v.outcome = Outcome::NotApplicable;
    v.narrative = "subfield family only";
    return v;
  }
  std::vector<std::pair<std::string, std::string>> w;
  std::string failed;

  // (i) commuting vertices
  auto involution = std::find_if(ct.rows.begin(), ct.rows.end(),
                                 [](const auto &r) { return r.z.order == ZOrder::Two; });
  if (involution == ct.rows.end())
    failed = "(i) no suborbit with z of order 2, commuting vertices not established";
  else
    w.emplace_back("commuting_class", involution->z.label);

  // (ii) not a polygon / antipodal cover, not a 2-group
  if (failed.empty()) {
    if (!excludes_diameter_two(ct, c))
      failed = "(ii) diameter >= 3 not established";
    else if (!divides(BigInt(3), ct.group_order))
      failed = "(ii) |G| has no odd prime factor 3";
    else {
      w.emplace_back("diameter_lower_bound", "3");
      w.emplace_back("odd_prime_of_group_order", "3");
    }
  }

  // (iii) Gamma_1 candidates have z of order 3
  if (failed.empty()) {
    const auto candidates = smallest_fused_candidates(ct, c);
    std::vector<std::string> labels;
    for (const auto &id : candidates) {
      const auto *row = ct.find(id);
      labels.push_back(row->z.label);
      if (row->z.order != ZOrder::Three && failed.empty())
        failed = "(iii) Gamma_1 candidate '" + id + "' does not have z of order 3";
    }
    if (candidates.empty())
      failed = "(iii) no Gamma_1 candidates";
    w.emplace_back("gamma1_candidates", join_strings(labels));
    if (failed.empty())
      w.emplace_back("candidate_z_order", "3");
  }

  // (iv) an element of order 4
  if (failed.empty()) {
    if (auto o4 = find_order4_witness(ct, torus)) {
      w.insert(w.begin(), {"order4_witness", o4->to_string()});
      w.emplace_back("order4_class", o4->row_id);
    } else {
      failed = "(iv) no torus element of order 4 among the table classes";
    }
  }

  if (failed.empty()) {
    v.outcome = Outcome::Excludes;
    v.narrative = "adjacent vertices do not commute, so the product of adjacent "
                  "involutions must have odd prime order and no product may have "
                  "order 4; an order-4 torus class contradicts this";
  } else {
    v.outcome = Outcome::Inconclusive;
    w.insert(w.begin(), {"failed_step", failed});
    v.narrative = "argument incomplete: " + failed;
  }
  v.witnesses = std::move(w);
  return v;
}

GateVerdict bhk_gate(const ConcreteTable &ct, const FusionConstraint &c) {
  GateVerdict v = make("bhk", "ree/diameter-bound");
  if (ct.param.kind != FamilyKind::Ree || ct.param.q < BigInt(27)) {
    v.outcome = Outcome::NotApplicable;
    v.narrative = "applies to the Ree family with q >= 27";
    return v;
  }
  const Rational d0 = forced_diameter_bound(ct.param, c);
  const BigInt a = d0.numerator(), b = d0.denominator();
  const BigInt &vertices = ct.index;
  const bool excluded =
      exp_compare(BigInt(2), BigInt(3) * a, vertices, BigInt(8) * b) !=
      std::strong_ordering::less;

  const auto groups = length_groups(ct);
  const BigInt refined = min_fused_classes(groups, c);
  const bool refined_excluded =
      exp_compare(BigInt(2), BigInt(3) * refined, vertices, BigInt(8)) !=
      std::strong_ordering::less;

  v.add("diameter_bound", d0.to_string());
  v.add("vertices", vertices.to_string());
  v.add("comparison", "2^" + (BigInt(3) * a).to_string() + (excluded ? " >= " : " < ") +
                          "v^" + (BigInt(8) * b).to_string());
  v.add("refined_diameter_bound", refined.to_string());
  v.add("refined_verdict", refined_excluded ? "excludes" : "inconclusive");
  v.outcome = excluded ? Outcome::Excludes : Outcome::Inconclusive;
  v.narrative = excluded ? "the forced diameter violates d < (8/3) log2(v)"
                         : "d < (8/3) log2(v) is satisfiable at the forced diameter";
  return v;
}

const std::set<BigInt> &default_stripped_primes() {
  static const std::set<BigInt> primes{BigInt(2), BigInt(3), BigInt(5), BigInt(7)};
  return primes;
}

std::set<BigInt> derived_stripped_primes(const FusionConstraint &c) {
  std::set<BigInt> out;
  const Factorization f = factorize(BigInt(c.x_order()));
  for (const auto &[p, e] : f.factors())
    out.insert(p);
  return out;
}

KernelPrimeData kernel_prime_data(const BigInt &q, const std::set<BigInt> &stripped) {
  const auto param = CaseParameter::from_value(FamilyKind::Ree, q);
  if (param.n < 1)
    throw InadmissibleParameter("kernel_prime_data requires q >= 27");
  KernelPrimeData d;
  d.q = q;
  d.m = param.t;
  d.minus_value = q - BigInt(3) * d.m + 1;
  d.plus_value = q + BigInt(3) * d.m + 1;
  d.minus_factors = factorize(d.minus_value);
  d.plus_factors = factorize(d.plus_value);
  for (const auto &[p, e] : d.minus_factors.factors())
    if (!stripped.contains(p))
      d.p_minus.insert(p);
  for (const auto &[p, e] : d.plus_factors.factors())
    if (!stripped.contains(p))
      d.p_plus.insert(p);
  return d;
}

GateVerdict kernel_chain_gate(const ConcreteTable &ct, const FusionConstraint &c,
                              const std::set<BigInt> &stripped) {
  GateVerdict v = make("kernel_chain", "ree/kernel-chain");
  if (ct.param.kind != FamilyKind::Ree || ct.param.n < 1 || ct.param.n > 3) {
    v.outcome = Outcome::NotApplicable;
    v.narrative = "applies to the Ree family with n in {1, 2, 3}";
    return v;
  }
  const KernelPrimeData data = kernel_prime_data(ct.param.q, stripped);
  std::vector<std::pair<std::string, std::string>> w;
  std::string failed;

  std::set<BigInt> all_primes = data.p_minus;
  all_primes.insert(data.p_plus.begin(), data.p_plus.end());
  w.emplace_back("q_minus_3m_plus_1", data.minus_factors.to_string());
  w.emplace_back("q_plus_3m_plus_1", data.plus_factors.to_string());

  if (data.p_minus.empty() || data.p_plus.empty())
    failed = "(i) no prime outside the stripped set divides q-3m+1 or q+3m+1";

  // (0) premise: every nontrivial length is a proper divisor of |H|.
  if (failed.empty()) {
    for (const auto &row : ct.rows)
      if (!row.trivial() && (!divides(row.length, ct.subgroup_order) ||
                             row.length == ct.subgroup_order)) {
        failed = "(0) length of '" + row.id + "' is not a proper divisor of |H|";
        break;
      }
  }

  // (i) the two special rows carry the kernel primes.
  if (failed.empty()) {
    const auto *row_minus = ct.find(kRowMinus);  // stabilizer q+3m+1
    const auto *row_plus = ct.find(kRowPlus);    // stabilizer q-3m+1
    if (!row_minus || !row_plus) {
      failed = "(i) the last two table rows are not both present";
    } else {
      const BigInt stab_of_minus_row = stabilizer_order(ct, *row_minus);
      const BigInt stab_of_plus_row = stabilizer_order(ct, *row_plus);
      auto hits = [](const BigInt &n, const std::set<BigInt> &ps) {
        return std::any_of(ps.begin(), ps.end(), [&](const BigInt &p) { return divides(p, n); });
      };
      if (!hits(stab_of_plus_row, data.p_minus) || !hits(stab_of_minus_row, data.p_plus))
        failed = "(i) special-row stabilizers do not carry the kernel primes";
      w.emplace_back("special_row_stabilizers",
                     stab_of_plus_row.to_string() + ", " + stab_of_minus_row.to_string());
    }
  }

  // (ii) Gamma_1 candidates avoid every kernel prime.
  if (failed.empty()) {
    std::vector<BigInt> stabs;
    for (const auto &id : smallest_fused_candidates(ct, c)) {
      const auto *row = ct.find(id);
      const BigInt s = stabilizer_order(ct, *row);
      stabs.push_back(s);
      for (const auto &p : all_primes)
        if (divides(p, s) && failed.empty())
          failed = "(ii) Gamma_1 candidate '" + id + "' has stabilizer divisible by " +
                   p.to_string();
    }
    w.emplace_back("gamma1_candidate_stabilizers", join_ints(stabs));
  }

  // (iii) no stabilizer carries a prime from each side.
  if (failed.empty()) {
    for (const auto &row : ct.rows) {
      if (row.trivial())
        continue;
      const BigInt s = stabilizer_order(ct, row);
      for (const auto &p : data.p_minus)
        for (const auto &pp : data.p_plus)
          if (divides(p * pp, s) && failed.empty())
            failed = "(iii) stabilizer of '" + row.id + "' is divisible by " +
                     (p * pp).to_string();
    }
    if (failed.empty())
      w.emplace_back("rows_checked", std::to_string(length_groups(ct).size()) +
                                         " length classes");
  }

  if (failed.empty()) {
    v.outcome = Outcome::Excludes;
    w.insert(w.begin(), {"primes", join_ints(all_primes)});
    v.narrative = "neither special kernel fits below the first sphere, so both lie in "
                  "the kernel on the last sphere, whose order no stabilizer can carry";
  } else {
    v.outcome = Outcome::Inconclusive;
    w.insert(w.begin(), {"failed_step", failed});
    w.emplace_back("primes", join_ints(all_primes));
    v.narrative = "argument incomplete: " + failed;
  }
  v.witnesses = std::move(w);
  return v;
}

GateVerdict bcn_small_case_gate(const ConcreteTable &ct, const FusionConstraint &c) {
  GateVerdict v = make("bcn_small_case", "ree/q-equals-3-tables");
  if (ct.param.kind != FamilyKind::Ree || ct.param.q != BigInt(3)) {
    v.outcome = Outcome::NotApplicable;
    v.narrative = "applies to the Ree family with q = 3 only";
    return v;
  }
  const auto groups = length_groups(ct);
  const BigInt d = min_fused_classes(groups, c);
  v.add("vertices", ct.index.to_string());
  v.add("diameter_lower_bound", d.to_string());
  if (d < BigInt(6)) {
    v.outcome = Outcome::Inconclusive;
    v.narrative = "forced diameter is below 6; the external table lookup does not apply";
    return v;
  }
  v.outcome = Outcome::AssumedExternal;
  v.add("citation", "Brouwer-Cohen-Neumaier, Distance-Regular Graphs (1989), ch. 14");
  v.narrative = "the published intersection-array tables contain no distance-regular "
                "graph on 2808 vertices with diameter at least 6";
  return v;
}

} // namespace g2dtg
