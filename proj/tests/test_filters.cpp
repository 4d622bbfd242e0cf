#include <doctest.h>

#include <cmath>

#include "g2dtg/filters.hpp"
#include "oracles.hpp"

using namespace g2dtg;

namespace {

ConcreteTable concrete(FamilyKind k, std::uint32_t n) {
  return instantiate(build_table(k), CaseParameter::from_n(k, n));
}

std::uint64_t graph_x(std::uint32_t n) { return 2 * (2 * n + 1); }

} // namespace

TEST_CASE("outcome names round-trip") {
  for (auto o : {Outcome::Excludes, Outcome::Inconclusive, Outcome::NotApplicable,
                 Outcome::AssumedExternal})
    CHECK(outcome_from_json_name(to_json_name(o)) == o);
  CHECK(to_string(Outcome::AssumedExternal) == "AssumedExternal");
  CHECK(to_json_name(Outcome::NotApplicable) == "not_applicable");
  CHECK_THROWS(outcome_from_json_name("maybe"));
}

TEST_CASE("enforce_witnessed demotes bare exclusions") {
  GateVerdict v{"g", Outcome::Excludes, {}, "", ""};
  CHECK(enforce_witnessed(v).outcome == Outcome::Inconclusive);
  v.add("k", "v");
  CHECK(enforce_witnessed(v).outcome == Outcome::Excludes);
  CHECK(*v.witness("k") == "v");
  CHECK(v.witness("absent") == nullptr);
}

TEST_CASE("multiplicity_free_gate") {
  auto q25 = multiplicity_free_gate(BigInt(25), {1, false});
  CHECK(q25.outcome == Outcome::Excludes);
  CHECK(q25.witnesses.front() == std::pair<std::string, std::string>{"q_power_of_3", "false"});

  auto q9 = multiplicity_free_gate(BigInt(9), {2, false});
  CHECK(q9.outcome == Outcome::Excludes);
  CHECK(*q9.witness("x_contains_graph_auto") == "false");

  auto q9g = multiplicity_free_gate(BigInt(9), {4, true});
  CHECK(q9g.outcome == Outcome::Inconclusive);
  CHECK(*q9g.witness("x_contains_graph_auto") == "true");
  CHECK(*q9g.witness("log3_q") == "2");
}

TEST_CASE("sigma_in_x_gate") {
  const auto v = sigma_in_x_gate(concrete(FamilyKind::Subfield, 1), FusionConstraint(4));
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(*v.witness("distinct_nontrivial_lengths") == "12");
  CHECK(*v.witness("smallest_lengths") == "728, 5824, 7371");
  CHECK(*v.witness("diameter_lower_bound") == "3");
}

TEST_CASE("order4_witness examples") {
  auto check = [](long r, TorusBase base, long i, long order) {
    const auto ct = instantiate(build_table(FamilyKind::Subfield),
                                CaseParameter::from_value(FamilyKind::Subfield, BigInt(r)));
    const auto w = order4_witness(BigInt(r), ct);
    CHECK(w.base == base);
    CHECK(w.exponent == BigInt(i));
    CHECK(w.base_order == BigInt(order));
  };
  check(3, TorusBase::Eta, 1, 4);
  check(9, TorusBase::Gamma, 2, 8);
  check(27, TorusBase::Eta, 7, 28);
  const auto ct9 = concrete(FamilyKind::Subfield, 2);
  CHECK(order4_witness(BigInt(9), ct9).to_string() == "gamma, i=2, base_order=8");
}

TEST_CASE("property: an order-4 witness exists for every r = 3^n") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const BigInt r = BigInt(3).pow(n);
    // Exactly one of r-1, r+1 is divisible by 4.
    CHECK(divides(BigInt(4), r - 1) != divides(BigInt(4), r + 1));
    const auto ct = concrete(FamilyKind::Subfield, n);
    const auto w = order4_witness(r, ct);
    CHECK(cyclic_order(w.base_order, w.exponent) == BigInt(4));
    CHECK(w.base == (n % 2 == 0 ? TorusBase::Gamma : TorusBase::Eta));
    CHECK(ct.find(w.row_id) != nullptr);
  }
}

TEST_CASE("involution_gate") {
  for (std::uint32_t n : {1u, 2u, 3u}) {
    const auto ct = concrete(FamilyKind::Subfield, n);
    const auto v = involution_gate(ct, FusionConstraint(4 * n));
    CHECK(v.outcome == Outcome::Excludes);
    CHECK(v.witnesses.front().first == "order4_witness");
    CHECK(*v.witness("commuting_class") == "h(-1,-1,1)");
    CHECK(*v.witness("candidate_z_order") == "3");
  }
  CHECK(involution_gate(concrete(FamilyKind::Ree, 1), FusionConstraint(1)).outcome ==
        Outcome::NotApplicable);
}

TEST_CASE("involution_gate fault injection") {
  const auto ct = concrete(FamilyKind::Subfield, 1);
  const FusionConstraint c(4);

  auto torus = torus_orders(BigInt(3));
  torus.eta_order = BigInt(5);
  torus.gamma_order = BigInt(7);
  auto v = involution_gate(ct, c, torus);
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.witness("failed_step")->rfind("(iv)", 0) == 0);

  auto no_involution = ct;
  for (auto &row : no_involution.rows)
    if (row.z.order == ZOrder::Two)
      row.z.order = ZOrder::Unknown;
  v = involution_gate(no_involution, c);
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.witness("failed_step")->rfind("(i)", 0) == 0);

  auto bad_candidate = ct;
  bad_candidate.rows[1].z.order = ZOrder::Unknown;
  v = involution_gate(bad_candidate, c);
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.witness("failed_step")->rfind("(iii)", 0) == 0);
}

TEST_CASE("bhk_gate examples") {
  const auto n4 = bhk_gate(concrete(FamilyKind::Ree, 4), FusionConstraint(18));
  CHECK(n4.outcome == Outcome::Excludes);
  CHECK(*n4.witness("diameter_bound") == "6563/6");
  CHECK(n4.witnesses.front().first == "diameter_bound");
  CHECK(bhk_gate(concrete(FamilyKind::Ree, 3), FusionConstraint(14)).outcome ==
        Outcome::Inconclusive);
  CHECK(bhk_gate(concrete(FamilyKind::Ree, 1), FusionConstraint(1)).outcome ==
        Outcome::Inconclusive);
  CHECK(bhk_gate(concrete(FamilyKind::Ree, 0), FusionConstraint(2)).outcome ==
        Outcome::NotApplicable);
}

TEST_CASE("property: bhk_gate agrees with a floating-point log comparison") {
  // 3a >= 8b log2(v), checked in long double where the margin is comfortable.
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto ct = concrete(FamilyKind::Ree, n);
    const long double log2v = std::log2(std::stold(ct.index.to_string()));
    const long double q = std::stold(ct.param.q.to_string());
    for (std::uint64_t x = 1; x <= graph_x(n); ++x) {
      if ((2 * ct.param.field_degree()) % x != 0)
        continue;
      const long double lhs = 3.0L * (q + 6) / x, rhs = 8.0L * log2v;
      if (std::fabs(lhs - rhs) < 1e-6L * rhs)
        continue;
      const auto v = bhk_gate(ct, FusionConstraint(x));
      CAPTURE(n);
      CAPTURE(x);
      CHECK((v.outcome == Outcome::Excludes) == (lhs >= rhs));
    }
  }
}

TEST_CASE("property: bhk_gate excludes at the full outer group for n >= 4") {
  for (std::uint32_t n = 4; n <= 8; ++n)
    CHECK(bhk_gate(concrete(FamilyKind::Ree, n), FusionConstraint(graph_x(n))).outcome ==
          Outcome::Excludes);
}

TEST_CASE("kernel_prime_data") {
  const auto d27 = kernel_prime_data(BigInt(27));
  CHECK(d27.minus_value == BigInt(19));
  CHECK(d27.plus_value == BigInt(37));
  CHECK(d27.p_minus == std::set<BigInt>{BigInt(19)});
  CHECK(d27.p_plus == std::set<BigInt>{BigInt(37)});

  const auto d243 = kernel_prime_data(BigInt(243));
  CHECK(d243.minus_factors.to_string() == "7 * 31");
  CHECK(d243.p_minus == std::set<BigInt>{BigInt(31)});
  CHECK(d243.p_plus == std::set<BigInt>{BigInt(271)});

  const auto d2187 = kernel_prime_data(BigInt(2187));
  CHECK(d2187.minus_factors.to_string() == "7^2 * 43");
  CHECK(d2187.p_minus == std::set<BigInt>{BigInt(43)});
  CHECK(d2187.p_plus == std::set<BigInt>{BigInt(2269)});

  CHECK_THROWS_AS(kernel_prime_data(BigInt(3)), InadmissibleParameter);
  CHECK(derived_stripped_primes(FusionConstraint(6)) == std::set<BigInt>{BigInt(2), BigInt(3)});
}

TEST_CASE("property: kernel values multiply to q^2 - q + 1") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const auto q = CaseParameter::from_n(FamilyKind::Ree, n).q;
    const auto d = kernel_prime_data(q);
    CHECK(d.minus_value * d.plus_value == q * q - q + 1);
    CHECK(d.minus_factors.product() == d.minus_value);
    CHECK(d.plus_factors.product() == d.plus_value);
    if (d.minus_value.fits_u64()) {
      const auto ref = oracle::trial_division(d.minus_value.to_u64());
      for (const auto &[p, e] : ref)
        CHECK(d.minus_factors.exponent_of(BigInt(p)) == e);
    }
  }
}

TEST_CASE("kernel_chain_gate excludes for n = 1, 2, 3") {
  const char *expected[] = {"19, 37", "31, 271", "43, 2269"};
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto ct = concrete(FamilyKind::Ree, n);
    for (std::uint64_t x = 1; x <= graph_x(n); ++x) {
      if ((2 * ct.param.field_degree()) % x != 0)
        continue;
      const auto v = kernel_chain_gate(ct, FusionConstraint(x));
      CAPTURE(n);
      CAPTURE(x);
      CHECK(v.outcome == Outcome::Excludes);
      CHECK(v.witnesses.front() ==
            std::pair<std::string, std::string>{"primes", expected[n - 1]});
    }
  }
  const auto v27 = kernel_chain_gate(concrete(FamilyKind::Ree, 1), FusionConstraint(6));
  CHECK(*v27.witness("special_row_stabilizers") == "19, 37");
  CHECK(*v27.witness("gamma1_candidate_stabilizers") == "19683, 19656");
  CHECK(kernel_chain_gate(concrete(FamilyKind::Ree, 4), FusionConstraint(1)).outcome ==
        Outcome::NotApplicable);
}

TEST_CASE("kernel_chain step (iii) against direct remainders") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto ct = concrete(FamilyKind::Ree, n);
    const auto d = kernel_prime_data(ct.param.q);
    for (const auto &row : ct.rows) {
      if (row.trivial())
        continue;
      const BigInt s = divexact(ct.subgroup_order, row.length);
      for (const auto &p : d.p_minus)
        for (const auto &pp : d.p_plus)
          CHECK_FALSE((mod(s, p).is_zero() && mod(s, pp).is_zero()));
    }
  }
}

TEST_CASE("kernel_chain_gate fault injection") {
  const auto ct = concrete(FamilyKind::Ree, 1);
  // Stripping the kernel primes leaves nothing to chase.
  const std::set<BigInt> all{BigInt(2), BigInt(3), BigInt(19), BigInt(37)};
  auto v = kernel_chain_gate(ct, FusionConstraint(1), all);
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.witness("failed_step")->rfind("(i)", 0) == 0);

  auto regular = ct;
  regular.rows.back().length = regular.subgroup_order;
  v = kernel_chain_gate(regular, FusionConstraint(1));
  CHECK(v.outcome == Outcome::Inconclusive);
  CHECK(v.witness("failed_step")->rfind("(0)", 0) == 0);
}

TEST_CASE("bcn_small_case_gate") {
  const auto ct = concrete(FamilyKind::Ree, 0);
  auto v2 = bcn_small_case_gate(ct, FusionConstraint(2));
  CHECK(v2.outcome == Outcome::AssumedExternal);
  CHECK(*v2.witness("diameter_lower_bound") == "6");
  CHECK(*v2.witness("vertices") == "2808");
  auto v1 = bcn_small_case_gate(ct, FusionConstraint(1));
  CHECK(*v1.witness("diameter_lower_bound") == "8");
  CHECK(bcn_small_case_gate(concrete(FamilyKind::Ree, 1), FusionConstraint(1)).outcome ==
        Outcome::NotApplicable);
  CHECK(bcn_small_case_gate(ct, FusionConstraint(4)).outcome == Outcome::AssumedExternal);
}
