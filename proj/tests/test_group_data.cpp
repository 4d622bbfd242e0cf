#include <doctest.h>

#include "g2dtg/group_data.hpp"
#include "g2dtg/number_theory.hpp"
#include "oracles.hpp"

using namespace g2dtg;

TEST_CASE("parameters map n to q and the table variable") {
  auto s = CaseParameter::from_n(FamilyKind::Subfield, 2);
  CHECK(s.t == BigInt(9));
  CHECK(s.q == BigInt(81));
  CHECK(s.field_degree() == 4);
  auto r = CaseParameter::from_n(FamilyKind::Ree, 1);
  CHECK(r.t == BigInt(3));
  CHECK(r.q == BigInt(27));
  CHECK(r.field_degree() == 3);
  CHECK(CaseParameter::from_value(FamilyKind::Ree, BigInt(2187)).n == 3);
  CHECK(CaseParameter::from_value(FamilyKind::Subfield, BigInt(27)).n == 3);
  CHECK_THROWS_AS(CaseParameter::from_n(FamilyKind::Subfield, 0), InadmissibleParameter);
  CHECK_THROWS_AS(CaseParameter::from_value(FamilyKind::Ree, BigInt(9)), InadmissibleParameter);
  CHECK_THROWS_AS(CaseParameter::from_value(FamilyKind::Ree, BigInt(2808)),
                  InadmissibleParameter);
  CHECK_THROWS_AS(CaseParameter::from_value(FamilyKind::Subfield, BigInt(1)),
                  InadmissibleParameter);
}

TEST_CASE("coset_index") {
  const auto &ree = case_family(FamilyKind::Ree);
  const auto &sub = case_family(FamilyKind::Subfield);
  CHECK(coset_index(ree, BigInt(3)) == BigInt(2808));
  CHECK(coset_index(sub, BigInt(3)) == BigInt(729 * 730 * 10));
  CHECK(coset_index(sub, BigInt(3)) == BigInt(5321700));
  const BigInt q(27);
  CHECK(coset_index(ree, q) == q.pow(3) * (q.pow(3) - 1) * (q + 1));
  CHECK(coset_index(ree, q) == BigInt::parse("10847222568"));
  CHECK_THROWS_AS(coset_index(ree, BigInt(81)), InadmissibleParameter);
}

TEST_CASE("order polynomials: |G| = |H| * index in both families") {
  for (auto kind : {FamilyKind::Subfield, FamilyKind::Ree}) {
    const auto &f = case_family(kind);
    CHECK(f.group_order == f.subgroup_order * f.index);
  }
}

TEST_CASE("|G2(3)| = 4245696 and |2G2(3)| = 1512") {
  auto p = CaseParameter::from_n(FamilyKind::Ree, 0);
  CHECK(group_order(p) == BigInt(4245696));
  CHECK(subgroup_order(p) == BigInt(1512));
  CHECK(coset_index(p) * subgroup_order(p) == BigInt(4245696));
  CHECK(divexact(BigInt(4245696), BigInt(1512)) == BigInt(2808));
}

TEST_CASE("outer_subgroup_options") {
  auto orders = [](FamilyKind k, std::uint32_t n) {
    std::vector<std::uint64_t> out;
    for (const auto &x : outer_subgroup_options(CaseParameter::from_n(k, n)))
      out.push_back(x.order);
    return out;
  };
  CHECK(orders(FamilyKind::Ree, 1) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(FamilyKind::Subfield, 1) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(orders(FamilyKind::Ree, 0) == std::vector<std::uint64_t>{1, 2});

  // Graph automorphism present iff d does not divide f.
  const auto sub = outer_subgroup_options(CaseParameter::from_n(FamilyKind::Subfield, 1));
  CHECK(sub == std::vector<OuterStructure>{{1, false}, {2, false}, {4, true}});
  const auto ree = outer_subgroup_options(CaseParameter::from_n(FamilyKind::Ree, 1));
  CHECK(ree == std::vector<OuterStructure>{{1, false}, {2, true}, {3, false}, {6, true}});

  for (std::uint32_t n = 0; n <= 8; ++n)
    for (auto k : {FamilyKind::Subfield, FamilyKind::Ree}) {
      if (k == FamilyKind::Subfield && n == 0)
        continue;
      const auto p = CaseParameter::from_n(k, n);
      for (const auto &x : outer_subgroup_options(p))
        CHECK((2 * p.field_degree()) % x.order == 0);
    }
}

TEST_CASE("torus_orders: reference values") {
  auto t3 = torus_orders(BigInt(3));
  CHECK(t3.eta_order == BigInt(4));
  CHECK(t3.gamma_order == BigInt(2));
  CHECK(t3.theta_order == BigInt(8));
  CHECK(t3.kappa_order == BigInt(728));
  auto t9 = torus_orders(BigInt(9));
  CHECK(t9.gamma_order == BigInt(8));
  CHECK(t9.eta_order == BigInt(10));
  CHECK_THROWS_AS(torus_orders(BigInt(5)), InadmissibleParameter);
  CHECK_THROWS_AS(torus_orders(BigInt(1)), InadmissibleParameter);
}

TEST_CASE("torus_orders at r = 3: exhaustive powering in C_728") {
  // Orders of kappa^e recomputed by repeated addition of exponents mod 728.
  const std::uint64_t r = 3, q = 9, k = q * q * q - 1;
  const std::uint64_t theta = q * q + q + 1;
  auto t = torus_orders(BigInt(r));
  CHECK(t.theta_order == BigInt(oracle::brute_cyclic_order(k, theta % k)));
  CHECK(t.eta_order == BigInt(oracle::brute_cyclic_order(k, (theta * (r - 1)) % k)));
  CHECK(t.gamma_order == BigInt(oracle::brute_cyclic_order(k, (theta * (r + 1)) % k)));
  CHECK(t.sigma_order == BigInt(oracle::brute_cyclic_order(k, ((r + 1) * (r * r * r - 1)) % k)));
  CHECK(t.tau_order == BigInt(oracle::brute_cyclic_order(k, ((r - 1) * (r * r * r + 1)) % k)));
}

TEST_CASE("property: torus closed forms for r = 3^n, n <= 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    const BigInt r = BigInt(3).pow(n);
    const auto t = torus_orders(r);
    CHECK(t.theta_order == r * r - 1);
    CHECK(t.eta_order == r + 1);
    CHECK(t.gamma_order == r - 1);
    CHECK(divides(t.sigma_order, t.kappa_order));
    CHECK(divides(t.tau_order, t.kappa_order));
    CHECK(t.sigma_order == r * r - r + 1);
    CHECK(t.tau_order == r * r + r + 1);
  }
}
