#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2dtg/bigint.hpp"
#include "g2dtg/param_poly.hpp"

namespace g2dtg {

/// The two coset actions of G2(q) under study.
///   Subfield: G2(q) on G2(r),  q = r^2, r = 3^n, n >= 1.
///   Ree:      G2(q) on 2G2(q), q = 3m^2 = 3^(2n+1), m = 3^n, n >= 0.
enum class FamilyKind { Subfield, Ree };

std::string_view to_string(FamilyKind kind);
/// Accepts "subfield" or "ree"; throws std::invalid_argument otherwise.
FamilyKind parse_family(std::string_view text);

class InadmissibleParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A concrete admissible parameter of a family.
struct CaseParameter {
  FamilyKind kind{};
  std::uint32_t n = 0;
  BigInt q;
  /// Value of the table variable: r for Subfield, m for Ree.
  BigInt t;

  static CaseParameter from_n(FamilyKind kind, std::uint32_t n);
  /// From the natural value: r for Subfield, q for Ree.
  static CaseParameter from_value(FamilyKind kind, const BigInt &value);

  /// r for Subfield, q for Ree.
  const BigInt &natural_value() const { return kind == FamilyKind::Subfield ? t : q; }
  /// f with q = 3^f.
  std::uint32_t field_degree() const {
    return kind == FamilyKind::Subfield ? 2 * n : 2 * n + 1;
  }

  friend bool operator==(const CaseParameter &, const CaseParameter &) = default;
};

/// Order formulas of one family as polynomials in its table variable.
struct CaseFamily {
  FamilyKind kind{};
  std::string variable;   // "r" or "m"
  ParamPoly q;            // q in terms of the variable
  ParamPoly group_order;  // |G2(q)| = q^6 (q^6 - 1)(q^2 - 1)
  ParamPoly subgroup_order;
  ParamPoly index;        // |G| / |H|
};

const CaseFamily &case_family(FamilyKind kind);

BigInt group_order(const CaseParameter &param);
BigInt subgroup_order(const CaseParameter &param);
BigInt coset_index(const CaseParameter &param);
/// `value` is r for Subfield and q for Ree; throws InadmissibleParameter.
BigInt coset_index(const CaseFamily &family, const BigInt &value);

/// Abstract subgroup X of Out(G2(q)).
///
/// Out(G2(3^f)) is cyclic of order 2f, generated by the graph automorphism
/// whose square is the Frobenius x -> x^3. The subgroup of order d contains a
/// graph automorphism iff d does not divide f.
struct OuterStructure {
  std::uint64_t order = 1;
  bool contains_graph_auto = false;

  friend bool operator==(const OuterStructure &, const OuterStructure &) = default;
};

/// One descriptor per divisor of 2f, ascending by order.
std::vector<OuterStructure> outer_subgroup_options(const CaseParameter &param);

/// Element orders in F_{q^3}^* (q = r^2) of the torus parameters, where
/// kappa generates F_{q^3}^*:
///   sigma = kappa^((r+1)(r^3-1)), tau = kappa^((r-1)(r^3+1)),
///   theta = kappa^(q^2+q+1), eta = theta^(r-1), gamma = theta^(r+1).
struct TorusData {
  BigInt r;
  BigInt kappa_order;
  BigInt theta_order;
  BigInt eta_order;
  BigInt gamma_order;
  BigInt sigma_order;
  BigInt tau_order;
};

/// Computes the orders with cyclic_order from the exponent definitions and
/// checks them against the closed forms q-1, r+1, r-1, r^2-r+1, r^2+r+1
/// (std::logic_error on mismatch). Requires r = 3^n, n >= 1.
TorusData torus_orders(const BigInt &r);

} // namespace g2dtg
