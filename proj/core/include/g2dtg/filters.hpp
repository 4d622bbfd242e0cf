#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2dtg/bigint.hpp"
#include "g2dtg/fusion.hpp"
#include "g2dtg/group_data.hpp"
#include "g2dtg/number_theory.hpp"
#include "g2dtg/suborbit_tables.hpp"

namespace g2dtg {

enum class Outcome { Excludes, Inconclusive, NotApplicable, AssumedExternal };

/// "Excludes", "Inconclusive", ...
std::string_view to_string(Outcome outcome);
/// "excludes", "inconclusive", "not_applicable", "assumed_external"
std::string_view to_json_name(Outcome outcome);
Outcome outcome_from_json_name(std::string_view name);

/// Result of one elimination gate.
///
/// Witnesses keep insertion order; the first one is the gate's headline and
/// is echoed on the gate line of the text report.
struct GateVerdict {
  std::string name;
  Outcome outcome = Outcome::Inconclusive;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string anchor;
  std::string narrative;

  void add(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
  }
  const std::string *witness(std::string_view key) const;

  friend bool operator==(const GateVerdict &, const GateVerdict &) = default;
};

/// Excludes with an empty witness map is demoted to Inconclusive.
GateVerdict enforce_witnessed(GateVerdict v);

/// Multiplicity-free criterion for G2(q):X on G2(sqrt q):X: passes only for
/// q a power of 3 with X containing the graph automorphism.
GateVerdict multiplicity_free_gate(const BigInt &q, const OuterStructure &x);

/// Records that three or more distinct nontrivial lengths rule out diameter 2,
/// which licenses adjoining the field automorphism sigma to X.
GateVerdict sigma_in_x_gate(const ConcreteTable &ct, const FusionConstraint &c);

/// Torus element of order 4: gamma^i or eta^i with cyclic_order(base, i) = 4.
struct Order4Witness {
  TorusBase base = TorusBase::Eta;
  BigInt exponent;
  BigInt base_order;
  /// Table row whose class h_base(i,-2i,i) carries the element.
  std::string row_id;

  std::string to_string() const;
};

/// Prefers gamma (needs 4 | r-1 and the gamma rows present, so r >= 9), else
/// eta with 4 | r+1. Empty if neither applies.
std::optional<Order4Witness> find_order4_witness(const ConcreteTable &ct,
                                                 const TorusData &torus);
/// Throws std::logic_error when no witness exists.
Order4Witness order4_witness(const BigInt &r, const ConcreteTable &ct);

/// The involution-centralizer argument for the subfield family:
///   (i)   the h(-1,-1,1) class gives commuting vertices;
///   (ii)  diameter >= 3 and |G| has an odd prime, so neither the
///         polygon/antipodal-cover case nor the 2-group case applies;
///   (iii) every Gamma_1 candidate has z of order 3, so adjacent vertices do
///         not commute;
///   (iv)  an order-4 torus element contradicts the remaining case.
/// Excludes only if all four hold; otherwise Inconclusive naming the step.
GateVerdict involution_gate(const ConcreteTable &ct, const FusionConstraint &c,
                            const TorusData &torus);
GateVerdict involution_gate(const ConcreteTable &ct, const FusionConstraint &c);

/// Diameter bound d < (8/3) log2(v) for distance-regular graphs against the
/// lower bound d0 = (q+6)/|X| = a/b: Excludes iff 2^(3a) >= v^(8b). Ree, q >= 27.
GateVerdict bhk_gate(const ConcreteTable &ct, const FusionConstraint &c);

/// Primes of q -/+ 3m + 1 after removing the stripped primes.
struct KernelPrimeData {
  BigInt q;
  BigInt m;
  BigInt minus_value;  // q - 3m + 1
  BigInt plus_value;   // q + 3m + 1
  Factorization minus_factors;
  Factorization plus_factors;
  std::set<BigInt> p_minus;
  std::set<BigInt> p_plus;
};

/// {2, 3, 5, 7}: the primes outer automorphisms can contribute to kernel orders
/// for n <= 3.
const std::set<BigInt> &default_stripped_primes();
/// Prime divisors of |X|.
std::set<BigInt> derived_stripped_primes(const FusionConstraint &c);

/// Requires q = 3m^2, m = 3^n, n >= 1.
KernelPrimeData kernel_prime_data(const BigInt &q,
                                  const std::set<BigInt> &stripped = default_stripped_primes());

/// Kernel-chain argument for the Ree family with n in {1, 2, 3}, using
/// point-stabilizer orders as upper bounds for kernel orders.
GateVerdict kernel_chain_gate(const ConcreteTable &ct, const FusionConstraint &c,
                              const std::set<BigInt> &stripped = default_stripped_primes());

/// q = 3: records the absence of a 2808-vertex distance-regular graph of
/// diameter >= 6 in the published tables as an external fact.
GateVerdict bcn_small_case_gate(const ConcreteTable &ct, const FusionConstraint &c);

} // namespace g2dtg
