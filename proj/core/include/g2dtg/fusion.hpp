#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "g2dtg/bigint.hpp"
#include "g2dtg/rational.hpp"
#include "g2dtg/suborbit_tables.hpp"

namespace g2dtg {

/// Outer automorphisms fuse only suborbits of equal length, at most |X| of
/// them into a single orbit of G:X.
class FusionConstraint {
public:
  /// Throws std::invalid_argument for x_order == 0.
  explicit FusionConstraint(std::uint64_t x_order);
  std::uint64_t x_order() const { return x_order_; }

private:
  std::uint64_t x_order_;
};

/// Nontrivial suborbits of one exact length.
struct LengthGroup {
  BigInt length;
  /// Number of suborbits of this length (sum of the row counts).
  BigInt multiplicity;
  std::vector<std::string> row_ids;
};

/// Nontrivial rows grouped by length, ascending.
std::vector<LengthGroup> length_groups(const ConcreteTable &ct);

/// Sum over groups of ceil(multiplicity / |X|): a lower bound on the number
/// of nontrivial G:X-orbits, hence on the diameter.
BigInt min_fused_classes(std::span<const LengthGroup> groups, const FusionConstraint &c);

/// (q + 6) / |X| for the Ree family. Throws std::invalid_argument otherwise.
Rational forced_diameter_bound(const CaseParameter &param, const FusionConstraint &c);

/// At least three distinct nontrivial lengths: equal-length fusion then leaves
/// at least three nontrivial orbits, so the diameter is at least 3.
bool excludes_diameter_two(const ConcreteTable &ct, const FusionConstraint &c);

/// Rows that can lie in one of the two smallest nontrivial G:X-orbits.
///
/// A fused orbit made from suborbits of length l in a group of multiplicity k
/// has length between l and min(k, |X|) * l. A row is dropped only when two
/// groups g1, g2 satisfy maxlen(g1) < len(g2) and maxlen(g2) < len(row):
/// then two distinct orbit lengths are certainly smaller than any orbit
/// containing the row. Ids are returned in table order.
std::vector<std::string> smallest_fused_candidates(const ConcreteTable &ct,
                                                   const FusionConstraint &c);

/// Exhaustive counterpart of smallest_fused_candidates: enumerates every way
/// of partitioning each length group into fused orbits of at most |X|
/// suborbits and collects the rows reaching one of the two smallest distinct
/// orbit lengths. Throws std::length_error above `max_suborbits` nontrivial
/// suborbits.
std::vector<std::string> enumerate_fused_candidates(const ConcreteTable &ct,
                                                    const FusionConstraint &c,
                                                    std::uint64_t max_suborbits = 40);

} // namespace g2dtg
