#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2dtg/bigint.hpp"
#include "g2dtg/group_data.hpp"
#include "g2dtg/param_poly.hpp"

namespace g2dtg {

/// A table row that evaluates to a non-integral or negative count, or to a
/// non-positive length, at an admissible parameter.
class TranscriptionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// |H| / length was not exact.
class TableCorruption : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ZOrder { One, Two, Three, TorusPower, Unknown };
enum class TorusBase { Gamma, Eta, Theta, Sigma, Tau };

std::string_view to_string(TorusBase base);

/// Class representative z of x^{-1} sigma(x), as an opaque label plus what is
/// known about its order.
struct ZClassDescriptor {
  std::string label;
  ZOrder order = ZOrder::Unknown;
  /// Set iff order == TorusPower.
  std::optional<TorusBase> torus;

  friend bool operator==(const ZClassDescriptor &, const ZClassDescriptor &) = default;
};

struct SuborbitRow {
  /// Unique within the table.
  std::string id;
  ZClassDescriptor z;
  /// 0 for an ordinary row; 1 or 2 for the two halves of a split class.
  int half = 0;
  std::string length_formula;
  std::string count_formula;
  ParamPoly length;
  ParamPoly count;
};

/// Parametrized suborbit table in the family's single variable (r or m).
struct SuborbitTable {
  FamilyKind family{};
  std::vector<SuborbitRow> rows;

  const SuborbitRow *find(std::string_view id) const;
  SuborbitRow *find(std::string_view id);
};

/// Lawther's suborbit tables: 26 rows for Subfield (in r), 12 for Ree (in m,
/// with q = 3m^2 substituted).
SuborbitTable build_table(FamilyKind family);

struct ConcreteRow {
  std::string id;
  ZClassDescriptor z;
  std::string length_formula;
  BigInt length;
  BigInt count;

  bool trivial() const { return length.is_one(); }
};

struct ConcreteTable {
  CaseParameter param;
  BigInt group_order;
  BigInt subgroup_order;
  BigInt index;
  /// Rows with count > 0, in table order.
  std::vector<ConcreteRow> rows;

  const ConcreteRow *find(std::string_view id) const;
};

/// Evaluates every row at `param`, drops zero-count rows. Throws
/// TranscriptionError on a non-integral/negative count or bad length.
ConcreteTable instantiate(const SuborbitTable &table, const CaseParameter &param);

struct MassCheck {
  bool holds = false;
  BigInt total;
  BigInt index;
  /// total - index
  BigInt residual;
};

/// Sum of length * count against the coset index.
MassCheck verify_mass(const ConcreteTable &ct);

/// Sum of length * count equals `index` as a polynomial identity.
bool verify_mass_symbolic(const SuborbitTable &table, const ParamPoly &index);
bool verify_mass_symbolic(const SuborbitTable &table);

/// |H| / length. Throws TableCorruption if not exact.
BigInt stabilizer_order(const ConcreteTable &ct, const ConcreteRow &row);

/// Sum of counts over all rows, the trivial one included.
BigInt suborbit_count(const ConcreteTable &ct);

/// Distinct lengths of the nontrivial rows, ascending.
std::vector<BigInt> distinct_nontrivial_lengths(const ConcreteTable &ct);

/// Header line "# case=<c>\tparameter=<v>\tindex=<i>", then one
/// "label\tlength\tcount" line per row.
std::string dump_table(const ConcreteTable &ct);

} // namespace g2dtg
