#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "g2dtg/filters.hpp"
#include "g2dtg/group_data.hpp"
#include "g2dtg/suborbit_tables.hpp"

namespace g2dtg {

enum class Conclusion { NoDTG, Undetermined };

std::string_view to_json_name(Conclusion c);
Conclusion conclusion_from_json_name(std::string_view name);

/// Gate record for one (family, n, X) triple.
struct Certificate {
  FamilyKind kind{};
  std::uint32_t n = 0;
  BigInt q;
  std::uint64_t x_order = 1;
  bool x_graph = false;
  std::vector<GateVerdict> gates;
  Conclusion conclusion = Conclusion::Undetermined;
  std::vector<std::string> assumptions;

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

struct ReportSummary {
  std::size_t certificates = 0;
  std::size_t no_dtg = 0;
  std::size_t undetermined = 0;

  friend bool operator==(const ReportSummary &, const ReportSummary &) = default;
};

struct RunReport {
  std::string tool = "g2dtg";
  std::string version;
  /// Informational; excluded from determinism comparisons.
  std::string timestamp;
  FamilyKind kind{};
  std::uint32_t n_min = 0;
  std::uint32_t n_max = 0;
  std::vector<Certificate> certificates;

  ReportSummary summary() const;

  friend bool operator==(const RunReport &, const RunReport &) = default;
};

/// "6" (any realizable X of order 6), "6,graph" or "6,nograph".
struct XSelector {
  std::uint64_t order = 1;
  std::optional<bool> graph;

  static XSelector parse(std::string_view text);
  bool matches(const OuterStructure &x) const;
};

enum class KernelPrimeMode { Fixed, DerivedFromX };

/// Test-only perturbations used to check that weakened inputs never yield a
/// spurious exclusion.
struct FaultHooks {
  std::function<void(SuborbitTable &)> mutate_table;
  std::function<void(TorusData &)> mutate_torus;
  std::optional<std::set<BigInt>> stripped_primes;
};

struct AnalysisOptions {
  /// Empty selects every X.
  std::vector<XSelector> x_filter;
  /// Treat externally assumed steps as undecided.
  bool strict = false;
  KernelPrimeMode prime_mode = KernelPrimeMode::Fixed;
  std::uint32_t n_cap = 12;
  bool parallel = true;
  FaultHooks faults;
};

/// Certificate conclusion from its gate list.
Conclusion conclude(const std::vector<GateVerdict> &gates, bool strict);

Certificate certify_subfield(std::uint32_t n, const OuterStructure &x,
                             const AnalysisOptions &options = {});
Certificate certify_ree(std::uint32_t n, const OuterStructure &x,
                        const AnalysisOptions &options = {});

/// One certificate per n in [n_min, n_max] and per selected X, in that order.
/// Throws TranscriptionError if a table fails its mass identity, and
/// std::invalid_argument for ranges outside the family or above n_cap.
RunReport analyze_subfield(std::uint32_t n_min, std::uint32_t n_max,
                           const AnalysisOptions &options = {});
RunReport analyze_ree(std::uint32_t n_min, std::uint32_t n_max,
                      const AnalysisOptions &options = {});
RunReport analyze(FamilyKind kind, std::uint32_t n_min, std::uint32_t n_max,
                  const AnalysisOptions &options = {});

/// 0 when every certificate concludes NoDTG, 2 otherwise.
int exit_code(const RunReport &report);

struct TableCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ParameterVerification {
  CaseParameter param;
  std::optional<ConcreteTable> table;
  std::vector<TableCheck> checks;

  bool passed() const;
};

struct TableVerificationReport {
  FamilyKind kind{};
  std::vector<ParameterVerification> parameters;
  /// Set when the symbolic identity was requested.
  std::optional<bool> symbolic_mass;

  bool passed() const;
};

/// Mass, divisibility, integrality, trivial-row and suborbit-count checks per
/// parameter, plus the symbolic mass identity on request.
TableVerificationReport verify_tables(const SuborbitTable &table,
                                      const std::vector<CaseParameter> &params,
                                      bool symbolic);
TableVerificationReport verify_tables(FamilyKind kind, const std::vector<CaseParameter> &params,
                                      bool symbolic);

/// Table dumps followed by "check <name>: pass|FAIL <detail>" lines.
std::string format_table_verification(const TableVerificationReport &report);

const char *library_version();

} // namespace g2dtg
