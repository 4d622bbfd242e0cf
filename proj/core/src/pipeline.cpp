#include "g2dtg/pipeline.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "g2dtg/fusion.hpp"

#ifndef G2DTG_VERSION
#define G2DTG_VERSION "0.0.0"
#endif

namespace g2dtg {
namespace {

constexpr const char *kLawtherTables =
    "Suborbit lengths of G2(q) on G2(sqrt q) and on 2G2(q) as computed by Lawther (1990)";
constexpr const char *kMultiplicityFree =
    "Multiplicity-free classification of G2(q):X on G2(sqrt q):X by Lawther (1992); "
    "distance-transitive actions are multiplicity-free (van Bon 2007)";
constexpr const char *kOutModel =
    "Out(G2(3^f)) modeled as cyclic of order 2f; the subgroup lattice for even f is "
    "not independently verified";
constexpr const char *kSigmaLemma =
    "A field automorphism normalizing the stabilizer lies in Aut(Gamma) once the "
    "diameter is at least 3 (van Bon 1991)";
constexpr const char *kInvolutionTheorem =
    "Involution-class theorem for distance-transitive graphs on a class of involutions "
    "(van Bon 1991)";
constexpr const char *kTwoSmallest =
    "|Gamma_1(x)| is among the two smallest nontrivial suborbit lengths (van Bon 2007)";
constexpr const char *kBhk =
    "Distance-regular graphs satisfy d < (8/3) log2(v) (Bang, Hiraki, Koolen 2006)";
constexpr const char *kKernelChain =
    "Kernel chain theorem for distance-transitive groups (van Bon 1991)";
constexpr const char *kKernelNontrivial =
    "Premise: the kernel of H on every nontrivial suborbit is nontrivial";
constexpr const char *kKernelPrimes =
    "Premise: kernel orders carry the large prime divisors of the point-stabilizer orders";
constexpr const char *kOuterPrimesFixed =
    "Outer automorphisms multiply kernel orders only by primes in {2, 3, 5, 7}";
constexpr const char *kOuterPrimesDerived =
    "Outer automorphisms multiply kernel orders only by primes dividing |X|";
constexpr const char *kBcn =
    "No distance-regular graph on 2808 vertices with diameter >= 6 appears in "
    "Brouwer-Cohen-Neumaier (1989), ch. 14 (external, not computed)";

SuborbitTable prepared_table(FamilyKind kind, const AnalysisOptions &options) {
  SuborbitTable t = build_table(kind);
  if (options.faults.mutate_table)
    options.faults.mutate_table(t);
  return t;
}

GateVerdict table_consistency(const ConcreteTable &ct) {
  const MassCheck mass = verify_mass(ct);
  if (!mass.holds)
    throw TranscriptionError("mass identity fails for " + std::string(to_string(ct.param.kind)) +
                             " parameter " + ct.param.natural_value().to_string() +
                             ": residual " + mass.residual.to_string());
  GateVerdict v;
  v.name = "table_consistency";
  v.anchor = "suborbit-table";
  v.outcome = Outcome::Inconclusive;
  v.add("index", ct.index.to_string());
  v.add("mass_total", mass.total.to_string());
  v.add("suborbits", suborbit_count(ct).to_string());
  v.narrative = "suborbit lengths times counts sum to the coset index";
  return v;
}

std::vector<OuterStructure> selected_outer(const CaseParameter &param,
                                           const AnalysisOptions &options) {
  std::vector<OuterStructure> out;
  for (const auto &x : outer_subgroup_options(param)) {
    if (options.x_filter.empty() ||
        std::any_of(options.x_filter.begin(), options.x_filter.end(),
                    [&](const XSelector &s) { return s.matches(x); }))
      out.push_back(x);
  }
  return out;
}

void push_gate(Certificate &cert, GateVerdict v) {
  cert.gates.push_back(enforce_witnessed(std::move(v)));
}

Certificate certify_subfield_with(const SuborbitTable &table, std::uint32_t n,
                                  const OuterStructure &x, const AnalysisOptions &options) {
  const auto param = CaseParameter::from_n(FamilyKind::Subfield, n);
  Certificate cert{FamilyKind::Subfield, n, param.q, x.order, x.contains_graph_auto, {}, {}, {}};
  cert.assumptions.push_back(kMultiplicityFree);
  cert.assumptions.push_back(kOutModel);

  push_gate(cert, multiplicity_free_gate(param.q, x));
  if (cert.gates.back().outcome == Outcome::Inconclusive) {
    const FusionConstraint c(x.order);
    const ConcreteTable ct = instantiate(table, param);
    cert.assumptions.push_back(kLawtherTables);
    push_gate(cert, table_consistency(ct));

    cert.assumptions.push_back(kSigmaLemma);
    push_gate(cert, sigma_in_x_gate(ct, c));
    if (cert.gates.back().outcome == Outcome::Inconclusive) {
      TorusData torus = torus_orders(param.t);
      if (options.faults.mutate_torus)
        options.faults.mutate_torus(torus);
      cert.assumptions.push_back(kInvolutionTheorem);
      cert.assumptions.push_back(kTwoSmallest);
      push_gate(cert, involution_gate(ct, c, torus));
    }
  }
  cert.conclusion = conclude(cert.gates, options.strict);
  return cert;
}

Certificate certify_ree_with(const SuborbitTable &table, std::uint32_t n,
                             const OuterStructure &x, const AnalysisOptions &options) {
  const auto param = CaseParameter::from_n(FamilyKind::Ree, n);
  Certificate cert{FamilyKind::Ree, n, param.q, x.order, x.contains_graph_auto, {}, {}, {}};
  const FusionConstraint c(x.order);
  const ConcreteTable ct = instantiate(table, param);
  cert.assumptions.push_back(kLawtherTables);
  push_gate(cert, table_consistency(ct));

  if (n == 0) {
    cert.assumptions.push_back(kBcn);
    push_gate(cert, bcn_small_case_gate(ct, c));
  } else {
    cert.assumptions.push_back(kBhk);
    push_gate(cert, bhk_gate(ct, c));
    if (n <= 3) {
      std::set<BigInt> stripped = options.prime_mode == KernelPrimeMode::Fixed
                                      ? default_stripped_primes()
                                      : derived_stripped_primes(c);
      if (options.faults.stripped_primes)
        stripped = *options.faults.stripped_primes;
      cert.assumptions.push_back(kKernelChain);
      cert.assumptions.push_back(kTwoSmallest);
      cert.assumptions.push_back(kKernelNontrivial);
      cert.assumptions.push_back(kKernelPrimes);
      cert.assumptions.push_back(options.prime_mode == KernelPrimeMode::Fixed
                                     ? kOuterPrimesFixed
                                     : kOuterPrimesDerived);
      push_gate(cert, kernel_chain_gate(ct, c, stripped));
    }
  }
  cert.conclusion = conclude(cert.gates, options.strict);
  return cert;
}

void check_range(FamilyKind kind, std::uint32_t n_min, std::uint32_t n_max,
                 const AnalysisOptions &options) {
  if (kind == FamilyKind::Subfield && n_min < 1)
    throw std::invalid_argument("subfield analysis requires n >= 1");
  if (n_max > options.n_cap)
    throw std::invalid_argument("n = " + std::to_string(n_max) + " exceeds the cap of " +
                                std::to_string(options.n_cap));
}

} // namespace

std::string_view to_json_name(Conclusion c) {
  return c == Conclusion::NoDTG ? "no_dtg" : "undetermined";
}

Conclusion conclusion_from_json_name(std::string_view name) {
  if (name == "no_dtg")
    return Conclusion::NoDTG;
  if (name == "undetermined")
    return Conclusion::Undetermined;
  throw std::invalid_argument("unknown conclusion '" + std::string(name) + "'");
}

ReportSummary RunReport::summary() const {
  ReportSummary s;
  s.certificates = certificates.size();
  for (const auto &c : certificates)
    (c.conclusion == Conclusion::NoDTG ? s.no_dtg : s.undetermined) += 1;
  return s;
}

XSelector XSelector::parse(std::string_view text) {
  XSelector s;
  std::string_view order_text = text;
  if (auto comma = text.find(','); comma != std::string_view::npos) {
    order_text = text.substr(0, comma);
    const auto flag = text.substr(comma + 1);
    if (flag == "graph")
      s.graph = true;
    else if (flag == "nograph")
      s.graph = false;
    else
      throw std::invalid_argument("expected 'graph' or 'nograph' after ',' in '" +
                                  std::string(text) + "'");
  }
  const BigInt order = BigInt::parse(order_text);
  if (order.sign() <= 0 || !order.fits_u64())
    throw std::invalid_argument("|X| must be a positive integer: '" + std::string(text) + "'");
  s.order = order.to_u64();
  return s;
}

bool XSelector::matches(const OuterStructure &x) const {
  return x.order == order && (!graph || *graph == x.contains_graph_auto);
}

Conclusion conclude(const std::vector<GateVerdict> &gates, bool strict) {
  const bool excluded = std::any_of(gates.begin(), gates.end(), [](const GateVerdict &g) {
    return g.outcome == Outcome::Excludes && !g.witnesses.empty();
  });
  if (excluded)
    return Conclusion::NoDTG;
  const bool assumed = !gates.empty() && gates.back().outcome == Outcome::AssumedExternal;
  return assumed && !strict ? Conclusion::NoDTG : Conclusion::Undetermined;
}

Certificate certify_subfield(std::uint32_t n, const OuterStructure &x,
                             const AnalysisOptions &options) {
  return certify_subfield_with(prepared_table(FamilyKind::Subfield, options), n, x, options);
}

Certificate certify_ree(std::uint32_t n, const OuterStructure &x,
                        const AnalysisOptions &options) {
  return certify_ree_with(prepared_table(FamilyKind::Ree, options), n, x, options);
}

RunReport analyze(FamilyKind kind, std::uint32_t n_min, std::uint32_t n_max,
                  const AnalysisOptions &options) {
  check_range(kind, n_min, n_max, options);
  const SuborbitTable table = prepared_table(kind, options);

  std::vector<std::pair<std::uint32_t, OuterStructure>> jobs;
  for (std::uint32_t n = n_min; n <= n_max && n_min <= n_max; ++n)
    for (const auto &x : selected_outer(CaseParameter::from_n(kind, n), options))
      jobs.emplace_back(n, x);

  auto run = [&](std::uint32_t n, const OuterStructure &x) {
    return kind == FamilyKind::Subfield ? certify_subfield_with(table, n, x, options)
                                        : certify_ree_with(table, n, x, options);
  };

  RunReport report;
  report.version = library_version();
  report.kind = kind;
  report.n_min = n_min;
  report.n_max = n_max;
  if (options.parallel && jobs.size() > 1) {
    std::vector<std::future<Certificate>> futures;
    futures.reserve(jobs.size());
    for (const auto &[n, x] : jobs)
      futures.push_back(std::async(std::launch::async, run, n, x));
    for (auto &f : futures)
      report.certificates.push_back(f.get());
  } else {
    for (const auto &[n, x] : jobs)
      report.certificates.push_back(run(n, x));
  }
  return report;
}

RunReport analyze_subfield(std::uint32_t n_min, std::uint32_t n_max,
                           const AnalysisOptions &options) {
  return analyze(FamilyKind::Subfield, n_min, n_max, options);
}

RunReport analyze_ree(std::uint32_t n_min, std::uint32_t n_max,
                      const AnalysisOptions &options) {
  return analyze(FamilyKind::Ree, n_min, n_max, options);
}

int exit_code(const RunReport &report) {
  return report.summary().undetermined == 0 ? 0 : 2;
}

bool ParameterVerification::passed() const {
  return table.has_value() &&
         std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

bool TableVerificationReport::passed() const {
  return std::all_of(parameters.begin(), parameters.end(),
                     [](const auto &p) { return p.passed(); }) &&
         symbolic_mass.value_or(true);
}

TableVerificationReport verify_tables(FamilyKind kind, const std::vector<CaseParameter> &params,
                                      bool symbolic) {
  return verify_tables(build_table(kind), params, symbolic);
}

TableVerificationReport verify_tables(const SuborbitTable &table,
                                      const std::vector<CaseParameter> &params,
                                      bool symbolic) {
  TableVerificationReport report;
  report.kind = table.family;
  for (const auto &param : params) {
    ParameterVerification pv;
    pv.param = param;
    try {
      pv.table = instantiate(table, param);
      pv.checks.push_back({"integrality", true, "all counts are non-negative integers"});
    } catch (const TranscriptionError &e) {
      pv.checks.push_back({"integrality", false, e.what()});
      report.parameters.push_back(std::move(pv));
      continue;
    }
    const ConcreteTable &ct = *pv.table;

    const MassCheck mass = verify_mass(ct);
    pv.checks.push_back({"mass", mass.holds,
                         "total=" + mass.total.to_string() + " index=" +
                             mass.index.to_string() + " residual=" +
                             mass.residual.to_string()});

    const auto trivial = std::count_if(ct.rows.begin(), ct.rows.end(), [](const auto &r) {
      return r.trivial() && r.count.is_one();
    });
    pv.checks.push_back({"trivial_row", trivial == 1,
                         std::to_string(trivial) + " row(s) of length 1 and count 1"});

    std::string bad_divisor;
    std::string improper;
    for (const auto &row : ct.rows) {
      if (!divides(row.length, ct.subgroup_order) && bad_divisor.empty())
        bad_divisor = row.id;
      if (!row.trivial() && row.length == ct.subgroup_order && improper.empty())
        improper = row.id;
    }
    pv.checks.push_back({"divisibility", bad_divisor.empty(),
                         bad_divisor.empty() ? "every length divides |H| = " +
                                                   ct.subgroup_order.to_string()
                                             : "'" + bad_divisor + "' does not divide |H|"});
    if (param.kind == FamilyKind::Ree && param.n >= 1)
      pv.checks.push_back({"proper_divisors", improper.empty() && bad_divisor.empty(),
                           improper.empty() ? "every nontrivial length is below |H|"
                                            : "'" + improper + "' has length |H|"});

    const BigInt expected = param.kind == FamilyKind::Ree
                                ? param.q + 6
                                : param.t * param.t + BigInt(2) * param.t + 6;
    const BigInt count = suborbit_count(ct);
    pv.checks.push_back({"suborbit_count", count == expected,
                         count.to_string() + " (expected " + expected.to_string() + ")"});
    report.parameters.push_back(std::move(pv));
  }
  if (symbolic)
    report.symbolic_mass = verify_mass_symbolic(table);
  return report;
}

std::string format_table_verification(const TableVerificationReport &report) {
  std::ostringstream os;
  for (const auto &pv : report.parameters) {
    if (pv.table)
      os << dump_table(*pv.table);
    else
      os << "# case=" << to_string(pv.param.kind)
         << "\tparameter=" << pv.param.natural_value() << "\tindex=?\n";
    for (const auto &c : pv.checks)
      os << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << ' ' << c.detail
         << '\n';
    os << '\n';
  }
  if (report.symbolic_mass)
    os << "check symbolic_mass: " << (*report.symbolic_mass ? "pass" : "FAIL") << ' '
       << "sum of length*count == index as a polynomial in "
       << case_family(report.kind).variable << '\n';
  os << "result: " << (report.passed() ? "pass" : "FAIL") << '\n';
  return os.str();
}

const char *library_version() { return G2DTG_VERSION; }

} // namespace g2dtg
