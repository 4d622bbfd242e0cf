// g2dtg: nonexistence certificates for distance-transitive graphs from the
// coset actions of G2(q) on G2(sqrt q) and on 2G2(q).

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2dtg/g2dtg.hpp"

namespace {

using namespace g2dtg;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint32_t parse_u32(const std::string &text) {
  const BigInt v = BigInt::parse(text);
  if (v.sign() < 0 || v > BigInt(std::uint64_t{0xffffffffu}))
    throw UsageError("expected a small non-negative integer, got '" + text + "'");
  return static_cast<std::uint32_t>(v.to_u64());
}

// "a..b" or "a".
std::pair<std::uint32_t, std::uint32_t> parse_n_range(const std::string &text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    auto lo = parse_u32(text.substr(0, dots));
    auto hi = parse_u32(text.substr(dots + 2));
    if (lo > hi)
      throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  }
  auto n = parse_u32(text);
  return {n, n};
}

// Comma list of natural values, or "a..b" meaning every admissible value in
// [a, b].
std::vector<CaseParameter> parse_params(FamilyKind kind, const std::string &text) {
  std::vector<CaseParameter> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const BigInt lo = BigInt::parse(text.substr(0, dots));
    const BigInt hi = BigInt::parse(text.substr(dots + 2));
    for (std::uint32_t n = kind == FamilyKind::Subfield ? 1 : 0;; ++n) {
      auto p = CaseParameter::from_n(kind, n);
      if (p.natural_value() > hi)
        break;
      if (p.natural_value() >= lo)
        out.push_back(p);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
    out.push_back(CaseParameter::from_value(kind, BigInt::parse(item)));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_output(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nonexistence certificates for distance-transitive graphs on G2(q) coset "
               "actions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  // analyze
  auto *analyze_cmd = app.add_subcommand("analyze", "Run the elimination pipeline");
  std::string a_case, a_n, a_format = "json", a_out;
  std::vector<std::string> a_x{"all"};
  bool a_strict = false, a_derived = false, a_sequential = false;
  std::uint32_t a_cap = 12;
  analyze_cmd->add_option("--case", a_case, "subfield or ree")->required();
  analyze_cmd->add_option("--n", a_n, "n or min..max")->required();
  analyze_cmd->add_option("--x", a_x, "all, or |X| descriptors like 4 or 4,graph");
  analyze_cmd->add_flag("--strict", a_strict, "Treat external assumptions as undecided");
  analyze_cmd->add_flag("--derived-primes", a_derived,
                        "Strip only primes dividing |X| in the kernel-chain gate");
  analyze_cmd->add_option("--format", a_format, "json or text");
  analyze_cmd->add_option("--out", a_out, "Write the report to PATH");
  analyze_cmd->add_option("--max-n", a_cap, "Override the n <= 12 cap");
  analyze_cmd->add_flag("--sequential", a_sequential, "Do not run certificates in parallel");

  // verify-tables
  auto *verify_cmd = app.add_subcommand("verify-tables", "Check the suborbit tables");
  std::string v_case, v_params;
  bool v_symbolic = false;
  verify_cmd->add_option("--case", v_case, "subfield or ree")->required();
  verify_cmd->add_option("--params", v_params,
                         "r (subfield) or q (ree) values: list or min..max")
      ->required();
  verify_cmd->add_flag("--symbolic", v_symbolic, "Also check the polynomial mass identity");

  // factor
  auto *factor_cmd = app.add_subcommand("factor", "Factorize a positive integer");
  std::string f_value;
  factor_cmd->add_option("value", f_value, "decimal integer >= 1")->required();

  // bound
  auto *bound_cmd = app.add_subcommand("bound", "Evaluate the diameter-bound gate");
  std::string b_case = "ree";
  std::uint32_t b_n = 1;
  std::uint64_t b_x = 1;
  bound_cmd->add_option("--case", b_case, "ree")->required();
  bound_cmd->add_option("--n", b_n, "n with q = 3^(2n+1)")->required();
  bound_cmd->add_option("--x-order", b_x, "|X|")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze_cmd->parsed()) {
      AnalysisOptions opts;
      opts.strict = a_strict;
      opts.prime_mode = a_derived ? KernelPrimeMode::DerivedFromX : KernelPrimeMode::Fixed;
      opts.n_cap = a_cap;
      opts.parallel = !a_sequential;
      for (const auto &x : a_x)
        if (x != "all")
          opts.x_filter.push_back(XSelector::parse(x));
      const auto kind = parse_family(a_case);
      const auto format = parse_report_format(a_format);
      const auto [lo, hi] = parse_n_range(a_n);
      RunReport report = analyze(kind, lo, hi, opts);
      report.timestamp = utc_timestamp();
      write_output(emit(report, format), a_out);
      return exit_code(report);
    }
    if (verify_cmd->parsed()) {
      const auto kind = parse_family(v_case);
      const auto report = verify_tables(kind, parse_params(kind, v_params), v_symbolic);
      std::cout << format_table_verification(report);
      return report.passed() ? 0 : 2;
    }
    if (factor_cmd->parsed()) {
      const BigInt n = BigInt::parse(f_value);
      const Factorization f = factorize(n);
      std::cout << n << " = " << f.to_string() << '\n';
      return 0;
    }
    if (bound_cmd->parsed()) {
      if (parse_family(b_case) != FamilyKind::Ree)
        throw UsageError("the bound command applies to --case ree only");
      const auto param = CaseParameter::from_n(FamilyKind::Ree, b_n);
      const auto ct = instantiate(build_table(FamilyKind::Ree), param);
      const auto verdict = bhk_gate(ct, FusionConstraint(b_x));
      std::cout << "gate: " << verdict.name << "  verdict: " << to_string(verdict.outcome)
                << "\n  q: " << param.q << '\n';
      for (const auto &[k, v] : verdict.witnesses)
        std::cout << "  " << k << ": " << v << '\n';
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
