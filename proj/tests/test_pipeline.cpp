#include <doctest.h>

#include <algorithm>

#include "g2dtg/pipeline.hpp"
#include "g2dtg/report.hpp"

using namespace g2dtg;

namespace {

std::size_t count_outcome(const Certificate &c, Outcome o) {
  return std::count_if(c.gates.begin(), c.gates.end(),
                       [&](const auto &g) { return g.outcome == o; });
}

const GateVerdict *gate(const Certificate &c, std::string_view name) {
  for (const auto &g : c.gates)
    if (g.name == name)
      return &g;
  return nullptr;
}

} // namespace

TEST_CASE("XSelector") {
  auto s = XSelector::parse("6");
  CHECK(s.order == 6);
  CHECK_FALSE(s.graph.has_value());
  CHECK(XSelector::parse("6,graph").graph == true);
  CHECK(XSelector::parse("4,nograph").graph == false);
  CHECK(s.matches({6, true}));
  CHECK_FALSE(s.matches({3, false}));
  CHECK_FALSE(XSelector::parse("6,nograph").matches({6, true}));
  CHECK_THROWS(XSelector::parse("0"));
  CHECK_THROWS(XSelector::parse("six"));
  CHECK_THROWS(XSelector::parse("6,maybe"));
}

TEST_CASE("conclude") {
  GateVerdict ex{"a", Outcome::Excludes, {{"k", "v"}}, "", ""};
  GateVerdict inc{"b", Outcome::Inconclusive, {}, "", ""};
  GateVerdict ext{"c", Outcome::AssumedExternal, {{"k", "v"}}, "", ""};
  CHECK(conclude({inc, ex}, false) == Conclusion::NoDTG);
  CHECK(conclude({inc, ex}, true) == Conclusion::NoDTG);
  CHECK(conclude({inc}, false) == Conclusion::Undetermined);
  CHECK(conclude({inc, ext}, false) == Conclusion::NoDTG);
  CHECK(conclude({inc, ext}, true) == Conclusion::Undetermined);
  CHECK(conclude({}, false) == Conclusion::Undetermined);
}

TEST_CASE("subfield n = 1..3: every X concludes NoDTG") {
  const auto report = analyze(FamilyKind::Subfield, 1, 3);
  CHECK(report.certificates.size() == 3 + 4 + 6);  // divisors of 2f with f = 2n
  for (const auto &cert : report.certificates) {
    CAPTURE(cert.n);
    CAPTURE(cert.x_order);
    CHECK(cert.conclusion == Conclusion::NoDTG);
    const auto &first = cert.gates.front();
    CHECK(first.name == "multiplicity_free");
    if (!cert.x_graph) {
      CHECK(first.outcome == Outcome::Excludes);
      CHECK(cert.gates.size() == 1);
    } else {
      REQUIRE(gate(cert, "involution") != nullptr);
      CHECK(gate(cert, "involution")->outcome == Outcome::Excludes);
      CHECK(gate(cert, "sigma_in_x")->outcome == Outcome::Inconclusive);
    }
  }
  CHECK(exit_code(report) == 0);
}

TEST_CASE("ree n = 0..6: every X concludes NoDTG") {
  const auto report = analyze(FamilyKind::Ree, 0, 6);
  const auto s = report.summary();
  CHECK(s.certificates == report.certificates.size());
  CHECK(s.no_dtg == s.certificates);
  CHECK(s.undetermined == 0);
  CHECK(exit_code(report) == 0);
  for (const auto &cert : report.certificates) {
    CAPTURE(cert.n);
    CAPTURE(cert.x_order);
    CHECK(cert.gates.front().name == "table_consistency");
    if (cert.n == 0) {
      CHECK(count_outcome(cert, Outcome::AssumedExternal) == 1);
      CHECK(gate(cert, "bcn_small_case") != nullptr);
    } else {
      CHECK(count_outcome(cert, Outcome::AssumedExternal) == 0);
      CHECK(gate(cert, "bhk") != nullptr);
      CHECK((gate(cert, "kernel_chain") != nullptr) == (cert.n <= 3));
      if (cert.n <= 3)
        CHECK(gate(cert, "kernel_chain")->outcome == Outcome::Excludes);
      else
        CHECK(gate(cert, "bhk")->outcome == Outcome::Excludes);
    }
  }
}

TEST_CASE("derived kernel primes also conclude NoDTG for n = 1..3") {
  AnalysisOptions o;
  o.prime_mode = KernelPrimeMode::DerivedFromX;
  const auto report = analyze(FamilyKind::Ree, 1, 3, o);
  for (const auto &cert : report.certificates)
    CHECK(gate(cert, "kernel_chain")->outcome == Outcome::Excludes);
}

TEST_CASE("strict mode leaves q = 3 undetermined") {
  AnalysisOptions o;
  o.strict = true;
  const auto report = analyze(FamilyKind::Ree, 0, 0, o);
  REQUIRE_FALSE(report.certificates.empty());
  for (const auto &cert : report.certificates)
    CHECK(cert.conclusion == Conclusion::Undetermined);
  CHECK(exit_code(report) == 2);
  CHECK(exit_code(analyze(FamilyKind::Ree, 1, 2, o)) == 0);
}

TEST_CASE("x filter") {
  AnalysisOptions o;
  o.x_filter = {XSelector::parse("6,graph")};
  const auto report = analyze(FamilyKind::Ree, 1, 1, o);
  REQUIRE(report.certificates.size() == 1);
  CHECK(report.certificates[0].x_order == 6);
  CHECK(report.certificates[0].x_graph);
  o.x_filter = {XSelector::parse("5")};
  CHECK(analyze(FamilyKind::Ree, 1, 1, o).certificates.empty());
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(analyze(FamilyKind::Subfield, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(analyze(FamilyKind::Ree, 0, 13), std::invalid_argument);
  AnalysisOptions o;
  o.n_cap = 20;
  CHECK_NOTHROW(analyze(FamilyKind::Ree, 13, 13, o));
  const auto empty = analyze(FamilyKind::Ree, 3, 2);
  CHECK(empty.certificates.empty());
  CHECK(exit_code(empty) == 0);
}

TEST_CASE("parallel and sequential runs agree") {
  AnalysisOptions seq;
  seq.parallel = false;
  auto a = analyze(FamilyKind::Ree, 0, 5);
  auto b = analyze(FamilyKind::Ree, 0, 5, seq);
  CHECK(a == b);
  CHECK(analyze(FamilyKind::Subfield, 1, 4) == analyze(FamilyKind::Subfield, 1, 4, seq));
}

TEST_CASE("fault injection never yields a spurious exclusion") {
  SUBCASE("torus without order-4 elements") {
    AnalysisOptions o;
    o.faults.mutate_torus = [](TorusData &t) {
      t.eta_order = BigInt(5);
      t.gamma_order = BigInt(7);
    };
    const auto report = analyze(FamilyKind::Subfield, 1, 3, o);
    for (const auto &cert : report.certificates)
      CHECK(cert.conclusion ==
            (cert.x_graph ? Conclusion::Undetermined : Conclusion::NoDTG));
    CHECK(exit_code(report) == 2);
  }
  SUBCASE("kernel primes stripped away") {
    AnalysisOptions o;
    o.faults.stripped_primes = std::set<BigInt>{BigInt(2), BigInt(3), BigInt(19), BigInt(37)};
    const auto report = analyze(FamilyKind::Ree, 1, 1, o);
    for (const auto &cert : report.certificates) {
      CHECK(gate(cert, "kernel_chain")->outcome == Outcome::Inconclusive);
      CHECK(cert.conclusion == Conclusion::Undetermined);
    }
  }
  SUBCASE("inconsistent table aborts") {
    AnalysisOptions o;
    o.faults.mutate_table = [](SuborbitTable &t) {
      t.rows[1].length += ParamPoly(1);
    };
    CHECK_THROWS_AS(analyze(FamilyKind::Ree, 1, 1, o), TranscriptionError);
  }
}

TEST_CASE("verify_tables passes on the shipped tables") {
  std::vector<CaseParameter> ree, sub;
  for (std::uint32_t n = 0; n <= 3; ++n)
    ree.push_back(CaseParameter::from_n(FamilyKind::Ree, n));
  for (std::uint32_t n = 1; n <= 4; ++n)
    sub.push_back(CaseParameter::from_n(FamilyKind::Subfield, n));
  const auto r = verify_tables(FamilyKind::Ree, ree, true);
  CHECK(r.passed());
  CHECK(r.symbolic_mass == true);
  CHECK(verify_tables(FamilyKind::Subfield, sub, true).passed());
  const auto text = format_table_verification(r);
  CHECK(text.find("check mass: pass") != std::string::npos);
  CHECK(text.find("check proper_divisors: pass") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verify_tables catches every single-coefficient perturbation") {
  for (auto kind : {FamilyKind::Subfield, FamilyKind::Ree}) {
    std::vector<CaseParameter> params;
    const std::uint32_t first = kind == FamilyKind::Subfield ? 1 : 0;
    for (std::uint32_t n = first; n <= first + 2; ++n)
      params.push_back(CaseParameter::from_n(kind, n));
    const auto base = build_table(kind);
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
      for (bool on_length : {true, false}) {
        const auto &poly = on_length ? base.rows[i].length : base.rows[i].count;
        for (int k = 0; k <= std::max(poly.degree(), 0); ++k) {
          auto t = base;
          auto &p = on_length ? t.rows[i].length : t.rows[i].count;
          p.set_coefficient(k, p.coefficient(k) + Rational(1));
          CAPTURE(t.rows[i].id);
          CAPTURE(k);
          const auto r = verify_tables(t, params, true);
          CHECK_FALSE(r.passed());
          CHECK(r.symbolic_mass == false);
        }
      }
    }
  }
}

TEST_CASE("JSON report round-trips") {
  auto report = analyze(FamilyKind::Ree, 0, 3);
  report.version = library_version();
  report.timestamp = "2026-01-01T00:00:00Z";
  const auto json = emit(report, ReportFormat::Json);
  CHECK(parse_report_json(json) == report);
  CHECK(emit(parse_report_json(json), ReportFormat::Json) == json);
  CHECK_THROWS_AS(parse_report_json("{\"tool\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json("not json"), std::invalid_argument);

  auto sub = analyze(FamilyKind::Subfield, 1, 2);
  CHECK(parse_report_json(emit(sub, ReportFormat::Json)) == sub);
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  auto a = analyze(FamilyKind::Subfield, 1, 2);
  auto b = analyze(FamilyKind::Subfield, 1, 2);
  a.timestamp = "x";
  b.timestamp = "y";
  b.timestamp = a.timestamp;
  CHECK(emit(a, ReportFormat::Json) == emit(b, ReportFormat::Json));
  CHECK(emit(a, ReportFormat::Text) == emit(b, ReportFormat::Text));
}

TEST_CASE("text report") {
  AnalysisOptions o;
  o.x_filter = {XSelector::parse("1")};
  const auto text = emit(analyze(FamilyKind::Ree, 1, 1, o), ReportFormat::Text);
  CHECK(text.find("gate: kernel_chain  verdict: Excludes  primes: 19, 37") != std::string::npos);
  CHECK(text.find("summary: certificates=1 no_dtg=1 undetermined=0") != std::string::npos);
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK(parse_report_format("text") == ReportFormat::Text);
  CHECK_THROWS(parse_report_format("xml"));
}
