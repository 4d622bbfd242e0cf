#include "g2dtg/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace g2dtg {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json gate_to_json(const GateVerdict &g) {
  ordered_json witnesses = ordered_json::object();
  for (const auto &[k, v] : g.witnesses)
    witnesses[k] = v;
  return ordered_json{{"name", g.name},
                      {"verdict", std::string(to_json_name(g.outcome))},
                      {"witnesses", std::move(witnesses)},
                      {"paper_anchor", g.anchor},
                      {"narrative", g.narrative}};
}

ordered_json certificate_to_json(const Certificate &c) {
  ordered_json gates = ordered_json::array();
  for (const auto &g : c.gates)
    gates.push_back(gate_to_json(g));
  return ordered_json{{"case", std::string(to_string(c.kind))},
                      {"n", c.n},
                      {"q", c.q.to_string()},
                      {"x_order", c.x_order},
                      {"x_graph", c.x_graph},
                      {"gates", std::move(gates)},
                      {"conclusion", std::string(to_json_name(c.conclusion))},
                      {"assumptions", c.assumptions}};
}

GateVerdict gate_from_json(const ordered_json &j) {
  GateVerdict g;
  g.name = j.at("name").get<std::string>();
  g.outcome = outcome_from_json_name(j.at("verdict").get<std::string>());
  for (const auto &[k, v] : j.at("witnesses").items())
    g.add(k, v.get<std::string>());
  g.anchor = j.at("paper_anchor").get<std::string>();
  g.narrative = j.value("narrative", std::string());
  return g;
}

Certificate certificate_from_json(const ordered_json &j) {
  Certificate c;
  c.kind = parse_family(j.at("case").get<std::string>());
  c.n = j.at("n").get<std::uint32_t>();
  c.q = BigInt::parse(j.at("q").get<std::string>());
  c.x_order = j.at("x_order").get<std::uint64_t>();
  c.x_graph = j.at("x_graph").get<bool>();
  for (const auto &g : j.at("gates"))
    c.gates.push_back(gate_from_json(g));
  c.conclusion = conclusion_from_json_name(j.at("conclusion").get<std::string>());
  c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return c;
}

std::string emit_json(const RunReport &report) {
  ordered_json certs = ordered_json::array();
  for (const auto &c : report.certificates)
    certs.push_back(certificate_to_json(c));
  const ReportSummary s = report.summary();
  ordered_json j{{"tool", report.tool},
                 {"version", report.version},
                 {"timestamp", report.timestamp},
                 {"case", std::string(to_string(report.kind))},
                 {"n_min", report.n_min},
                 {"n_max", report.n_max},
                 {"certificates", std::move(certs)},
                 {"summary",
                  {{"certificates", s.certificates},
                   {"no_dtg", s.no_dtg},
                   {"undetermined", s.undetermined}}}};
  return j.dump(2) + "\n";
}

std::string emit_text(const RunReport &report) {
  std::ostringstream os;
  os << report.tool << ' ' << report.version << "  case=" << to_string(report.kind)
     << "  n=" << report.n_min << ".." << report.n_max << '\n';
  for (const auto &c : report.certificates) {
    os << "\ncertificate: case=" << to_string(c.kind) << " n=" << c.n << " q=" << c.q
       << " |X|=" << c.x_order << " graph_auto=" << (c.x_graph ? "yes" : "no") << '\n';
    for (const auto &g : c.gates) {
      os << "  gate: " << g.name << "  verdict: " << to_string(g.outcome);
      if (!g.witnesses.empty())
        os << "  " << g.witnesses.front().first << ": " << g.witnesses.front().second;
      os << '\n';
      for (std::size_t i = 1; i < g.witnesses.size(); ++i)
        os << "      " << g.witnesses[i].first << ": " << g.witnesses[i].second << '\n';
      os << "      anchor: " << g.anchor << '\n';
      if (!g.narrative.empty())
        os << "      note: " << g.narrative << '\n';
    }
    os << "  conclusion: " << to_json_name(c.conclusion) << '\n';
    if (!c.assumptions.empty()) {
      os << "  assumptions:\n";
      for (const auto &a : c.assumptions)
        os << "    - " << a << '\n';
    }
  }
  const ReportSummary s = report.summary();
  os << "\nsummary: certificates=" << s.certificates << " no_dtg=" << s.no_dtg
     << " undetermined=" << s.undetermined << '\n';
  return os.str();
}

} // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json")
    return ReportFormat::Json;
  if (text == "text")
    return ReportFormat::Text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string emit(const RunReport &report, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(report) : emit_text(report);
}

RunReport parse_report_json(std::string_view json) {
  try {
    const auto j = ordered_json::parse(json);
    RunReport r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.value("timestamp", std::string());
    r.kind = parse_family(j.at("case").get<std::string>());
    r.n_min = j.at("n_min").get<std::uint32_t>();
    r.n_max = j.at("n_max").get<std::uint32_t>();
    for (const auto &c : j.at("certificates"))
      r.certificates.push_back(certificate_from_json(c));
    const auto &s = j.at("summary");
    const ReportSummary expect = r.summary();
    if (s.at("certificates").get<std::size_t>() != expect.certificates ||
        s.at("no_dtg").get<std::size_t>() != expect.no_dtg ||
        s.at("undetermined").get<std::size_t>() != expect.undetermined)
      throw std::invalid_argument("summary does not match the certificates");
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

} // namespace g2dtg
