#include "signed_extremal/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "signed_extremal/errors.hpp"

namespace sx {

namespace {

std::string hex(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

Json number(double x, bool integral) {
  if (integral) return static_cast<long long>(std::llround(x));
  return round15(x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string gst_text(const std::optional<std::pair<int, int>>& m) {
  return m ? "gst(" + std::to_string(m->first) + "," + std::to_string(m->second) + ")" : std::string();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidArgument("unknown format '" + name + "' (table, json, csv)");
}

double round15(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string format_number(double x) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json graph_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.sign}));
  return Json{{"n", g.order()}, {"m", g.edge_count()}, {"edges", edges}};
}

Json spectrum_json(const SignedGraph& g, const Spectrum& s) {
  Json values = Json::array();
  for (double x : s.eigenvalues) values.push_back(round15(x));
  Json j{{"schema_version", kReportSchemaVersion}, {"kind", "spectrum"}, {"n", g.order()},
         {"m", g.edge_count()}, {"negative_edges", g.negative_edge_count()}, {"eigenvalues", values},
         {"lambda1", round15(s.lambda1())}, {"lambda_min", round15(s.lambda_min())}, {"rho", round15(s.rho)},
         {"tol", s.tol}};
  return j;
}

Json bound_json(const BoundReport& r) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"kind", "bound"},
              {"bound_name", r.bound_name},
              {"n", r.n},
              {"bound_value", number(r.bound_value, r.integral)},
              {"observed", number(r.observed, r.integral)},
              {"integral", r.integral},
              {"satisfied", r.satisfied},
              {"pass", r.pass},
              {"detail", r.detail},
              {"witness", r.witness ? graph_json(*r.witness) : Json(nullptr)}};
}

Json search_json(const SearchReport& r, bool timing) {
  const SearchConfig& c = r.config;
  const bool integral = c.objective != Objective::MaxRho;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"value", number(w.value, integral)},
                             {"gst_match", w.gst_match ? Json(gst_text(w.gst_match)) : Json(nullptr)},
                             {"canonical_code", hex(w.code.edges) + ":" + hex(w.code.negatives)},
                             {"graph", graph_json(w.graph)}});
  }
  Json j{{"schema_version", kReportSchemaVersion},
         {"kind", "search"},
         {"config",
          Json{{"n", c.n},
               {"objective", objective_name(c.objective)},
               {"forbidden", forbidden_name(c.forbidden)},
               {"require_unbalanced", c.require_unbalanced},
               {"require_connected", c.require_connected},
               {"workers", c.workers},
               {"prune_with_edge_bound", c.prune_with_edge_bound}}},
         {"found", r.found},
         {"optimum", r.found ? number(r.optimum, integral) : Json(nullptr)},
         {"complete", r.complete},
         {"classes_done", r.classes_done},
         {"classes_total", r.classes_total},
         {"counts",
          Json{{"underlying_scanned", r.counts.underlying_scanned},
               {"underlying_pruned", r.counts.underlying_pruned},
               {"signatures_scanned", r.counts.signatures_scanned},
               {"feasible", r.counts.feasible}}},
         {"matched_family", r.matched_family ? Json(*r.matched_family) : Json(nullptr)},
         {"witnesses", witnesses}};
  if (timing) j["wall_time"] = round15(r.wall_time);
  return j;
}

Json properties_json(std::uint64_t seed, const std::vector<PropertySuiteResult>& results) {
  Json suites = Json::array();
  bool pass = true;
  for (const auto& r : results) {
    pass = pass && r.violations == 0;
    suites.push_back(Json{{"name", r.name},
                          {"instances", r.instances},
                          {"violations", r.violations},
                          {"first_violation", r.violations ? Json(r.first_violation) : Json(nullptr)}});
  }
  return Json{{"schema_version", kReportSchemaVersion}, {"kind", "properties"}, {"seed", seed},
              {"pass", pass}, {"suites", suites}};
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "index,eigenvalue\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) out << i << ',' << format_number(s.eigenvalues[i]) << '\n';
  return out.str();
}

std::string bounds_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "bound_name,n,bound_value,observed,satisfied,pass,detail\n";
  for (const auto& r : reports)
    out << r.bound_name << ',' << r.n << ',' << format_number(r.bound_value) << ',' << format_number(r.observed) << ','
        << (r.satisfied ? "true" : "false") << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.detail)
        << '\n';
  return out.str();
}

std::string search_csv(const SearchReport& r) {
  std::ostringstream out;
  out << "n,objective,forbidden,optimum,witness,value,gst_match,canonical_code,graph\n";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const Witness& w = r.witnesses[i];
    std::string edges;
    for (const auto& e : w.graph.edges())
      edges += (edges.empty() ? "" : " ") + std::to_string(e.u) + ":" + std::to_string(e.v) + (e.sign > 0 ? "+" : "-");
    out << r.config.n << ',' << objective_name(r.config.objective) << ',' << forbidden_name(r.config.forbidden) << ','
        << format_number(r.optimum) << ',' << i << ',' << format_number(w.value) << ',' << gst_text(w.gst_match) << ','
        << hex(w.code.edges) << ':' << hex(w.code.negatives) << ',' << edges << '\n';
  }
  return out.str();
}

std::string properties_csv(const std::vector<PropertySuiteResult>& results) {
  std::ostringstream out;
  out << "suite,instances,violations,first_violation\n";
  for (const auto& r : results)
    out << r.name << ',' << r.instances << ',' << r.violations << ',' << csv_field(r.first_violation) << '\n';
  return out.str();
}

}  // namespace sx
