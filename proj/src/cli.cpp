#include "signed_extremal/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "signed_extremal/bounds.hpp"
#include "signed_extremal/canonical.hpp"
#include "signed_extremal/constructions.hpp"
#include "signed_extremal/errors.hpp"
#include "signed_extremal/graph_io.hpp"
#include "signed_extremal/report_json.hpp"
#include "signed_extremal/search.hpp"
#include "signed_extremal/spectral.hpp"
#include "signed_extremal/verify.hpp"

namespace sx {

namespace {

constexpr const char* kWorkersEnv = "SIGNED_EXTREMAL_WORKERS";

struct Options {
  std::string format = "table";
  // graph source
  std::string in;
  std::string family;
  int s = 0, t = 0, n = 0;
  std::string out_path;
  // spectrum
  bool vector = false;
  // canonical
  std::string against;
  // search / verify
  std::string objective = "max-edges";
  std::string forbid = "c3-minus";
  bool allow_balanced = false;
  bool allow_disconnected = false;
  bool no_prune = false;
  int workers = 0;
  double time_budget = 0.0;
  std::string checkpoint;
  bool timing = false;
  bool quiet = false;
  std::string theorem;
  std::string n_spec;
  bool allow_n8 = false;
  std::uint64_t seed = 1;
  int count = 200;
};

int default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long w = std::strtol(env, &end, 10);
  if (*end || w < 1 || w > 1024)
    throw InvalidArgument(std::string(kWorkersEnv) + " must be a positive integer (got '" + env + "')");
  return static_cast<int>(w);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string indent(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += pad + line + '\n';
  return out;
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : " ") + format_number(x);
  return s;
}

bool family_uses_order(Family f) {
  return f == Family::GstMaxNeg || f == Family::CompletePos || f == Family::CompleteNeg ||
         f == Family::KnSwitchedMaxNeg;
}

SignedGraph construct_from(const Options& o) {
  const Family f = parse_family(o.family);
  ConstructionParams p{f, o.s, o.t, o.n};
  if (family_uses_order(f) && o.n == 0) throw InvalidArgument("family " + o.family + " needs --n");
  if ((f == Family::Gst || f == Family::H1 || f == Family::H2 || f == Family::H3) && (o.s == 0 || o.t == 0))
    throw InvalidArgument("family " + o.family + " needs --s and --t");
  return build(p);
}

SignedGraph load_graph(const Options& o) {
  if (!o.in.empty() && !o.family.empty()) throw InvalidArgument("give either --in or --family, not both");
  if (!o.family.empty()) return construct_from(o);
  if (o.in.empty()) throw InvalidArgument("a graph is required (--in FILE, '-' for stdin, or --family)");
  if (o.in == "-") return read_graph(std::cin);
  return read_graph_file(o.in);
}

void add_graph_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--in", o.in, "Graph file in text format ('-' reads stdin)");
  cmd->add_option("--family", o.family, "Build a graph instead of reading one");
  cmd->add_option("--s", o.s, "Family parameter s (or s')");
  cmd->add_option("--t", o.t, "Family parameter t (or t')");
  cmd->add_option("--n", o.n, "Order for order-parameterised families");
}

void add_format(CLI::App* cmd, Options& o, bool csv) {
  auto* opt = cmd->add_option("--format", o.format, "Output format");
  opt->check(csv ? CLI::IsMember({"table", "json", "csv"}) : CLI::IsMember({"table", "json"}));
}

int cmd_construct(const Options& o, std::ostream& out) {
  const SignedGraph g = construct_from(o);
  if (!o.out_path.empty()) {
    write_graph_file(o.out_path, g);
    return kExitOk;
  }
  if (parse_format(o.format) == OutputFormat::Json)
    print_json(out, graph_json(g));
  else
    write_graph(out, g);
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const Spectrum s = eigenvalues(g, o.vector);
  switch (parse_format(o.format)) {
    case OutputFormat::Json: {
      Json j = spectrum_json(g, s);
      if (s.principal_vector) {
        Json v = Json::array();
        for (double x : *s.principal_vector) v.push_back(round15(x));
        j["principal_vector"] = v;
      }
      print_json(out, j);
      break;
    }
    case OutputFormat::Csv: out << spectrum_csv(s); break;
    case OutputFormat::Table:
      out << "n: " << g.order() << "  m: " << g.edge_count() << "  negative: " << g.negative_edge_count() << '\n'
          << "eigenvalues: " << join_numbers(s.eigenvalues) << '\n'
          << "lambda1: " << format_number(s.lambda1()) << '\n'
          << "lambda_min: " << format_number(s.lambda_min()) << '\n'
          << "rho: " << format_number(s.rho) << '\n';
      if (s.principal_vector) out << "principal vector: " << join_numbers(*s.principal_vector) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const auto neg_tri = find_signed_triangles(g, -1);
  const auto pos_tri = find_signed_triangles(g, 1);
  const auto cycle = shortest_unbalanced_cycle(g);
  const std::size_t components = connected_components(g).size();
  std::string cycle_text;
  if (cycle)
    for (Vertex v : cycle->vertices) cycle_text += (cycle_text.empty() ? "" : " ") + std::to_string(v);
  if (parse_format(o.format) == OutputFormat::Json) {
    print_json(out, Json{{"schema_version", kReportSchemaVersion},
                         {"kind", "check"},
                         {"n", g.order()},
                         {"m", g.edge_count()},
                         {"negative_edges", g.negative_edge_count()},
                         {"components", components},
                         {"connected", is_connected(g)},
                         {"balanced", is_balanced(g)},
                         {"negative_triangles", neg_tri.size()},
                         {"positive_triangles", pos_tri.size()},
                         {"shortest_unbalanced_cycle", cycle ? Json(cycle->vertices) : Json(nullptr)}});
    return kExitOk;
  }
  out << "n: " << g.order() << "  m: " << g.edge_count() << "  negative: " << g.negative_edge_count() << '\n'
      << "components: " << components << '\n'
      << "balanced: " << (is_balanced(g) ? "yes" : "no") << '\n'
      << "negative triangles: " << neg_tri.size() << '\n'
      << "positive triangles: " << pos_tri.size() << '\n'
      << "shortest unbalanced cycle: " << (cycle ? cycle_text : "none") << '\n';
  return kExitOk;
}

int cmd_canonical(const Options& o, std::ostream& out) {
  const SignedGraph g = load_graph(o);
  const CanonicalCode code = canonical_code(g);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx:%016llx", static_cast<unsigned long long>(code.edges),
                static_cast<unsigned long long>(code.negatives));
  std::optional<bool> same;
  if (!o.against.empty()) same = switching_isomorphic(g, read_graph_file(o.against));
  if (parse_format(o.format) == OutputFormat::Json) {
    Json j{{"schema_version", kReportSchemaVersion}, {"kind", "canonical"}, {"n", g.order()},
           {"canonical_code", buf}, {"canonical_switch", graph_json(canonical_switch(g))}};
    if (same) j["switching_isomorphic"] = *same;
    print_json(out, j);
    return kExitOk;
  }
  out << "canonical code: " << buf << '\n' << "canonical switch:\n" << indent(format_graph(canonical_switch(g)), "  ");
  if (same) out << "switching isomorphic to " << o.against << ": " << (*same ? "yes" : "no") << '\n';
  return kExitOk;
}

void print_bounds(const std::vector<BoundReport>& reports, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << bounds_csv(reports);
    return;
  }
  if (format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(bound_json(r));
    print_json(out, Json{{"schema_version", kReportSchemaVersion}, {"kind", "bounds"}, {"reports", arr}});
    return;
  }
  for (const auto& r : reports) {
    out << r.bound_name << ": bound " << format_number(r.bound_value) << "  observed " << format_number(r.observed)
        << "  " << (r.satisfied ? "satisfied" : "violated");
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
  }
}

int cmd_bounds(const Options& o, std::ostream& out) {
  std::vector<BoundReport> reports;
  if (o.in.empty() && o.family.empty()) {
    if (o.n == 0) throw InvalidArgument("bounds needs --n or a graph");
    const int n = o.n;
    reports.push_back(make_report("edge_bound", n, edge_bound(n), edge_bound(n), true));
    reports.push_back(make_report("neg_edge_bound", n, neg_edge_bound(n), neg_edge_bound(n), true));
    reports.push_back(make_report("rho_bound", n, rho_bound(n), rho_bound(n), false));
    reports.push_back(
        make_report("complete_neg_edge_bound", n, complete_neg_edge_bound(n), complete_neg_edge_bound(n), true));
    for (auto& r : reports) r.detail = "closed form";
  } else {
    const SignedGraph g = load_graph(o);
    const int n = g.order();
    if (n >= 4) {
      reports.push_back(make_report("edge_bound", n, edge_bound(n), g.edge_count(), true));
      reports.push_back(make_report("neg_edge_bound", n, neg_edge_bound(n), g.negative_edge_count(), true));
      reports.push_back(make_report("rho_bound", n, rho_bound(n), spectral_radius(g), false));
    }
    if (g.edge_count() > 0) reports.push_back(clique_spectral_bound(g));
    if (is_connected(g) && n > 0) {
      const SignedGraph h = balanced_spanning_subgraph(g);
      BoundReport r = make_report("balanced_spanning_subgraph", n, largest_eigenvalue(h), largest_eigenvalue(g), false);
      r.witness = h;
      r.detail = "bound is lambda_1 of the extracted all-positive subgraph";
      reports.push_back(r);
    }
  }
  print_bounds(reports, parse_format(o.format), out);
  return kExitOk;
}

std::function<void(const SearchProgress&)> progress_printer(const Options& o, std::ostream& err) {
  if (o.quiet) return {};
  return [&err](const SearchProgress& p) {
    err << "progress: classes " << p.classes_done << "/" << p.classes_total << "  signatures " << p.signatures_scanned
        << "  best " << format_number(p.best) << std::endl;
  };
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.objective = parse_objective(o.objective);
  cfg.forbidden = parse_forbidden(o.forbid);
  cfg.require_unbalanced = !o.allow_balanced;
  cfg.require_connected = !o.allow_disconnected;
  cfg.workers = o.workers > 0 ? o.workers : default_workers();
  cfg.prune_with_edge_bound = !o.no_prune;
  cfg.time_budget = o.time_budget;
  cfg.checkpoint_path = o.checkpoint;
  cfg.on_progress = progress_printer(o, err);
  const SearchReport r = search(cfg);

  switch (parse_format(o.format)) {
    case OutputFormat::Json: print_json(out, search_json(r, o.timing)); break;
    case OutputFormat::Csv: out << search_csv(r); break;
    case OutputFormat::Table:
      out << "search n=" << cfg.n << " objective=" << objective_name(cfg.objective)
          << " forbidden=" << forbidden_name(cfg.forbidden) << '\n';
      out << "optimum: " << (r.found ? format_number(r.optimum) : "none (no feasible graph)") << '\n';
      out << "witness classes: " << r.witnesses.size() << '\n';
      out << "matched family: " << r.matched_family.value_or("none") << '\n';
      out << "underlying classes: " << r.counts.underlying_scanned << " scanned, " << r.counts.underlying_pruned
          << " pruned of " << r.classes_total << '\n';
      out << "signatures scanned: " << r.counts.signatures_scanned << '\n';
      out << "feasible: " << r.counts.feasible << '\n';
      if (o.timing) out << "wall time: " << format_number(r.wall_time) << " s\n";
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const Witness& w = r.witnesses[i];
        out << "witness " << i << ": value " << format_number(w.value);
        if (w.gst_match) out << "  ~ gst(" << w.gst_match->first << "," << w.gst_match->second << ")";
        out << '\n' << indent(format_graph(w.graph), "  ");
      }
      break;
  }
  if (!r.complete) {
    err << "time budget exhausted after " << r.classes_done << " of " << r.classes_total
        << " classes; the report is partial" << (cfg.checkpoint_path.empty() ? "" : " (resume from the checkpoint)")
        << '\n';
    return kExitFail;
  }
  return kExitOk;
}

std::pair<int, int> parse_n_spec(const std::string& spec) {
  const auto dots = spec.find("..");
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidArgument("--n expects N or LO..HI (got '" + spec + "')");
    return v;
  };
  if (dots == std::string::npos) {
    const int n = to_int(spec);
    return {n, n};
  }
  const int lo = to_int(spec.substr(0, dots)), hi = to_int(spec.substr(dots + 2));
  if (lo > hi) throw InvalidArgument("--n range is empty");
  return {lo, hi};
}

int cmd_properties(const Options& o, std::ostream& out) {
  if (o.count < 1) throw InvalidArgument("--count must be positive");
  const auto results = run_property_suites(o.seed, o.count);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.violations == 0;
  switch (parse_format(o.format)) {
    case OutputFormat::Json: print_json(out, properties_json(o.seed, results)); break;
    case OutputFormat::Csv: out << properties_csv(results); break;
    case OutputFormat::Table:
      out << "property suites, seed " << o.seed << '\n';
      for (const auto& r : results) {
        out << (r.violations ? "FAIL " : "PASS ") << r.name << ": " << r.instances << " instances, " << r.violations
            << " violations\n";
        if (r.violations) out << "  first: " << r.first_violation << '\n';
      }
      break;
  }
  return pass ? kExitOk : kExitFail;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.theorem == "properties") return cmd_properties(o, out);
  const Theorem t = parse_theorem(o.theorem);
  if (o.n_spec.empty()) throw InvalidArgument("verify needs --n");
  const auto [lo, hi] = parse_n_spec(o.n_spec);
  VerifyOptions vo;
  vo.workers = o.workers > 0 ? o.workers : default_workers();
  vo.allow_n8 = o.allow_n8;
  vo.prune = !o.no_prune;
  if (!o.quiet) {
    vo.on_progress = progress_printer(o, err);
  }
  // Validate the whole range before computing anything.
  for (int n = lo; n <= hi; ++n) {
    const auto [min_n, max_n] = theorem_range(t, o.allow_n8);
    if (n < min_n || n > max_n) verify_theorem(t, n, vo);  // throws the range diagnostic
  }
  std::vector<BoundReport> reports;
  for (int n = lo; n <= hi; ++n) reports.push_back(verify_theorem(t, n, vo));
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.pass; });
  switch (parse_format(o.format)) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(bound_json(r));
      print_json(out, Json{{"schema_version", kReportSchemaVersion},
                           {"kind", "verify"},
                           {"theorem", theorem_name(t)},
                           {"pass", pass},
                           {"reports", arr}});
      break;
    }
    case OutputFormat::Csv: out << bounds_csv(reports); break;
    case OutputFormat::Table:
      for (const auto& r : reports)
        out << (r.pass ? "PASS " : "FAIL ") << r.bound_name << " n=" << r.n << ": observed "
            << format_number(r.observed) << ", bound " << format_number(r.bound_value) << "  (" << r.detail << ")\n";
      break;
  }
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Signed-graph extremal toolkit: constructions, spectra, bounds and exhaustive searches",
               "signed-extremal");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a family member and write it in text format");
  construct->add_option("--family", o.family, "Family identifier")->required();
  construct->add_option("--s", o.s, "Parameter s (or s')");
  construct->add_option("--t", o.t, "Parameter t (or t')");
  construct->add_option("--n", o.n, "Order for order-parameterised families");
  construct->add_option("--out", o.out_path, "Write to FILE instead of stdout");
  add_format(construct, o, false);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the sign-adjacency matrix");
  add_graph_source(spectrum, o);
  spectrum->add_flag("--vector", o.vector, "Include the principal eigenvector");
  add_format(spectrum, o, true);

  auto* check = app.add_subcommand("check", "Balance, triangles, components and shortest unbalanced cycle");
  add_graph_source(check, o);
  add_format(check, o, false);

  auto* canonical = app.add_subcommand("canonical", "Switching-isomorphism canonical code (n <= 9)");
  add_graph_source(canonical, o);
  canonical->add_option("--against", o.against, "Compare with the graph in FILE");
  add_format(canonical, o, false);

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for n, or bound checks for a graph");
  add_graph_source(bounds, o);
  add_format(bounds, o, true);

  auto* search_cmd = app.add_subcommand("search", "Exhaustive extremal search up to switching isomorphism");
  search_cmd->add_option("--n", o.n, "Order, 4..8")->required();
  search_cmd->add_option("--objective", o.objective, "max-edges, max-rho or max-neg-edges");
  search_cmd->add_option("--forbid", o.forbid, "c3-minus, c3-plus or none");
  search_cmd->add_flag("--allow-balanced", o.allow_balanced, "Do not require the graph to be unbalanced");
  search_cmd->add_flag("--allow-disconnected", o.allow_disconnected, "Do not require connectivity");
  search_cmd->add_flag("--no-prune", o.no_prune, "Scan every underlying class");
  search_cmd->add_option("--workers", o.workers, "Worker threads (default $SIGNED_EXTREMAL_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--time-budget", o.time_budget, "Stop after this many seconds (0: unlimited)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--checkpoint", o.checkpoint, "Resumable state file");
  search_cmd->add_flag("--timing", o.timing, "Report wall time");
  search_cmd->add_flag("--quiet", o.quiet, "No progress lines");
  add_format(search_cmd, o, true);

  auto* verify = app.add_subcommand("verify", "Check a theorem over a range of orders, or run property suites");
  verify->add_option("--theorem", o.theorem, "t1_1, t1_2_edges, t1_2_neg, t1_3, l2_2, l3_6_order or properties")
      ->required();
  verify->add_option("--n", o.n_spec, "Order N or range LO..HI");
  verify->add_flag("--allow-n8", o.allow_n8, "Permit n = 8 for the search-backed theorems");
  verify->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-prune", o.no_prune, "Scan every underlying class");
  verify->add_flag("--quiet", o.quiet, "No progress lines");
  verify->add_option("--seed", o.seed, "Seed for the property suites");
  verify->add_option("--count", o.count, "Instances per property suite");
  add_format(verify, o, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (canonical->parsed()) return cmd_canonical(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << (o.in.empty() ? std::string("input") : o.in) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace sx
