#include "signed_extremal/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "signed_extremal/constructions.hpp"
#include "signed_extremal/enumeration.hpp"
#include "signed_extremal/errors.hpp"
#include "signed_extremal/graph_io.hpp"
#include "signed_extremal/jacobi.hpp"
#include "signed_extremal/spectral.hpp"

namespace sx {

namespace {

const std::pair<const char*, Objective> kObjectives[] = {
    {"max-edges", Objective::MaxEdges},
    {"max-rho", Objective::MaxRho},
    {"max-neg-edges", Objective::MaxNegEdgesAtMaxEdges},
};
const std::pair<const char*, Forbidden> kForbidden[] = {
    {"c3-minus", Forbidden::C3Minus},
    {"c3-plus", Forbidden::C3Plus},
    {"none", Forbidden::None},
};

int forbidden_sign(Forbidden f) {
  switch (f) {
    case Forbidden::C3Minus: return -1;
    case Forbidden::C3Plus: return 1;
    case Forbidden::None: return 0;
  }
  return 0;
}

bool spectral(Objective o) { return o == Objective::MaxRho; }

double packed_rho(const PackedGraph& g) {
  DenseMatrix a(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.has_edge(i, j)) a(i, j) = (g.neg[i] >> j & 1U) ? -1.0 : 1.0;
  JacobiOptions opts;
  opts.want_vectors = false;
  const auto values = jacobi_eigen(a, opts).values;
  return std::max(values.front(), -values.back());
}

double packed_lambda1(const PackedGraph& g) {
  DenseMatrix a(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.has_edge(i, j)) a(i, j) = 1.0;
  JacobiOptions opts;
  opts.want_vectors = false;
  return jacobi_eigen(a, opts).values.front();
}

struct Candidate {
  double value;
  PackedGraph graph;
};

struct ClassResult {
  bool pruned = false;
  std::uint64_t signatures = 0;
  std::uint64_t feasible = 0;
  bool has = false;
  double best = 0.0;
  std::vector<Candidate> candidates;
};

// Drops candidates that can no longer be optimal.
void trim(std::vector<Candidate>& c, double best, bool integral) {
  const double floor = integral ? best : best - kTieSlack;
  std::erase_if(c, [&](const Candidate& x) { return x.value < floor; });
}

ClassResult scan_class(const PackedGraph& g, double upper_bound, const SearchConfig& cfg, bool have_best,
                       double best_known) {
  ClassResult r;
  const bool integral = !spectral(cfg.objective);
  if (cfg.prune_with_edge_bound && have_best &&
      (integral ? upper_bound < best_known : upper_bound < best_known - kTieSlack)) {
    r.pruned = true;
    return r;
  }
  const SignatureFrame frame = make_signature_frame(g);
  r.signatures = frame.class_count();
  const double m = g.edge_count();
  for_each_signature(frame, forbidden_sign(cfg.forbidden), [&](const PackedGraph& p, int negative_free) {
    if (cfg.require_unbalanced && negative_free == 0) return;
    ++r.feasible;
    const double value = spectral(cfg.objective) ? packed_rho(p) : m;
    if (have_best && value < (integral ? best_known : best_known - kTieSlack)) return;
    if (r.has && value < (integral ? r.best : r.best - kTieSlack)) return;
    if (!r.has || value > r.best) {
      r.best = value;
      r.has = true;
      trim(r.candidates, r.best, integral);
    }
    r.candidates.push_back({value, p});
  });
  return r;
}

struct ScanState {
  std::size_t next_class = 0;  // position in processing order
  bool has = false;
  double best = 0.0;
  SearchCounts counts;
  std::vector<Candidate> candidates;
};

nlohmann::json fingerprint(const SearchConfig& c) {
  return {{"n", c.n},
          {"objective", objective_name(c.objective)},
          {"forbidden", forbidden_name(c.forbidden)},
          {"require_unbalanced", c.require_unbalanced},
          {"require_connected", c.require_connected},
          {"prune", c.prune_with_edge_bound}};
}

void save_checkpoint(const SearchConfig& cfg, const ScanState& s) {
  nlohmann::json j;
  j["version"] = 1;
  j["config"] = fingerprint(cfg);
  j["next_class"] = s.next_class;
  j["has"] = s.has;
  j["best"] = s.best;
  j["counts"] = {{"underlying_scanned", s.counts.underlying_scanned},
                 {"underlying_pruned", s.counts.underlying_pruned},
                 {"signatures_scanned", s.counts.signatures_scanned},
                 {"feasible", s.counts.feasible}};
  j["candidates"] = nlohmann::json::array();
  for (const auto& c : s.candidates)
    j["candidates"].push_back({{"value", c.value}, {"graph", format_graph(c.graph.to_signed())}});
  const std::string tmp = cfg.checkpoint_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write checkpoint '" + tmp + "'");
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, cfg.checkpoint_path);
}

bool load_checkpoint(const SearchConfig& cfg, ScanState& s) {
  std::ifstream in(cfg.checkpoint_path, std::ios::binary);
  if (!in) return false;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("checkpoint '" + cfg.checkpoint_path + "' is not valid JSON: " + e.what());
  }
  if (j.value("version", 0) != 1 || j["config"] != fingerprint(cfg))
    throw InvalidArgument("checkpoint '" + cfg.checkpoint_path + "' was written for a different search");
  s.next_class = j["next_class"].get<std::size_t>();
  s.has = j["has"].get<bool>();
  s.best = j["best"].get<double>();
  const auto& c = j["counts"];
  s.counts.underlying_scanned = c["underlying_scanned"].get<std::uint64_t>();
  s.counts.underlying_pruned = c["underlying_pruned"].get<std::uint64_t>();
  s.counts.signatures_scanned = c["signatures_scanned"].get<std::uint64_t>();
  s.counts.feasible = c["feasible"].get<std::uint64_t>();
  s.candidates.clear();
  for (const auto& x : j["candidates"])
    s.candidates.push_back({x["value"].get<double>(), PackedGraph::from(parse_graph(x["graph"].get<std::string>()))});
  return true;
}

std::vector<std::pair<std::pair<int, int>, CanonicalCode>> gst_codes(int n) {
  std::vector<std::pair<std::pair<int, int>, CanonicalCode>> out;
  for (int s = 1; s <= (n - 2) / 2; ++s) out.push_back({{s, n - 2 - s}, canonical_code(build_gst(s, n - 2 - s))});
  return out;
}

}  // namespace

std::string objective_name(Objective o) {
  for (const auto& [name, x] : kObjectives)
    if (x == o) return name;
  return "?";
}

std::string forbidden_name(Forbidden f) {
  for (const auto& [name, x] : kForbidden)
    if (x == f) return name;
  return "?";
}

Objective parse_objective(const std::string& kebab) {
  for (const auto& [name, x] : kObjectives)
    if (kebab == name) return x;
  throw InvalidArgument("unknown objective '" + kebab + "'");
}

Forbidden parse_forbidden(const std::string& kebab) {
  for (const auto& [name, x] : kForbidden)
    if (kebab == name) return x;
  throw InvalidArgument("unknown forbidden triangle '" + kebab + "'");
}

void validate(const SearchConfig& c) {
  if (c.n < 4 || c.n > kMaxEnumerationOrder)
    throw InvalidArgument("search supports 4 <= n <= " + std::to_string(kMaxEnumerationOrder) + " (got " +
                          std::to_string(c.n) + ")");
  if (c.workers < 1) throw InvalidArgument("workers must be positive");
  if (c.time_budget < 0) throw InvalidArgument("time budget must be nonnegative");
}

bool is_feasible(const SignedGraph& g, const SearchConfig& config) {
  if (config.require_connected && !is_connected(g)) return false;
  if (config.require_unbalanced && is_balanced(g)) return false;
  const int f = forbidden_sign(config.forbidden);
  return f == 0 || find_signed_triangles(g, f).empty();
}

double objective_value(const SignedGraph& g, Objective objective) {
  switch (objective) {
    case Objective::MaxEdges: return g.edge_count();
    case Objective::MaxRho: return spectral_radius(g);
    case Objective::MaxNegEdgesAtMaxEdges: return max_negative_edges_over_switchings(g).first;
  }
  return 0.0;
}

std::pair<int, VertexSet> max_negative_edges_over_switchings(const SignedGraph& g) {
  const int n = g.order();
  if (n > 24) throw LimitExceeded("switching brute force is limited to 24 vertices");
  const auto edges = g.edges();
  int best = -1;
  std::uint64_t best_mask = 0;
  // U and its complement give the same graph, so the last vertex stays outside U.
  const std::uint64_t limit = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int neg = 0;
    for (const auto& e : edges) {
      const bool flip = ((mask >> e.u) ^ (mask >> e.v)) & 1U;
      neg += (flip ? -e.sign : e.sign) < 0;
    }
    if (neg > best) {
      best = neg;
      best_mask = mask;
    }
  }
  return {best, VertexSet::from_mask(best_mask)};
}

SearchReport search(const SearchConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  const auto& classes = graph_classes(config.n, config.require_connected);
  const bool integral = !spectral(config.objective);

  std::vector<double> upper(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    upper[i] = integral ? classes[i].edge_count() : packed_lambda1(classes[i]);
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return upper[a] > upper[b]; });

  ScanState state;
  if (!config.checkpoint_path.empty()) load_checkpoint(config, state);

  SearchReport report;
  report.config = config;
  report.classes_total = classes.size();
  std::uint64_t last_progress_million = state.counts.signatures_scanned / 1000000;
  const std::size_t resumed_at = state.next_class;

  while (state.next_class < order.size()) {
    // At least one batch per run, so every partial run leaves a checkpoint.
    if (config.time_budget > 0 && state.next_class > resumed_at && elapsed() > config.time_budget) {
      report.complete = false;
      break;
    }
    const std::size_t begin = state.next_class;
    const std::size_t end = std::min(order.size(), begin + kSearchBatch);
    std::vector<ClassResult> results(end - begin);
    std::atomic<std::size_t> cursor{begin};
    auto work = [&] {
      for (std::size_t k; (k = cursor.fetch_add(1)) < end;) {
        const std::size_t c = order[k];
        results[k - begin] = scan_class(classes[c], upper[c], config, state.has, state.best);
      }
    };
    const int threads = std::min<int>(config.workers, static_cast<int>(end - begin));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (auto& r : results) {
      if (r.pruned) {
        ++state.counts.underlying_pruned;
        continue;
      }
      ++state.counts.underlying_scanned;
      state.counts.signatures_scanned += r.signatures;
      state.counts.feasible += r.feasible;
      if (!r.has) continue;
      if (!state.has || r.best > state.best) {
        state.best = r.best;
        state.has = true;
      }
      for (auto& c : r.candidates) state.candidates.push_back(std::move(c));
      trim(state.candidates, state.best, integral);
    }
    state.next_class = end;
    if (!config.checkpoint_path.empty()) save_checkpoint(config, state);
    const std::uint64_t million = state.counts.signatures_scanned / 1000000;
    if (config.on_progress && million > last_progress_million)
      config.on_progress({state.next_class, order.size(), state.counts.signatures_scanned, state.best});
    last_progress_million = million;
  }

  report.classes_done = state.next_class;
  report.counts = state.counts;
  report.found = state.has;
  report.optimum = state.best;

  std::map<CanonicalCode, Witness> unique;
  for (const auto& c : state.candidates) {
    const SignedGraph g = c.graph.to_signed();
    CanonicalCode code = canonical_code(g);
    if (!unique.count(code)) unique.emplace(code, Witness{g, code, c.value, std::nullopt});
  }

  if (config.objective == Objective::MaxNegEdgesAtMaxEdges && report.found) {
    int best = -1;
    std::vector<Witness> switched;
    for (auto& [code, w] : unique) {
      auto [neg, cut] = max_negative_edges_over_switchings(w.graph);
      if (neg > best) {
        best = neg;
        switched.clear();
      }
      if (neg == best) switched.push_back({switch_at(w.graph, cut), code, static_cast<double>(neg), std::nullopt});
    }
    unique.clear();
    for (auto& w : switched) unique.emplace(w.code, std::move(w));
    report.optimum = best;
  }

  const auto gst = gst_codes(config.n);
  bool all_matched = !unique.empty();
  std::string family;
  for (auto& [code, w] : unique) {
    for (const auto& [st, gst_code] : gst)
      if (gst_code == code) w.gst_match = st;
    if (w.gst_match) {
      if (!family.empty()) family += ",";
      family += "gst(" + std::to_string(w.gst_match->first) + "," + std::to_string(w.gst_match->second) + ")";
    } else {
      all_matched = false;
    }
    report.witnesses.push_back(std::move(w));
  }
  if (all_matched) report.matched_family = family;
  report.wall_time = elapsed();
  return report;
}

}  // namespace sx
