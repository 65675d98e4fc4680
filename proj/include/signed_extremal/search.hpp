#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "signed_extremal/canonical.hpp"
#include "signed_extremal/signed_graph.hpp"

namespace sx {

enum class Objective { MaxEdges, MaxRho, MaxNegEdgesAtMaxEdges };
enum class Forbidden { C3Minus, C3Plus, None };

inline constexpr double kTieSlack = 1e-9;
// Underlying classes are processed in fixed-size batches; pruning only consults results
// of completed batches, so reports do not depend on the worker count.
inline constexpr std::size_t kSearchBatch = 32;

struct SearchProgress {
  std::size_t classes_done = 0;
  std::size_t classes_total = 0;
  std::uint64_t signatures_scanned = 0;
  double best = 0.0;
};

struct SearchConfig {
  int n = 5;
  Objective objective = Objective::MaxEdges;
  Forbidden forbidden = Forbidden::C3Minus;
  bool require_unbalanced = true;
  bool require_connected = true;
  int workers = 1;
  // Skip an underlying class when a valid upper bound on its objective is below the best
  // value found in earlier batches (edge count for edge objectives, lambda_1 of the
  // underlying graph for the spectral radius).
  bool prune_with_edge_bound = false;
  // Wall-clock limit in seconds; 0 disables it. Checked between batches.
  double time_budget = 0.0;
  // Resumable state file; empty disables checkpointing.
  std::string checkpoint_path;
  // Invoked from the coordinating thread each time another 10^6 signatures are scanned.
  std::function<void(const SearchProgress&)> on_progress;
};

struct SearchCounts {
  std::uint64_t underlying_scanned = 0;
  std::uint64_t underlying_pruned = 0;
  std::uint64_t signatures_scanned = 0;  // switching classes over the scanned underlying graphs
  std::uint64_t feasible = 0;
  friend bool operator==(const SearchCounts&, const SearchCounts&) = default;
};

struct Witness {
  SignedGraph graph;
  CanonicalCode code;
  double value = 0.0;
  std::optional<std::pair<int, int>> gst_match;  // (s, t), s <= t, when switching-isomorphic to G^{s,t}
};

struct SearchReport {
  SearchConfig config;
  bool found = false;  // false when no feasible graph exists
  double optimum = 0.0;
  std::vector<Witness> witnesses;  // sorted by canonical code, pairwise non-isomorphic
  SearchCounts counts;
  std::optional<std::string> matched_family;  // "gst(s,t)" list when every witness matches
  bool complete = true;                        // false when the time budget stopped the scan
  std::size_t classes_done = 0;
  std::size_t classes_total = 0;
  double wall_time = 0.0;
};

std::string objective_name(Objective o);
std::string forbidden_name(Forbidden f);
Objective parse_objective(const std::string& kebab);  // max-edges, max-rho, max-neg-edges
Forbidden parse_forbidden(const std::string& kebab);  // c3-minus, c3-plus, none

// Throws InvalidArgument for n outside 4..8 or workers < 1.
void validate(const SearchConfig& config);

// The filter the search applies to each candidate: connectivity, balance and triangle
// conditions from `config`.
bool is_feasible(const SignedGraph& g, const SearchConfig& config);
double objective_value(const SignedGraph& g, Objective objective);

SearchReport search(const SearchConfig& config);

// Largest e^- over all 2^n switchings of g, and one switching set attaining it.
std::pair<int, VertexSet> max_negative_edges_over_switchings(const SignedGraph& g);

}  // namespace sx
