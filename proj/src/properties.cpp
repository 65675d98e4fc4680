#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>

#include "signed_extremal/bounds.hpp"
#include "signed_extremal/graph_io.hpp"
#include "signed_extremal/spectral.hpp"
#include "signed_extremal/verify.hpp"

namespace sx {

namespace {

// Only raw engine outputs are used; std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  bool coin(int percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

SignedGraph random_signed(Rng& rng, int n, int density, bool all_positive) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(density)) edges.push_back({u, v, all_positive || rng.coin(50) ? 1 : -1});
  return SignedGraph(n, edges);
}

// Random spanning tree (each vertex attached to an earlier one) plus random extra edges.
SignedGraph random_connected(Rng& rng, int n, int density, bool all_positive) {
  SignedGraph g = SignedGraph::empty(n);
  for (int v = 1; v < n; ++v) g = g.with_edge(rng.below(v), v, all_positive || rng.coin(50) ? 1 : -1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && rng.coin(density)) g = g.with_edge(u, v, all_positive || rng.coin(50) ? 1 : -1);
  return g;
}

VertexSet random_subset(Rng& rng, int n) {
  std::vector<Vertex> members;
  for (int v = 0; v < n; ++v)
    if (rng.coin(50)) members.push_back(v);
  return VertexSet(members);
}

std::string describe(const SignedGraph& g, const std::string& what) {
  std::string text = format_graph(g);
  for (char& c : text)
    if (c == '\n') c = ';';
  return what + " on graph [" + text + "]";
}

using Check = std::function<std::optional<std::string>(Rng&)>;

PropertySuiteResult run_suite(const std::string& name, std::uint64_t seed, int instances, const Check& check) {
  Rng rng(seed);
  PropertySuiteResult r{name, instances, 0, {}};
  for (int i = 0; i < instances; ++i) {
    if (auto failure = check(rng)) {
      if (r.violations++ == 0) r.first_violation = "instance " + std::to_string(i) + ": " + *failure;
    }
  }
  return r;
}

std::optional<std::string> switching_invariance(Rng& rng) {
  const int n = 2 + rng.below(9);
  const SignedGraph g = random_signed(rng, n, 20 + rng.below(70), false);
  const VertexSet cut = random_subset(rng, n);
  if (same_multiset(eigenvalues(g).eigenvalues, eigenvalues(switch_at(g, cut)).eigenvalues, kIdentityTol))
    return std::nullopt;
  return describe(g, "switching changed the spectrum");
}

std::optional<std::string> negation_symmetry(Rng& rng) {
  const int n = 2 + rng.below(9);
  const SignedGraph g = random_signed(rng, n, 20 + rng.below(70), false);
  std::vector<double> flipped;
  for (double x : eigenvalues(negate(g)).eigenvalues) flipped.push_back(-x);
  std::sort(flipped.begin(), flipped.end(), std::greater<>());
  if (same_multiset(eigenvalues(g).eigenvalues, flipped, kIdentityTol)) return std::nullopt;
  return describe(g, "negation is not the reflected spectrum");
}

std::optional<std::string> interlacing(Rng& rng) {
  const int n = 2 + rng.below(9);
  const SignedGraph g = random_signed(rng, n, 20 + rng.below(70), false);
  VertexSet kept = random_subset(rng, n);
  if (kept.empty()) kept = VertexSet({rng.below(n)});
  if (interlacing_check(g, kept)) return std::nullopt;
  return describe(g, "interlacing fails");
}

std::optional<std::string> balanced_subgraph(Rng& rng) {
  const int n = 2 + rng.below(9);
  const SignedGraph g = random_connected(rng, n, 10 + rng.below(80), false);
  const SignedGraph h = balanced_spanning_subgraph(g);
  if (h.order() != n) return describe(g, "extracted subgraph does not span");
  if (h.negative_edge_count() != 0) return describe(g, "extracted subgraph has negative edges");
  for (const auto& e : h.edges())
    if (!g.adjacent(e.u, e.v)) return describe(g, "extracted subgraph adds an edge");
  if (largest_eigenvalue(g) <= largest_eigenvalue(h) + kSpectralSlack) return std::nullopt;
  return describe(g, "lambda_1 exceeds that of the balanced subgraph");
}

std::optional<std::string> clique_bound(Rng& rng) {
  const int n = 2 + rng.below(9);
  SignedGraph g = random_signed(rng, n, 20 + rng.below(70), rng.coin(25));
  if (g.edge_count() == 0) g = g.with_edge(0, 1, 1);
  if (clique_spectral_bound(g).satisfied) return std::nullopt;
  return describe(g, "clique bound violated");
}

std::optional<std::string> edge_addition(Rng& rng) {
  const int n = 3 + rng.below(8);
  SignedGraph g = random_connected(rng, n, rng.below(70), true);
  while (g.edge_count() == n * (n - 1) / 2) g = random_connected(rng, n, rng.below(70), true);
  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
  const auto [u, v] = missing[rng.below(static_cast<int>(missing.size()))];
  if (largest_eigenvalue(g.with_edge(u, v, 1)) > largest_eigenvalue(g)) return std::nullopt;
  return describe(g, "adding edge " + std::to_string(u) + "-" + std::to_string(v) + " did not raise lambda_1");
}

std::optional<std::string> underlying_domination(Rng& rng) {
  const int n = 2 + rng.below(9);
  const SignedGraph g = random_signed(rng, n, 20 + rng.below(70), false);
  if (spectral_radius(g) <= largest_eigenvalue(g.underlying()) + kSpectralSlack) return std::nullopt;
  return describe(g, "rho exceeds lambda_1 of the underlying graph");
}

}  // namespace

std::vector<PropertySuiteResult> run_property_suites(std::uint64_t seed, int instances) {
  const std::pair<const char*, Check> suites[] = {
      {"switching-invariance", switching_invariance}, {"negation-symmetry", negation_symmetry},
      {"interlacing", interlacing},                   {"balanced-spanning-subgraph", balanced_subgraph},
      {"clique-bound", clique_bound},                 {"edge-addition-monotonicity", edge_addition},
      {"underlying-domination", underlying_domination},
  };
  std::vector<PropertySuiteResult> out;
  std::uint64_t k = 0;
  for (const auto& [name, check] : suites) out.push_back(run_suite(name, seed + 0x9e3779b97f4a7c15ULL * ++k, instances, check));
  return out;
}

}  // namespace sx
