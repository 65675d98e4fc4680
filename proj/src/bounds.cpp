#include "signed_extremal/bounds.hpp"

#include <cmath>
#include <vector>

#include "signed_extremal/errors.hpp"
#include "signed_extremal/spectral.hpp"

namespace sx {

namespace {

void require_order(int n) {
  if (n < 4) throw InvalidArgument("bound is defined for n >= 4 (got " + std::to_string(n) + ")");
}

void require_limit(const SignedGraph& g, int limit) {
  if (g.order() > limit)
    throw LimitExceeded("clique search is limited to " + std::to_string(limit) + " vertices");
}

// Extends `clique` (with consistent spins) by candidates in increasing index order.
void grow_clique(const SignedGraph& g, std::vector<Vertex>& clique, std::vector<int>& spin,
                 Vertex next, bool balanced_only, int& best) {
  best = std::max(best, static_cast<int>(clique.size()));
  const int n = g.order();
  if (static_cast<int>(clique.size()) + (n - next) <= best) return;
  for (Vertex v = next; v < n; ++v) {
    if (static_cast<int>(clique.size()) + (n - v) <= best) return;
    bool ok = true;
    int s = 1;
    if (!clique.empty()) s = spin[clique.front()] * g.sign(clique.front(), v);
    for (Vertex c : clique) {
      if (!g.sign(c, v)) {
        ok = false;
        break;
      }
      if (balanced_only && g.sign(c, v) != spin[c] * s) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    spin[v] = s;
    clique.push_back(v);
    grow_clique(g, clique, spin, v + 1, balanced_only, best);
    clique.pop_back();
  }
}

int max_clique(const SignedGraph& g, bool balanced_only) {
  std::vector<Vertex> clique;
  std::vector<int> spin(g.order(), 0);
  int best = 0;
  grow_clique(g, clique, spin, 0, balanced_only, best);
  return best;
}

}  // namespace

BoundReport make_report(std::string name, int n, double bound, double observed, bool integral) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.n = n;
  r.bound_value = bound;
  r.observed = observed;
  r.integral = integral;
  r.satisfied = integral ? observed <= bound : observed <= bound + kSpectralSlack;
  r.pass = r.satisfied;
  return r;
}

long edge_bound(int n) {
  require_order(n);
  return static_cast<long>(n) * (n - 1) / 2 - (n - 2);
}

long neg_edge_bound(int n) {
  require_order(n);
  const long lo = (n - 2) / 2;
  const long hi = (n - 1) / 2;
  return lo * hi + n - 2;
}

double rho_bound(int n) {
  require_order(n);
  const double nn = n;
  return 0.5 * (std::sqrt(nn * nn - 8.0) + nn - 4.0);
}

long complete_neg_edge_bound(int n) {
  if (n < 1) throw InvalidArgument("complete_neg_edge_bound requires n >= 1");
  return static_cast<long>(n / 2) * ((n + 1) / 2);
}

int balanced_clique_number(const SignedGraph& g, int limit) {
  require_limit(g, limit);
  return max_clique(g, true);
}

int clique_number(const SignedGraph& g, int limit) {
  require_limit(g, limit);
  return max_clique(g, false);
}

BoundReport clique_spectral_bound(const SignedGraph& g) {
  const int e = g.edge_count();
  if (e == 0) throw InvalidArgument("clique_spectral_bound needs at least one edge");
  const int wb = balanced_clique_number(g);
  const double bound = std::sqrt(2.0 * e * (wb - 1.0) / wb);
  BoundReport r = make_report("clique_spectral", g.order(), bound, largest_eigenvalue(g), false);
  r.detail = "omega_b=" + std::to_string(wb);
  return r;
}

SignedGraph balanced_spanning_subgraph(const SignedGraph& g) {
  if (!is_connected(g)) throw InvalidArgument("balanced_spanning_subgraph requires a connected graph");
  const Spectrum spec = eigenvalues(g, true);
  const auto& x = *spec.principal_vector;
  std::vector<Vertex> negative, ambiguous;
  for (Vertex i = 0; i < g.order(); ++i) {
    if (std::fabs(x[i]) < 1e-10) ambiguous.push_back(i);
    else if (x[i] < 0) negative.push_back(i);
  }
  if (ambiguous.size() > 20) throw LimitExceeded("too many zero eigenvector entries to resolve");

  auto extract = [&](std::uint64_t pick) {
    std::vector<Vertex> cut = negative;
    for (std::size_t k = 0; k < ambiguous.size(); ++k)
      if (pick >> k & 1U) cut.push_back(ambiguous[k]);
    SignedGraph h = switch_at(g, VertexSet(std::move(cut)));
    for (const auto& e : h.edges())
      if (e.sign < 0) h = h.with_edge(e.u, e.v, 0);
    return h;
  };

  SignedGraph best = extract(0);
  double best_lambda = ambiguous.empty() ? 0.0 : largest_eigenvalue(best);
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ambiguous.size()); ++pick) {
    SignedGraph h = extract(pick);
    const double lambda = largest_eigenvalue(h);
    if (lambda > best_lambda) {
      best_lambda = lambda;
      best = std::move(h);
    }
  }
  return best;
}

}  // namespace sx
