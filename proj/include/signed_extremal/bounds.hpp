#pragma once

#include <optional>
#include <string>

#include "signed_extremal/signed_graph.hpp"

namespace sx {

inline constexpr int kCliqueSearchLimit = 14;
inline constexpr double kSpectralSlack = 1e-9;

// One bound compared against one observation. `satisfied` is observed <= bound_value
// (+1e-9 for spectral bounds, exact for integer bounds). Theorem verification fills the
// remaining fields; `pass` then also covers the equality characterization.
struct BoundReport {
  std::string bound_name;
  int n = 0;
  double bound_value = 0.0;
  double observed = 0.0;
  bool integral = false;
  bool satisfied = false;
  std::optional<SignedGraph> witness;
  bool pass = false;
  std::string detail;
};

BoundReport make_report(std::string name, int n, double bound, double observed, bool integral);

// n(n-1)/2 - (n-2); throws InvalidArgument for n < 4.
long edge_bound(int n);
// floor((n-2)/2) ceil((n-2)/2) + n - 2.
long neg_edge_bound(int n);
// (sqrt(n^2-8) + n - 4) / 2.
double rho_bound(int n);
// floor(n/2) ceil(n/2): most negative edges over all switchings of (K_n,+).
long complete_neg_edge_bound(int n);

// Largest |S| with the induced signed subgraph on S complete and balanced. Branch and
// bound over cliques of the underlying graph with spin propagation. Throws LimitExceeded
// above `limit` vertices.
int balanced_clique_number(const SignedGraph& g, int limit = kCliqueSearchLimit);
int clique_number(const SignedGraph& g, int limit = kCliqueSearchLimit);

// lambda_1(g) against sqrt(2e (w_b - 1)/w_b). For all-positive g this is the unsigned
// clique bound since w_b equals the clique number there.
BoundReport clique_spectral_bound(const SignedGraph& g);

// Switch g so its principal eigenvector is nonnegative, then drop the negative edges.
// The result spans V, is all-positive and has lambda_1 at least lambda_1(g). Entries of
// the eigenvector with |x_i| < 1e-10 are tried on both sides of the cut.
SignedGraph balanced_spanning_subgraph(const SignedGraph& g);

}  // namespace sx
