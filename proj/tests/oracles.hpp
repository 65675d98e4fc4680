#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "signed_extremal/signed_graph.hpp"

namespace oracle {

using sx::SignedGraph;
using sx::Vertex;

// Balanced iff some assignment of +-1 to the vertices makes every edge sign the product
// of its endpoint spins; tries all 2^n assignments.
inline bool balanced_by_spins(const SignedGraph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      const int su = (mask >> e.u & 1U) ? -1 : 1, sv = (mask >> e.v & 1U) ? -1 : 1;
      if (su * sv != e.sign) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Switching of g at the vertex set encoded by mask, written from the definition.
inline SignedGraph switch_mask(const SignedGraph& g, std::uint32_t mask) {
  std::vector<sx::SignedEdge> edges;
  for (auto e : g.edges()) {
    if (((mask >> e.u) ^ (mask >> e.v)) & 1U) e.sign = -e.sign;
    edges.push_back(e);
  }
  return SignedGraph(g.order(), edges);
}

// Some relabeling of g1 followed by some switching equals g2; n! * 2^n comparisons.
inline bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
  const int n = g1.order();
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<sx::SignedEdge> edges;
    for (const auto& e : g1.edges()) {
      const Vertex a = perm[e.u], b = perm[e.v];
      edges.push_back({std::min(a, b), std::max(a, b), e.sign});
    }
    const SignedGraph p(n, edges);
    if (p.underlying() != g2.underlying()) continue;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
      if (switch_mask(p, mask) == g2) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every simple cycle as a vertex sequence starting at its smallest vertex, each cycle once
// per direction.
inline std::vector<std::vector<Vertex>> all_cycles(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, Vertex start, Vertex x) -> void {
    for (Vertex y = start + 1; y < n; ++y) {
      if (!g.adjacent(x, y) || used[y]) continue;
      used[y] = true;
      path.push_back(y);
      if (path.size() >= 3 && g.adjacent(y, start)) out.push_back(path);
      self(self, start, y);
      path.pop_back();
      used[y] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

inline int product_sign(const SignedGraph& g, const std::vector<Vertex>& c) {
  int s = 1;
  for (std::size_t i = 0; i < c.size(); ++i) s *= g.sign(c[i], c[(i + 1) % c.size()]);
  return s;
}

// Characteristic polynomial det(xI - M) of an integer matrix by Faddeev-LeVerrier,
// constant term first. Exact: every division by k is exact for integer matrices.
inline std::vector<long long> char_poly(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  using Mat = std::vector<std::vector<__int128>>;
  Mat a(n, std::vector<__int128>(n)), mk(n, std::vector<__int128>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<__int128> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat next(n, std::vector<__int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        __int128 s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : 0);
      }
    mk = next;
    __int128 trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    c[n - k] = -trace / static_cast<__int128>(k);
  }
  return {c.begin(), c.end()};
}

}  // namespace oracle
