#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "signed_extremal/signed_graph.hpp"

namespace sx {

inline constexpr int kMaxPackedOrder = 16;
// Vertex pairs are packed into 64-bit codes, so canonical codes stop at n = 11.
inline constexpr int kMaxCodeOrder = 11;
inline constexpr int kDefaultIsomorphismLimit = 9;

// Bitmask adjacency for small graphs: bit w of adj[v] is set iff vw is an edge, and
// bit w of neg[v] iff that edge is negative.
struct PackedGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxPackedOrder> adj{};
  std::array<std::uint16_t, kMaxPackedOrder> neg{};

  static PackedGraph from(const SignedGraph& g);
  SignedGraph to_signed() const;

  int edge_count() const;
  bool has_edge(int u, int v) const { return adj[u] >> v & 1U; }
  void add_edge(int u, int v, int sign = 1);

  friend bool operator==(const PackedGraph&, const PackedGraph&) = default;
};

// Position of the pair {i, j}, i < j, in column-major order: (0,1),(0,2),(1,2),(0,3),...
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Switching-isomorphism invariant code. Two signed graphs of the same order have equal
// codes iff one is obtained from the other by a relabeling followed by a switching.
struct CanonicalCode {
  int n = 0;
  std::uint64_t edges = 0;      // maximised over relabelings
  std::uint64_t negatives = 0;  // minimised over the optimal relabelings, after canonical_switch
  auto operator<=>(const CanonicalCode&) const = default;
};

// Isomorphism-invariant ordered vertex colouring by iterated neighbourhood refinement.
// With use_signs the initial colour also counts negative triangles through each vertex,
// which is switching invariant.
std::vector<int> refine_colors(const PackedGraph& g, bool use_signs);

// Canonical code of the underlying graph and the relabeled graph realizing it.
std::uint64_t canonical_unsigned_code(const PackedGraph& g);
PackedGraph canonical_unsigned_form(const PackedGraph& g);
PackedGraph decode_unsigned(int n, std::uint64_t code);

CanonicalCode canonical_code(const SignedGraph& g, int limit = kDefaultIsomorphismLimit);

// True iff some vertex bijection carries g1 to a switching of g2. Throws LimitExceeded
// beyond `limit` vertices.
bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2,
                          int limit = kDefaultIsomorphismLimit);

// Applies perm: vertex v of g becomes vertex perm[v].
SignedGraph relabel(const SignedGraph& g, const std::vector<Vertex>& perm);

}  // namespace sx
