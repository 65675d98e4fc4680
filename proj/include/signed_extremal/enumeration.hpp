#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "signed_extremal/canonical.hpp"
#include "signed_extremal/signed_graph.hpp"

namespace sx {

inline constexpr int kMinEnumerationOrder = 1;
inline constexpr int kMaxEnumerationOrder = 8;

// One representative per isomorphism class of graphs on n vertices, each in canonical
// labeling, sorted by canonical code. Built level by level: every class with m+1 edges
// arises from a class with m edges by adding one edge, so canonicalizing all one-edge
// extensions reaches every class. Results are cached per (n, connected_only).
const std::vector<PackedGraph>& graph_classes(int n, bool connected_only);

// Connected classes as all-positive signed graphs; throws InvalidArgument unless
// 4 <= n <= 8.
std::vector<SignedGraph> enumerate_underlying(int n);

// Spanning-forest split used to walk switching classes: forest edges are pinned to +1,
// every other edge ("free" edge) takes both signs.
struct SignatureFrame {
  PackedGraph base;  // all-positive
  std::vector<std::pair<int, int>> free_edges;
  // triangles_closed_by[k]: triangles whose last free edge in order is free_edges[k],
  // stored as the two other edges.
  std::vector<std::vector<std::array<std::pair<int, int>, 2>>> triangles_closed_by;
  int components = 0;

  // 2^(m - n + c)
  std::uint64_t class_count() const { return std::uint64_t{1} << free_edges.size(); }
};

SignatureFrame make_signature_frame(const PackedGraph& g);

// Visits one signature per switching class. With forbidden_triangle = +1 or -1 the walk
// backtracks as soon as a triangle of that sign is completed; 0 disables the filter.
// The callback receives the signed graph and the number of negative free edges
// (zero iff the signature is balanced).
using SignatureVisitor = std::function<void(const PackedGraph&, int negative_free_edges)>;
void for_each_signature(const SignatureFrame& frame, int forbidden_triangle, const SignatureVisitor& visit);

// All 2^(m-n+c) switching-class representatives of g's underlying graph.
std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g);

}  // namespace sx
