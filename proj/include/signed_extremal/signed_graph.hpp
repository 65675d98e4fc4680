#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sx {

using Vertex = int;

struct SignedEdge {
  Vertex u;
  Vertex v;
  int sign;  // +1 or -1
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Subset of {0, ..., n-1}; members kept sorted and unique.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Signed graph on vertices 0..n-1 stored as a dense symmetric sign matrix.
// Unsigned graphs are the all-positive case.
class SignedGraph {
 public:
  SignedGraph() = default;
  // Throws InvalidArgument on loops, out-of-range vertices, duplicate pairs, or signs
  // other than +1/-1.
  SignedGraph(int n, const std::vector<SignedEdge>& edges);

  static SignedGraph empty(int n);

  int order() const { return n_; }
  int sign(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  bool adjacent(Vertex u, Vertex v) const { return sign(u, v) != 0; }
  int degree(Vertex v) const;

  int edge_count() const;
  int negative_edge_count() const;

  // Edges with u < v in row-major order.
  std::vector<SignedEdge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  // Returns a copy with the pair {u,v} set to `sign` (0 removes the edge).
  SignedGraph with_edge(Vertex u, Vertex v, int sign) const;
  SignedGraph induced(const VertexSet& kept) const;
  // Underlying graph as an all-positive signed graph.
  SignedGraph underlying() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void set(Vertex u, Vertex v, int s) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(s);
    adj_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(s);
  }

  int n_ = 0;
  std::vector<std::int8_t> adj_;
};

struct Cycle {
  std::vector<Vertex> vertices;  // v0, ..., v_{k-1}; v_{k-1} is adjacent to v0
  int sign = 1;
  std::size_t length() const { return vertices.size(); }
};

struct EdgeCounts {
  int edges = 0;
  int negative = 0;
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

// Negates the sign of every edge with exactly one endpoint in `cut`.
SignedGraph switch_at(const SignedGraph& g, const VertexSet& cut);
SignedGraph negate(const SignedGraph& g);

bool is_connected(const SignedGraph& g);
std::vector<VertexSet> connected_components(const SignedGraph& g);

// Balanced iff there is a spin s: V -> {+1,-1} with sign(uv) = s(u)s(v) on every edge.
bool is_balanced(const SignedGraph& g);

// Switching representative whose breadth-first spanning forest edges are all +1. The
// forest is grown from the smallest unvisited vertex, neighbours in increasing order.
SignedGraph canonical_switch(const SignedGraph& g);
// The cut U with canonical_switch(g) == switch_at(g, U).
VertexSet canonical_switch_cut(const SignedGraph& g);

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

int cycle_sign(const SignedGraph& g, const std::vector<Vertex>& cycle);

// Triangles a<b<c whose edge-sign product equals `sign`.
std::vector<Cycle> find_signed_triangles(const SignedGraph& g, int sign);
bool has_signed_triangle(const SignedGraph& g, int sign);

// Minimum-length negative cycle, found by BFS on the signed double cover.
std::optional<Cycle> shortest_unbalanced_cycle(const SignedGraph& g);

EdgeCounts counts(const SignedGraph& g);

}  // namespace sx
