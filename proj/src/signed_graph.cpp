#include "signed_extremal/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "signed_extremal/errors.hpp"

namespace sx {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> m;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1U) m.push_back(i);
  return VertexSet(std::move(m));
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> m;
  for (Vertex v = first; v < last; ++v) m.push_back(v);
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

SignedGraph::SignedGraph(int n, const std::vector<SignedEdge>& edges) {
  if (n < 1) throw InvalidArgument("signed graph needs at least one vertex");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has a vertex outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1)
      throw InvalidArgument("edge sign must be +1 or -1, got " + std::to_string(e.sign));
    if (sign(e.u, e.v) != 0)
      throw InvalidArgument("duplicate edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
    set(e.u, e.v, e.sign);
  }
}

SignedGraph SignedGraph::empty(int n) { return SignedGraph(n, {}); }

int SignedGraph::degree(Vertex v) const {
  int d = 0;
  for (Vertex w = 0; w < n_; ++w) d += sign(v, w) != 0;
  return d;
}

int SignedGraph::edge_count() const {
  int e = 0;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j) e += sign(i, j) != 0;
  return e;
}

int SignedGraph::negative_edge_count() const {
  int e = 0;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j) e += sign(i, j) < 0;
  return e;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j)
      if (int s = sign(i, j)) out.push_back({i, j, s});
  return out;
}

std::vector<Vertex> SignedGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w)
    if (sign(v, w)) out.push_back(w);
  return out;
}

SignedGraph SignedGraph::with_edge(Vertex u, Vertex v, int s) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw InvalidArgument("with_edge: invalid vertex pair");
  if (s < -1 || s > 1) throw InvalidArgument("with_edge: sign must be -1, 0 or +1");
  SignedGraph out = *this;
  out.set(u, v, s);
  return out;
}

SignedGraph SignedGraph::induced(const VertexSet& kept) const {
  const auto& m = kept.members();
  if (m.empty()) throw InvalidArgument("induced subgraph needs a nonempty vertex set");
  if (m.back() >= n_) throw InvalidArgument("induced: vertex out of range");
  SignedGraph out = empty(static_cast<int>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (int s = sign(m[a], m[b])) out.set(static_cast<Vertex>(a), static_cast<Vertex>(b), s);
  return out;
}

SignedGraph SignedGraph::underlying() const {
  SignedGraph out = *this;
  for (auto& x : out.adj_) x = static_cast<std::int8_t>(x != 0);
  return out;
}

SignedGraph switch_at(const SignedGraph& g, const VertexSet& cut) {
  const int n = g.order();
  if (!cut.empty() && cut.members().back() >= n)
    throw InvalidArgument("switching set contains a vertex outside the graph");
  std::vector<char> in(n, 0);
  for (Vertex v : cut.members()) in[v] = 1;
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  return SignedGraph(n, edges);
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = -e.sign;
  return SignedGraph(g.order(), edges);
}

namespace {

// Breadth-first forest; spin[child] = spin[parent] * sign(parent, child), roots get +1.
std::vector<int> forest_spins(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> spin(n, 0);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (spin[root]) continue;
    spin[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y = 0; y < n; ++y) {
        if (!g.sign(x, y) || spin[y]) continue;
        spin[y] = spin[x] * g.sign(x, y);
        queue.push_back(y);
      }
    }
  }
  return spin;
}

}  // namespace

std::vector<VertexSet> connected_components(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{root};
    comp[root] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex y = 0; y < n; ++y)
        if (g.sign(members[i], y) && comp[y] < 0) {
          comp[y] = id;
          members.push_back(y);
        }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const SignedGraph& g) { return connected_components(g).size() == 1; }

bool is_balanced(const SignedGraph& g) {
  const auto spin = forest_spins(g);
  for (const auto& e : g.edges())
    if (e.sign != spin[e.u] * spin[e.v]) return false;
  return true;
}

VertexSet canonical_switch_cut(const SignedGraph& g) {
  const auto spin = forest_spins(g);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.order(); ++v)
    if (spin[v] < 0) cut.push_back(v);
  return VertexSet(std::move(cut));
}

SignedGraph canonical_switch(const SignedGraph& g) {
  return switch_at(g, canonical_switch_cut(g));
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (a.underlying() != b.underlying()) return false;
  return canonical_switch(a) == canonical_switch(b);
}

int cycle_sign(const SignedGraph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw InvalidArgument("a cycle needs at least three vertices");
  int s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    int e = g.sign(cycle[i], cycle[(i + 1) % k]);
    if (!e) throw InvalidArgument("cycle uses a non-edge");
    s *= e;
  }
  return s;
}

std::vector<Cycle> find_signed_triangles(const SignedGraph& g, int sign) {
  std::vector<Cycle> out;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.sign(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.sign(a, c) || !g.sign(b, c)) continue;
        int s = g.sign(a, b) * g.sign(b, c) * g.sign(a, c);
        if (s == sign) out.push_back({{a, b, c}, s});
      }
    }
  return out;
}

bool has_signed_triangle(const SignedGraph& g, int sign) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.sign(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (g.sign(a, c) && g.sign(b, c) && g.sign(a, b) * g.sign(b, c) * g.sign(a, c) == sign)
          return true;
    }
  return false;
}

std::optional<Cycle> shortest_unbalanced_cycle(const SignedGraph& g) {
  const int n = g.order();
  // Double cover state: 2*v + layer. Positive edges keep the layer, negative edges flip it.
  std::vector<int> dist(2 * n), parent(2 * n);
  int best_len = -1;
  std::vector<Vertex> best;
  for (Vertex start = 0; start < n; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{2 * start};
    dist[2 * start] = 0;
    const int target = 2 * start + 1;
    while (!queue.empty() && dist[target] < 0) {
      int state = queue.front();
      queue.pop_front();
      if (best_len >= 0 && dist[state] + 1 >= best_len) break;
      Vertex x = state / 2;
      int layer = state % 2;
      for (Vertex y = 0; y < n; ++y) {
        int s = g.sign(x, y);
        if (!s) continue;
        int next = 2 * y + (s > 0 ? layer : 1 - layer);
        if (dist[next] >= 0) continue;
        dist[next] = dist[state] + 1;
        parent[next] = state;
        queue.push_back(next);
      }
    }
    if (dist[target] < 0 || (best_len >= 0 && dist[target] >= best_len)) continue;
    best_len = dist[target];
    best.clear();
    for (int state = target; state != 2 * start; state = parent[state]) best.push_back(state / 2);
    std::reverse(best.begin(), best.end());
  }
  if (best_len < 0) return std::nullopt;
  // The walk ends at `start`; rotate so the cycle begins there.
  std::rotate(best.begin(), best.end() - 1, best.end());
  Cycle c{best, 0};
  c.sign = cycle_sign(g, c.vertices);
  return c;
}

EdgeCounts counts(const SignedGraph& g) { return {g.edge_count(), g.negative_edge_count()}; }

}  // namespace sx
