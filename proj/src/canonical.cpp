#include "signed_extremal/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

#include "signed_extremal/errors.hpp"

namespace sx {

PackedGraph PackedGraph::from(const SignedGraph& g) {
  if (g.order() > kMaxPackedOrder)
    throw LimitExceeded("packed graphs hold at most " + std::to_string(kMaxPackedOrder) +
                        " vertices");
  PackedGraph p;
  p.n = g.order();
  for (const auto& e : g.edges()) p.add_edge(e.u, e.v, e.sign);
  return p;
}

SignedGraph PackedGraph::to_signed() const {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) edges.push_back({i, j, (neg[i] >> j & 1U) ? -1 : 1});
  return SignedGraph(n, edges);
}

int PackedGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += std::popcount(adj[v]);
  return twice / 2;
}

void PackedGraph::add_edge(int u, int v, int sign) {
  adj[u] |= static_cast<std::uint16_t>(1U << v);
  adj[v] |= static_cast<std::uint16_t>(1U << u);
  if (sign < 0) {
    neg[u] |= static_cast<std::uint16_t>(1U << v);
    neg[v] |= static_cast<std::uint16_t>(1U << u);
  }
}

namespace {

int negative_triangles_at(const PackedGraph& g, int v) {
  int count = 0;
  for (int a = 0; a < g.n; ++a) {
    if (!g.has_edge(v, a)) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.has_edge(v, b) || !g.has_edge(a, b)) continue;
      int parity = (g.neg[v] >> a & 1U) ^ (g.neg[v] >> b & 1U) ^ (g.neg[a] >> b & 1U);
      count += static_cast<int>(parity);
    }
  }
  return count;
}

// Relabels a list of per-vertex keys to dense ranks 0,1,... in sorted key order.
template <typename Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return out;
}

// Enumerates the relabelings that list colour classes in increasing colour order and
// maximise the edge code. `on_leaf(perm, improved)` fires for every relabeling whose
// code equals the running maximum; improved is true when the maximum just increased.
class PermutationSearch {
 public:
  using Leaf = std::function<void(const std::array<int, kMaxPackedOrder>&, bool)>;

  PermutationSearch(const PackedGraph& g, const std::vector<int>& colors, Leaf on_leaf)
      : g_(g), pairs_(pair_count(g.n)), on_leaf_(std::move(on_leaf)) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    allowed_.resize(g.n);
    for (int pos = 0; pos < g.n; ++pos) {
      int c = colors[order[pos]];
      for (int v : order)
        if (colors[v] == c) allowed_[pos] |= static_cast<std::uint16_t>(1U << v);
    }
  }

  std::uint64_t run() {
    dfs(0, 0, 0);
    return best_;
  }

 private:
  void dfs(int pos, std::uint16_t used, std::uint64_t code) {
    if (pos == g_.n) {
      bool improved = !have_best_ || code > best_;
      if (improved) {
        best_ = code;
        have_best_ = true;
      }
      on_leaf_(perm_, improved);
      return;
    }
    std::uint16_t candidates = allowed_[pos] & static_cast<std::uint16_t>(~used);
    const int prefix = pair_count(pos + 1);
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= static_cast<std::uint16_t>(candidates - 1);
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i)
        if (g_.has_edge(perm_[i], v)) next |= std::uint64_t{1} << (pairs_ - 1 - pair_index(i, pos));
      if (have_best_ && prefix > 0) {
        const int shift = pairs_ - prefix;
        if ((next >> shift) < (best_ >> shift)) continue;
      }
      perm_[pos] = v;
      dfs(pos + 1, used | static_cast<std::uint16_t>(1U << v), next);
    }
  }

  const PackedGraph& g_;
  int pairs_;
  Leaf on_leaf_;
  std::vector<std::uint16_t> allowed_;
  std::array<int, kMaxPackedOrder> perm_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void require_code_order(int n) {
  if (n > kMaxCodeOrder)
    throw LimitExceeded("canonical codes support at most " + std::to_string(kMaxCodeOrder) +
                        " vertices");
}

// Negative-edge code of the relabeled graph (new vertex i is old vertex perm[i]) after
// switching its breadth-first spanning forest to all-positive.
std::uint64_t switched_negative_code(const PackedGraph& g, const std::array<int, kMaxPackedOrder>& perm) {
  const int n = g.n;
  const int pairs = pair_count(n);
  std::array<int, kMaxPackedOrder> spin{};
  std::array<int, kMaxPackedOrder> queue{};
  for (int root = 0; root < n; ++root) {
    if (spin[root]) continue;
    spin[root] = 1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int x = queue[head++];
      for (int y = 0; y < n; ++y) {
        if (spin[y] || !g.has_edge(perm[x], perm[y])) continue;
        spin[y] = (g.neg[perm[x]] >> perm[y] & 1U) ? -spin[x] : spin[x];
        queue[tail++] = y;
      }
    }
  }
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (!g.has_edge(perm[i], perm[j])) continue;
      int s = (g.neg[perm[i]] >> perm[j] & 1U) ? -1 : 1;
      if (s * spin[i] * spin[j] < 0) code |= std::uint64_t{1} << (pairs - 1 - pair_index(i, j));
    }
  return code;
}

}  // namespace

std::vector<int> refine_colors(const PackedGraph& g, bool use_signs) {
  const int n = g.n;
  std::vector<std::pair<int, int>> initial(n);
  for (int v = 0; v < n; ++v)
    initial[v] = {std::popcount(g.adj[v]), use_signs ? negative_triangles_at(g, v) : 0};
  std::vector<int> colors = rank_keys(initial);
  int classes = *std::max_element(colors.begin(), colors.end()) + 1;
  while (classes < n) {
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].first = colors[v];
      for (int w = 0; w < n; ++w)
        if (g.has_edge(v, w)) keys[v].second.push_back(colors[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    std::vector<int> next = rank_keys(keys);
    int next_classes = *std::max_element(next.begin(), next.end()) + 1;
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

std::uint64_t canonical_unsigned_code(const PackedGraph& g) {
  require_code_order(g.n);
  if (g.n <= 1) return 0;
  PermutationSearch search(g, refine_colors(g, false), [](const auto&, bool) {});
  return search.run();
}

PackedGraph decode_unsigned(int n, std::uint64_t code) {
  require_code_order(n);
  PackedGraph out;
  out.n = n;
  const int pairs = pair_count(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code >> (pairs - 1 - pair_index(i, j)) & 1U) out.add_edge(i, j);
  return out;
}

PackedGraph canonical_unsigned_form(const PackedGraph& g) {
  return decode_unsigned(g.n, canonical_unsigned_code(g));
}

CanonicalCode canonical_code(const SignedGraph& g, int limit) {
  if (g.order() > limit)
    throw LimitExceeded("switching isomorphism is limited to " + std::to_string(limit) +
                        " vertices (got " + std::to_string(g.order()) + ")");
  require_code_order(g.order());
  const PackedGraph p = PackedGraph::from(g);
  CanonicalCode result;
  result.n = p.n;
  if (p.n <= 1) return result;
  std::uint64_t best_neg = 0;
  bool have_neg = false;
  PermutationSearch search(p, refine_colors(p, true),
                           [&](const std::array<int, kMaxPackedOrder>& perm, bool improved) {
                             std::uint64_t code = switched_negative_code(p, perm);
                             if (improved || !have_neg || code < best_neg) best_neg = code;
                             have_neg = true;
                           });
  result.edges = search.run();
  result.negatives = best_neg;
  return result;
}

bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2, int limit) {
  if (g1.order() != g2.order()) return false;
  const int n = g1.order();
  if (n > limit)
    throw LimitExceeded("switching isomorphism is limited to " + std::to_string(limit) +
                        " vertices (got " + std::to_string(n) + ")");
  if (g1.edge_count() != g2.edge_count()) return false;
  auto profile = [](const SignedGraph& g) {
    const PackedGraph p = PackedGraph::from(g);
    std::vector<std::pair<int, int>> d(p.n);
    for (int v = 0; v < p.n; ++v) d[v] = {std::popcount(p.adj[v]), negative_triangles_at(p, v)};
    std::sort(d.begin(), d.end());
    return d;
  };
  if (profile(g1) != profile(g2)) return false;
  return canonical_code(g1, limit) == canonical_code(g2, limit);
}

SignedGraph relabel(const SignedGraph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || hit[v]) throw InvalidArgument("relabel: not a permutation");
    hit[v] = 1;
  }
  auto edges = g.edges();
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return SignedGraph(g.order(), edges);
}

}  // namespace sx
