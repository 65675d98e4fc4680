#include "signed_extremal/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_set>

#include "signed_extremal/errors.hpp"

namespace sx {

namespace {

bool packed_connected(const PackedGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << g.n) - 1;
}

std::vector<PackedGraph> build_classes(int n, bool connected_only) {
  std::vector<std::uint64_t> level{0};
  std::vector<std::uint64_t> all{0};
  for (int m = 0; m < pair_count(n); ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const PackedGraph g = decode_unsigned(n, code);
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          if (g.has_edge(i, j)) continue;
          PackedGraph child = g;
          child.add_edge(i, j);
          next.insert(canonical_unsigned_code(child));
        }
    }
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<PackedGraph> out;
  for (std::uint64_t code : all) {
    PackedGraph g = decode_unsigned(n, code);
    if (!connected_only || packed_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

const std::vector<PackedGraph>& graph_classes(int n, bool connected_only) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder)
    throw InvalidArgument("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::vector<PackedGraph>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, connected_only);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_classes(n, connected_only)).first;
  return it->second;
}

std::vector<SignedGraph> enumerate_underlying(int n) {
  if (n < 4 || n > kMaxEnumerationOrder)
    throw InvalidArgument("enumerate_underlying supports 4 <= n <= " + std::to_string(kMaxEnumerationOrder));
  std::vector<SignedGraph> out;
  for (const auto& g : graph_classes(n, true)) out.push_back(g.to_signed());
  return out;
}

SignatureFrame make_signature_frame(const PackedGraph& g) {
  SignatureFrame f;
  f.base = g;
  f.base.neg.fill(0);
  const int n = g.n;
  std::vector<int> parent(n, -2);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    ++f.components;
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int x = queue[h];
      for (int y = 0; y < n; ++y)
        if (g.has_edge(x, y) && parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
  }
  auto is_tree = [&](int a, int b) { return parent[a] == b || parent[b] == a; };

  std::vector<int> order(pair_count(n), -1);  // pair index -> free edge position
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(i, j) && !is_tree(i, j)) {
        order[pair_index(i, j)] = static_cast<int>(f.free_edges.size());
        f.free_edges.emplace_back(i, j);
      }
  f.triangles_closed_by.resize(f.free_edges.size());
  auto key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        std::array<std::pair<int, int>, 3> e{key(a, b), key(a, c), key(b, c)};
        int last = -1, which = -1;
        for (int k = 0; k < 3; ++k) {
          int pos = order[pair_index(e[k].first, e[k].second)];
          if (pos > last) {
            last = pos;
            which = k;
          }
        }
        // A triangle always has a free edge since the forest is acyclic.
        std::array<std::pair<int, int>, 2> others;
        for (int k = 0, o = 0; k < 3; ++k)
          if (k != which) others[o++] = e[k];
        f.triangles_closed_by[last].push_back(others);
      }
  return f;
}

namespace {

struct SignatureWalk {
  const SignatureFrame& frame;
  int forbidden;
  const SignatureVisitor& visit;
  PackedGraph current;

  bool negative(int a, int b) const { return current.neg[a] >> b & 1U; }

  void set_negative(int a, int b, bool on) {
    const auto ma = static_cast<std::uint16_t>(1U << b);
    const auto mb = static_cast<std::uint16_t>(1U << a);
    if (on) {
      current.neg[a] |= ma;
      current.neg[b] |= mb;
    } else {
      current.neg[a] &= static_cast<std::uint16_t>(~ma);
      current.neg[b] &= static_cast<std::uint16_t>(~mb);
    }
  }

  bool closes_forbidden(std::size_t k) const {
    if (!forbidden) return false;
    const auto [a, b] = frame.free_edges[k];
    int parity = negative(a, b);
    for (const auto& tri : frame.triangles_closed_by[k]) {
      int p = parity ^ negative(tri[0].first, tri[0].second) ^ negative(tri[1].first, tri[1].second);
      if ((p ? -1 : 1) == forbidden) return true;
    }
    return false;
  }

  void walk(std::size_t k, int negatives) {
    if (k == frame.free_edges.size()) {
      visit(current, negatives);
      return;
    }
    const auto [a, b] = frame.free_edges[k];
    if (!closes_forbidden(k)) walk(k + 1, negatives);
    set_negative(a, b, true);
    if (!closes_forbidden(k)) walk(k + 1, negatives + 1);
    set_negative(a, b, false);
  }
};

}  // namespace

void for_each_signature(const SignatureFrame& frame, int forbidden_triangle, const SignatureVisitor& visit) {
  if (forbidden_triangle < -1 || forbidden_triangle > 1) throw InvalidArgument("forbidden triangle sign must be -1, 0 or +1");
  SignatureWalk w{frame, forbidden_triangle, visit, frame.base};
  w.walk(0, 0);
}

std::vector<SignedGraph> enumerate_signatures(const SignedGraph& g) {
  const SignatureFrame frame = make_signature_frame(PackedGraph::from(g.underlying()));
  std::vector<SignedGraph> out;
  for_each_signature(frame, 0, [&](const PackedGraph& p, int) { out.push_back(p.to_signed()); });
  return out;
}

}  // namespace sx
