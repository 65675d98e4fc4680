#include "signed_extremal/constructions.hpp"

#include <algorithm>

#include "signed_extremal/errors.hpp"

namespace sx {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<SignedEdge> gst_edges(int s, int t) {
  const int n = s + t + 2;
  std::vector<SignedEdge> e;
  e.push_back({0, 1, -1});
  for (int i = 2; i < 2 + s; ++i) e.push_back({0, i, 1});
  for (int j = 2 + s; j < n; ++j) e.push_back({1, j, 1});
  for (int a = 2; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b, 1});
  return e;
}

}  // namespace

SignedGraph build_gst(int s, int t) {
  require(s >= 1 && t >= 1, "G^{s,t} requires s, t >= 1");
  return SignedGraph(s + t + 2, gst_edges(s, t));
}

VertexSet gst_maxneg_cut(int n) {
  require(n >= 4, "the negative-edge extremum requires n >= 4");
  const int s = (n - 2) / 2;
  return VertexSet::range(1, s + 2);
}

SignedGraph build_gst_maxneg(int n) {
  require(n >= 4, "the negative-edge extremum requires n >= 4");
  const int s = (n - 2) / 2;
  return switch_at(build_gst(s, n - 2 - s), gst_maxneg_cut(n));
}

SignedGraph build_h1(int s, int t) {
  require(s >= 1 && t >= 1, "H1^{s,t} requires s, t >= 1");
  return build_gst(s, t).underlying().with_edge(2, s + 2, 0);
}

SignedGraph build_h2(int s, int t) {
  require(s >= 2 && t >= 1, "H2^{s,t} requires s >= 2 and t >= 1");
  return build_gst(s, t).underlying().with_edge(2, 3, 0);
}

SignedGraph build_h3(int s_prime, int t_prime) {
  require(s_prime >= 1 && t_prime >= 1, "H3^{s',t'} requires s', t' >= 1");
  const int n = s_prime + t_prime + 3;
  auto edges = gst_edges(s_prime, t_prime);
  for (auto& e : edges) e.sign = 1;
  for (int c = 2; c < n - 1; ++c) edges.push_back({c, n - 1, 1});
  return SignedGraph(n, edges);
}

SignedGraph build_unbalanced_c4() { return SignedGraph(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

SignedGraph build_complete(int n, int sign) {
  require(n >= 1, "K_n requires n >= 1");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  std::vector<SignedEdge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b, sign});
  return SignedGraph(n, e);
}

SignedGraph build_kn_switched_maxneg(int n) {
  require(n >= 2, "switched K_n requires n >= 2");
  return switch_at(build_complete(n, 1), VertexSet::range(0, n / 2));
}

SignedGraph build(const ConstructionParams& p) {
  switch (p.family) {
    case Family::Gst: return build_gst(p.s, p.t);
    case Family::GstMaxNeg: return build_gst_maxneg(p.n);
    case Family::H1: return build_h1(p.s, p.t);
    case Family::H2: return build_h2(p.s, p.t);
    case Family::H3: return build_h3(p.s, p.t);
    case Family::UnbalancedC4: return build_unbalanced_c4();
    case Family::CompletePos: return build_complete(p.n, 1);
    case Family::CompleteNeg: return build_complete(p.n, -1);
    case Family::KnSwitchedMaxNeg: return build_kn_switched_maxneg(p.n);
  }
  throw InvalidArgument("unknown family");
}

namespace {
const std::pair<const char*, Family> kFamilyNames[] = {
    {"gst", Family::Gst},
    {"gst-maxneg", Family::GstMaxNeg},
    {"h1", Family::H1},
    {"h2", Family::H2},
    {"h3", Family::H3},
    {"unbal-c4", Family::UnbalancedC4},
    {"complete-pos", Family::CompletePos},
    {"complete-neg", Family::CompleteNeg},
    {"kn-switched-maxneg", Family::KnSwitchedMaxNeg},
};
}  // namespace

Family parse_family(const std::string& kebab) {
  for (const auto& [name, f] : kFamilyNames)
    if (kebab == name) return f;
  throw InvalidArgument("unknown family '" + kebab + "'");
}

std::string family_name(Family f) {
  for (const auto& [name, g] : kFamilyNames)
    if (f == g) return name;
  return "?";
}

std::vector<VertexSet> gst_partition(int s, int t) {
  require(s >= 1 && t >= 1, "G^{s,t} requires s, t >= 1");
  return {VertexSet({0}), VertexSet({1}), VertexSet::range(2, s + 2), VertexSet::range(s + 2, s + t + 2)};
}

std::vector<VertexSet> h1_partition(int s, int t) {
  require(s >= 1 && t >= 2, "H1 partition requires s >= 1 and t >= 2");
  const int n = s + t + 2;
  if (s == 1)
    return {VertexSet({0}), VertexSet({1}), VertexSet({2}), VertexSet({3}), VertexSet::range(4, n)};
  return {VertexSet({0}),           VertexSet({1}),
          VertexSet({2}),           VertexSet({s + 2}),
          VertexSet::range(3, s + 2), VertexSet::range(s + 3, n)};
}

std::vector<VertexSet> h2_partition(int s, int t) {
  require(s >= 2 && t >= 1, "H2 partition requires s >= 2 and t >= 1");
  const int n = s + t + 2;
  if (s == 2) return {VertexSet({0}), VertexSet({1}), VertexSet({2}), VertexSet({3}), VertexSet::range(4, n)};
  return {VertexSet({0}), VertexSet({1}), VertexSet({2}), VertexSet({3}), VertexSet::range(4, s + 2),
          VertexSet::range(s + 2, n)};
}

std::vector<VertexSet> h3_partition(int s_prime, int t_prime) {
  require(s_prime >= 1 && t_prime >= 1, "H3 partition requires s', t' >= 1");
  const int n = s_prime + t_prime + 3;
  return {VertexSet({0}), VertexSet({1}), VertexSet::range(2, s_prime + 2),
          VertexSet::range(s_prime + 2, n - 1), VertexSet({n - 1})};
}

PolySource char_poly_source(const CharPolyId& id) {
  validate(id);
  switch (id.family) {
    case CharPolyFamily::Gst: return {build_gst(id.a, id.b), gst_partition(id.a, id.b)};
    case CharPolyFamily::F1S1: return {build_h1(1, id.a - 3), h1_partition(1, id.a - 3)};
    case CharPolyFamily::F1Gen: return {build_h1(id.a, id.b), h1_partition(id.a, id.b)};
    case CharPolyFamily::F2Gen: return {build_h2(id.a, id.b), h2_partition(id.a, id.b)};
    case CharPolyFamily::F2S2: return {build_h2(2, id.a - 4), h2_partition(2, id.a - 4)};
    case CharPolyFamily::F3: return {build_h3(id.a, id.b), h3_partition(id.a, id.b)};
  }
  throw InvalidArgument("unknown polynomial selector");
}

CharPolyId h1_char_poly(int s, int t) {
  require(s >= 1 && t >= 1 && s + t >= 3, "H1 selector requires s, t >= 1 and s + t >= 3");
  const int lo = std::min(s, t), hi = std::max(s, t);
  if (lo == 1) return CharPolyId::f1_s1(hi + 3);
  return CharPolyId::f1_gen(lo, hi);
}

CharPolyId h2_char_poly(int s, int t) {
  require(s >= 2 && t >= 1, "H2 selector requires s >= 2 and t >= 1");
  if (s == 2) return CharPolyId::f2_s2(t + 4);
  return CharPolyId::f2_gen(s, t);
}

CharPolyId h3_char_poly(int s_prime, int t_prime) { return CharPolyId::f3(s_prime, t_prime); }

}  // namespace sx
