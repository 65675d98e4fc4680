#include "signed_extremal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "signed_extremal/constructions.hpp"
#include "signed_extremal/enumeration.hpp"
#include "signed_extremal/errors.hpp"
#include "signed_extremal/spectral.hpp"

namespace sx {

namespace {

const std::pair<const char*, Theorem> kTheorems[] = {
    {"t1_1", Theorem::T1_1},         {"t1_2_edges", Theorem::T1_2Edges}, {"t1_2_neg", Theorem::T1_2Neg},
    {"t1_3", Theorem::T1_3},         {"l2_2", Theorem::L2_2},            {"l3_6_order", Theorem::L3_6Order},
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

SearchReport run_search(int n, Objective objective, const VerifyOptions& opts) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.objective = objective;
  cfg.forbidden = Forbidden::C3Minus;
  cfg.require_unbalanced = true;
  cfg.require_connected = true;
  cfg.workers = opts.workers;
  cfg.prune_with_edge_bound = opts.prune;
  cfg.on_progress = opts.on_progress;
  return search(cfg);
}

std::string witness_list(const SearchReport& r) {
  return r.matched_family ? *r.matched_family : std::string("unmatched");
}

BoundReport verify_t1_1(int n) {
  const auto plus_free = complete_signatures_without(n, -1);
  const auto minus_free = complete_signatures_without(n, 1);
  const SignedGraph kpos = build_complete(n, 1);
  const SignedGraph kneg = build_complete(n, -1);
  double observed = 0;
  for (const auto& g : plus_free) observed = std::max<double>(observed, g.edge_count());
  for (const auto& g : minus_free) observed = std::max<double>(observed, g.edge_count());
  BoundReport r = make_report("t1_1", n, n * (n - 1) / 2.0, observed, true);
  const bool plus_ok = plus_free.size() == 1 && switching_equivalent(plus_free.front(), kpos);
  const bool minus_ok = minus_free.size() == 1 && switching_equivalent(minus_free.front(), kneg);
  r.pass = r.satisfied && plus_ok && minus_ok;
  r.witness = kpos;
  r.detail = "c3-minus-free classes=" + std::to_string(plus_free.size()) +
             (plus_ok ? " (all ~ (K_n,+))" : " (not all ~ (K_n,+))") +
             "; c3-plus-free classes=" + std::to_string(minus_free.size()) +
             (minus_ok ? " (all ~ (K_n,-))" : " (not all ~ (K_n,-))");
  return r;
}

BoundReport verify_t1_2_edges(int n, const VerifyOptions& opts) {
  const SearchReport s = run_search(n, Objective::MaxEdges, opts);
  BoundReport r = make_report("t1_2_edges", n, static_cast<double>(edge_bound(n)), s.optimum, true);
  const std::size_t splits = static_cast<std::size_t>((n - 2) / 2);
  const bool matched = s.found && s.matched_family && s.witnesses.size() == splits;
  r.pass = r.satisfied && s.found && s.optimum == r.bound_value && matched;
  if (!s.witnesses.empty()) r.witness = s.witnesses.front().graph;
  r.detail = "witness classes=" + std::to_string(s.witnesses.size()) + " [" + witness_list(s) + "]";
  return r;
}

BoundReport verify_t1_2_neg(int n, const VerifyOptions& opts) {
  const SearchReport s = run_search(n, Objective::MaxNegEdgesAtMaxEdges, opts);
  BoundReport r = make_report("t1_2_neg", n, static_cast<double>(neg_edge_bound(n)), s.optimum, true);
  const int s_half = (n - 2) / 2;
  const SignedGraph layout = build_gst_maxneg(n);
  const bool layout_ok = layout.negative_edge_count() == neg_edge_bound(n);
  bool balanced_split = false;
  for (const auto& w : s.witnesses)
    if (w.gst_match && w.gst_match->first == s_half) balanced_split = true;
  r.pass = r.satisfied && s.found && s.optimum == r.bound_value && layout_ok && balanced_split;
  if (!s.witnesses.empty()) r.witness = s.witnesses.front().graph;
  r.detail = "maximizer classes=[" + witness_list(s) + "]; gst_maxneg e-=" +
             std::to_string(layout.negative_edge_count());
  return r;
}

BoundReport verify_t1_3(int n, const VerifyOptions& opts) {
  const SearchReport s = run_search(n, Objective::MaxRho, opts);
  BoundReport r = make_report("t1_3", n, rho_bound(n), s.optimum, false);
  const bool unique = s.witnesses.size() == 1 && s.witnesses.front().gst_match &&
                      *s.witnesses.front().gst_match == std::make_pair(1, n - 3);
  r.pass = r.satisfied && s.found && std::fabs(s.optimum - r.bound_value) <= kFormulaTol && unique;
  if (!s.witnesses.empty()) r.witness = s.witnesses.front().graph;
  r.detail = "witness classes=" + std::to_string(s.witnesses.size()) + " [" + witness_list(s) +
             "]; |optimum-bound|=" + fmt(std::fabs(s.optimum - r.bound_value));
  return r;
}

BoundReport verify_l2_2(int n) {
  int best = -1;
  SignedGraph witness;
  for (const auto& g : complete_signatures_without(n, -1)) {
    auto [neg, cut] = max_negative_edges_over_switchings(g);
    if (neg > best) {
      best = neg;
      witness = switch_at(g, cut);
    }
  }
  BoundReport r = make_report("l2_2", n, static_cast<double>(complete_neg_edge_bound(n)), best, true);
  const bool construction_ok = build_kn_switched_maxneg(n).negative_edge_count() == complete_neg_edge_bound(n);
  r.pass = r.satisfied && best == complete_neg_edge_bound(n) && construction_ok;
  r.witness = witness;
  r.detail = "max e- over switchings=" + std::to_string(best);
  return r;
}

BoundReport verify_l3_6_order(int n) {
  std::vector<double> lambdas;
  for (int s = 1; s <= (n - 2) / 2; ++s) lambdas.push_back(largest_eigenvalue(build_gst(s, n - 2 - s)));
  double min_margin = INFINITY;
  for (std::size_t k = 1; k < lambdas.size(); ++k) min_margin = std::min(min_margin, lambdas[k - 1] - lambdas[k]);
  BoundReport r = make_report("l3_6_order", n, rho_bound(n), lambdas.front(), false);
  const bool formula = std::fabs(lambdas.front() - r.bound_value) <= kFormulaTol;
  const bool ordered = lambdas.size() < 2 || min_margin > 1e-6;
  r.pass = r.satisfied && formula && ordered;
  r.witness = build_gst(1, n - 3);
  r.detail = "members=" + std::to_string(lambdas.size()) +
             (lambdas.size() > 1 ? "; min margin=" + fmt(min_margin) : std::string()) +
             "; |lambda1-formula|=" + fmt(std::fabs(lambdas.front() - r.bound_value));
  return r;
}

}  // namespace

std::string theorem_name(Theorem t) {
  for (const auto& [name, x] : kTheorems)
    if (x == t) return name;
  return "?";
}

Theorem parse_theorem(const std::string& id) {
  std::string norm = id;
  std::replace(norm.begin(), norm.end(), '-', '_');
  std::transform(norm.begin(), norm.end(), norm.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& [name, x] : kTheorems)
    if (norm == name) return x;
  throw InvalidArgument("unknown theorem '" + id + "'");
}

std::pair<int, int> theorem_range(Theorem t, bool allow_n8) {
  switch (t) {
    case Theorem::T1_1: return {3, 10};
    case Theorem::L2_2: return {2, 12};
    case Theorem::L3_6Order: return {4, 40};
    case Theorem::T1_2Edges:
    case Theorem::T1_2Neg:
    case Theorem::T1_3: return {4, allow_n8 ? 8 : 7};
  }
  return {0, -1};
}

BoundReport verify_theorem(Theorem t, int n, const VerifyOptions& opts) {
  const auto [lo, hi] = theorem_range(t, opts.allow_n8);
  if (n < lo || n > hi)
    throw InvalidArgument(theorem_name(t) + " is supported for " + std::to_string(lo) + " <= n <= " +
                          std::to_string(hi) + (t == Theorem::T1_3 || t == Theorem::T1_2Edges || t == Theorem::T1_2Neg
                                                    ? " (n = 8 needs the opt-in flag)"
                                                    : ""));
  switch (t) {
    case Theorem::T1_1: return verify_t1_1(n);
    case Theorem::T1_2Edges: return verify_t1_2_edges(n, opts);
    case Theorem::T1_2Neg: return verify_t1_2_neg(n, opts);
    case Theorem::T1_3: return verify_t1_3(n, opts);
    case Theorem::L2_2: return verify_l2_2(n);
    case Theorem::L3_6Order: return verify_l3_6_order(n);
  }
  throw InvalidArgument("unknown theorem");
}

std::vector<SignedGraph> complete_signatures_without(int n, int forbidden) {
  if (n < 1 || n > kMaxPackedOrder) throw InvalidArgument("complete signatures need 1 <= n <= 16");
  const SignatureFrame frame = make_signature_frame(PackedGraph::from(build_complete(n, 1)));
  std::vector<SignedGraph> out;
  for_each_signature(frame, forbidden, [&](const PackedGraph& p, int) { out.push_back(p.to_signed()); });
  return out;
}

}  // namespace sx
