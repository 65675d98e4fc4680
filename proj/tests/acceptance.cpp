// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "signed_extremal/bounds.hpp"
#include "signed_extremal/canonical.hpp"
#include "signed_extremal/char_poly.hpp"
#include "signed_extremal/constructions.hpp"
#include "signed_extremal/search.hpp"
#include "signed_extremal/spectral.hpp"
#include "signed_extremal/verify.hpp"

using namespace sx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (pass) note << what;
    pass = false;
  }
};

int max_negative_brute(const SignedGraph& g) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << g.order()); ++mask)
    best = std::max(best, switch_at(g, VertexSet::from_mask(mask)).negative_edge_count());
  return best;
}

SearchReport run_search(int n, Objective objective) {
  SearchConfig c;
  c.n = n;
  c.objective = objective;
  c.forbidden = Forbidden::C3Minus;
  c.require_unbalanced = true;
  c.require_connected = true;
  c.workers = 1;
  c.prune_with_edge_bound = false;  // full scan of every underlying class
  return search(c);
}

// 1: eigensolver against the closed form for G^{1,n-3}.
void formula_agreement(Outcome& o) {
  double worst = 0;
  for (int n = 7; n <= 40; ++n) {
    const double closed = (std::sqrt(static_cast<double>(n) * n - 8) + n - 4) / 2;
    const double err = std::fabs(largest_eigenvalue(build_gst(1, n - 3)) - closed);
    worst = std::max(worst, err);
    if (err > 1e-9) o.fail("n=" + std::to_string(n) + " error " + std::to_string(err));
  }
  o.note << (o.pass ? "max error " : "; max error ") << worst;
}

// 2: full spectrum is the quotient spectrum plus s+t-2 copies of -1.
void quotient_identity(Outcome& o) {
  int checked = 0;
  for (int n = 4; n <= 20; ++n)
    for (int s = 1; s <= n - 3; ++s) {
      const int t = n - 2 - s;
      const SignedGraph g = build_gst(s, t);
      std::vector<double> expected = quotient_eigenvalues(quotient_matrix(g, gst_partition(s, t)));
      expected.insert(expected.end(), s + t - 2, -1.0);
      if (!same_multiset(eigenvalues(g).eigenvalues, expected, 1e-8))
        o.fail("G^{" + std::to_string(s) + "," + std::to_string(t) + "} mismatch");
      ++checked;
    }
  o.note << checked << " graphs";
}

// 3: lambda_1(G^{s,n-2-s}) strictly decreasing in s up to the middle.
void strict_ordering(Outcome& o) {
  double smallest = 1e300;
  for (int n = 7; n <= 16; ++n)
    for (int s = 2; s <= (n - 2) / 2; ++s) {
      const double margin = largest_eigenvalue(build_gst(s - 1, n - 1 - s)) - largest_eigenvalue(build_gst(s, n - 2 - s));
      smallest = std::min(smallest, margin);
      if (margin <= 1e-6) o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  o.note << (o.pass ? "" : "; ") << "min margin " << smallest;
}

// 4: edge maximum, every maximizer a G^{s,t}, one class per split.
void edge_search(Outcome& o, std::vector<double>& per_n) {
  for (int n = 4; n <= 7; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const SearchReport r = run_search(n, Objective::MaxEdges);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    per_n.push_back(secs);
    const std::string tag = "n=" + std::to_string(n);
    if (!r.found || !r.complete || r.optimum != n * (n - 1) / 2 - (n - 2)) o.fail(tag + " optimum");
    if (static_cast<int>(r.witnesses.size()) != (n - 2) / 2) o.fail(tag + " witness classes");
    for (const Witness& w : r.witnesses)
      if (!w.gst_match) o.fail(tag + " maximizer outside G^{s,t}");
    if (secs > (n <= 6 ? 60.0 : 1800.0)) o.fail(tag + " over budget");
    o.note << tag << ":" << r.optimum << " ";
  }
}

// 5: spectral-radius maximum, unique maximizer G^{1,n-3}.
void rho_search(Outcome& o, std::vector<double>& per_n) {
  for (int n = 4; n <= 7; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const SearchReport r = run_search(n, Objective::MaxRho);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    per_n.push_back(secs);
    const std::string tag = "n=" + std::to_string(n);
    const double closed = (std::sqrt(static_cast<double>(n) * n - 8) + n - 4) / 2;
    if (!r.found || !r.complete || std::fabs(r.optimum - closed) > 1e-9) o.fail(tag + " optimum");
    if (r.witnesses.size() != 1) {
      o.fail(tag + " maximizer not unique");
    } else {
      const SignedGraph expected = n == 4 ? build_unbalanced_c4() : build_gst(1, n - 3);
      if (!switching_isomorphic(r.witnesses[0].graph, expected)) o.fail(tag + " wrong maximizer");
    }
    if (secs > (n <= 6 ? 60.0 : 1800.0)) o.fail(tag + " over budget");
  }
  o.note << "unique maximizers";
}

// 6: max e^- over all switchings of the balanced split, attained by the stated cut.
void negative_extremum(Outcome& o) {
  for (int n = 4; n <= 12; ++n) {
    const int s = (n - 2) / 2, t = n - 2 - s;
    const SignedGraph g = build_gst(s, t);
    const int best = max_negative_brute(g);
    const std::string tag = "n=" + std::to_string(n);
    if (best != s * t + n - 2) o.fail(tag + " max " + std::to_string(best));
    if (switch_at(g, gst_maxneg_cut(n)).negative_edge_count() != best) o.fail(tag + " cut does not attain");
  }
  o.note << "n=4..12";
}

// 7: C3- free complete signed graphs, expanded over every switching.
void complete_negative(Outcome& o) {
  for (int n = 4; n <= 10; ++n) {
    int best = 0;
    for (const SignedGraph& rep : complete_signatures_without(n, -1)) best = std::max(best, max_negative_brute(rep));
    if (best != (n / 2) * ((n + 1) / 2)) o.fail("n=" + std::to_string(n) + " max " + std::to_string(best));
  }
  o.note << "n=4..10";
}

// 8: comparison graphs fall below G^{1,n-3}; their polynomials vanish at lambda_1.
void comparison_graphs(Outcome& o) {
  int graphs = 0;
  double worst = 0;
  auto check = [&](const SignedGraph& h, const CharPolyId& id, double top, const std::string& tag) {
    const double l1 = largest_eigenvalue(h);
    if (l1 >= top - 1e-9) o.fail(tag + " not below");
    const auto coeffs = char_poly_coefficients(id);
    const double rel = std::fabs(poly_eval(coeffs, l1)) / poly_scale(coeffs, l1);
    worst = std::max(worst, rel);
    if (rel > 1e-6) o.fail(tag + " polynomial residual");
    ++graphs;
  };
  for (int n = 7; n <= 14; ++n) {
    const double top = largest_eigenvalue(build_gst(1, n - 3));
    for (int s = 1; s <= n - 3; ++s) {
      const int t = n - 2 - s;
      const std::string st = std::to_string(s) + "," + std::to_string(t) + "}";
      check(build_h1(s, t), h1_char_poly(s, t), top, "H1^{" + st);
      if (s >= 2) check(build_h2(s, t), h2_char_poly(s, t), top, "H2^{" + st);
    }
    for (int s = 1; s <= n - 4; ++s) {
      const int t = n - 3 - s;
      check(build_h3(s, t), h3_char_poly(s, t), top, "H3^{" + std::to_string(s) + "," + std::to_string(t) + "}");
    }
  }
  o.note << (o.pass ? "" : "; ") << graphs << " graphs, max relative residual " << worst;
}

// 9: seeded random property suites.
void property_suites(Outcome& o) {
  for (const auto& r : run_property_suites(1, 200)) {
    if (r.instances < 200 || r.violations != 0) o.fail(r.name + ": " + r.first_violation);
    o.note << r.name << " ";
  }
}

// 10: triangle-restricted complete signed graphs are the two homogeneous ones.
void complete_classification(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    const auto no_neg = complete_signatures_without(n, -1);
    const auto no_pos = complete_signatures_without(n, +1);
    const std::string tag = "n=" + std::to_string(n);
    if (no_neg.size() != 1 || !switching_equivalent(no_neg[0], build_complete(n, 1))) o.fail(tag + " C3- free");
    if (no_pos.size() != 1 || !switching_equivalent(no_pos[0], build_complete(n, -1))) o.fail(tag + " C3+ free");
  }
  o.note << "n=1..6";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<void(Outcome&)> run;
  };
  std::vector<double> edge_times, rho_times;
  const std::vector<Criterion> criteria = {
      {1, "closed form for lambda_1(G^{1,n-3}), n=7..40, tol 1e-9", 5, formula_agreement},
      {2, "quotient identity, n<=20, tol 1e-8", 10, quotient_identity},
      {3, "strict ordering of G^{s,t}, n=7..16, margin 1e-6", 5, strict_ordering},
      {4, "exhaustive edge maximum, n=4..7", 1860, [&](Outcome& o) { edge_search(o, edge_times); }},
      {5, "exhaustive spectral-radius maximum, n=4..7", 1860, [&](Outcome& o) { rho_search(o, rho_times); }},
      {6, "negative-edge maximum over switchings, n=4..12", 10, negative_extremum},
      {7, "C3- free complete graphs, max e^-, n=4..10", 60, complete_negative},
      {8, "H1/H2/H3 below G^{1,n-3}, n=7..14", 30, comparison_graphs},
      {9, "property suites, 200 instances each", 120, property_suites},
      {10, "C3-/C3+ free complete graphs, n<=6", 10, complete_classification},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) o.fail("runtime over " + std::to_string(c.budget) + " s");
    failures += !o.pass;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("edge search seconds by n=4..7:");
  for (double t : edge_times) std::printf(" %.3f", t);
  std::printf("\nrho search seconds by n=4..7:");
  for (double t : rho_times) std::printf(" %.3f", t);
  std::printf("\n%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
