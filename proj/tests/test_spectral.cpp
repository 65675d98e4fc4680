#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "signed_extremal/char_poly.hpp"
#include "signed_extremal/constructions.hpp"
#include "signed_extremal/errors.hpp"
#include "signed_extremal/jacobi.hpp"
#include "signed_extremal/spectral.hpp"

using namespace sx;
using doctest::Approx;

namespace {

SignedGraph unbalanced_c4() { return build_unbalanced_c4(); }

SignedGraph random_signed(std::mt19937_64& rng, int n, int percent) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.push_back({u, v, rng() % 2 ? 1 : -1});
  return SignedGraph(n, edges);
}

// Parameters (a, b) in each selector's domain for graphs of order up to 12.
std::vector<CharPolyId> sample_ids() {
  std::vector<CharPolyId> ids;
  for (int s = 1; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t) {
      ids.push_back(CharPolyId::gst(s, t));
      ids.push_back(CharPolyId::f3(s, t));
      if (s >= 2 && t >= 2) ids.push_back(CharPolyId::f1_gen(s, t));
      if (s >= 3) ids.push_back(CharPolyId::f2_gen(s, t));
    }
  for (int n = 5; n <= 12; ++n) {
    ids.push_back(CharPolyId::f1_s1(n));
    ids.push_back(CharPolyId::f2_s2(n));
  }
  return ids;
}

}  // namespace

TEST_CASE("jacobi on a fixed matrix") {
  DenseMatrix a(3);
  const double m[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = m[i][j];
  const EigenDecomposition d = jacobi_eigen(a);
  CHECK(d.values[0] == Approx(2 + std::sqrt(2.0)).epsilon(1e-13));
  CHECK(d.values[1] == Approx(2.0).epsilon(1e-13));
  CHECK(d.values[2] == Approx(2 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(d.off_norm < 1e-12);
  // A v = lambda v for each column.
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      double av = 0;
      for (int j = 0; j < 3; ++j) av += a(i, j) * d.vectors(j, k);
      CHECK(av == Approx(d.values[k] * d.vectors(i, k)).epsilon(1e-12).scale(1));
    }
}

TEST_CASE("jacobi rejects bad input and reports the sweep cap") {
  DenseMatrix a(2);
  a(0, 1) = 1;
  CHECK_THROWS_AS(jacobi_eigen(a), InvalidArgument);
  a(1, 0) = 1;
  JacobiOptions opts;
  opts.max_sweeps = 0;
  CHECK_THROWS_AS(jacobi_eigen(a, opts), NumericalError);
  CHECK_NOTHROW(jacobi_eigen(DenseMatrix(1)));
}

TEST_CASE("spectra of small graphs") {
  const Spectrum k2 = eigenvalues(SignedGraph(2, {{0, 1, 1}}));
  CHECK(k2.eigenvalues[0] == Approx(1.0).epsilon(1e-14));
  CHECK(k2.eigenvalues[1] == Approx(-1.0).epsilon(1e-14));

  // (x^2 - 2)^2
  const Spectrum c4 = eigenvalues(unbalanced_c4());
  const double r2 = std::sqrt(2.0);
  CHECK(same_multiset(c4.eigenvalues, {r2, r2, -r2, -r2}, 1e-12));
  CHECK(c4.rho == Approx(r2).epsilon(1e-14));
  CHECK(spectral_radius(unbalanced_c4()) == Approx(r2).epsilon(1e-14));

  // Negated (K_3,+): {1, 1, -2}.
  const Spectrum k3 = eigenvalues(build_complete(3, -1));
  CHECK(same_multiset(k3.eigenvalues, {1, 1, -2}, 1e-12));
  CHECK(k3.rho == Approx(2.0).epsilon(1e-14));
  CHECK(k3.lambda1() == Approx(1.0).epsilon(1e-14));

  CHECK(largest_eigenvalue(build_gst(1, 4)) == Approx((3 + std::sqrt(41.0)) / 2).epsilon(1e-14));
  CHECK(largest_eigenvalue(build_gst(1, 4)) == Approx(4.701562118716424).epsilon(1e-14));
  CHECK(eigenvalues(SignedGraph::empty(1)).eigenvalues == std::vector<double>{0.0});
}

TEST_CASE("trace and Frobenius identities, random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph g = random_signed(rng, 1 + static_cast<int>(rng() % 16), 50);
    const Spectrum s = eigenvalues(g);
    double sum = 0, squares = 0;
    for (double x : s.eigenvalues) {
      sum += x;
      squares += x * x;
    }
    const double n = g.order();
    CHECK(std::fabs(sum) <= n * 1e-12);
    CHECK(std::fabs(squares - 2.0 * g.edge_count()) <= n * 1e-10);
    CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
    CHECK(s.rho == std::max(s.lambda1(), -s.lambda_min()));
  }
}

TEST_CASE("switching and negation act on spectra as similarity and reflection") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const SignedGraph g = random_signed(rng, n, 55);
    const VertexSet cut = VertexSet::from_mask(rng() & ((1ULL << n) - 1));
    const Spectrum a = eigenvalues(g), b = eigenvalues(switch_at(g, cut));
    for (int i = 0; i < n; ++i) CHECK(std::fabs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-9);
    const Spectrum c = eigenvalues(negate(g));
    for (int i = 0; i < n; ++i) CHECK(std::fabs(c.eigenvalues[i] + a.eigenvalues[n - 1 - i]) <= 1e-9);
    CHECK(spectral_radius(g) <= largest_eigenvalue(g.underlying()) + 1e-9);
  }
}

TEST_CASE("principal vector is a unit eigenvector with a positive leading entry") {
  const Spectrum s = eigenvalues(build_gst(2, 3), true);
  REQUIRE(s.principal_vector.has_value());
  const auto& x = *s.principal_vector;
  double norm = 0, big = 0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    norm += x[i] * x[i];
    if (std::fabs(x[i]) > big + 1e-12) {
      big = std::fabs(x[i]);
      arg = i;
    }
  }
  CHECK(norm == Approx(1.0).epsilon(1e-12));
  CHECK(x[arg] > 0);
  const DenseMatrix a = adjacency_matrix(build_gst(2, 3));
  for (std::size_t i = 0; i < x.size(); ++i) {
    double ax = 0;
    for (std::size_t j = 0; j < x.size(); ++j) ax += a(i, j) * x[j];
    CHECK(std::fabs(ax - s.lambda1() * x[i]) < 1e-10);
  }
}

TEST_CASE("quotient matrices") {
  const QuotientMatrix q = quotient_matrix(build_gst(2, 3), gst_partition(2, 3));
  const std::vector<std::vector<long>> expected{{0, -1, 2, 0}, {-1, 0, 0, 3}, {1, 0, 1, 3}, {0, 1, 2, 2}};
  CHECK(q.q == expected);

  CHECK(quotient_matrix(build_complete(5, 1), {VertexSet::range(0, 5)}).q == std::vector<std::vector<long>>{{4}});

  std::vector<VertexSet> singletons;
  for (int v = 0; v < 4; ++v) singletons.push_back(VertexSet({v}));
  const QuotientMatrix c4 = quotient_matrix(unbalanced_c4(), singletons);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c4.q[i][j] == unbalanced_c4().sign(i, j));
  CHECK(quotient_spectrum_check(unbalanced_c4(), singletons));
}

TEST_CASE("non-equitable partitions name the offending block pair") {
  // Path 0-1-2 with blocks {0,1},{2}: rows of block 0 see block 1 with sums 0 and 1.
  const SignedGraph p3(3, {{0, 1, 1}, {1, 2, 1}});
  try {
    quotient_matrix(p3, {VertexSet({0, 1}), VertexSet({2})});
    FAIL("expected NotEquitable");
  } catch (const NotEquitable& e) {
    CHECK(e.block_i() == 0);
    CHECK(e.row_a() == 0);
    CHECK(e.row_b() == 1);
  }
  CHECK_THROWS_AS(quotient_matrix(p3, {VertexSet({0, 1})}), InvalidArgument);
  CHECK_THROWS_AS(quotient_matrix(p3, {VertexSet({0, 1}), VertexSet({1, 2})}), InvalidArgument);
  CHECK_THROWS_AS(quotient_matrix(p3, {VertexSet({0, 1, 2}), VertexSet()}), InvalidArgument);
}

TEST_CASE("quotient spectrum identity for G^{s,t}") {
  CHECK(quotient_spectrum_check(build_gst(1, 4), gst_partition(1, 4)));
  for (int n = 4; n <= 14; ++n)
    for (int s = 1; s <= n - 3; ++s) {
      const int t = n - 2 - s;
      std::vector<double> expected = quotient_eigenvalues(quotient_matrix(build_gst(s, t), gst_partition(s, t)));
      for (int k = 0; k < s + t - 2; ++k) expected.push_back(-1.0);
      std::sort(expected.begin(), expected.end(), std::greater<>());
      CHECK(same_multiset(eigenvalues(build_gst(s, t)).eigenvalues, expected, kIdentityTol));
    }
}

TEST_CASE("closed-form polynomials equal the characteristic polynomials of their quotients") {
  for (const CharPolyId& id : sample_ids()) {
    CAPTURE(id.name());
    const PolySource src = char_poly_source(id);
    const QuotientMatrix q = quotient_matrix(src.graph, src.partition);
    CHECK(char_poly_coefficients(id) == oracle::char_poly(q.q));
    CHECK(src.graph.order() == id.graph_order());
  }
}

TEST_CASE("frozen polynomials of the comparison graphs") {
  // Factors of det(xI - A) for the explicit graphs at n = 7.
  CHECK(char_poly_coefficients(CharPolyId::f1_s1(7)) == std::vector<long long>{-2, 10, 0, -12, -2, 1});
  CHECK(char_poly_coefficients(CharPolyId::f2_s2(7)) == std::vector<long long>{0, 0, 6, -12, -2, 1});
  CHECK(char_poly_coefficients(CharPolyId::gst(2, 3)) == std::vector<long long>{22, 10, -10, -3, 1});
}

TEST_CASE("polynomial examples") {
  const double x = (1 + std::sqrt(17.0)) / 2;
  CHECK(std::fabs(char_poly_eval(CharPolyId::gst(1, 2), x)) < 1e-12);
  for (int s = 2; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (double y : {-2.5, -0.3, 0.0, 1.7, 4.2})
        CHECK(char_poly_eval(CharPolyId::gst(s - 1, t + 1), y) - char_poly_eval(CharPolyId::gst(s, t), y) ==
              Approx((2 * y + 3) * (s - t - 1)).epsilon(1e-12));
  for (int s = 2; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (double y : {-1.5, 0.4, 3.3})
        CHECK(char_poly_eval(CharPolyId::f3(s - 1, t + 1), y) - char_poly_eval(CharPolyId::f3(s, t), y) ==
              Approx((s - 1 - t) * (2 * y * y + y - 2)).epsilon(1e-12));
}

TEST_CASE("polynomial domains") {
  CHECK_THROWS_AS(validate(CharPolyId::gst(0, 3)), InvalidArgument);
  CHECK_THROWS_AS(validate(CharPolyId::f2_gen(2, 3)), InvalidArgument);
  CHECK_THROWS_AS(validate(CharPolyId::f1_gen(1, 3)), InvalidArgument);
  CHECK_THROWS_AS(validate(CharPolyId::f1_s1(4)), InvalidArgument);
  CHECK_THROWS_AS(char_poly_eval(CharPolyId::f3(0, 1), 1.0), InvalidArgument);
  CHECK_NOTHROW(validate(CharPolyId::f2_gen(3, 1)));
}

TEST_CASE("largest roots") {
  CHECK(largest_root(CharPolyId::gst(1, 1)) == Approx(std::sqrt(2.0)).epsilon(1e-13));
  for (int n = 5; n <= 40; ++n)
    CHECK(std::fabs(largest_root(CharPolyId::gst(1, n - 3)) - (std::sqrt(n * n - 8.0) + n - 4) / 2) < 1e-9);
  CHECK(largest_root(CharPolyId::f1_s1(7)) == Approx(4.540669827603842).epsilon(1e-12));
  CHECK(std::fabs(largest_root(CharPolyId::f1_s1(7)) - largest_eigenvalue(build_h1(1, 4))) < 1e-9);
  for (const CharPolyId& id : sample_ids()) {
    CAPTURE(id.name());
    const PolySource src = char_poly_source(id);
    CHECK(std::fabs(largest_root(id) - largest_eigenvalue(src.graph)) < 1e-9);
  }
}

TEST_CASE("real roots of polynomials with repeated roots") {
  // (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
  const auto r = real_roots({-2, 5, -4, 1}, -5, 5);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Approx(1.0).epsilon(1e-7));
  CHECK(r[1] == Approx(2.0).epsilon(1e-12));
  CHECK(real_roots({1, 0, 1}, -5, 5).empty());
}

TEST_CASE("polynomials vanish at quotient eigenvalues") {
  for (const CharPolyId& id : sample_ids()) {
    CAPTURE(id.name());
    const PolySource src = char_poly_source(id);
    const auto coeffs = char_poly_coefficients(id);
    // Zero eigenvalues come back as rounding noise, so the scale is floored at 1.
    for (double x : quotient_eigenvalues(quotient_matrix(src.graph, src.partition)))
      CHECK(std::fabs(poly_eval(coeffs, x)) <= 1e-6 * std::max(1.0, poly_scale(coeffs, x)));
  }
}

TEST_CASE("interlacing") {
  const SignedGraph g = build_gst(1, 4);
  CHECK(interlacing_check(g, VertexSet::range(0, 7)));
  CHECK(interlacing_check(g, VertexSet({0, 2, 3, 4, 5, 6})));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const SignedGraph h = random_signed(rng, n, 50);
    VertexSet kept = VertexSet::from_mask(rng() & ((1ULL << n) - 1));
    if (kept.empty()) kept = VertexSet({0});
    CHECK(interlacing_check(h, kept));
  }
  CHECK_THROWS_AS(interlacing_check(g, VertexSet()), InvalidArgument);
}

TEST_CASE("extremal graph facts for n = 7..40") {
  for (int n = 7; n <= 40; ++n) {
    const Spectrum s = eigenvalues(build_gst(1, n - 3));
    CHECK(s.lambda1() > n - 2.5);
    CHECK(s.lambda1() >= -s.lambda_min());
  }
}

TEST_CASE("multiset comparison") {
  CHECK(same_multiset({3, 1, 1}, {1, 3, 1}, 1e-12));
  CHECK_FALSE(same_multiset({3, 1, 1}, {3, 3, 1}, 1e-12));
  CHECK_FALSE(same_multiset({3, 1}, {3, 1, 1}, 1e-12));
  CHECK(contains_multiset({3, 2, 1, 1}, {1, 3, 1}, 1e-12));
  CHECK_FALSE(contains_multiset({3, 2, 1}, {1, 1}, 1e-12));
}
