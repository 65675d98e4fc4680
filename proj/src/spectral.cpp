#include "signed_extremal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "signed_extremal/errors.hpp"

namespace sx {

DenseMatrix adjacency_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = g.sign(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return a;
}

Spectrum eigenvalues(const SignedGraph& g, bool with_vector) {
  JacobiOptions opts;
  opts.want_vectors = with_vector;
  EigenDecomposition dec = jacobi_eigen(adjacency_matrix(g), opts);
  Spectrum s;
  s.tol = opts.off_norm_tol;
  s.eigenvalues = std::move(dec.values);
  s.rho = std::max(s.eigenvalues.front(), -s.eigenvalues.back());
  if (with_vector) {
    const std::size_t n = s.eigenvalues.size();
    std::vector<double> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = dec.vectors(r, 0);
    std::size_t pivot = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::fabs(x[r]) > std::fabs(x[pivot]) + 1e-12) pivot = r;
    if (x[pivot] < 0)
      for (double& e : x) e = -e;
    s.principal_vector = std::move(x);
  }
  return s;
}

double spectral_radius(const SignedGraph& g) { return eigenvalues(g).rho; }
double largest_eigenvalue(const SignedGraph& g) { return eigenvalues(g).lambda1(); }

DenseMatrix QuotientMatrix::as_dense() const {
  DenseMatrix d(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) d(i, j) = static_cast<double>(q[i][j]);
  return d;
}

NotEquitable::NotEquitable(std::size_t block_i, std::size_t block_j, Vertex row_a, Vertex row_b,
                           long sum_a, long sum_b)
    : std::runtime_error("partition is not equitable: block pair (" + std::to_string(block_i) + "," +
                         std::to_string(block_j) + "), row " + std::to_string(row_a) + " sums to " +
                         std::to_string(sum_a) + " but row " + std::to_string(row_b) + " sums to " +
                         std::to_string(sum_b)),
      block_i_(block_i),
      block_j_(block_j),
      row_a_(row_a),
      row_b_(row_b) {}

QuotientMatrix quotient_matrix(const SignedGraph& g, const std::vector<VertexSet>& partition) {
  const int n = g.order();
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw InvalidArgument("partition block " + std::to_string(b) + " is empty");
    for (Vertex v : partition[b].members()) {
      if (v < 0 || v >= n) throw InvalidArgument("partition names vertex " + std::to_string(v) + " outside the graph");
      if (owner[v] >= 0) throw InvalidArgument("vertex " + std::to_string(v) + " is in two partition blocks");
      owner[v] = static_cast<int>(b);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0) throw InvalidArgument("partition misses vertex " + std::to_string(v));

  const std::size_t m = partition.size();
  QuotientMatrix out;
  out.partition = partition;
  out.q.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& rows = partition[i].members();
      long first = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        long sum = 0;
        for (Vertex c : partition[j].members()) sum += g.sign(rows[r], c);
        if (r == 0) first = sum;
        else if (sum != first) throw NotEquitable(i, j, rows[0], rows[r], first, sum);
      }
      out.q[i][j] = first;
    }
  return out;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  const std::size_t m = q.size();
  DenseMatrix sym(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double ni = static_cast<double>(q.partition[i].size());
      const double nj = static_cast<double>(q.partition[j].size());
      sym(i, j) = static_cast<double>(q.q[i][j]) * std::sqrt(ni / nj);
    }
  // Equitability makes n_i q_ij = n_j q_ji; rounding in the square roots can break exact
  // symmetry, so average the two triangles.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  JacobiOptions opts;
  opts.want_vectors = false;
  return jacobi_eigen(sym, opts).values;
}

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

bool contains_multiset(std::vector<double> super, std::vector<double> sub, double tol) {
  std::sort(super.begin(), super.end());
  std::sort(sub.begin(), sub.end());
  std::vector<char> used(super.size(), 0);
  for (double x : sub) {
    auto it = std::lower_bound(super.begin(), super.end(), x - tol);
    bool matched = false;
    for (auto k = static_cast<std::size_t>(it - super.begin()); k < super.size() && super[k] <= x + tol; ++k)
      if (!used[k]) {
        used[k] = 1;
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

bool quotient_spectrum_check(const SignedGraph& g, const std::vector<VertexSet>& partition, double tol) {
  const QuotientMatrix q = quotient_matrix(g, partition);
  return contains_multiset(eigenvalues(g).eigenvalues, quotient_eigenvalues(q), tol);
}

bool interlacing_check(const SignedGraph& g, const VertexSet& kept, double tol) {
  if (kept.empty()) throw InvalidArgument("interlacing_check: kept set is empty");
  const auto outer = eigenvalues(g).eigenvalues;
  const auto inner = eigenvalues(g.induced(kept)).eigenvalues;
  const std::size_t n = outer.size();
  const std::size_t m = inner.size();
  for (std::size_t i = 0; i < m; ++i)
    if (outer[i] < inner[i] - tol || inner[i] < outer[n - m + i] - tol) return false;
  return true;
}

}  // namespace sx
