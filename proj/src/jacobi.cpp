#include "signed_extremal/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "signed_extremal/errors.hpp"

namespace sx {

bool DenseMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) sum += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition jacobi_eigen(const DenseMatrix& input, const JacobiOptions& opts) {
  if (!input.is_symmetric()) throw InvalidArgument("jacobi_eigen: matrix is not symmetric");
  const std::size_t n = input.size();
  DenseMatrix a = input;
  DenseMatrix v(opts.want_vectors ? n : 0);
  for (std::size_t i = 0; i < v.size(); ++i) v(i, i) = 1.0;

  EigenDecomposition out;
  double off = off_diagonal_norm(a);
  while (off >= opts.off_norm_tol) {
    if (out.sweeps == opts.max_sweeps)
      throw NumericalError("Jacobi did not converge after " + std::to_string(opts.max_sweeps) +
                           " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen so the (p,q) entry vanishes; t is the smaller root.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (std::size_t r = 0; r < v.size(); ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  out.off_norm = off;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (opts.want_vectors) {
    out.vectors = DenseMatrix(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace sx
