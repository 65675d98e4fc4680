#pragma once

#include <cstddef>
#include <vector>

namespace sx {

// Dense row-major square matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  bool is_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct JacobiOptions {
  double off_norm_tol = 1e-12;
  int max_sweeps = 100;
  bool want_vectors = true;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column k belongs to values[k]; empty unless requested
  int sweeps = 0;
  double off_norm = 0.0;
};

// Cyclic Jacobi rotations on a symmetric matrix. Throws NumericalError if the off-diagonal
// Frobenius norm is still above tolerance after max_sweeps sweeps, and InvalidArgument for
// a non-symmetric input.
EigenDecomposition jacobi_eigen(const DenseMatrix& a, const JacobiOptions& opts = {});

}  // namespace sx
