#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "signed_extremal/jacobi.hpp"
#include "signed_extremal/signed_graph.hpp"

namespace sx {

inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kFormulaTol = 1e-9;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double rho = 0.0;                 // max(lambda_1, -lambda_n)
  std::optional<std::vector<double>> principal_vector;
  double tol = 1e-12;

  double lambda1() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
};

DenseMatrix adjacency_matrix(const SignedGraph& g);

// Principal vector (when requested) is the unit eigenvector of lambda_1 with its
// largest-magnitude entry made positive, ties going to the lowest index.
Spectrum eigenvalues(const SignedGraph& g, bool with_vector = false);
double spectral_radius(const SignedGraph& g);
double largest_eigenvalue(const SignedGraph& g);

// Quotient of the sign-adjacency matrix by an equitable partition.
struct QuotientMatrix {
  std::vector<std::vector<long>> q;
  std::vector<VertexSet> partition;

  std::size_t size() const { return q.size(); }
  DenseMatrix as_dense() const;
};

class NotEquitable : public std::runtime_error {
 public:
  NotEquitable(std::size_t block_i, std::size_t block_j, Vertex row_a, Vertex row_b, long sum_a,
               long sum_b);
  std::size_t block_i() const { return block_i_; }
  std::size_t block_j() const { return block_j_; }
  Vertex row_a() const { return row_a_; }
  Vertex row_b() const { return row_b_; }

 private:
  std::size_t block_i_, block_j_;
  Vertex row_a_, row_b_;
};

// Throws InvalidArgument if the blocks are empty, overlap, or miss a vertex, and
// NotEquitable when two rows of a block disagree on a row sum.
QuotientMatrix quotient_matrix(const SignedGraph& g, const std::vector<VertexSet>& partition);

// Eigenvalues (descending) of a quotient matrix, computed from its symmetrization
// D^{1/2} Q D^{-1/2} with D the block sizes.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// Every quotient eigenvalue, with multiplicity, is matched to a distinct eigenvalue of g.
bool quotient_spectrum_check(const SignedGraph& g, const std::vector<VertexSet>& partition,
                             double tol = kIdentityTol);

// Multiset equality of two descending lists within tol.
bool same_multiset(std::vector<double> a, std::vector<double> b, double tol);
// Every entry of `sub` matched to a distinct entry of `super` within tol.
bool contains_multiset(std::vector<double> super, std::vector<double> sub, double tol);

// Cauchy interlacing between A and the principal submatrix on `kept`.
bool interlacing_check(const SignedGraph& g, const VertexSet& kept, double tol = kIdentityTol);

}  // namespace sx
