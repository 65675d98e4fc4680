#pragma once

#include <string>
#include <vector>

#include "signed_extremal/char_poly.hpp"
#include "signed_extremal/signed_graph.hpp"

namespace sx {

// Vertex layout shared by every family built from G^{s,t}:
//   0 = u, 1 = v, 2..s+1 = u_1..u_s, s+2..s+t+1 = v_1..v_t
// and for H3 the extra vertex w is last.

enum class Family {
  Gst,
  GstMaxNeg,
  H1,
  H2,
  H3,
  UnbalancedC4,
  CompletePos,
  CompleteNeg,
  KnSwitchedMaxNeg,
};

struct ConstructionParams {
  Family family = Family::Gst;
  int s = 0;  // s or s'
  int t = 0;  // t or t'
  int n = 0;  // for the order-parameterised families
};

// G^{s,t}: all-positive clique on the s+t vertices u_i, v_j; negative edge uv; positive
// edges u-u_i and v-v_j. Throws InvalidArgument unless s, t >= 1.
SignedGraph build_gst(int s, int t);

// The switching set {v, u_1, ..., u_s} used for the negative-edge extremum, s = floor((n-2)/2).
VertexSet gst_maxneg_cut(int n);
SignedGraph build_gst_maxneg(int n);

// Unsigned comparison graphs, returned all-positive.
SignedGraph build_h1(int s, int t);            // underlying graph of G^{s,t} - u_1v_1
SignedGraph build_h2(int s, int t);            // underlying graph of G^{s,t} - u_1u_2, s >= 2
SignedGraph build_h3(int s_prime, int t_prime);  // G^{s',t'} underlying plus w joined to the clique

SignedGraph build_unbalanced_c4();
SignedGraph build_complete(int n, int sign);
// (K_n,+) switched at {0, ..., floor(n/2)-1}.
SignedGraph build_kn_switched_maxneg(int n);

SignedGraph build(const ConstructionParams& p);
Family parse_family(const std::string& kebab);  // "gst", "h1", "kn-switched-maxneg", ...
std::string family_name(Family f);

// Equitable partitions whose quotients carry the closed-form characteristic polynomials.
std::vector<VertexSet> gst_partition(int s, int t);
std::vector<VertexSet> h1_partition(int s, int t);
std::vector<VertexSet> h2_partition(int s, int t);
std::vector<VertexSet> h3_partition(int s_prime, int t_prime);

// Graph and partition whose quotient has `id` as characteristic polynomial.
struct PolySource {
  SignedGraph graph;
  std::vector<VertexSet> partition;
};
PolySource char_poly_source(const CharPolyId& id);

// Selector for lambda_1 of each comparison graph (uses symmetry H1^{s,t} = H1^{t,s}).
CharPolyId h1_char_poly(int s, int t);
CharPolyId h2_char_poly(int s, int t);
CharPolyId h3_char_poly(int s_prime, int t_prime);

}  // namespace sx
