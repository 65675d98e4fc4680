#pragma once

#include <string>
#include <vector>

namespace sx {

// Closed-form characteristic polynomials of the quotient matrices of the extremal family
// G^{s,t} and its three comparison graphs H1, H2, H3.
enum class CharPolyFamily {
  Gst,    // f(x,s,t), quotient of G^{s,t}
  F1S1,   // f1(x) for H1^{1,n-3}, parameter n
  F1Gen,  // f1(x,s,t) for H1^{s,t}, s,t >= 2
  F2Gen,  // f2(x,s,t) for H2^{s,t}, s >= 3
  F2S2,   // f2(x) for H2^{2,n-4}, parameter n
  F3,     // f3(x,s',t') for H3^{s',t'}
};

struct CharPolyId {
  CharPolyFamily family = CharPolyFamily::Gst;
  int a = 0;  // s, s' or n
  int b = 0;  // t or t'; unused for the n-parameterised selectors

  static CharPolyId gst(int s, int t) { return {CharPolyFamily::Gst, s, t}; }
  static CharPolyId f1_s1(int n) { return {CharPolyFamily::F1S1, n, 0}; }
  static CharPolyId f1_gen(int s, int t) { return {CharPolyFamily::F1Gen, s, t}; }
  static CharPolyId f2_gen(int s, int t) { return {CharPolyFamily::F2Gen, s, t}; }
  static CharPolyId f2_s2(int n) { return {CharPolyFamily::F2S2, n, 0}; }
  static CharPolyId f3(int s, int t) { return {CharPolyFamily::F3, s, t}; }

  // Order of the graph whose quotient this polynomial belongs to.
  int graph_order() const;
  std::string name() const;
};

// Throws InvalidArgument when the parameters are outside the selector's domain.
void validate(const CharPolyId& id);

// Integer coefficients, constant term first.
std::vector<long long> char_poly_coefficients(const CharPolyId& id);

double char_poly_eval(const CharPolyId& id, double x);
double poly_eval(const std::vector<long long>& coeffs, double x);
// Sum of |c_i| |x|^i, the natural scale for judging a residual.
double poly_scale(const std::vector<long long>& coeffs, double x);

// All distinct real roots in [lo, hi], ascending. Monotone pieces between critical points
// are bracketed by sign change and bisected; critical points where the polynomial
// vanishes to rounding are reported as multiple roots.
std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi,
                               double xtol = 1e-13);

// Largest real root in [0, graph_order()]. Throws NumericalError when there is none.
double largest_root(const CharPolyId& id);

}  // namespace sx
