#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "signed_extremal/bounds.hpp"
#include "signed_extremal/search.hpp"

namespace sx {

enum class Theorem {
  T1_1,         // C3- free (resp. C3+ free) complete signed graphs are (K_n,+) (resp. (K_n,-))
  T1_2Edges,    // edge maximum n(n-1)/2 - (n-2), attained only by G^{s,t}
  T1_2Neg,      // largest e^- among edge maximizers
  T1_3,         // spectral-radius maximum, attained only by G^{1,n-3}
  L2_2,         // e^- <= floor(n/2) ceil(n/2) for C3- free complete signed graphs
  L3_6Order,    // lambda_1(G^{1,n-3}) > lambda_1(G^{2,n-4}) > ...
};

struct VerifyOptions {
  int workers = 1;
  bool allow_n8 = false;  // enumerative theorems stop at n = 7 unless set
  bool prune = true;
  std::function<void(const SearchProgress&)> on_progress;
};

std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& id);  // t1_1, t1_2_edges, ..., dashes accepted

// Supported orders: T1_1 3..10, L2_2 2..12, L3_6_ORDER 4..40, search-backed 4..7 (8 opt-in).
std::pair<int, int> theorem_range(Theorem t, bool allow_n8);

// Throws InvalidArgument for unsupported n.
BoundReport verify_theorem(Theorem t, int n, const VerifyOptions& opts = {});

// Switching-class representatives of K_n with no triangle of sign `forbidden`.
std::vector<SignedGraph> complete_signatures_without(int n, int forbidden);

// Seeded random property suites. Instances are drawn from a 64-bit Mersenne Twister
// using raw outputs only, so verdicts are reproducible across platforms.
struct PropertySuiteResult {
  std::string name;
  int instances = 0;
  int violations = 0;
  std::string first_violation;
};
std::vector<PropertySuiteResult> run_property_suites(std::uint64_t seed, int instances);

}  // namespace sx
