// dist.hpp -- exact finite-n distributions of component statistics, read off
// the generating functions: number of components, size of the component
// containing vertex 1 (the root component), size of the largest component.
#pragma once

#include <string>
#include <vector>

#include "minorclass/bigfloat.hpp"
#include "minorclass/classes.hpp"
#include "minorclass/rational.hpp"

namespace minorclass {

struct ExactDistribution {
  std::string statistic;  // "N", "S" or "L"
  int n = 0;
  int lo = 0;  // probability of value lo is probs[0]
  std::vector<Rational> probs;

  Rational mean() const;
};

// P(N_n = i) = [z^n] C^i / (i! [z^n] A), i = 1..n.
ExactDistribution components_dist(const ClassId& id, int n);

// E[N_n (N_n - 1) ... (N_n - i + 1)] = [z^n] C^i A / [z^n] A.
Rational components_factorial_moment(const ClassId& id, int n, int i);

// P(S_n = k) = c_k a_{n-k} binom(n-1, k-1) / a_n, k = 1..n.
ExactDistribution root_component_dist(const ClassId& id, int n);

// E[(S_n - 1) ... (S_n - i)] = [z^{n-i-1}] C^{(i+1)} A / (n [z^n] A).
// Computed both from this formula and from the distribution; the two must
// agree exactly or the call throws.
Rational root_component_factorial_moment(const ClassId& id, int n, int i);

// P(L_n < k) = [z^n] exp(C^{[k]}) / [z^n] A, exact.  Guarded: n above the
// threshold must go through the floating backend instead.
Rational largest_component_cdf(const ClassId& id, int n, int k, int exact_threshold = 150);

ExactDistribution largest_component_dist(const ClassId& id, int n, int exact_threshold = 150);

// Floating-backend P(L_n < k) for large n.
Real largest_component_cdf_real(const ClassId& id, int n, int k);

// E(number of cycles) in a uniform graph with all degrees <= 2 on n
// vertices: [z^n] Cyc A / [z^n] A with Cyc = (log 1/(1-z) - z - z^2/2)/2.
Rational expected_cycle_count_maxdeg2(int n);

}  // namespace minorclass
