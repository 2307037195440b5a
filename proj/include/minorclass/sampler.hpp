// sampler.hpp -- seedable Boltzmann samplers: P(G) = x^{|G|} / (|G|! A(x)).
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minorclass/classes.hpp"
#include "minorclass/graph.hpp"

namespace minorclass {

// mt19937_64 output is pinned by the standard; the distribution code on top
// is ours, so a given seed yields the same graph on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_u64() { return gen_(); }
  double next_unit();                       // uniform in (0, 1)
  long uniform_int(long n);                 // uniform in [0, n)
  long poisson(double mean);
  long poisson_at_least(double mean, long minimum);
  long geometric(double p);                 // P(k) = (1-p) p^k, k >= 0
  std::vector<int> permutation(int n);      // Fisher-Yates shuffle of 0..n-1

 private:
  std::mt19937_64 gen_;
};

struct SamplerConfig {
  ClassId klass;
  double x = 0.1;            // Boltzmann parameter
  bool x_is_t = false;       // interpret x as t = T(x), tree classes only
  std::uint64_t seed = 1;
  long max_size = 0;         // component-size cap, 0 = none (needed at t = 1)
  long window_lo = 0;        // total-size window for rejection; 0,0 = off
  long window_hi = 0;
  bool pointed_forest = false;  // forests only: rooted tree + forest variant
  long retry_budget = 10000;
};

class BoltzmannSampler {
 public:
  explicit BoltzmannSampler(const SamplerConfig& cfg);

  LabelledGraph sample();            // whole graph, possibly empty
  LabelledGraph sample_connected();  // one component, size >= 1

  double x() const { return x_; }
  double connected_value() const { return c_at_x_; }  // C(x)

 private:
  struct Shape {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
  };

  Shape connected_shape();
  Shape rooted_tree(double t);
  Shape bounded_tree(int depth);
  Shape unrooted_tree();
  Shape decorated_cycle(double y, double cyc_y, bool bounded_trees);
  Shape path_shape();
  Shape bare_cycle();
  Shape rooted_star();
  Shape caterpillar();
  Shape bowtie_core(int kase);
  Shape star_ray_shape();
  Shape bounded_component();
  void spend();  // one unit of the retry budget

  LabelledGraph assemble(const std::vector<Shape>& parts);

  SamplerConfig cfg_;
  Rng rng_;
  double x_ = 0;
  double t_ = 0;                   // T(x) for tree-based classes
  double c_at_x_ = 0;              // C(x), always the sum of case_weights_
  std::vector<double> case_weights_;
  std::vector<double> tk_;         // T_j(x), j = 1..k, spoon classes
  long budget_left_ = 0;
};

}  // namespace minorclass
