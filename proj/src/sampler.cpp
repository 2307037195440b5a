#include "minorclass/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "minorclass/bigfloat.hpp"
#include "minorclass/rational.hpp"

namespace minorclass {

namespace {

struct RetrySignal {};

double tree_value_d(double x) {
  return tree_value(Real(x)).to_double();
}

// Cyc(y) = (1/2) (-log(1-y) - y - y^2/2), cycles of length >= 3
double cyc_value(double y) { return 0.5 * (-std::log1p(-y) - y - y * y / 2); }

constexpr long kHardComponentCap = 5'000'000;

}  // namespace

double Rng::next_unit() {
  for (;;) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

long Rng::uniform_int(long n) {
  if (n <= 0) throw std::invalid_argument("uniform_int needs n >= 1");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r < limit) return static_cast<long>(r % un);
  }
}

long Rng::poisson(double mean) {
  if (mean < 0) throw std::invalid_argument("poisson mean must be >= 0");
  if (mean == 0) return 0;
  if (mean > 700)
    throw std::runtime_error("poisson mean too large for inversion sampling");
  double u = next_unit();
  double p = std::exp(-mean), cum = p;
  long k = 0;
  while (u > cum) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
    if (k > 100000) break;  // cum has saturated in double precision
  }
  return k;
}

long Rng::poisson_at_least(double mean, long minimum) {
  if (minimum <= 0) return poisson(mean);
  // Inversion restricted to k >= minimum; avoids rejection loops when the
  // conditioning event is rare.
  double p = std::exp(-mean);
  double below = 0;
  for (long j = 0; j < minimum; ++j) {
    below += p;
    p *= mean / static_cast<double>(j + 1);
  }
  double z = 1.0 - below;  // P(X >= minimum)
  if (z <= 0) throw std::runtime_error("truncated poisson mass underflow");
  double u = next_unit() * z;
  long k = minimum;
  double cum = p;  // now p = P(X = minimum)
  while (u > cum) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
    if (k > 100000) break;
  }
  return k;
}

long Rng::geometric(double p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("geometric needs p in (0,1)");
  double u = next_unit();
  return static_cast<long>(std::floor(std::log(u) / std::log(p)));
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(uniform_int(i + 1))]);
  return perm;
}

BoltzmannSampler::BoltzmannSampler(const SamplerConfig& cfg)
    : cfg_(cfg), rng_(cfg.seed) {
  const ClassId& id = cfg_.klass;
  if (id.tag == ClassTag::two_spoon_free)
    throw std::invalid_argument(
        "no sampler for two-spoon-free; series and distributions only");
  if (cfg_.retry_budget < 1) throw std::invalid_argument("retry budget must be >= 1");
  if (cfg_.pointed_forest && id.tag != ClassTag::forests)
    throw std::invalid_argument("the pointed variant exists only for forests");
  if ((cfg_.window_lo != 0 || cfg_.window_hi != 0) &&
      !(1 <= cfg_.window_lo && cfg_.window_lo <= cfg_.window_hi))
    throw std::invalid_argument("bad size window");

  bool tree_based = id.tag == ClassTag::forests || id.tag == ClassTag::spoon_dbf ||
                    id.tag == ClassTag::diamond_bowtie_free ||
                    id.tag == ClassTag::bowtie_free;
  if (cfg_.x_is_t) {
    if (!tree_based)
      throw std::invalid_argument("t-parameterization only fits tree-based classes");
    if (!(cfg_.x > 0 && cfg_.x <= 1))
      throw std::invalid_argument("t must lie in (0, 1]");
    t_ = cfg_.x;
    x_ = t_ * std::exp(-t_);
    if (t_ == 1.0 && cfg_.max_size <= 0)
      throw std::invalid_argument("t = 1 is critical; set a max_size cap");
  } else {
    x_ = cfg_.x;
    if (!(x_ > 0)) throw std::invalid_argument("x must be positive");
    SingularityData sd = singularity_data(id);
    if (sd.finite_rho && !(x_ < sd.rho.to_double()))
      throw std::invalid_argument("x must lie strictly below the radius " +
                                  std::to_string(sd.rho.to_double()));
    if (tree_based) t_ = tree_value_d(x_);
  }

  // Branch weights; their sum is C(x) by construction.
  switch (id.tag) {
    case ClassTag::forests:
      case_weights_ = {t_ - t_ * t_ / 2};
      break;
    case ClassTag::spoon_dbf: {
      tk_.assign(static_cast<size_t>(id.k) + 1, 0.0);
      tk_[1] = x_;
      for (int j = 2; j <= id.k; ++j) tk_[j] = x_ * std::exp(tk_[j - 1]);
      case_weights_ = {t_ - t_ * t_ / 2, cyc_value(tk_[static_cast<size_t>(id.k)])};
      break;
    }
    case ClassTag::diamond_bowtie_free:
      case_weights_ = {t_ - t_ * t_ / 2, cyc_value(t_)};
      break;
    case ClassTag::bounded_components: {
      double term = 1;
      for (int j = 1; j <= id.k; ++j) {
        term *= x_ / j;
        case_weights_.push_back(to_double(Rational(connected_graph_count(j))) * term);
      }
      break;
    }
    case ClassTag::path_forests:
      case_weights_ = {x_, x_ * x_ / (2 * (1 - x_))};
      break;
    case ClassTag::caterpillar_forests: {
      double s_dot = x_ * std::exp(x_);          // rooted stars
      double s = s_dot - x_ * x_ / 2;            // plain stars
      double chain = (s_dot - x_) * (s_dot - x_) / (2 * (1 - s_dot));
      case_weights_ = {s, chain};
      break;
    }
    case ClassTag::max_degree_two:
      case_weights_ = {x_ + x_ * x_ / (2 * (1 - x_)), cyc_value(x_)};
      break;
    case ClassTag::bowtie_free: {
      double t = t_, et = std::exp(t);
      double hubs = t * t / 2;
      double chain = t * t / (1 - t);  // sum of t^L, L >= 2
      case_weights_ = {
          t - t * t / 2,                              // tree
          cyc_value(t),                               // cycle core
          t * t * t * t / 24,                         // K4 core
          t * t * t * t * t / (4 * (1 - t)),          // K4, one edge subdivided
          hubs * (et - 1 - t),                        // chord, >= 2 commons
          hubs * (et - 1) * chain,                    // chord, >= 1 common, chain
          hubs * (et - 1 - t - t * t / 2),            // no chord, >= 3 commons
          hubs * (et - 1 - t) * chain,                // no chord, >= 2 commons, chain
      };
      break;
    }
    case ClassTag::star_ray: {
      case_weights_ = {x_ + x_ * x_ / (2 * (1 - x_))};  // paths
      double leg = x_ / (1 - x_);
      double term = x_ * leg * leg / 2;  // spider weight at branch degree i
      for (int i = 3; id.k < 0 || i <= id.k; ++i) {
        term *= leg / i;
        case_weights_.push_back(term);
        if (id.k < 0 && (term < 1e-320 || i > 400)) break;
      }
      break;
    }
    case ClassTag::two_spoon_free:
      break;  // rejected above
  }
  for (double w : case_weights_)
    if (!(w >= 0) || !std::isfinite(w))
      throw std::invalid_argument("x too close to the radius: weights overflow");
  c_at_x_ = 0;
  for (double w : case_weights_) c_at_x_ += w;
}

void BoltzmannSampler::spend() {
  if (--budget_left_ <= 0)
    throw std::runtime_error("retry budget exhausted for " + cfg_.klass.token() +
                             " at x = " + std::to_string(x_));
}

BoltzmannSampler::Shape BoltzmannSampler::rooted_tree(double t) {
  Shape s;
  s.n = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    long c = rng_.poisson(t);
    for (long i = 0; i < c; ++i) {
      int u = s.n++;
      if (cfg_.max_size > 0 && s.n > cfg_.max_size) {
        spend();
        throw RetrySignal{};
      }
      if (s.n > kHardComponentCap)
        throw std::runtime_error("component grew past the hard cap; set max_size");
      s.edges.emplace_back(v, u);
      todo.push_back(u);
    }
  }
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::bounded_tree(int depth) {
  Shape s;
  s.n = 1;
  std::vector<std::pair<int, int>> todo{{0, depth}};  // vertex, allowed height
  while (!todo.empty()) {
    auto [v, d] = todo.back();
    todo.pop_back();
    if (d <= 1) continue;
    long c = rng_.poisson(tk_[static_cast<size_t>(d) - 1]);
    for (long i = 0; i < c; ++i) {
      int u = s.n++;
      s.edges.emplace_back(v, u);
      todo.emplace_back(u, d - 1);
    }
  }
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::unrooted_tree() {
  // Root parameter t' with density (1-t)/C(x) on [0, T(x)]; integrating
  // gives t' = 1 - sqrt(1 - 2 u C(x)) with C = T - T^2/2.
  double ctrees = t_ - t_ * t_ / 2;
  double tp = 1 - std::sqrt(std::max(0.0, 1 - 2 * rng_.next_unit() * ctrees));
  return rooted_tree(tp);
}

BoltzmannSampler::Shape BoltzmannSampler::decorated_cycle(double y, double cyc_y,
                                                          bool bounded_trees) {
  // cycle length m >= 3 with mass y^m / (2m cyc_y)
  double u = rng_.next_unit() * cyc_y;
  long m = 3;
  double term = y * y * y / 6, cum = term;
  while (u > cum) {
    ++m;
    term *= y * static_cast<double>(m - 1) / static_cast<double>(m);
    cum += term;
    if (m > 2000000) {
      spend();
      throw RetrySignal{};
    }
  }
  Shape s;
  std::vector<int> roots;
  roots.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    Shape tr = bounded_trees ? bounded_tree(cfg_.klass.k) : rooted_tree(y);
    int off = s.n;
    s.n += tr.n;
    for (auto [a, b] : tr.edges) s.edges.emplace_back(a + off, b + off);
    roots.push_back(off);
  }
  for (long i = 0; i < m; ++i)
    s.edges.emplace_back(roots[static_cast<size_t>(i)],
                         roots[static_cast<size_t>((i + 1) % m)]);
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::path_shape() {
  double cp = x_ + x_ * x_ / (2 * (1 - x_));
  Shape s;
  if (rng_.next_unit() < x_ / cp) {
    s.n = 1;
    return s;
  }
  long len = 2 + rng_.geometric(x_);
  s.n = static_cast<int>(len);
  for (long i = 0; i + 1 < len; ++i) s.edges.emplace_back(i, i + 1);
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::bare_cycle() {
  double cyc = cyc_value(x_);
  double u = rng_.next_unit() * cyc;
  long m = 3;
  double term = x_ * x_ * x_ / 6, cum = term;
  while (u > cum) {
    ++m;
    term *= x_ * static_cast<double>(m - 1) / static_cast<double>(m);
    cum += term;
    if (m > 2000000) {
      spend();
      throw RetrySignal{};
    }
  }
  Shape s;
  s.n = static_cast<int>(m);
  for (long i = 0; i < m; ++i)
    s.edges.emplace_back(i, (i + 1) % m);
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::rooted_star() {
  Shape s;
  s.n = 1;
  long leaves = rng_.poisson(x_);
  for (long i = 0; i < leaves; ++i) {
    s.edges.emplace_back(0, s.n);
    ++s.n;
  }
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::caterpillar() {
  double s_val = case_weights_[0];
  if (rng_.next_unit() * c_at_x_ < s_val) {
    // a lone star; halve the size-2 mass (z e^z counts the edge twice)
    for (;;) {
      Shape st = rooted_star();
      if (st.n == 2 && rng_.next_unit() < 0.5) {
        spend();
        continue;
      }
      return st;
    }
  }
  // chain of rooted stars, endpoint stars of size >= 2
  double s_dot = x_ * std::exp(x_);
  auto endpoint_star = [&]() {
    Shape st;
    st.n = 1;
    long leaves = rng_.poisson_at_least(x_, 1);
    for (long i = 0; i < leaves; ++i) {
      st.edges.emplace_back(0, st.n);
      ++st.n;
    }
    return st;
  };
  long middles = rng_.geometric(s_dot);
  Shape s;
  int prev_center = -1;
  for (long i = 0; i < middles + 2; ++i) {
    Shape st = (i == 0 || i == middles + 1) ? endpoint_star() : rooted_star();
    int off = s.n;
    s.n += st.n;
    for (auto [a, b] : st.edges) s.edges.emplace_back(a + off, b + off);
    if (prev_center >= 0) s.edges.emplace_back(prev_center, off);
    prev_center = off;
  }
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::bowtie_core(int kase) {
  // Core skeleton with one slot per core vertex; every slot then carries an
  // independent rooted tree at t.
  std::vector<std::pair<int, int>> core_edges;
  int core_n = 0;
  switch (kase) {
    case 2: {  // K4
      core_n = 4;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) core_edges.emplace_back(i, j);
      break;
    }
    case 3: {  // K4 with the edge {0,1} subdivided by L >= 1 vertices
      long len = 1 + rng_.geometric(t_);
      core_n = 4 + static_cast<int>(len);
      core_edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      int prev = 0;
      for (long i = 0; i < len; ++i) {
        core_edges.emplace_back(prev, 4 + static_cast<int>(i));
        prev = 4 + static_cast<int>(i);
      }
      core_edges.emplace_back(prev, 1);
      break;
    }
    case 4:    // chord, commons >= 2
    case 5:    // chord, commons >= 1, chain of >= 2
    case 6:    // no chord, commons >= 3
    case 7: {  // no chord, commons >= 2, chain of >= 2
      bool chord = kase == 4 || kase == 5;
      bool with_chain = kase == 5 || kase == 7;
      long min_commons = kase == 4 ? 2 : kase == 5 ? 1 : kase == 6 ? 3 : 2;
      long commons = rng_.poisson_at_least(t_, min_commons);
      core_n = 2 + static_cast<int>(commons);
      if (chord) core_edges.emplace_back(0, 1);
      for (long i = 0; i < commons; ++i) {
        core_edges.emplace_back(0, 2 + static_cast<int>(i));
        core_edges.emplace_back(1, 2 + static_cast<int>(i));
      }
      if (with_chain) {
        long len = 2 + rng_.geometric(t_);
        int prev = 0;
        for (long i = 0; i < len; ++i) {
          core_edges.emplace_back(prev, core_n);
          prev = core_n++;
        }
        core_edges.emplace_back(prev, 1);
      }
      break;
    }
    default:
      throw std::logic_error("bad bowtie core case");
  }

  Shape s;
  std::vector<int> roots(static_cast<size_t>(core_n));
  for (int i = 0; i < core_n; ++i) {
    Shape tr = rooted_tree(t_);
    roots[static_cast<size_t>(i)] = s.n;
    int off = s.n;
    s.n += tr.n;
    for (auto [a, b] : tr.edges) s.edges.emplace_back(a + off, b + off);
  }
  for (auto [a, b] : core_edges)
    s.edges.emplace_back(roots[static_cast<size_t>(a)], roots[static_cast<size_t>(b)]);
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::star_ray_shape() {
  double u = rng_.next_unit() * c_at_x_;
  if (u < case_weights_[0]) return path_shape();
  u -= case_weights_[0];
  size_t idx = 1;
  while (idx + 1 < case_weights_.size() && u >= case_weights_[idx]) {
    u -= case_weights_[idx];
    ++idx;
  }
  int degree = static_cast<int>(idx) + 2;  // weights start at branch degree 3
  Shape s;
  s.n = 1;
  for (int leg = 0; leg < degree; ++leg) {
    long len = 1 + rng_.geometric(x_);
    int prev = 0;
    for (long i = 0; i < len; ++i) {
      s.edges.emplace_back(prev, s.n);
      prev = s.n++;
    }
  }
  return s;
}

BoltzmannSampler::Shape BoltzmannSampler::bounded_component() {
  double u = rng_.next_unit() * c_at_x_;
  int size = 1;
  for (size_t i = 0; i + 1 < case_weights_.size() && u >= case_weights_[i]; ++i) {
    u -= case_weights_[i];
    ++size;
  }
  // uniform connected graph on `size` vertices by rejection over all graphs
  int pairs = size * (size - 1) / 2;
  for (;;) {
    std::uint64_t mask = rng_.next_u64() & ((1ull << pairs) - 1);
    LabelledGraph g = LabelledGraph::from_mask(size, mask);
    if (g.is_connected()) {
      Shape s;
      s.n = size;
      s.edges = g.edges();
      return s;
    }
    spend();
  }
}

BoltzmannSampler::Shape BoltzmannSampler::connected_shape() {
  for (;;) {
    try {
      switch (cfg_.klass.tag) {
        case ClassTag::forests:
          return unrooted_tree();
        case ClassTag::spoon_dbf: {
          if (rng_.next_unit() * c_at_x_ < case_weights_[0]) return unrooted_tree();
          double y = tk_[static_cast<size_t>(cfg_.klass.k)];
          return decorated_cycle(y, case_weights_[1], true);
        }
        case ClassTag::diamond_bowtie_free: {
          if (rng_.next_unit() * c_at_x_ < case_weights_[0]) return unrooted_tree();
          return decorated_cycle(t_, case_weights_[1], false);
        }
        case ClassTag::bounded_components:
          return bounded_component();
        case ClassTag::path_forests:
          return path_shape();
        case ClassTag::caterpillar_forests:
          return caterpillar();
        case ClassTag::max_degree_two: {
          if (rng_.next_unit() * c_at_x_ < case_weights_[0]) return path_shape();
          return bare_cycle();
        }
        case ClassTag::bowtie_free: {
          double u = rng_.next_unit() * c_at_x_;
          int kase = 0;
          while (kase + 1 < static_cast<int>(case_weights_.size()) &&
                 u >= case_weights_[static_cast<size_t>(kase)]) {
            u -= case_weights_[static_cast<size_t>(kase)];
            ++kase;
          }
          if (kase == 0) return unrooted_tree();
          if (kase == 1) return decorated_cycle(t_, case_weights_[1], false);
          return bowtie_core(kase);
        }
        case ClassTag::star_ray:
          return star_ray_shape();
        case ClassTag::two_spoon_free:
          break;
      }
      throw std::logic_error("unhandled class in connected_shape");
    } catch (const RetrySignal&) {
      continue;  // budget already spent by the thrower
    }
  }
}

LabelledGraph BoltzmannSampler::assemble(const std::vector<Shape>& parts) {
  int total = 0;
  for (const Shape& p : parts) total += p.n;
  std::vector<int> perm = rng_.permutation(total);
  LabelledGraph g(total);
  int off = 0;
  for (const Shape& p : parts) {
    for (auto [a, b] : p.edges)
      g.add_edge(perm[static_cast<size_t>(off + a)], perm[static_cast<size_t>(off + b)]);
    off += p.n;
  }
  return g;
}

LabelledGraph BoltzmannSampler::sample_connected() {
  budget_left_ = cfg_.retry_budget;
  return assemble({connected_shape()});
}

LabelledGraph BoltzmannSampler::sample() {
  budget_left_ = cfg_.retry_budget;
  for (;;) {
    std::vector<Shape> parts;
    if (cfg_.pointed_forest) parts.push_back(rooted_tree(t_));
    long m = rng_.poisson(c_at_x_);
    for (long i = 0; i < m; ++i) parts.push_back(connected_shape());
    int total = 0;
    for (const Shape& p : parts) total += p.n;
    if (cfg_.window_lo != 0 &&
        (total < cfg_.window_lo || total > cfg_.window_hi)) {
      spend();
      continue;
    }
    return assemble(parts);
  }
}

}  // namespace minorclass
