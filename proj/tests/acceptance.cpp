// acceptance.cpp -- release gate.  Each criterion prints one PASS/FAIL line
// with the measured numbers; the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "minorclass/asymptotics.hpp"
#include "minorclass/bigfloat.hpp"
#include "minorclass/classes.hpp"
#include "minorclass/dist.hpp"
#include "minorclass/graph6.hpp"
#include "minorclass/oracle.hpp"
#include "minorclass/rational.hpp"
#include "minorclass/sampler.hpp"
#include "minorclass/series.hpp"

using namespace minorclass;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Rational prob_at(const ExactDistribution& d, int v) {
  long idx = v - d.lo;
  if (idx < 0 || idx >= static_cast<long>(d.probs.size())) return 0;
  return d.probs[static_cast<size_t>(idx)];
}

// ------------------------------------------------------------------
// 1. every series count equals the exhaustive count, quickly

Outcome counts_match_enumeration() {
  auto t0 = Clock::now();
  int checks = 0;
  for (const ClassId& id : default_class_list()) {
    auto c = connected_egf(id, 6);
    auto a = c.exp();
    for (int n = 1; n <= 6; ++n) {
      OracleCounts oc = count_class(id, n);
      if (egf_count(c[n], n) != oc.connected)
        return {false, id.token() + ": connected count differs at n=" + std::to_string(n)};
      if (egf_count(a[n], n) != oc.graphs)
        return {false, id.token() + ": total count differs at n=" + std::to_string(n)};
      checks += 2;
    }
  }
  double secs = seconds_since(t0);
  return {secs < 120.0,
          std::to_string(checks) + " counts equal in " + fmt(secs) + "s"};
}

// ------------------------------------------------------------------
// 2. closed-form connected counts

Outcome closed_form_counts() {
  ClassId md{ClassTag::max_degree_two, 0};
  ClassId pf{ClassTag::path_forests, 0};
  auto cm = connected_egf(md, 50);
  auto cp = connected_egf(pf, 50);
  if (egf_count(cm[1], 1) != 1 || egf_count(cm[2], 2) != 1)
    return {false, "max-degree-2 c_1, c_2 wrong"};
  if (egf_count(cp[1], 1) != 1)
    return {false, "path-forests c_1 wrong"};
  int checks = 2;
  for (int n = 3; n <= 50; ++n) {
    Rational target = Rational(factorial(static_cast<unsigned long>(n))) / 2 +
                      Rational(factorial(static_cast<unsigned long>(n - 1))) / 2;
    if (Rational(egf_count(cm[n], static_cast<unsigned long>(n))) != target)
      return {false, "max-degree-2 formula fails at n=" + std::to_string(n)};
    ++checks;
  }
  for (int n = 2; n <= 50; ++n) {
    Rational target = Rational(factorial(static_cast<unsigned long>(n))) / 2;
    if (Rational(egf_count(cp[n], static_cast<unsigned long>(n))) != target)
      return {false, "path-forests formula fails at n=" + std::to_string(n)};
    ++checks;
  }
  return {true, std::to_string(checks) + " exact equalities, n up to 50"};
}

// ------------------------------------------------------------------
// 3. root mass is the size-biased largest mass when one component
//    holds more than half the vertices

Outcome size_biased_identity() {
  int checks = 0;
  for (const ClassId& id : default_class_list()) {
    for (int n : {10, 31, 60}) {
      ExactDistribution s = root_component_dist(id, n);
      ExactDistribution l = largest_component_dist(id, n);
      for (int k = 1; 2 * k < n; ++k) {
        int m = n - k;
        if (prob_at(s, m) != rat(m, n) * prob_at(l, m))
          return {false, id.token() + " fails at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k)};
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " exact identities across 13 classes"};
}

// ------------------------------------------------------------------
// 4. falling moments of the root component: series formula vs the
//    distribution (the library call computes both and throws on mismatch)

Outcome root_moment_duality() {
  int checks = 0;
  for (const ClassId& id : default_class_list())
    for (int n = 1; n <= 60; ++n)
      for (int i = 1; i <= 3 && i <= n - 1; ++i) {
        (void)root_component_factorial_moment(id, n, i);
        ++checks;
      }
  return {true, std::to_string(checks) + " moments, both routes agree exactly"};
}

// ------------------------------------------------------------------
// 5. forests: a_n / c_n approaches sqrt(e)

Outcome forest_connectivity_ratio() {
  ClassId id{ClassTag::forests, 0};
  auto c = connected_egf(id, 400);
  auto a = c.exp();
  double target = std::exp(0.5);
  auto err = [&](int n) {
    double r = to_double(a[n] / c[n]);
    return std::abs(r - target) / target;
  };
  double e100 = err(100), e400 = err(400);
  bool pass = e400 < 0.02 && e400 < e100;
  return {pass, "relative error " + fmt(e400) + " at n=400, " + fmt(e100) +
                    " at n=100, bound 0.02"};
}

// ------------------------------------------------------------------
// 6. diamond-bowtie-free: growth constant and the beta local law

Outcome dbf_growth_and_beta_law() {
  ClassId id{ClassTag::diamond_bowtie_free, 0};
  auto c = connected_egf(id, 400);
  auto growth_err = [&](int n) {
    Real v = Real(c[n]) * Real(4L * n) / pow(Real::euler_e(), static_cast<long>(n));
    return std::abs(v.to_double() - 1.0);
  };
  double g100 = growth_err(100), g400 = growth_err(400);
  bool growth_ok = g400 < 0.05 && g400 < g100;

  double target = limit_density(LimitLaw::beta_one_quarter, 0.5);
  auto beta_err = [&](int n) {
    ExactDistribution s = root_component_dist(id, n);
    double v = n * to_double(prob_at(s, n / 2));
    return std::abs(v - target) / target;
  };
  double b100 = beta_err(100), b400 = beta_err(400);
  bool beta_ok = b400 < 0.20 && b400 < b100;

  return {growth_ok && beta_ok,
          "growth error " + fmt(g400) + " at n=400 vs " + fmt(g100) +
              " at n=100, bound 0.05; beta error " + fmt(b400) + " vs " +
              fmt(b100) + ", bound 0.20"};
}

// ------------------------------------------------------------------
// 7. saddle-point estimate converges to the exact coefficients

Outcome saddle_convergence() {
  std::string parts;
  bool pass = true;
  for (ClassTag tag : {ClassTag::max_degree_two, ClassTag::path_forests,
                       ClassTag::caterpillar_forests, ClassTag::bowtie_free}) {
    ClassId id{tag, 0};
    auto a = graph_egf(id, 400);
    auto err = [&](long n) {
      Real exact(a[static_cast<int>(n)]);
      return (abs(hayman_estimate(id, n) - exact) / exact).to_double();
    };
    double e50 = err(50), e400 = err(400);
    if (!(e400 < 0.15 && e400 < e50)) pass = false;
    if (!parts.empty()) parts += ", ";
    parts += id.token() + " " + fmt(e400) + " (n=50: " + fmt(e50) + ")";
  }
  return {pass, "errors at n=400: " + parts + "; bound 0.15"};
}

// ------------------------------------------------------------------
// 8. local limit laws for the root component

Outcome root_local_laws() {
  ClassId pf{ClassTag::path_forests, 0};
  double t2 = limit_density(LimitLaw::gamma_two_one, 1.0);
  auto path_err = [&](int n) {
    ExactDistribution s = root_component_dist(pf, n);
    double scale = std::sqrt(2.0 * n);
    double v = scale * to_double(prob_at(s, static_cast<int>(std::floor(scale))));
    return std::abs(v - t2) / t2;
  };
  double p100 = path_err(100), p400 = path_err(400);
  bool path_ok = p400 < 0.20 && p400 < p100;

  ClassId bt{ClassTag::bowtie_free, 0};
  double cb = std::pow(std::exp(1.0) - 1.25, 2.0 / 3.0);
  double t32 = limit_density(LimitLaw::gamma_three_half_one, 1.0);
  auto bow_err = [&](int n) {
    ExactDistribution s = root_component_dist(bt, n);
    double scale = 2.0 * std::pow(n, 2.0 / 3.0) / cb;
    double v = scale * to_double(prob_at(s, static_cast<int>(std::floor(scale))));
    return std::abs(v - t32) / t32;
  };
  double b100 = bow_err(100), b300 = bow_err(300);
  bool bow_ok = b300 < 0.25 && b300 < b100;

  return {path_ok && bow_ok,
          "path-forests error " + fmt(p400) + " at n=400 vs " + fmt(p100) +
              " at n=100, bound 0.20; bowtie-free " + fmt(b300) +
              " at n=300 vs " + fmt(b100) + " at n=100, bound 0.25"};
}

// ------------------------------------------------------------------
// 9. Gumbel law for the largest path-forest component

Outcome gumbel_law() {
  auto t0 = Clock::now();
  std::string parts;
  double worst = 0;
  for (double x : {-1.0, 0.0, 1.0, 2.0}) {
    GumbelCheck chk = gumbel_largest_check(500, x);
    double diff = std::abs(chk.exact_cdf.to_double() - chk.gumbel);
    worst = std::max(worst, diff);
    if (!parts.empty()) parts += ", ";
    parts += "x=" + fmt(x) + ": " + fmt(diff);
  }
  return {worst < 0.1, "n=500 deviations " + parts + "; bound 0.1, " +
                           fmt(seconds_since(t0)) + "s"};
}

// ------------------------------------------------------------------
// 10. delay-equation limit of the largest component

Outcome delay_equation_limit() {
  double coarse = pd_rho(3.0, 1e-4);
  double fine = pd_rho(3.0, 5e-5);
  double drift = std::abs(coarse - fine);

  ClassId id{ClassTag::diamond_bowtie_free, 0};
  double cdf = largest_component_cdf_real(id, 300, 180).to_double();
  double lim = pd_rho(1.0 / 0.6);
  double gap = std::abs(cdf - lim);
  return {drift < 1e-5 && gap < 0.1,
          "step-halving drift " + fmt(drift) + " (bound 1e-5); P(L_300<180) = " +
              fmt(cdf) + " vs limit " + fmt(lim) + ", gap " + fmt(gap) +
              " (bound 0.1)"};
}

// ------------------------------------------------------------------
// 11. bounded components concentrate at the cap

Outcome bounded_concentration() {
  ClassId id{ClassTag::bounded_components, 3};
  ExactDistribution s = root_component_dist(id, 200);
  double p = to_double(prob_at(s, 3));
  return {p > 0.9, "P(root component = 3) = " + fmt(p) + " at n=200, bound 0.9"};
}

// ------------------------------------------------------------------
// 12. expected component count grows at the predicted order

Outcome component_count_growth() {
  ClassId pf{ClassTag::path_forests, 0};
  auto path_err = [&](int n) {
    double e = to_double(components_factorial_moment(pf, n, 1));
    double target = std::sqrt(n / 2.0);
    return std::abs(e - target) / target;
  };
  double p100 = path_err(100), p400 = path_err(400);
  bool path_ok = p400 < 0.10 && p400 < p100;

  ClassId bt{ClassTag::bowtie_free, 0};
  double cb = std::pow(std::exp(1.0) - 1.25, 2.0 / 3.0);
  auto bow_err = [&](int n) {
    double e = to_double(components_factorial_moment(bt, n, 1));
    double target = cb * std::pow(n, 1.0 / 3.0);
    return std::abs(e - target) / target;
  };
  double b100 = bow_err(100), b300 = bow_err(300);
  bool bow_ok = b300 < 0.15 && b300 < b100;

  return {path_ok && bow_ok,
          "path-forests error " + fmt(p400) + " at n=400 vs " + fmt(p100) +
              " at n=100, bound 0.10; bowtie-free " + fmt(b300) +
              " at n=300 vs " + fmt(b100) + " at n=100, bound 0.15"};
}

// ------------------------------------------------------------------
// 13. sampler statistics across the supported classes

Outcome sampler_statistics() {
  auto t0 = Clock::now();
  const int draws = 100000;
  const int order = 200;
  double worst_tv = 0, worst_z = 0;
  std::string worst_tv_class, worst_z_class;
  int classes = 0;

  for (const ClassId& id : default_class_list()) {
    if (id.tag == ClassTag::two_spoon_free) continue;
    ++classes;
    auto sd = singularity_data(id);
    double x = sd.finite_rho ? 0.6 * sd.rho.to_double() : 1.0;

    auto a = graph_egf(id, order);
    std::vector<Real> terms;
    Real total(0L);
    for (int n = 0; n <= order; ++n) {
      Real term = Real(a[n]) * pow(Real(x), static_cast<long>(n));
      terms.push_back(term);
      total += term;
    }

    SamplerConfig cfg;
    cfg.klass = id;
    cfg.x = x;
    cfg.seed = 20260817;
    BoltzmannSampler s1(cfg), s2(cfg);

    std::vector<long> freq(order + 1, 0);
    long over = 0;
    std::map<int, std::map<std::string, long>> small;
    for (int i = 0; i < draws; ++i) {
      LabelledGraph g = s1.sample();
      if (!(g == s2.sample()))
        return {false, id.token() + ": rerun with the same seed diverged"};
      if (!membership(id, g))
        return {false, id.token() + ": sample outside the class"};
      int n = g.n();
      if (n <= order)
        ++freq[static_cast<size_t>(n)];
      else
        ++over;
      if (n >= 1 && n <= 4) ++small[n][graph6_encode(g)];
    }

    double tv = 0;
    for (int n = 0; n <= order; ++n)
      tv += std::abs(freq[static_cast<size_t>(n)] / static_cast<double>(draws) -
                     (terms[static_cast<size_t>(n)] / total).to_double());
    tv = (tv + over / static_cast<double>(draws)) / 2;
    if (tv > worst_tv) {
      worst_tv = tv;
      worst_tv_class = id.token();
    }
    if (tv >= 0.01)
      return {false, id.token() + ": size-law TV " + fmt(tv) + " exceeds 0.01"};

    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> members;
      for_each_graph(n, [&](const LabelledGraph& g) {
        if (membership(id, g)) members.insert(graph6_encode(g));
      });
      long seen = 0;
      for (const auto& [key, cnt] : small[n]) {
        if (!members.count(key))
          return {false, id.token() + ": non-member sampled at n=" + std::to_string(n)};
        seen += cnt;
      }
      if (seen < 100)
        return {false, id.token() + ": only " + std::to_string(seen) +
                           " samples of size " + std::to_string(n)};
      if (members.size() == 1) continue;
      double q = 1.0 / static_cast<double>(members.size());
      double expect = static_cast<double>(seen) * q;
      double sigma = std::sqrt(static_cast<double>(seen) * q * (1 - q));
      for (const std::string& key : members) {
        auto it = small[n].find(key);
        long cnt = it == small[n].end() ? 0 : it->second;
        double z = std::abs(cnt - expect) / sigma;
        if (z > worst_z) {
          worst_z = z;
          worst_z_class = id.token() + " n=" + std::to_string(n);
        }
        if (z > 5.0)
          return {false, id.token() + ": size-" + std::to_string(n) +
                             " frequency off by " + fmt(z) + " sigma"};
      }
    }
  }
  return {true, std::to_string(classes) + " classes x " + std::to_string(draws) +
                    " samples; max TV " + fmt(worst_tv) + " (" + worst_tv_class +
                    "), max uniformity deviation " + fmt(worst_z) + " sigma (" +
                    worst_z_class + "), membership and reruns clean, " +
                    fmt(seconds_since(t0)) + "s"};
}

// ------------------------------------------------------------------
// 14. series kernel identities

Outcome series_kernel() {
  Series<Rational> f(40);
  for (int n = 1; n <= 40; ++n)
    f[n] = rat((n % 2 ? 1 : -1) * (n + 3), 2 * n + 1);
  if (!(f.exp().log() == f)) return {false, "exp/log round trip failed"};
  Series<Rational> g = f;
  g[0] = 1;
  if (!(g.log().exp() == g)) return {false, "log/exp round trip failed"};

  Series<Rational> h = f.truncated(15);
  Series<Rational> sum = Series<Rational>::constant(1, 15);
  Series<Rational> power = Series<Rational>::constant(1, 15);
  Rational inv_fact = 1;
  for (int i = 1; i <= 15; ++i) {
    power = power * h;
    inv_fact /= i;
    sum = sum + power.scaled(inv_fact);
  }
  if (!(sum == h.exp())) return {false, "exp disagrees with the partial-sum oracle"};

  auto t = solve_tree<Rational>(60);
  auto et = t.exp();
  for (int n = 1; n <= 60; ++n)
    if (t[n] != et[n - 1])
      return {false, "tree equation fails at order " + std::to_string(n)};
  return {true, "round trips to order 40, convolution oracle to order 15, "
                "tree equation to order 60, all exact"};
}

}  // namespace

int main() {
  struct Row {
    const char* label;
    std::function<Outcome()> fn;
  };
  std::vector<Row> rows = {
      {"series counts equal exhaustive enumeration", counts_match_enumeration},
      {"closed-form connected counts hold exactly", closed_form_counts},
      {"root mass equals size-biased largest mass", size_biased_identity},
      {"root-component moments match the distribution", root_moment_duality},
      {"forests connectivity ratio approaches sqrt(e)", forest_connectivity_ratio},
      {"diamond-bowtie-free growth and beta local law", dbf_growth_and_beta_law},
      {"saddle-point estimate converges", saddle_convergence},
      {"root-component local limit laws", root_local_laws},
      {"largest path-forest component is Gumbel", gumbel_law},
      {"largest component meets the delay-equation limit", delay_equation_limit},
      {"bounded components concentrate at the cap", bounded_concentration},
      {"component-count growth at the predicted order", component_count_growth},
      {"sampler size law, uniformity, membership, determinism", sampler_statistics},
      {"series kernel identities", series_kernel},
  };

  int failures = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    Outcome o;
    try {
      o = rows[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                rows[i].label, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%zu of %zu criteria pass\n", rows.size() - failures, rows.size());
  return failures;
}
