#include "minorclass/dist.hpp"

#include <stdexcept>

namespace minorclass {

namespace {

void need_positive_n(int n) {
  if (n < 1) throw std::invalid_argument("distribution needs n >= 1");
}

Rational series_coeff_ratio(const Series<Rational>& num, const Series<Rational>& den, int n) {
  if (den[n] == 0) throw std::domain_error("empty class at this size");
  Rational r = num[n] / den[n];
  r.canonicalize();
  return r;
}

}  // namespace

Rational ExactDistribution::mean() const {
  Rational m = 0;
  for (size_t i = 0; i < probs.size(); ++i)
    m += probs[i] * Rational(static_cast<long>(lo + static_cast<long>(i)));
  m.canonicalize();
  return m;
}

ExactDistribution components_dist(const ClassId& id, int n) {
  need_positive_n(n);
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();
  ExactDistribution d;
  d.statistic = "N";
  d.n = n;
  d.lo = 1;
  d.probs.assign(static_cast<size_t>(n), Rational(0));
  if (a[n] == 0) throw std::domain_error("empty class at this size");
  Series<Rational> power = c;
  Integer fact = 1;
  for (int i = 1; i <= n; ++i) {
    fact *= i;
    Rational p = power[n] / (Rational(fact) * a[n]);
    p.canonicalize();
    d.probs[static_cast<size_t>(i - 1)] = p;
    if (i < n) power = power * c;
  }
  return d;
}

Rational components_factorial_moment(const ClassId& id, int n, int i) {
  need_positive_n(n);
  if (i < 0) throw std::invalid_argument("moment order must be >= 0");
  if (i == 0) return 1;
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();
  Series<Rational> num = a;
  for (int j = 0; j < i; ++j) num = num * c;
  return series_coeff_ratio(num, a, n);
}

ExactDistribution root_component_dist(const ClassId& id, int n) {
  need_positive_n(n);
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();
  Integer a_n = egf_count(a[n], static_cast<unsigned long>(n));
  if (a_n == 0) throw std::domain_error("empty class at this size");
  ExactDistribution d;
  d.statistic = "S";
  d.n = n;
  d.lo = 1;
  d.probs.assign(static_cast<size_t>(n), Rational(0));
  for (int k = 1; k <= n; ++k) {
    Integer c_k = egf_count(c[k], static_cast<unsigned long>(k));
    Integer a_rest = egf_count(a[n - k], static_cast<unsigned long>(n - k));
    Rational p = Rational(c_k * a_rest * binomial(static_cast<unsigned long>(n - 1),
                                                  static_cast<unsigned long>(k - 1))) /
                 Rational(a_n);
    p.canonicalize();
    d.probs[static_cast<size_t>(k - 1)] = p;
  }
  return d;
}

Rational root_component_factorial_moment(const ClassId& id, int n, int i) {
  need_positive_n(n);
  if (i < 0 || i > n - 1)
    throw std::invalid_argument("root moment needs 0 <= i <= n-1");
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();

  Series<Rational> deriv = c;
  for (int j = 0; j <= i; ++j) deriv = deriv.derivative();
  int m = n - i - 1;
  Series<Rational> prod = deriv * a.truncated(deriv.order());
  if (a[n] == 0) throw std::domain_error("empty class at this size");
  Rational from_series = prod[m] / (Rational(n) * a[n]);
  from_series.canonicalize();

  // the same shifted falling moment E[(S-1)...(S-i)] straight from the
  // distribution
  ExactDistribution d = root_component_dist(id, n);
  Rational from_dist = i == 0 ? 1 : 0;
  for (int k = 1; k <= n && i > 0; ++k) {
    Rational w = 1;
    for (int j = 1; j <= i; ++j) w *= Rational(k - j);
    from_dist += w * d.probs[static_cast<size_t>(k - 1)];
  }
  from_dist.canonicalize();
  if (from_series != from_dist)
    throw std::logic_error("root-component moment self-check failed");
  return from_series;
}

Rational largest_component_cdf(const ClassId& id, int n, int k, int exact_threshold) {
  need_positive_n(n);
  if (n > exact_threshold)
    throw std::domain_error(
        "exact largest-component series above the threshold; use the floating backend");
  if (k < 1) return 0;
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();
  Series<Rational> small = truncate_below(c, k).exp();
  return series_coeff_ratio(small, a, n);
}

ExactDistribution largest_component_dist(const ClassId& id, int n, int exact_threshold) {
  need_positive_n(n);
  ExactDistribution d;
  d.statistic = "L";
  d.n = n;
  d.lo = 1;
  d.probs.assign(static_cast<size_t>(n), Rational(0));
  Rational below = 0;  // P(L < 1) = 0 for n >= 1
  if (n > exact_threshold)
    throw std::domain_error(
        "exact largest-component series above the threshold; use the floating backend");
  Series<Rational> c = connected_egf(id, n);
  Series<Rational> a = c.exp();
  if (a[n] == 0) throw std::domain_error("empty class at this size");
  for (int k = 1; k <= n; ++k) {
    Rational upto = truncate_below(c, k + 1).exp()[n] / a[n];
    upto.canonicalize();
    Rational p = upto - below;
    p.canonicalize();
    d.probs[static_cast<size_t>(k - 1)] = p;
    below = upto;
  }
  return d;
}

Real largest_component_cdf_real(const ClassId& id, int n, int k) {
  need_positive_n(n);
  if (k < 1) return Real(0L);
  Series<Real> c = connected_egf_real(id, n);
  Series<Real> a = c.exp();
  Series<Real> small = truncate_below(c, k).exp();
  return small[n] / a[n];
}

Rational expected_cycle_count_maxdeg2(int n) {
  need_positive_n(n);
  ClassId id{ClassTag::max_degree_two, 0};
  Series<Rational> a = graph_egf(id, n);
  Series<Rational> cyc(n);
  for (int m = 3; m <= n; ++m) cyc[m] = rat(1, 2L * m);
  Series<Rational> num = cyc * a;
  return series_coeff_ratio(num, a, n);
}

}  // namespace minorclass
