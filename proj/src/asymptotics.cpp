#include "minorclass/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minorclass/rational.hpp"
#include "minorclass/series.hpp"
#include "minorclass/dist.hpp"

namespace minorclass {

namespace {

struct EvalPoint {
  Real C, C1, C2;  // C and its first two derivatives at r
  Real a, b;       // a = r C', b = r C' + r^2 C''
  Real a_slope;    // d/dr of a, = C' + r C''
};

EvalPoint eval_at(const ClassId& id, const Real& r) {
  auto d = eval_connected(id, r);
  EvalPoint p;
  p.C = d[0];
  p.C1 = d[1];
  p.C2 = d[2];
  p.a = r * d[1];
  p.b = p.a + r * r * d[2];
  p.a_slope = d[1] + r * d[2];
  return p;
}

}  // namespace

SaddleEstimate saddle_point(const ClassId& id, long n) {
  if (n < 1) throw std::domain_error("saddle point needs n >= 1");
  SingularityData sd = singularity_data(id);
  if (sd.kind == ClassKind::convergent)
    throw std::domain_error("C' stays bounded at rho for " + id.token() +
                            ", so the saddle equation has no root for large n");

  const Real target{n};
  const long prec = static_cast<long>(Real::precision());

  // Bracket the root of a(r) = n.  a is increasing, vanishes at 0 and
  // diverges at rho (or at infinity for the polynomial classes).
  Real lo, hi;
  if (sd.finite_rho) {
    lo = sd.rho / Real(1024L);
    if (eval_at(id, lo).a >= target) lo = sd.rho * pow(Real(2L), -prec / 2);
    int j = 1;
    for (;; ++j) {
      if (j > prec - 8)
        throw std::runtime_error("cannot bracket the saddle point below rho");
      hi = sd.rho * (Real(1L) - pow(Real(2L), -j));
      if (eval_at(id, hi).a >= target) break;
      lo = hi;
    }
  } else {
    lo = Real(1L) / Real(1024L);
    hi = Real(1L);
    int doublings = 0;
    while (eval_at(id, hi).a < target) {
      lo = hi;
      hi = hi * Real(2L);
      if (++doublings > 400)
        throw std::runtime_error("cannot bracket the saddle point");
    }
  }

  const Real tol = pow(Real(2L), -(3 * prec) / 4);
  Real x = (lo + hi) / Real(2L);
  EvalPoint p = eval_at(id, x);
  for (long it = 0; it < 2 * prec + 64; ++it) {
    Real resid = p.a - target;
    if (abs(resid) <= target * tol) break;
    if (resid > Real(0L))
      hi = x;
    else
      lo = x;
    Real newton = x - resid / p.a_slope;
    x = (newton > lo && newton < hi) ? newton : (lo + hi) / Real(2L);
    p = eval_at(id, x);
  }
  if (abs(p.a - target) > target * sqrt(tol))
    throw std::runtime_error("saddle iteration stalled for " + id.token());
  if (!(p.b > Real(0L))) throw std::runtime_error("nonpositive b at the saddle");

  SaddleEstimate est;
  est.n = n;
  est.zeta = x;
  est.b = p.b;
  est.C_zeta = p.C;
  est.V_zeta = p.C - p.a * p.a / p.b;
  est.log_estimate =
      p.C - target * log(x) - log(Real(2L) * Real::pi() * p.b) / Real(2L);
  return est;
}

Real closed_form_egf(const ClassId& id, long n, bool connected) {
  if (n < 1) throw std::domain_error("closed-form estimate needs n >= 1");
  SingularityData sd = singularity_data(id);
  const Real nn{n};
  const Real pi = Real::pi();
  const Real e = Real::euler_e();
  const Real one{1L}, two{2L}, four{4L};

  switch (id.tag) {
    case ClassTag::forests:
    case ClassTag::spoon_dbf:
    case ClassTag::two_spoon_free: {
      // tree-dominated: c_n/n! ~ e^n / (sqrt(2 pi) n^{5/2}), a_n ~ A(rho) c_n
      Real c = exp(nn) / (sqrt(two * pi) * pow(nn, Real(5L) / two));
      return connected ? c : sd.constants.at("A_rho") * c;
    }
    case ClassTag::diamond_bowtie_free: {
      if (connected) return exp(nn) / (four * nn);
      return exp(nn) /
             (pow(two * e, one / four) * gamma_fn(one / four) * pow(nn, Real(3L) / four));
    }
    case ClassTag::bounded_components: {
      if (connected) {
        if (n > id.k) return Real(0L);
        return Real(Rational(connected_graph_count(static_cast<int>(n)),
                             factorial(static_cast<int>(n))));
      }
      SaddleEstimate s = saddle_point(id, n);
      Real k{static_cast<long>(id.k)};
      return exp(s.C_zeta - nn * log(s.zeta) - log(two * pi * k * nn) / two);
    }
    case ClassTag::path_forests:
    case ClassTag::caterpillar_forests: {
      Real alpha = sd.constants.at("alpha");
      Real beta = sd.constants.at("beta");
      Real growth = pow(sd.rho, -n);
      if (connected) return alpha * growth;
      return pow(alpha, one / four) * exp(alpha / two + beta) /
             (two * sqrt(pi) * pow(nn, Real(3L) / four)) * growth *
             exp(two * sqrt(alpha * nn));
    }
    case ClassTag::max_degree_two: {
      if (connected) return one / two + one / (two * nn);
      return exp(sqrt(two * nn)) / (two * sqrt(e * pi) * sqrt(nn));
    }
    case ClassTag::bowtie_free: {
      Real g = e - Real(Rational(5, 4));  // e - 5/4
      if (connected) return g * exp(nn) / sqrt(two * pi * nn);
      Real lead = pow(g, one / Real(6L)) *
                  exp(Real(Rational(19, 8)) - Real(11L) * e / Real(3L)) /
                  sqrt(Real(6L) * pi);
      return lead * exp(nn + Real(Rational(3, 2)) * pow(g, two / Real(3L)) *
                                 pow(nn, one / Real(3L))) /
             pow(nn, two / Real(3L));
    }
    case ClassTag::star_ray:
      throw std::domain_error("no printed growth formula for star-ray classes");
  }
  throw std::logic_error("unhandled class in closed_form_egf");
}

ConnectivityLimit connectivity_limit(const ClassId& id) {
  SingularityData sd = singularity_data(id);
  ConnectivityLimit lim;
  switch (sd.kind) {
    case ClassKind::convergent:
      lim.positive = true;
      lim.value = exp(-sd.constants.at("C_rho"));
      break;
    case ClassKind::logarithmic:
      lim.value = Real(0L);
      lim.decay = "n^{-1/4}";
      break;
    case ClassKind::polynomial_entire:
      lim.value = Real(0L);
      lim.decay = "exactly 0 once n exceeds the component bound";
      break;
    case ClassKind::simple_pole:
      lim.value = Real(0L);
      lim.decay = "n^{3/4} exp(-2 sqrt(alpha n))";
      break;
    case ClassKind::pole_plus_log:
      lim.value = Real(0L);
      lim.decay = "n^{1/2} exp(-sqrt(2n))";
      break;
    case ClassKind::inverse_sqrt:
      lim.value = Real(0L);
      lim.decay = "n^{1/6} exp(-(3/2) (e-5/4)^{2/3} n^{1/3})";
      break;
    case ClassKind::higher_order_pole:
    case ClassKind::essential:
      lim.value = Real(0L);
      lim.decay = "o(1), rate not tabulated";
      break;
  }
  return lim;
}

ComponentMomentPrediction component_count_prediction(const ClassId& id, long n) {
  if (n < 1) throw std::domain_error("component prediction needs n >= 1");
  SingularityData sd = singularity_data(id);
  ComponentMomentPrediction p;
  switch (sd.kind) {
    case ClassKind::convergent: {
      Real crho = sd.constants.at("C_rho");
      p.mean = Real(1L) + crho;
      p.variance = crho;
      break;
    }
    case ClassKind::logarithmic: {
      Real v = log(Real(n)) / Real(4L);
      p.mean = v;
      p.variance = v;
      break;
    }
    default: {
      SaddleEstimate s = saddle_point(id, n);
      p.mean = s.C_zeta;
      p.variance = s.V_zeta;
      break;
    }
  }
  return p;
}

double limit_density(LimitLaw law, double x) {
  switch (law) {
    case LimitLaw::beta_one_quarter:
      if (x < 0 || x >= 1)
        throw std::domain_error("beta(1,1/4) density lives on [0, 1)");
      return 0.25 * std::pow(1.0 - x, -0.75);
    case LimitLaw::gamma_two_one:
      if (x < 0) throw std::domain_error("Gamma(2,1) density lives on [0, inf)");
      return x * std::exp(-x);
    case LimitLaw::gamma_three_half_one:
      if (x < 0) throw std::domain_error("Gamma(3/2,1) density lives on [0, inf)");
      return 2.0 * std::sqrt(x / std::numbers::pi) * std::exp(-x);
  }
  throw std::logic_error("unhandled limit law");
}

double gumbel_cdf(double x) {
  return std::exp(-std::exp(-x / 2.0) / std::sqrt(2.0));
}

GumbelCheck gumbel_largest_check(long n, double x) {
  GumbelCheck chk;
  chk.k = static_cast<long>(
      std::floor(std::sqrt(n / 2.0) * (std::log(static_cast<double>(n)) + x)));
  chk.gumbel = gumbel_cdf(x);
  // the event L_n < sqrt(n/2)(log n + x) reads L_n <= k on integer sizes
  chk.exact_cdf = largest_component_cdf_real(ClassId{ClassTag::path_forests, 0},
                                             static_cast<int>(n),
                                             static_cast<int>(chk.k) + 1);
  return chk;
}

double pd_rho(double x, double step) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  if (x < 0) throw std::domain_error("pd_rho is defined for x >= 0");
  if (x <= 1.0) return 1.0;

  // Uniform grid on [1, x] whose spacing divides 1, so s-1 of any grid
  // point is again a grid point once s >= 2.
  const long m = std::max(8L, std::lround(1.0 / step));
  const double h = 1.0 / static_cast<double>(m);
  const long steps = static_cast<long>(std::ceil((x - 1.0) / h - 1e-12));

  auto ray = [](double u) { return std::pow(1.0 + u * u * u * u, -0.25); };
  // Simpson on [a, b] split into eight panels.
  auto simpson = [&](double a, double b) {
    const int panels = 8;
    double w = (b - a) / panels, acc = 0;
    for (int i = 0; i < panels; ++i) {
      double u0 = a + i * w;
      acc += w / 6.0 * (ray(u0) + 4.0 * ray(u0 + w / 2.0) + ray(u0 + w));
    }
    return acc;
  };

  std::vector<double> rho(static_cast<size_t>(steps) + 1);
  rho[0] = 1.0;
  for (long j = 0; j < steps; ++j) {
    double s0 = 1.0 + j * h;
    double s1 = s0 + h;
    double drop;
    if (j < m) {
      // rho(s-1) = 1 here; u = (s-1)^{1/4} absorbs the endpoint singularity
      drop = simpson(std::pow(j * h, 0.25), std::pow((j + 1) * h, 0.25));
    } else {
      auto g = [&](double s, double rv) {
        return 0.25 * std::pow(s - 1.0, -0.75) * std::pow(s, -0.25) * rv;
      };
      double r0 = rho[static_cast<size_t>(j - m)];
      double r1 = rho[static_cast<size_t>(j + 1 - m)];
      drop = h / 6.0 *
             (g(s0, r0) + 4.0 * g(0.5 * (s0 + s1), 0.5 * (r0 + r1)) + g(s1, r1));
    }
    rho[static_cast<size_t>(j) + 1] = rho[static_cast<size_t>(j)] - drop;
  }

  double pos = (x - 1.0) / h;
  long j0 = std::min(static_cast<long>(pos), steps - 1);
  double frac = pos - j0;
  return rho[static_cast<size_t>(j0)] * (1.0 - frac) +
         rho[static_cast<size_t>(j0) + 1] * frac;
}

AdmissibilityReport admissibility_diagnostics(const ClassId& id, int grid) {
  if (grid < 3) throw std::invalid_argument("grid must have at least 3 points");
  SingularityData sd = singularity_data(id);
  if (sd.kind == ClassKind::convergent)
    throw std::domain_error("C converges at rho for " + id.token() +
                            "; nothing to diagnose");

  AdmissibilityReport rep;
  rep.klass = id.token();
  rep.kind = kind_name(sd.kind);
  if (!sd.finite_rho)
    rep.note = "entire series: probing r = 2^j instead of an approach to rho";

  for (int j = 1; j <= grid; ++j) {
    DiagnosticRow row;
    row.j = j;
    row.r = sd.finite_rho ? sd.rho * (Real(1L) - pow(Real(2L), -j))
                          : pow(Real(2L), j);
    EvalPoint p = eval_at(id, row.r);
    row.a = p.a;
    row.b = p.b;
    row.V = p.C - p.a * p.a / p.b;
    row.ratio = p.C / pow(row.V, Real(3L) / Real(2L));
    row.b_pow = exp(log(p.b) / sqrt(row.V));
    rep.rows.push_back(std::move(row));
  }

  // Trend verdicts over the last few rows, where the asymptotic regime
  // has had a chance to set in.
  size_t tail = std::min<size_t>(5, rep.rows.size());
  size_t first = rep.rows.size() - tail;
  bool v_up = true, ratio_down = true;
  Real bp_min = rep.rows[first].b_pow, bp_max = rep.rows[first].b_pow;
  for (size_t i = first + 1; i < rep.rows.size(); ++i) {
    if (!(rep.rows[i].V > rep.rows[i - 1].V)) v_up = false;
    if (!(rep.rows[i].ratio < rep.rows[i - 1].ratio)) ratio_down = false;
    if (rep.rows[i].b_pow < bp_min) bp_min = rep.rows[i].b_pow;
    if (rep.rows[i].b_pow > bp_max) bp_max = rep.rows[i].b_pow;
  }
  rep.v_diverges = v_up;
  rep.ratio_vanishes = ratio_down;
  rep.b_pow_bounded = bp_max < Real(2L) * bp_min;
  return rep;
}

}  // namespace minorclass
