#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "minorclass/asymptotics.hpp"
#include "minorclass/classes.hpp"
#include "minorclass/rational.hpp"
#include "minorclass/series.hpp"

using namespace minorclass;

namespace {

double rel_err(const Real& est, const Real& exact) {
  return abs(est / exact - Real(1L)).to_double();
}

}  // namespace

TEST_CASE("the saddle point solves zeta C'(zeta) = n to working precision") {
  for (const char* tok : {"path-forests", "max-degree-2", "bowtie-free",
                          "diamond-bowtie-free", "caterpillar-forests",
                          "bounded:3", "star-ray:3", "star-ray:inf"}) {
    CAPTURE(tok);
    ClassId id = ClassId::parse(tok);
    auto s = saddle_point(id, 200);
    auto v = eval_connected(id, s.zeta);
    Real resid = abs(s.zeta * v[1] / Real(200L) - Real(1L));
    CHECK(resid.to_double() < 1e-40);
    CHECK(s.b.to_double() > 0);
    CHECK(s.V_zeta.to_double() > 0);
  }
}

TEST_CASE("the saddle moves out monotonically with n") {
  ClassId id{ClassTag::max_degree_two, 0};
  Real prev(0);
  for (long n : {5L, 20L, 100L, 500L, 2000L}) {
    auto s = saddle_point(id, n);
    CHECK(s.zeta > prev);
    prev = s.zeta;
  }
  // and stays below the singularity
  CHECK(prev < singularity_data(id).rho);
}

TEST_CASE("saddle estimates approach the exact coefficients") {
  ClassId id{ClassTag::path_forests, 0};
  auto a = graph_egf(id, 400);
  double e50 = rel_err(hayman_estimate(id, 50), Real(a[50]));
  double e400 = rel_err(hayman_estimate(id, 400), Real(a[400]));
  CHECK(e50 < 0.06);
  CHECK(e400 < 0.02);
  CHECK(e400 < e50);
}

TEST_CASE("convergent classes have no saddle") {
  CHECK_THROWS_AS((void)saddle_point(ClassId{ClassTag::forests, 0}, 100),
                  std::domain_error);
  CHECK_THROWS_AS((void)saddle_point(ClassId{ClassTag::spoon_dbf, 2}, 100),
                  std::domain_error);
  CHECK_THROWS_AS((void)saddle_point(ClassId{ClassTag::path_forests, 0}, 0),
                  std::domain_error);
}

TEST_CASE("printed growth formulas against exact coefficients at n = 100") {
  ClassId forests{ClassTag::forests, 0};
  auto cf = connected_egf(forests, 100);
  auto af = graph_egf(forests, 100);
  CHECK(rel_err(closed_form_egf(forests, 100, true), Real(cf[100])) < 0.005);
  CHECK(rel_err(closed_form_egf(forests, 100, false), Real(af[100])) < 0.05);

  // the path and degree-two connected formulas are exact, not asymptotic
  ClassId path{ClassTag::path_forests, 0};
  auto cp = connected_egf(path, 100);
  CHECK(rel_err(closed_form_egf(path, 100, true), Real(cp[100])) < 1e-30);
  ClassId md2{ClassTag::max_degree_two, 0};
  auto cm = connected_egf(md2, 100);
  CHECK(rel_err(closed_form_egf(md2, 100, true), Real(cm[100])) < 1e-30);

  ClassId b3{ClassTag::bounded_components, 3};
  auto ab = graph_egf(b3, 100);
  CHECK(closed_form_egf(b3, 100, true).to_double() == 0.0);  // no big components
  CHECK(rel_err(closed_form_egf(b3, 100, false), Real(ab[100])) < 0.06);

  ClassId dbf{ClassTag::diamond_bowtie_free, 0};
  auto cd = connected_egf(dbf, 100);
  auto ad = graph_egf(dbf, 100);
  CHECK(rel_err(closed_form_egf(dbf, 100, true), Real(cd[100])) < 0.3);
  CHECK(rel_err(closed_form_egf(dbf, 100, false), Real(ad[100])) < 0.2);

  CHECK_THROWS_AS((void)closed_form_egf(ClassId{ClassTag::star_ray, 3}, 50, false),
                  std::domain_error);
  CHECK_THROWS_AS((void)closed_form_egf(ClassId{ClassTag::star_ray, -1}, 50, true),
                  std::domain_error);
}

TEST_CASE("connectivity limits") {
  auto f = connectivity_limit(ClassId{ClassTag::forests, 0});
  CHECK(f.positive);
  CHECK(abs(f.value - exp(Real(-0.5))).to_double() < 1e-70);

  auto ts = connectivity_limit(ClassId{ClassTag::two_spoon_free, 0});
  CHECK(ts.positive);
  CHECK(ts.value.to_double() > 0);
  CHECK(ts.value.to_double() < 1);

  auto d = connectivity_limit(ClassId{ClassTag::diamond_bowtie_free, 0});
  CHECK(!d.positive);
  CHECK(d.decay == "n^{-1/4}");

  auto p = connectivity_limit(ClassId{ClassTag::path_forests, 0});
  CHECK(!p.positive);
  CHECK(p.decay.find("exp(-2 sqrt") != std::string::npos);

  auto m = connectivity_limit(ClassId{ClassTag::max_degree_two, 0});
  CHECK(m.decay.find("exp(-sqrt(2n))") != std::string::npos);

  auto b = connectivity_limit(ClassId{ClassTag::bowtie_free, 0});
  CHECK(b.decay.find("n^{1/3}") != std::string::npos);

  auto bc = connectivity_limit(ClassId{ClassTag::bounded_components, 3});
  CHECK(bc.decay.find("exactly 0") != std::string::npos);
}

TEST_CASE("component-count predictions") {
  // convergent: N - 1 is asymptotically Poisson(C(rho))
  auto f = component_count_prediction(ClassId{ClassTag::forests, 0}, 1000);
  CHECK(abs(f.mean - Real(1.5)).to_double() < 1e-70);
  CHECK(abs(f.variance - Real(0.5)).to_double() < 1e-70);

  // logarithmic: (log n)/4
  auto d = component_count_prediction(ClassId{ClassTag::diamond_bowtie_free, 0}, 10000);
  CHECK(std::abs(d.mean.to_double() - std::log(10000.0) / 4) < 1e-12);
  CHECK(std::abs(d.variance.to_double() - std::log(10000.0) / 4) < 1e-12);

  // pairs: mean n/2 + O(sqrt n), variance sqrt(n)/4 + O(1)
  auto b2 = component_count_prediction(ClassId{ClassTag::bounded_components, 2}, 10000);
  CHECK(std::abs(b2.mean.to_double() - 5000.0) < 100.0);
  CHECK(std::abs(b2.variance.to_double() - 25.0) < 1.0);

  auto p = component_count_prediction(ClassId{ClassTag::path_forests, 0}, 400);
  CHECK(std::abs(p.mean.to_double() / std::sqrt(200.0) - 1.0) < 0.1);
  CHECK(p.variance.to_double() > 0);
  CHECK(p.variance.to_double() < p.mean.to_double());
}

TEST_CASE("limit densities and the Gumbel cdf") {
  CHECK(limit_density(LimitLaw::beta_one_quarter, 0.0) == doctest::Approx(0.25));
  CHECK(limit_density(LimitLaw::beta_one_quarter, 0.5) ==
        doctest::Approx(0.25 * std::pow(0.5, -0.75)));
  CHECK(limit_density(LimitLaw::gamma_two_one, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(limit_density(LimitLaw::gamma_two_one, 0.0) == 0.0);
  CHECK(limit_density(LimitLaw::gamma_three_half_one, 1.0) ==
        doctest::Approx(2.0 / std::sqrt(M_PI) / std::exp(1.0)));
  CHECK_THROWS_AS((void)limit_density(LimitLaw::beta_one_quarter, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)limit_density(LimitLaw::gamma_two_one, -0.1), std::domain_error);

  CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0 / std::sqrt(2.0))));
  CHECK(gumbel_cdf(10.0) > 0.99);
  CHECK(gumbel_cdf(-10.0) < 0.01);
}

TEST_CASE("largest path component against the Gumbel limit") {
  auto g = gumbel_largest_check(200, 0.0);
  CHECK(g.k == 52);
  CHECK(std::abs(g.exact_cdf.to_double() - g.gumbel) < 0.1);
}

TEST_CASE("delay-equation solution") {
  CHECK(pd_rho(0.3) == 1.0);
  CHECK(pd_rho(1.0) == 1.0);

  // on [1, 2] the equation integrates in closed form:
  //   rho(x) = 1 - int_0^{(x-1)^{1/4}} (1 + t^4)^{-1/4} dt
  double t1 = 1.0;
  const int panels = 400;
  double h = t1 / panels;
  double integral = 0;
  for (int i = 0; i < panels; ++i) {
    double a = i * h, m = a + h / 2, b = a + h;
    auto f = [](double t) { return std::pow(1.0 + t * t * t * t, -0.25); };
    integral += h / 6 * (f(a) + 4 * f(m) + f(b));
  }
  CHECK(pd_rho(2.0) == doctest::Approx(1.0 - integral).epsilon(1e-5));

  CHECK(pd_rho(1.5) > pd_rho(2.0));
  CHECK(pd_rho(2.0) > pd_rho(3.0));
  CHECK(pd_rho(3.0) > 0.0);

  // step-halving stability
  CHECK(std::abs(pd_rho(3.0, 1e-4) - pd_rho(3.0, 5e-5)) < 1e-5);

  CHECK_THROWS_AS((void)pd_rho(-1.0), std::domain_error);
  CHECK_THROWS_AS((void)pd_rho(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("admissibility diagnostics") {
  auto m = admissibility_diagnostics(ClassId{ClassTag::max_degree_two, 0}, 20);
  CHECK(m.kind == "pole-plus-log");
  CHECK(m.rows.size() == 20u);
  CHECK(m.v_diverges);
  CHECK(m.ratio_vanishes);
  CHECK(m.b_pow_bounded);

  // an algebraic singularity of A: the saddle formula is off, and the
  // diagnostic says so
  auto d = admissibility_diagnostics(ClassId{ClassTag::diamond_bowtie_free, 0}, 20);
  CHECK(d.v_diverges);
  CHECK(!d.b_pow_bounded);

  auto b = admissibility_diagnostics(ClassId{ClassTag::bounded_components, 3}, 12);
  CHECK(!b.note.empty());
  CHECK(b.v_diverges);
  CHECK(b.b_pow_bounded);

  CHECK_THROWS_AS((void)admissibility_diagnostics(ClassId{ClassTag::forests, 0}, 10),
                  std::domain_error);
  CHECK_THROWS_AS((void)admissibility_diagnostics(ClassId{ClassTag::max_degree_two, 0}, 2),
                  std::invalid_argument);
}
