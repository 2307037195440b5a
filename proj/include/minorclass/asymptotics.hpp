// asymptotics.hpp -- saddle-point machinery for [z^n] A, closed-form growth
// estimates, limit laws, and the numeric admissibility diagnostics.
#pragma once

#include <string>
#include <vector>

#include "minorclass/bigfloat.hpp"
#include "minorclass/classes.hpp"

namespace minorclass {

struct SaddleEstimate {
  long n = 0;
  Real zeta;          // root of zeta C'(zeta) = n
  Real b;             // zeta C' + zeta^2 C'' at zeta
  Real C_zeta;        // C(zeta) = log A(zeta)
  Real V_zeta;        // C - (zeta C')^2 / b, the component-count variance scale
  Real log_estimate;  // log of the [z^n] A estimate
  Real estimate() const { return exp(log_estimate); }
};

// Solve zeta C'(zeta) = n below the singularity (or on (0, inf) for the
// polynomial classes) and evaluate the one-term saddle estimate
//   [z^n] A  ~=  A(zeta) / (zeta^n sqrt(2 pi b(zeta))).
// Convergent classes have no saddle for large n and are rejected.
SaddleEstimate saddle_point(const ClassId& id, long n);

inline Real hayman_estimate(const ClassId& id, long n) {
  return saddle_point(id, n).estimate();
}

// Printed leading-term growth formulas, as estimates of [z^n] A (or of
// [z^n] C with connected = true), i.e. of a_n / n!.  Classes without a
// printed formula (star-ray) are rejected.
Real closed_form_egf(const ClassId& id, long n, bool connected);

struct ConnectivityLimit {
  bool positive = false;
  Real value;         // limit of c_n / a_n when positive
  std::string decay;  // growth-order description otherwise
};

ConnectivityLimit connectivity_limit(const ClassId& id);

struct ComponentMomentPrediction {
  Real mean;
  Real variance;
};

// Leading-order E(N_n) and V(N_n): C(zeta_n) and V(zeta_n) for saddle
// classes, (log n)/4 for the diamond/bowtie-excluded class, 1 + C(rho) and
// C(rho) for the convergent ones.
ComponentMomentPrediction component_count_prediction(const ClassId& id, long n);

enum class LimitLaw {
  beta_one_quarter,    // density (1-x)^{-3/4}/4 on [0, 1)
  gamma_two_one,       // density x e^{-x}
  gamma_three_half_one  // density 2 sqrt(x/pi) e^{-x}
};

double limit_density(LimitLaw law, double x);

// limit of P((L_n - sqrt(n/2) log n) / sqrt(n/2) < x) for path forests
double gumbel_cdf(double x);

struct GumbelCheck {
  long k = 0;
  Real exact_cdf;   // P(L_n <= k), floating backend
  double gumbel = 0;
};

// k = floor(sqrt(n/2) (log n + x)); P(L_n < sqrt(n/2)(log n + x)) is
// P(L_n <= k) on integer sizes, compared against the Gumbel limit.
GumbelCheck gumbel_largest_check(long n, double x);

// The delay-equation solution with rho(x) = 1 on [0, 1] and
//   x^{1/4} rho'(x) = -(1/4) (x-1)^{-3/4} rho(x-1):
// P(L_n < x n) converges to rho(1/x).  Method of steps; the integrable
// singularity at 1 is handled by the substitution u = (x-1)^{1/4}.
double pd_rho(double x, double step = 1e-4);

struct DiagnosticRow {
  int j = 0;
  Real r, a, b, V, ratio, b_pow;  // a = rC', b, V as above, ratio = C/V^{3/2}
};

struct AdmissibilityReport {
  std::string klass;
  std::string kind;
  std::string note;
  std::vector<DiagnosticRow> rows;
  bool v_diverges = false;      // V(r) grows along the grid
  bool ratio_vanishes = false;  // C/V^{3/2} decreases toward 0
  bool b_pow_bounded = false;   // b^{1/sqrt(V)} stays O(1)
};

// Numeric checks of the ext-admissibility conditions along r_j = rho (1 -
// 2^{-j}); polynomial classes are probed along r_j = 2^j instead.  Classes
// with convergent C are rejected.
AdmissibilityReport admissibility_diagnostics(const ClassId& id, int grid = 20);

}  // namespace minorclass
