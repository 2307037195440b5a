#include "minorclass/bigfloat.hpp"

#include <stdexcept>
#include <vector>

namespace minorclass {

namespace {
long g_prec = 256;
constexpr mpfr_rnd_t RND = MPFR_RNDN;
}  // namespace

void Real::set_precision(long bits) {
  if (bits < 24 || bits > 1 << 20)
    throw std::invalid_argument("precision out of range");
  g_prec = bits;
}

long Real::precision() { return g_prec; }

Real::Real() { mpfr_init2(v_, g_prec); mpfr_set_zero(v_, 1); }
Real::Real(double v) { mpfr_init2(v_, g_prec); mpfr_set_d(v_, v, RND); }
Real::Real(long v) { mpfr_init2(v_, g_prec); mpfr_set_si(v_, v, RND); }
Real::Real(unsigned long v) { mpfr_init2(v_, g_prec); mpfr_set_ui(v_, v, RND); }
Real::Real(const Rational& q) {
  mpfr_init2(v_, g_prec);
  mpfr_set_q(v_, q.get_mpq_t(), RND);
}
Real::Real(const Integer& n) {
  mpfr_init2(v_, g_prec);
  mpfr_set_z(v_, n.get_mpz_t(), RND);
}
Real::Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, RND); }
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, RND);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, RND); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, RND); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, RND); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, RND); return *this; }

Real Real::operator+(const Real& o) const { Real r(*this); r += o; return r; }
Real Real::operator-(const Real& o) const { Real r(*this); r -= o; return r; }
Real Real::operator*(const Real& o) const { Real r(*this); r *= o; return r; }
Real Real::operator/(const Real& o) const { Real r(*this); r /= o; return r; }
Real Real::operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, RND); return r; }

bool Real::operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }
bool Real::operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
bool Real::operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
bool Real::operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
bool Real::operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }

double Real::to_double() const { return mpfr_get_d(v_, RND); }
long Real::to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
bool Real::is_nan() const { return mpfr_nan_p(v_) != 0; }

std::string Real::str(int digits) const {
  char* s = nullptr;
  // mpfr_asprintf gives round-trippable decimal output.
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
    throw std::runtime_error("mpfr formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::pi() { Real r; mpfr_const_pi(r.v_, RND); return r; }
Real Real::euler_e() { Real one(1L); return minorclass::exp(one); }
Real Real::inf() { Real r; mpfr_set_inf(r.v_, 1); return r; }

Real exp(const Real& x) { Real r; mpfr_exp(r.v_, x.v_, RND); return r; }
Real log(const Real& x) { Real r; mpfr_log(r.v_, x.v_, RND); return r; }
Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.v_, x.v_, RND); return r; }
Real abs(const Real& x) { Real r; mpfr_abs(r.v_, x.v_, RND); return r; }
Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.v_, x.v_, y.v_, RND); return r; }
Real pow(const Real& x, long e) { Real r; mpfr_pow_si(r.v_, x.v_, e, RND); return r; }
Real gamma_fn(const Real& x) { Real r; mpfr_gamma(r.v_, x.v_, RND); return r; }
Real floor(const Real& x) { Real r; mpfr_floor(r.v_, x.v_); return r; }

Real log_factorial(unsigned long n) {
  Real r;
  mpfr_t t;
  mpfr_init2(t, Real::precision());
  mpfr_set_ui(t, n + 1, MPFR_RNDN);
  mpfr_lngamma(r.raw(), t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

Real tree_value(const Real& r) {
  const Real zero(0L);
  if (r < zero) throw std::domain_error("tree_value needs r >= 0");
  const Real inv_e = exp(Real(-1L));
  if (r > inv_e) {
    // Allow round-off at the critical point itself, reject anything real.
    Real slack = inv_e * pow(Real(2L), -(Real::precision() - 8));
    if (r - inv_e > slack) throw std::domain_error("tree_value needs r <= 1/e");
    return Real(1L);
  }
  if (r == zero) return zero;

  // phi(t) = t e^{-t} is increasing on [0,1]; keep a bracket and take Newton
  // steps when they stay inside it, bisect otherwise.
  Real lo(0L), hi(1L);
  Real t = r * Real::euler_e() * Real(0.6);  // crude start below the root
  if (t <= zero || t >= Real(1L)) t = Real(0.5);
  const Real tol = pow(Real(2L), -(Real::precision() - 16));
  for (int it = 0; it < 20000; ++it) {
    Real emt = exp(-t);
    Real f = t * emt - r;
    if (abs(f) <= tol * (r + tol)) break;
    if (f > zero) hi = t; else lo = t;
    Real deriv = (Real(1L) - t) * emt;
    bool stepped = false;
    if (deriv > zero) {
      Real nt = t - f / deriv;
      if (nt > lo && nt < hi) {
        t = nt;
        stepped = true;
      }
    }
    if (!stepped) t = (lo + hi) * Real(0.5);
    if (hi - lo <= tol) break;
  }
  return t;
}

}  // namespace minorclass
