// bigfloat.hpp -- arbitrary-precision reals on top of MPFR.  One global
// working precision (bits), default 256, settable once up front.  All
// operations round to nearest.
#pragma once

#include <mpfr.h>

#include <string>

#include "minorclass/rational.hpp"

namespace minorclass {

class Real {
 public:
  static void set_precision(long bits);
  static long precision();

  Real();
  Real(double v);
  Real(long v);
  Real(int v) : Real(static_cast<long>(v)) {}
  Real(unsigned long v);
  Real(const Rational& q);
  Real(const Integer& n);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  ~Real();

  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;

  bool operator==(const Real& o) const;
  bool operator!=(const Real& o) const { return !(*this == o); }
  bool operator<(const Real& o) const;
  bool operator<=(const Real& o) const;
  bool operator>(const Real& o) const;
  bool operator>=(const Real& o) const;

  double to_double() const;
  long to_long() const;  // rounds toward zero
  std::string str(int digits = 20) const;
  bool is_nan() const;

  static Real pi();
  static Real euler_e();  // the constant e
  static Real inf();

  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& x, const Real& y);
  friend Real pow(const Real& x, long e);
  friend Real gamma_fn(const Real& x);
  friend Real floor(const Real& x);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long e);
Real gamma_fn(const Real& x);
Real floor(const Real& x);

// log(n!) without forming n!.
Real log_factorial(unsigned long n);

// The unique t in [0, 1] with t e^{-t} = r, for 0 <= r <= 1/e (the value of
// the tree series at r).  Bisection with Newton polish; tolerant of r equal
// to 1/e at working precision, where the answer is 1.
Real tree_value(const Real& r);

}  // namespace minorclass
