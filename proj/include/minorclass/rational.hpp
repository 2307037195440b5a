// rational.hpp -- exact rational scalars (GMP) and small integer helpers.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace minorclass {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// a_n from an EGF coefficient a_n/n!.  Throws if the product is not integral,
// which would mean the series was not an EGF of a counting sequence.
inline Integer egf_count(const Rational& coeff, unsigned long n) {
  Rational c = coeff * factorial(n);
  c.canonicalize();
  if (c.get_den() != 1)
    throw std::domain_error("EGF coefficient times n! is not an integer");
  return c.get_num();
}

// "p/q" (or just "p" when q == 1).
inline std::string rational_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace minorclass
