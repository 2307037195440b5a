// jet.hpp -- degree-3 Taylor jets: value and first three derivatives of a
// function at a point, carried through arithmetic.  Coefficients are stored
// Taylor-style (f^{(i)}(r)/i!) so products are plain truncated convolutions.
#pragma once

#include <array>
#include <stdexcept>

#include "minorclass/bigfloat.hpp"

namespace minorclass {

struct Jet {
  static constexpr int kLen = 4;
  std::array<Real, kLen> c;

  Jet() : c{Real(0L), Real(0L), Real(0L), Real(0L)} {}
  explicit Jet(const Real& v) : Jet() { c[0] = v; }

  static Jet variable(const Real& r) {
    Jet j(r);
    j.c[1] = Real(1L);
    return j;
  }

  Real derivative(int i) const {  // f^{(i)}(r)
    Real f(1L);
    for (int m = 2; m <= i; ++m) f *= Real(static_cast<long>(m));
    return c[static_cast<size_t>(i)] * f;
  }

  Jet operator+(const Jet& o) const {
    Jet r = *this;
    for (int i = 0; i < kLen; ++i) r.c[i] += o.c[i];
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r = *this;
    for (int i = 0; i < kLen; ++i) r.c[i] -= o.c[i];
    return r;
  }
  Jet operator-() const {
    Jet r = *this;
    for (int i = 0; i < kLen; ++i) r.c[i] = -r.c[i];
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r;
    for (int i = 0; i < kLen; ++i)
      for (int j = 0; i + j < kLen; ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
};

inline Jet inverse(const Jet& f) {
  if (f.c[0] == Real(0L))
    throw std::domain_error("jet inverse at a zero value");
  Jet h;
  Real inv0 = Real(1L) / f.c[0];
  h.c[0] = inv0;
  for (int m = 1; m < Jet::kLen; ++m) {
    Real acc(0L);
    for (int k = 1; k <= m; ++k) acc += f.c[k] * h.c[m - k];
    h.c[m] = -acc * inv0;
  }
  return h;
}

inline Jet operator/(const Jet& f, const Jet& g) { return f * inverse(g); }

inline Jet exp(const Jet& f) {
  Jet g;
  g.c[0] = exp(f.c[0]);
  for (int m = 1; m < Jet::kLen; ++m) {
    Real acc(0L);
    for (int k = 1; k <= m; ++k)
      acc += Real(static_cast<long>(k)) * f.c[k] * g.c[m - k];
    g.c[m] = acc / Real(static_cast<long>(m));
  }
  return g;
}

inline Jet log(const Jet& f) {
  if (!(f.c[0] > Real(0L)))
    throw std::domain_error("jet log at a nonpositive value");
  Jet g;
  g.c[0] = log(f.c[0]);
  Real inv0 = Real(1L) / f.c[0];
  for (int m = 1; m < Jet::kLen; ++m) {
    Real acc = Real(static_cast<long>(m)) * f.c[m];
    for (int k = 1; k < m; ++k)
      acc -= Real(static_cast<long>(k)) * g.c[k] * f.c[m - k];
    g.c[m] = acc * inv0 / Real(static_cast<long>(m));
  }
  return g;
}

inline Jet ipow(const Jet& f, int e) {
  Jet r(Real(1L));
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

// Jet of the tree function T at r (T e^{-T} = r, 0 <= r < 1/e): the constant
// term comes from tree_value, the higher coefficients from Newton steps on
// F(U) = U - z e^U in jet arithmetic, which converge past degree 3 in two
// iterations.
inline Jet tree_jet(const Real& r) {
  Jet z = Jet::variable(r);
  Jet u(tree_value(r));
  for (int it = 0; it < 4; ++it) {
    Jet e = exp(u);
    Jet f = u - z * e;
    Jet fp = Jet(Real(1L)) - z * e;
    u = u - f / fp;
  }
  return u;
}

// Jet of the height-bounded tree series T_k at r (entire, any r): direct
// iteration of T_1 = z, T_{j+1} = z exp(T_j).
inline Jet bounded_tree_jet(int k, const Real& r) {
  if (k < 1) throw std::invalid_argument("bounded tree height must be >= 1");
  Jet z = Jet::variable(r);
  Jet t = z;
  for (int j = 1; j < k; ++j) t = z * exp(t);
  return t;
}

}  // namespace minorclass
