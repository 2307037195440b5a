// series.hpp -- truncated power series arithmetic for exponential generating
// functions.  A Series<R> keeps coefficients of z^0 .. z^order; coefficient n
// holds [z^n] f, i.e. a_n / n! when f enumerates labelled objects.  R is an
// exact rational type or a big float; both backends share this code.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace minorclass {

template <class R>
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1, R(0)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }

  static Series zero(int order) { return Series(order); }

  static Series constant(const R& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }

  static Series z(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<size_t>(n)); }

  Series operator+(const Series& g) const {
    check_order(g);
    Series r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += g.c_[i];
    return r;
  }

  Series operator-(const Series& g) const {
    check_order(g);
    Series r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= g.c_[i];
    return r;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  // Cauchy product, truncated to the common order.
  Series operator*(const Series& g) const {
    check_order(g);
    const int n = order();
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (is_zero(c_[static_cast<size_t>(i)])) continue;
      for (int j = 0; i + j <= n; ++j) {
        R t = c_[static_cast<size_t>(i)];
        t *= g.c_[static_cast<size_t>(j)];
        r.c_[static_cast<size_t>(i + j)] += t;
      }
    }
    return r;
  }

  Series scaled(const R& v) const {
    Series r = *this;
    for (auto& x : r.c_) x *= v;
    return r;
  }

  // exp(f) for f with zero constant term, via g' = f' g:
  //   n g_n = sum_{k=1..n} k f_k g_{n-k}.
  Series exp() const {
    if (!is_zero(c_[0]))
      throw std::domain_error("series exp needs a vanishing constant term");
    const int n = order();
    Series g(n);
    g.c_[0] = R(1);
    for (int m = 1; m <= n; ++m) {
      R acc(0);
      for (int k = 1; k <= m; ++k) {
        if (is_zero(c_[static_cast<size_t>(k)])) continue;
        R t = c_[static_cast<size_t>(k)];
        t *= R(k);
        t *= g.c_[static_cast<size_t>(m - k)];
        acc += t;
      }
      acc /= R(m);
      g.c_[static_cast<size_t>(m)] = acc;
    }
    return g;
  }

  // log(f) for f with constant term 1; inverse of exp.
  Series log() const {
    if (!is_one(c_[0]))
      throw std::domain_error("series log needs constant term 1");
    const int n = order();
    Series g(n);
    for (int m = 1; m <= n; ++m) {
      R acc = c_[static_cast<size_t>(m)];
      acc *= R(m);
      for (int k = 1; k < m; ++k) {
        if (is_zero(g.c_[static_cast<size_t>(k)])) continue;
        R t = g.c_[static_cast<size_t>(k)];
        t *= R(k);
        t *= c_[static_cast<size_t>(m - k)];
        acc -= t;
      }
      acc /= R(m);
      g.c_[static_cast<size_t>(m)] = acc;
    }
    return g;
  }

  // 1/f for f with nonzero constant term.
  Series inverse() const {
    if (is_zero(c_[0]))
      throw std::domain_error("series inverse needs a nonzero constant term");
    const int n = order();
    Series h(n);
    R inv0 = R(1);
    inv0 /= c_[0];
    h.c_[0] = inv0;
    for (int m = 1; m <= n; ++m) {
      R acc(0);
      for (int k = 1; k <= m; ++k) {
        if (is_zero(c_[static_cast<size_t>(k)])) continue;
        R t = c_[static_cast<size_t>(k)];
        t *= h.c_[static_cast<size_t>(m - k)];
        acc += t;
      }
      acc *= inv0;
      h.c_[static_cast<size_t>(m)] = -acc;
    }
    return h;
  }

  // f(g) for g with zero constant term, Horner over series.
  Series compose(const Series& g) const {
    check_order(g);
    if (!is_zero(g.c_[0]))
      throw std::domain_error("series compose needs g with zero constant term");
    const int n = order();
    Series r = Series::constant(c_[static_cast<size_t>(n)], n);
    for (int i = n - 1; i >= 0; --i) {
      r = r * g;
      r.c_[0] += c_[static_cast<size_t>(i)];
    }
    return r;
  }

  // Formal d/dz; the result is one order shorter (the top coefficient of the
  // derivative is not determined by a truncation of f).
  Series derivative() const {
    const int n = order();
    if (n == 0) return Series(0);
    Series d(n - 1);
    for (int m = 1; m <= n; ++m) {
      R t = c_[static_cast<size_t>(m)];
      t *= R(m);
      d.c_[static_cast<size_t>(m - 1)] = t;
    }
    return d;
  }

  // Copy truncated to a smaller order.
  Series truncated(int new_order) const {
    if (new_order > order())
      throw std::invalid_argument("cannot extend a truncated series");
    Series r(new_order);
    for (int i = 0; i <= new_order; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
    return r;
  }

  bool operator==(const Series& g) const { return c_ == g.c_; }

  // Horner evaluation of the truncated polynomial at a point, in any scalar
  // type constructible from R.
  template <class S>
  S eval(const S& x) const {
    S acc = S(c_.back());
    for (int i = order() - 1; i >= 0; --i) {
      acc *= x;
      acc += S(c_[static_cast<size_t>(i)]);
    }
    return acc;
  }

 private:
  void check_order(const Series& g) const {
    if (g.order() != order())
      throw std::invalid_argument("series order mismatch");
  }
  static bool is_zero(const R& v) { return v == R(0); }
  static bool is_one(const R& v) { return v == R(1); }

  std::vector<R> c_;
};

// C^{[k]}: keep coefficients of z^0 .. z^{k-1}, zero out z^k and above.
template <class R>
Series<R> truncate_below(const Series<R>& f, int k) {
  Series<R> r(f.order());
  for (int i = 0; i < k && i <= f.order(); ++i) r[i] = f[i];
  return r;
}

template <class R>
Series<R> ipow(const Series<R>& f, int e) {
  Series<R> r = Series<R>::constant(R(1), f.order());
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

// The rooted labelled tree series T = z exp(T), solved coefficientwise
// through E = exp(T) = T/z, which satisfies n e_n = sum_{k=1..n} k e_{k-1}
// e_{n-k}.  Fixed point checked in tests: T == z exp(T) exactly, and
// n! [z^n] T = n^{n-1}.
template <class R>
Series<R> solve_tree(int order) {
  std::vector<R> e(static_cast<size_t>(order) + 1, R(0));
  e[0] = R(1);
  for (int n = 1; n <= order; ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) {
      R t = e[static_cast<size_t>(k - 1)];
      t *= R(k);
      t *= e[static_cast<size_t>(n - k)];
      acc += t;
    }
    acc /= R(n);
    e[static_cast<size_t>(n)] = acc;
  }
  Series<R> t(order);
  for (int n = 1; n <= order; ++n) t[n] = e[static_cast<size_t>(n - 1)];
  return t;
}

// Trees of height < k: T_1 = z, T_{j+1} = z exp(T_j).
template <class R>
Series<R> solve_bounded_tree(int k, int order) {
  if (k < 1) throw std::invalid_argument("bounded tree height must be >= 1");
  Series<R> t = Series<R>::z(order);
  for (int j = 1; j < k; ++j) {
    Series<R> e = t.exp();
    Series<R> next(order);
    for (int n = 1; n <= order; ++n) next[n] = e[n - 1];
    t = next;
  }
  return t;
}

}  // namespace minorclass
