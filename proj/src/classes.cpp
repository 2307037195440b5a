#include "minorclass/classes.hpp"

#include <stdexcept>

#include "minorclass/jet.hpp"
#include "minorclass/minor.hpp"

namespace minorclass {

namespace {

const long kConnectedCounts[7] = {0, 1, 1, 4, 38, 728, 26704};

// ---- one formula source for both series backends and jet evaluation ----
//
// An algebra provides z, rational constants, the tree series T (T = z e^T),
// and the height-bounded T_k; the class formulas below are written once
// against that surface.

template <class R>
struct SeriesAlg {
  using V = Series<R>;
  int N;
  V z() const { return V::z(N); }
  V c(long num, long den = 1) const { return V::constant(R(rat(num, den)), N); }
  V tree() const { return solve_tree<R>(N); }
  V btree(int k) const { return solve_bounded_tree<R>(k, N); }
};

struct JetAlg {
  using V = Jet;
  Real r;
  V z() const { return Jet::variable(r); }
  V c(long num, long den = 1) const { return Jet(Real(rat(num, den))); }
  V tree() const { return tree_jet(r); }
  V btree(int k) const { return bounded_tree_jet(k, r); }
};

template <class R>
Series<R> exp(const Series<R>& f) { return f.exp(); }
template <class R>
Series<R> log(const Series<R>& f) { return f.log(); }
template <class R>
Series<R> inverse(const Series<R>& f) { return f.inverse(); }

template <class A>
typename A::V connected_formula(const ClassId& id, const A& alg) {
  using V = typename A::V;
  const V z = alg.z();
  const V one = alg.c(1);
  const V half = alg.c(1, 2);

  // unicyclic part shared by several classes: cycles of objects counted by y
  auto cyc_of = [&](const V& y) { return (-log(one - y) - y - y * y * half) * half; };

  switch (id.tag) {
    case ClassTag::forests: {
      V t = alg.tree();
      return t - t * t * half;
    }
    case ClassTag::spoon_dbf: {
      V t = alg.tree();
      V tk = alg.btree(id.k);
      return t - t * t * half + cyc_of(tk);
    }
    case ClassTag::two_spoon_free: {
      V t = alg.tree();
      V e = exp(z);
      V s = z * e;  // trees of height < 2
      V extra = z * z * z * z * alg.c(1, 24) +
                z * z * e * e * (e - one - z - z * z * alg.c(1, 4));
      return t - t * t * half + cyc_of(s) + extra;
    }
    case ClassTag::diamond_bowtie_free: {
      V t = alg.tree();
      return t - t * t * half + cyc_of(t);
    }
    case ClassTag::bounded_components: {
      V acc = alg.c(0);
      V zp = one;
      long fact = 1;
      for (int i = 1; i <= id.k; ++i) {
        zp = zp * z;
        fact *= i;
        acc = acc + zp * alg.c(kConnectedCounts[i], fact);
      }
      return acc;
    }
    case ClassTag::path_forests:
      return z * (alg.c(2) - z) * inverse(one - z) * half;
    case ClassTag::caterpillar_forests: {
      V e = exp(z);
      V star_rooted = z * e;
      V stars = star_rooted - z * z * half;
      V chain = (star_rooted - z) * (star_rooted - z) * inverse(one - star_rooted) * half;
      return stars + chain;
    }
    case ClassTag::max_degree_two:
      return z * (alg.c(2) - z + z * z) * inverse(one - z) * alg.c(1, 4) -
             log(one - z) * half;
    case ClassTag::bowtie_free: {
      V t = alg.tree();
      V et = exp(t);
      V inv = inverse(one - t);
      V t2 = t * t;
      V head = t2 * (one - t + t2) * et * inv;
      V tail = t * (alg.c(12) - alg.c(54) * t + alg.c(18) * t2 -
                    alg.c(5) * t2 * t - t2 * t2) * inv * alg.c(1, 24);
      return head - log(one - t) * half + tail;
    }
    case ClassTag::star_ray: {
      V g = inverse(one - z);
      V acc = z + z * z * g * half;
      if (id.k < 0) {
        // centre of any degree, minus the double-counted bare paths
        return z * exp(z * g) - z * z * g * g * half;
      }
      V gp = g * g;
      V zp = z * z * z;
      long fact = 2;
      for (int i = 3; i <= id.k; ++i) {
        gp = gp * g;
        zp = zp * z;
        fact *= i;
        acc = acc + zp * gp * alg.c(1, fact);
      }
      return acc;
    }
  }
  throw std::logic_error("unhandled class tag");
}

void check_param(const ClassId& id) {
  switch (id.tag) {
    case ClassTag::spoon_dbf:
      if (id.k < 1) throw std::invalid_argument("spoon parameter must be >= 1");
      break;
    case ClassTag::bounded_components:
      if (id.k < 1 || id.k > 6)
        throw std::invalid_argument("bounded-component size must be in 1..6");
      break;
    case ClassTag::star_ray:
      if (id.k != -1 && id.k < 2)
        throw std::invalid_argument("star-ray degree must be >= 2 or inf");
      break;
    default:
      break;
  }
}

}  // namespace

Integer connected_graph_count(int i) {
  if (i < 0 || i > 6) throw std::invalid_argument("connected counts built in for n <= 6");
  return kConnectedCounts[i];
}

Series<Rational> connected_egf(const ClassId& id, int order) {
  check_param(id);
  return connected_formula(id, SeriesAlg<Rational>{order});
}

Series<Rational> graph_egf(const ClassId& id, int order) {
  return connected_egf(id, order).exp();
}

Series<Real> connected_egf_real(const ClassId& id, int order) {
  check_param(id);
  return connected_formula(id, SeriesAlg<Real>{order});
}

Series<Real> graph_egf_real(const ClassId& id, int order) {
  return connected_egf_real(id, order).exp();
}

std::array<Real, 4> eval_connected(const ClassId& id, const Real& r) {
  check_param(id);
  if (!(r > Real(0L))) throw std::domain_error("eval point must be positive");
  SingularityData sd = singularity_data(id);
  if (sd.finite_rho && !(r < sd.rho))
    throw std::domain_error("eval point must lie strictly below rho");
  Jet c = connected_formula(id, JetAlg{r});
  return {c.c[0], c.derivative(1), c.derivative(2), c.derivative(3)};
}

ClassId ClassId::parse(const std::string& token) {
  auto bad = [&]() { return std::invalid_argument("unknown class token: " + token); };
  auto param = [&](const std::string& prefix) {
    std::string rest = token.substr(prefix.size());
    if (rest == "inf") return -1;
    size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != rest.size()) throw bad();
    return k;
  };
  if (token == "forests") return {ClassTag::forests, 0};
  if (token.rfind("spoon-dbf:", 0) == 0) return {ClassTag::spoon_dbf, param("spoon-dbf:")};
  if (token == "two-spoon-free") return {ClassTag::two_spoon_free, 0};
  if (token == "diamond-bowtie-free") return {ClassTag::diamond_bowtie_free, 0};
  if (token.rfind("bounded:", 0) == 0) return {ClassTag::bounded_components, param("bounded:")};
  if (token == "path-forests") return {ClassTag::path_forests, 0};
  if (token == "caterpillar-forests") return {ClassTag::caterpillar_forests, 0};
  if (token == "max-degree-2") return {ClassTag::max_degree_two, 0};
  if (token == "bowtie-free") return {ClassTag::bowtie_free, 0};
  if (token.rfind("star-ray:", 0) == 0) return {ClassTag::star_ray, param("star-ray:")};
  throw bad();
}

std::string ClassId::token() const {
  switch (tag) {
    case ClassTag::forests: return "forests";
    case ClassTag::spoon_dbf: return "spoon-dbf:" + std::to_string(k);
    case ClassTag::two_spoon_free: return "two-spoon-free";
    case ClassTag::diamond_bowtie_free: return "diamond-bowtie-free";
    case ClassTag::bounded_components: return "bounded:" + std::to_string(k);
    case ClassTag::path_forests: return "path-forests";
    case ClassTag::caterpillar_forests: return "caterpillar-forests";
    case ClassTag::max_degree_two: return "max-degree-2";
    case ClassTag::bowtie_free: return "bowtie-free";
    case ClassTag::star_ray:
      return "star-ray:" + (k < 0 ? std::string("inf") : std::to_string(k));
  }
  return "?";
}

std::vector<ClassId> default_class_list() {
  return {
      {ClassTag::forests, 0},
      {ClassTag::spoon_dbf, 1},
      {ClassTag::spoon_dbf, 2},
      {ClassTag::spoon_dbf, 3},
      {ClassTag::two_spoon_free, 0},
      {ClassTag::diamond_bowtie_free, 0},
      {ClassTag::bounded_components, 3},
      {ClassTag::path_forests, 0},
      {ClassTag::caterpillar_forests, 0},
      {ClassTag::max_degree_two, 0},
      {ClassTag::bowtie_free, 0},
      {ClassTag::star_ray, 3},
      {ClassTag::star_ray, -1},
  };
}

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::convergent: return "convergent";
    case ClassKind::logarithmic: return "logarithmic";
    case ClassKind::inverse_sqrt: return "inverse-sqrt";
    case ClassKind::simple_pole: return "simple-pole";
    case ClassKind::pole_plus_log: return "pole-plus-log";
    case ClassKind::polynomial_entire: return "polynomial-entire";
    case ClassKind::higher_order_pole: return "higher-order-pole";
    case ClassKind::essential: return "essential";
  }
  return "?";
}

SingularityData singularity_data(const ClassId& id) {
  check_param(id);
  SingularityData sd;
  const Real one(1L);
  const Real half(0.5);
  const Real inv_e = exp(Real(-1L));
  switch (id.tag) {
    case ClassTag::forests: {
      sd.rho = inv_e;
      sd.kind = ClassKind::convergent;
      sd.constants["C_rho"] = half;
      sd.constants["A_rho"] = exp(half);
      break;
    }
    case ClassTag::spoon_dbf: {
      sd.rho = inv_e;
      sd.kind = ClassKind::convergent;
      Real tk = inv_e;  // T_1(1/e)
      for (int j = 1; j < id.k; ++j) tk = exp(tk - one);
      Real d = (-log(one - tk) - tk - tk * tk * half) * half;
      sd.constants["C_rho"] = half + d;
      sd.constants["A_rho"] = exp(half + d);
      break;
    }
    case ClassTag::two_spoon_free: {
      sd.rho = inv_e;
      sd.kind = ClassKind::convergent;
      Real z = inv_e;
      Real e = exp(z);
      Real s = z * e;
      Real d = (-log(one - s) - s - s * s * half) * half +
               pow(z, 4) / Real(24L) +
               z * z * e * e * (e - one - z - z * z / Real(4L));
      sd.constants["C_rho"] = half + d;
      sd.constants["A_rho"] = exp(half + d);
      break;
    }
    case ClassTag::diamond_bowtie_free: {
      sd.rho = inv_e;
      sd.kind = ClassKind::logarithmic;
      sd.constants["theta"] = Real(Rational(1, 4));
      break;
    }
    case ClassTag::bounded_components: {
      sd.finite_rho = false;
      sd.rho = Real::inf();
      sd.kind = ClassKind::polynomial_entire;
      int k = id.k;
      Real ck(kConnectedCounts[k]);
      Real ckm1(k >= 2 ? kConnectedCounts[k - 1] : 0L);
      Real factkm1(1L);
      for (int i = 2; i < k; ++i) factkm1 *= Real(static_cast<long>(i));
      sd.constants["alpha"] = pow(factkm1 / ck, one / Real(static_cast<long>(k)));
      sd.constants["beta"] =
          k >= 2 ? -Real(static_cast<long>(k - 1)) * ckm1 / (Real(static_cast<long>(k)) * ck)
                 : Real(0L);
      break;
    }
    case ClassTag::path_forests: {
      sd.rho = one;
      sd.kind = ClassKind::simple_pole;
      sd.constants["alpha"] = half;
      sd.constants["beta"] = Real(0L);
      break;
    }
    case ClassTag::caterpillar_forests: {
      // rho e^rho = 1
      Real r(0.567143);
      for (int i = 0; i < 64; ++i) {
        Real er = exp(r);
        r = r - (r * er - one) / ((one + r) * er);
      }
      sd.rho = r;
      sd.kind = ClassKind::simple_pole;
      Real onepr = one + r;
      sd.constants["alpha"] = (one - r) * (one - r) / (Real(2L) * onepr);
      sd.constants["beta"] = r * (Real(10L) + Real(3L) * r - Real(4L) * r * r - r * r * r) /
                             (Real(4L) * onepr * onepr);
      break;
    }
    case ClassTag::max_degree_two: {
      sd.rho = one;
      sd.kind = ClassKind::pole_plus_log;
      sd.constants["alpha"] = half;
      sd.constants["log_coeff"] = half;
      break;
    }
    case ClassTag::bowtie_free: {
      sd.rho = inv_e;
      sd.kind = ClassKind::inverse_sqrt;
      // C(z) ~ c / sqrt(1 - e z) with c = (e - 5/4)/sqrt(2)
      sd.constants["c"] = (Real::euler_e() - Real(Rational(5, 4))) / sqrt(Real(2L));
      break;
    }
    case ClassTag::star_ray: {
      sd.rho = one;
      if (id.k == 2) {
        sd.kind = ClassKind::simple_pole;
        sd.constants["alpha"] = half;
        sd.constants["beta"] = Real(0L);
      } else if (id.k > 2) {
        sd.kind = ClassKind::higher_order_pole;
        sd.constants["pole_order"] = Real(static_cast<long>(id.k));
      } else {
        sd.kind = ClassKind::essential;
      }
      break;
    }
  }
  return sd;
}

std::vector<LabelledGraph> excluded_minors(const ClassId& id) {
  check_param(id);
  using namespace patterns;
  switch (id.tag) {
    case ClassTag::forests: return {triangle()};
    case ClassTag::spoon_dbf: return {diamond(), bowtie(), spoon(id.k)};
    case ClassTag::two_spoon_free: return {spoon(2)};
    case ClassTag::diamond_bowtie_free: return {diamond(), bowtie()};
    case ClassTag::bounded_components: return trees_on(id.k + 1);
    case ClassTag::path_forests: return {triangle(), star(3)};
    case ClassTag::caterpillar_forests: return {triangle(), spider_three_legs2()};
    case ClassTag::max_degree_two: return {star(3)};
    case ClassTag::bowtie_free: return {bowtie()};
    case ClassTag::star_ray:
      if (id.k == 2) return {triangle(), star(3)};
      if (id.k == 3) return {triangle(), star(4)};
      if (id.k > 3) return {triangle(), star(id.k + 1), double_star()};
      return {triangle(), double_star()};
  }
  throw std::logic_error("unhandled class tag");
}

}  // namespace minorclass
