// classes.hpp -- the catalogue of labelled graph classes: series builders,
// closed-form evaluation, dominant-singularity data, membership tests and
// excluded-minor lists.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minorclass/bigfloat.hpp"
#include "minorclass/graph.hpp"
#include "minorclass/rational.hpp"
#include "minorclass/series.hpp"

namespace minorclass {

enum class ClassTag {
  forests,
  spoon_dbf,            // diamond, bowtie and k-spoon excluded
  two_spoon_free,
  diamond_bowtie_free,
  bounded_components,   // every component has at most k vertices
  path_forests,
  caterpillar_forests,
  max_degree_two,
  bowtie_free,
  star_ray,             // forests, max degree k, one branch vertex per component
};

struct ClassId {
  ClassTag tag = ClassTag::forests;
  int k = 0;  // spoon handle length / size bound / max degree; -1 = unbounded

  static ClassId parse(const std::string& token);
  std::string token() const;
  bool operator==(const ClassId& o) const { return tag == o.tag && k == o.k; }
};

// Canonical instances used by validation loops (small parameters).
std::vector<ClassId> default_class_list();

enum class ClassKind {
  convergent,        // C converges at rho (tree-like classes)
  logarithmic,       // C ~ theta log(1/(1 - z/rho))
  inverse_sqrt,      // C ~ c / sqrt(1 - z/rho)
  simple_pole,
  pole_plus_log,
  polynomial_entire,
  higher_order_pole,  // star-ray, finite k >= 3
  essential,          // star-ray, unbounded degree
};

std::string kind_name(ClassKind k);

struct SingularityData {
  bool finite_rho = true;
  Real rho;                           // ignored when finite_rho is false
  ClassKind kind = ClassKind::convergent;
  std::map<std::string, Real> constants;
};

// EGF of connected members, exact coefficients, orders 0..order.
Series<Rational> connected_egf(const ClassId& id, int order);
// EGF of all members, exp of the connected series.
Series<Rational> graph_egf(const ClassId& id, int order);
// Floating mirrors of the two builders.
Series<Real> connected_egf_real(const ClassId& id, int order);
Series<Real> graph_egf_real(const ClassId& id, int order);

// C(r), C'(r), C''(r), C'''(r) from the closed forms, for 0 < r < rho.
std::array<Real, 4> eval_connected(const ClassId& id, const Real& r);

SingularityData singularity_data(const ClassId& id);

// Excluded-minor list (may contain patterns larger than the minor-search cap
// for large spoon parameters; callers filter by size).
std::vector<LabelledGraph> excluded_minors(const ClassId& id);

// Structural membership test.  Works for graphs of any size except for the
// two-spoon class, whose only route is minor exclusion (hosts capped at 10).
bool membership(const ClassId& id, const LabelledGraph& g);

// Membership via the excluded-minor route; host graphs capped at 10 vertices.
bool membership_by_minors(const ClassId& id, const LabelledGraph& g);

// Number of connected labelled graphs on i vertices, i <= 6 (the bound
// enforced for bounded-component classes).
Integer connected_graph_count(int i);

}  // namespace minorclass
