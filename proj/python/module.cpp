// Python bindings for the main operations: counting, exact component laws,
// Boltzmann sampling, membership and the asymptotic estimates.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minorclass/asymptotics.hpp"
#include "minorclass/classes.hpp"
#include "minorclass/dist.hpp"
#include "minorclass/graph6.hpp"
#include "minorclass/sampler.hpp"
#include "minorclass/series.hpp"

namespace py = pybind11;
using namespace minorclass;

namespace {

py::object big_int(const std::string& decimal) {
  return py::module_::import("builtins").attr("int")(decimal);
}

py::list counts(const std::string& token, int max_n, bool connected) {
  if (max_n < 0 || max_n > 2000) throw std::invalid_argument("max_n out of range");
  ClassId id = ClassId::parse(token);
  Series<Rational> s = connected ? connected_egf(id, max_n) : graph_egf(id, max_n);
  py::list out;
  for (int n = 0; n <= max_n; ++n)
    out.append(big_int(egf_count(s[n], static_cast<unsigned long>(n)).get_str()));
  return out;
}

py::list distribution(const std::string& token, int n, const std::string& stat) {
  ClassId id = ClassId::parse(token);
  ExactDistribution d = stat == "N"   ? components_dist(id, n)
                        : stat == "S" ? root_component_dist(id, n)
                        : stat == "L" ? largest_component_dist(id, n)
                                      : throw std::invalid_argument("stat must be N, S or L");
  py::list out;
  for (size_t i = 0; i < d.probs.size(); ++i)
    out.append(py::make_tuple(d.lo + static_cast<int>(i),
                              rational_string(d.probs[i]), to_double(d.probs[i])));
  return out;
}

bool membership_py(const std::string& token, int n,
                   const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> zero_based;
  zero_based.reserve(edges.size());
  for (auto [u, v] : edges) zero_based.emplace_back(u - 1, v - 1);
  return membership(ClassId::parse(token), LabelledGraph::from_edges(n, zero_based));
}

std::vector<std::string> sample_g6(const std::string& token, double x,
                                   std::uint64_t seed, long samples, bool x_is_t) {
  SamplerConfig cfg;
  cfg.klass = ClassId::parse(token);
  cfg.x = x;
  cfg.x_is_t = x_is_t;
  cfg.seed = seed;
  BoltzmannSampler sampler(cfg);
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(samples));
  for (long i = 0; i < samples; ++i) out.push_back(graph6_encode(sampler.sample()));
  return out;
}

double hayman_log(const std::string& token, long n) {
  return saddle_point(ClassId::parse(token), n).log_estimate.to_double();
}

double closed_form_log(const std::string& token, long n, bool connected) {
  return log(closed_form_egf(ClassId::parse(token), n, connected)).to_double();
}

py::tuple connectivity(const std::string& token) {
  ConnectivityLimit lim = connectivity_limit(ClassId::parse(token));
  return py::make_tuple(lim.positive, lim.positive ? lim.value.to_double() : 0.0,
                        lim.decay);
}

py::tuple component_prediction(const std::string& token, long n) {
  ComponentMomentPrediction p = component_count_prediction(ClassId::parse(token), n);
  return py::make_tuple(p.mean.to_double(), p.variance.to_double());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minor-closed labelled graph classes: exact and asymptotic toolkit";
  m.def("counts", &counts, py::arg("klass"), py::arg("max_n"),
        py::arg("connected") = false,
        "counting sequence a_0..a_max_n (c_n with connected=True)");
  m.def("distribution", &distribution, py::arg("klass"), py::arg("n"),
        py::arg("stat"),
        "exact law of N/S/L at size n as (value, exact, decimal) triples");
  m.def("membership", &membership_py, py::arg("klass"), py::arg("n"),
        py::arg("edges"), "class membership of the graph on vertices 1..n");
  m.def("sample_g6", &sample_g6, py::arg("klass"), py::arg("x"),
        py::arg("seed") = 1, py::arg("samples") = 1, py::arg("x_is_t") = false,
        "Boltzmann samples in graph6 form");
  m.def("hayman_log", &hayman_log, py::arg("klass"), py::arg("n"),
        "log of the saddle-point estimate of a_n/n!");
  m.def("closed_form_log", &closed_form_log, py::arg("klass"), py::arg("n"),
        py::arg("connected") = false,
        "log of the printed leading-term formula for a_n/n! or c_n/n!");
  m.def("connectivity", &connectivity, py::arg("klass"),
        "(has_positive_limit, value, decay) for P(G_n connected)");
  m.def("component_prediction", &component_prediction, py::arg("klass"),
        py::arg("n"), "(mean, variance) prediction for the component count");
  m.def("pd_rho", &pd_rho, py::arg("x"), py::arg("step") = 1e-4,
        "delay-equation limit of P(L_n < x n)");
  m.def("gumbel_cdf", &gumbel_cdf, py::arg("x"),
        "largest-path-component Gumbel limit CDF");
  m.def("set_precision", &Real::set_precision, py::arg("bits"),
        "working precision of the floating backend");
}
