#include "minorclass/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "minorclass/minor.hpp"

namespace minorclass {

void for_each_graph(int n, const std::function<void(const LabelledGraph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("exhaustive enumeration covers 1 <= n <= 8");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    fn(LabelledGraph::from_mask(n, mask));
}

namespace {

void check_guard(int n, int guard) {
  if (guard > 8) throw std::invalid_argument("oracle guard beyond the hard cap of 8");
  if (n < 1 || n > guard)
    throw std::invalid_argument("oracle n out of range; raise the guard explicitly for 7..8");
}

}  // namespace

OracleCounts count_class(const ClassId& id, int n, int guard) {
  check_guard(n, guard);
  OracleCounts c{0, 0};
  for_each_graph(n, [&](const LabelledGraph& g) {
    bool structural = membership(id, g);
    bool by_minors = membership_by_minors(id, g);
    if (structural != by_minors)
      throw std::logic_error("membership routes disagree on " + id.token());
    if (!structural) return;
    c.graphs += 1;
    if (g.is_connected()) c.connected += 1;
  });
  return c;
}

OracleDistributions exhaustive_distributions(const ClassId& id, int n, int guard) {
  check_guard(n, guard);
  OracleDistributions d;
  d.n = n;
  d.total = 0;
  d.by_components.assign(static_cast<size_t>(n) + 1, 0);
  d.by_root_component.assign(static_cast<size_t>(n) + 1, 0);
  d.by_largest.assign(static_cast<size_t>(n) + 1, 0);
  for_each_graph(n, [&](const LabelledGraph& g) {
    if (!membership(id, g)) return;
    d.total += 1;
    auto ids = g.component_ids();
    int ncomp = 0;
    for (int x : ids) ncomp = std::max(ncomp, x);
    ++ncomp;
    std::vector<int> sizes(static_cast<size_t>(ncomp), 0);
    for (int v = 0; v < n; ++v) ++sizes[static_cast<size_t>(ids[static_cast<size_t>(v)])];
    int largest = 0;
    for (int s : sizes) largest = std::max(largest, s);
    d.by_components[static_cast<size_t>(ncomp)] += 1;
    d.by_root_component[static_cast<size_t>(sizes[static_cast<size_t>(ids[0])])] += 1;
    d.by_largest[static_cast<size_t>(largest)] += 1;
  });
  return d;
}

}  // namespace minorclass
