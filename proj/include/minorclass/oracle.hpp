// oracle.hpp -- ground truth by exhaustion: enumerate every labelled graph
// on n vertices, filter by membership, tally counts and the exact component
// statistics.  Independent of the generating-function code paths.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "minorclass/classes.hpp"
#include "minorclass/graph.hpp"
#include "minorclass/rational.hpp"

namespace minorclass {

// Visit all 2^{n(n-1)/2} labelled graphs on n vertices, 1 <= n <= 8.
void for_each_graph(int n, const std::function<void(const LabelledGraph&)>& fn);

struct OracleCounts {
  Integer graphs;     // members on n vertices
  Integer connected;  // connected members
};

// Counts via the structural membership test, cross-checked against the
// excluded-minor route graph by graph; throws if the two ever disagree.
// Exhaustive, so n is capped (default guard 6, hard limit 8).
OracleCounts count_class(const ClassId& id, int n, int guard = 6);

struct OracleDistributions {
  int n = 0;
  Integer total;                  // members on n vertices
  std::vector<Integer> by_components;      // index i: members with i components (0..n)
  std::vector<Integer> by_root_component;  // index k: vertex 0 in a k-vertex component
  std::vector<Integer> by_largest;         // index k: largest component has k vertices
};

OracleDistributions exhaustive_distributions(const ClassId& id, int n, int guard = 6);

}  // namespace minorclass
