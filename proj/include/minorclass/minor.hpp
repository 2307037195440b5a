// minor.hpp -- minor containment by branch-set search, and the small
// excluded-minor patterns used across the class catalogue.
#pragma once

#include <string>
#include <vector>

#include "minorclass/graph.hpp"

namespace minorclass {

// True when h is a minor of g: disjoint connected branch sets in g, one per
// vertex of h, with an edge of g between branch sets whenever h has the
// corresponding edge.  Exhaustive search; host graphs are capped at 10
// vertices and patterns at 7.
bool has_minor(const LabelledGraph& g, const LabelledGraph& h);

namespace patterns {
LabelledGraph triangle();
LabelledGraph diamond();             // K4 minus an edge
LabelledGraph bowtie();              // two triangles sharing one vertex
LabelledGraph k4();
LabelledGraph spoon(int k);          // triangle with a handle of k edges
LabelledGraph star(int rays);        // K_{1,rays}
LabelledGraph path_graph(int n);
LabelledGraph double_star();         // two adjacent degree-3 centers, 4 leaves
LabelledGraph spider_three_legs2();  // center with three legs of length 2
}  // namespace patterns

// AHU string, an isomorphism key for trees.
std::string tree_iso_key(const LabelledGraph& t);

// All unlabelled trees on n vertices (n <= 8), one representative each.
std::vector<LabelledGraph> trees_on(int n);

}  // namespace minorclass
