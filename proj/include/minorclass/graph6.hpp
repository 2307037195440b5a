// graph6.hpp -- the standard graph6 text encoding of undirected graphs.
#pragma once

#include <string>

#include "minorclass/graph.hpp"

namespace minorclass {

std::string graph6_encode(const LabelledGraph& g);
LabelledGraph graph6_decode(const std::string& s);

}  // namespace minorclass
