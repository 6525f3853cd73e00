#pragma once

#include <string>

#include "isolat/poset.hpp"

namespace isolat {

// Graphviz digraph of the Hasse diagram, drawn bottom to top with one
// rank=same group per rank level.
std::string export_dot(const Poset& p, const std::string& graph_name = "poset");

}  // namespace isolat
