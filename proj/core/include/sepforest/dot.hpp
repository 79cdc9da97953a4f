#pragma once

#include <string>

#include "sepforest/levels.hpp"
#include "sepforest/treedecomp.hpp"

namespace sepforest {

std::string export_dot(const Graph& g);
std::string export_dot(const TreeDecomposition& td);

// Lift graph with level points colored by their tree node.
std::string export_dot_levels(const LevelSpace& z, const Graph& lift);

}  // namespace sepforest
