#pragma once

#include <map>
#include <vector>

#include "sepforest/graph.hpp"

namespace sepforest {

// A candidate witness that h is a minor of g: one branch set per h-vertex
// and one g-edge per h-edge.
struct MinorModel {
  std::map<Vertex, std::vector<Vertex>> branch_sets;
  std::map<Edge, Edge> edge_map;
};

// Checks the four minor-model conditions: branch sets are non-empty,
// pairwise disjoint and connected in g; the edge map is injective; no image
// edge lies inside a branch set; and the image of an h-edge joins the branch
// sets of its endpoints. Violations return false, never throw.
bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model);

}  // namespace sepforest
