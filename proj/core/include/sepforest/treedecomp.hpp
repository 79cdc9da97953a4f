#pragma once

#include <map>
#include <string>
#include <vector>

#include "sepforest/system.hpp"

namespace sepforest {

struct TreeDecomposition {
  Graph tree;                                  // decomposition nodes
  std::map<Vertex, std::vector<Vertex>> bags;  // node -> sorted vertex set
  Graph base;
};

// Tree decomposition built from a nested separation system with the
// finite-betweenness property, together with the separation classes that
// became each node. Complement-predecessor pairs are merged into classes;
// bags are intersections of first sides over a class. An empty system per
// base component yields the trivial one-bag decomposition.
struct SystemDecomposition {
  TreeDecomposition td;
  std::map<Vertex, std::vector<Separation>> node_members;
};

SystemDecomposition decompose_system(const SeparationSystem& sys, const Graph& g);

inline TreeDecomposition tree_decomposition_from_system(
    const SeparationSystem& sys, const Graph& g) {
  return decompose_system(sys, g).td;
}

// The two separations each tree edge induces: adhesion = bag intersection,
// cuts split by the side of the tree the outer endpoint's bags live on.
// Canonically ordered and deduplicated.
std::vector<Separation> induced_separations(const TreeDecomposition& td);

// induced_separations wrapped as a system (requires all members proper).
SeparationSystem induced_system(const TreeDecomposition& td);

struct Torso {
  Graph graph;
  Vertex part;                      // the tree node
  std::vector<Edge> virtual_edges;  // pairs shared with a neighboring bag
};

std::vector<Torso> torsos(const TreeDecomposition& td);

int width(const TreeDecomposition& td);

struct TdValidation {
  bool ok = false;
  std::string violated_axiom;  // "vertex-cover", "edge-cover", ...
};

TdValidation validate_tree_decomposition(const Graph& g,
                                         const TreeDecomposition& td);

// PACE-style text format: "s td <#bags> <max_bag_size> <#vertices>",
// bag lines "b <id> v1 v2 ...", then tree edges "i j" (ids 1-based).
std::string emit_td(const TreeDecomposition& td);
TreeDecomposition parse_td(const std::string& text, const Graph& base);

}  // namespace sepforest
