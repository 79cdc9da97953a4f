#pragma once

#include "sepforest/treedecomp.hpp"

namespace sepforest {

enum class TorsoClass { ThreeConnected, Cycle, Edge };

std::string to_string(TorsoClass c);

// All proper separations of order exactly 2, canonical order.
// Requires a 2-connected graph.
std::vector<Separation> two_separations(const Graph& g);

// The members nested with every member of the input.
std::vector<Separation> totally_nested(const Graph& g,
                                       const std::vector<Separation>& seps);

// Decomposition along the totally nested 2-separations; torsos are
// 3-connected or cycles (single edges for 2-vertex parts).
TreeDecomposition tutte_decomposition(const Graph& g);

// ThreeConnected / Cycle / Edge; throws when the torso fits no class,
// which signals a pipeline bug. Triangles classify as Cycle.
TorsoClass classify_torso(const Torso& t);

struct BlockDecomposition {
  std::vector<Graph> blocks;  // maximal 2-connected subgraphs, bridges,
                              // and isolated vertices, canonical order
  std::vector<Vertex> cutvertices;
};

BlockDecomposition block_decomposition(const Graph& g);

// Splits at cutvertices first, then refines every block by its Tutte
// decomposition; works for any finite graph.
TreeDecomposition tutte_blockwise(const Graph& g);

}  // namespace sepforest
