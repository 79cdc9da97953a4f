#pragma once

#include "sepforest/minor.hpp"
#include "sepforest/treedecomp.hpp"

namespace sepforest {

// A level point (x, t): base vertex x inside the bag of tree node t.
struct LevelPoint {
  Vertex base = -1;
  Vertex node = -1;
  auto operator<=>(const LevelPoint&) const = default;
};

// The level space of a tree decomposition: all (x, t) with x in the bag of
// t, identified with ids 0..N-1 in (base, node) order. The projection to
// the base vertex is finite-to-one.
struct LevelSpace {
  std::vector<LevelPoint> points;  // sorted
  TreeDecomposition td;

  Vertex id_of(const LevelPoint& p) const;
  const LevelPoint& point(Vertex id) const;
  std::size_t size() const { return points.size(); }
};

LevelSpace level_space(const Graph& g, const TreeDecomposition& td);

// Within-level edges inherited from the base graph.
Graph levels_graph(const Graph& g, const LevelSpace& z);

// Within-level edges between points whose base vertices share some other
// bag; components of levels_graph plus these are the torsos.
std::vector<Edge> torso_augmentation(const LevelSpace& z);

// Connected pieces of the far side of a separation, one per adhesion
// vertex, produced by peeling in id order: each piece removes the earlier
// pieces and withholds the later adhesion vertices.
struct AdhesionPieces {
  Separation sep;
  std::map<Vertex, std::vector<Vertex>> piece;  // adhesion vertex -> vertices
};

AdhesionPieces adhesion_pieces(const Graph& g, const Separation& sep);

// Within-level edges between points whose assembled pieces are joined by a
// base edge; components of levels_graph plus these are base-graph minors.
struct MinorAugmentation {
  std::vector<Edge> edges;                       // on level point ids
  std::map<Vertex, std::vector<Vertex>> pieces;  // point id -> piece union
};

MinorAugmentation minor_augmentation(
    const Graph& g, const LevelSpace& z,
    const std::map<Vertex, std::vector<Separation>>& node_members);

// Minor model of one component of levels_graph + augmentation edges,
// ready for verify_minor_model against the base graph.
struct ComponentMinor {
  Graph pattern;  // the component, relabeled by level point id
  MinorModel model;
};

ComponentMinor component_minor_model(const Graph& level_union,
                                     const std::vector<Vertex>& component,
                                     const MinorAugmentation& aug,
                                     const Graph& base);

// Cross-level edges (x,t)-(x,t') along tree edges; x lies in the adhesion.
std::vector<Edge> cross_level_edges(const LevelSpace& z);

// Spanning tree of each level of the given within-level graph, rooted at
// the least point. Throws when a level is disconnected.
std::vector<Edge> level_forests(const Graph& within_level, const LevelSpace& z);

// Per-level forests plus one canonical cross-level edge per tree edge (the
// one at the least adhesion vertex). Acyclic and spanning on each lifted
// component.
Graph glue_treeing(const LevelSpace& z, const std::vector<Edge>& forests,
                   const std::vector<Edge>& cross_edges);

// Projects a spanning tree of the lift to an acyclic graph on the base:
// restrict to the least-node section, contract tree paths between section
// points, then map down.
Graph project_to_base(const Graph& tree_on_lift, const LevelSpace& z);

}  // namespace sepforest
