#pragma once

#include <vector>

#include "sepforest/graph.hpp"

namespace sepforest {

struct DisjointPathsResult {
  bool success = false;
  std::vector<PathWitness> paths;  // k internally disjoint u-v paths on success
  // On failure with u,v non-adjacent: a vertex cut of size < k separating them.
  bool cut_available = false;
  std::vector<Vertex> cut;
};

// Either k pairwise internally disjoint u-v paths, or (for non-adjacent u,v)
// a separating vertex cut smaller than k. Unit-capacity flow on the
// vertex-split network.
DisjointPathsResult internally_disjoint_paths(const Graph& g, Vertex u,
                                              Vertex v, int k);

int max_internally_disjoint_paths(const Graph& g, Vertex u, Vertex v);

// True iff |V| > k and no vertex set smaller than k disconnects g.
// Requires g connected and k >= 1.
bool is_k_connected(const Graph& g, int k);

struct EdgeCut {
  int value = 0;
  std::vector<Edge> cut_edges;
};

// Minimum edge cut separating the source set from the sink set.
EdgeCut min_edge_cut_between(const Graph& g, const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks);

// Maximum number of vertex-disjoint paths (disjoint including endpoints)
// from the source set to the sink set.
int max_vertex_disjoint_paths(const Graph& g, const std::vector<Vertex>& sources,
                              const std::vector<Vertex>& sinks);

}  // namespace sepforest
