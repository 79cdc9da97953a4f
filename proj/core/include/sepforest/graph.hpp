#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepforest {

using Vertex = std::int64_t;

// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Finite simple undirected graph over non-negative integer vertex ids.
// Immutable after construction; all derived graphs are new values.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list plus optional isolated vertices.
  // Rejects self-loops and negative ids; duplicate edges collapse.
  static Graph from_edges(const std::vector<Edge>& edges,
                          const std::vector<Vertex>& extra_vertices = {});

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  // Position of v in the sorted vertex list; throws on unknown vertex.
  std::size_t index_of(Vertex v) const;

  // Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  Graph induced(const std::vector<Vertex>& subset) const;
  Graph remove_vertices(const std::vector<Vertex>& subset) const;
  Graph remove_edges(const std::vector<Edge>& subset) const;

  // Edges with exactly one endpoint in the set A.
  std::vector<Edge> boundary(const std::vector<Vertex>& a) const;

  bool operator==(const Graph& other) const {
    return verts_ == other.verts_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> verts_;               // sorted, unique
  std::vector<Edge> edges_;                 // sorted, normalized
  std::vector<std::vector<Vertex>> adj_;    // parallel to verts_, each sorted
};

// Partition of the vertices into connected components; classes are sorted
// internally and ordered by their least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// BFS distance from src to every reachable vertex, -1 when unreachable,
// indexed like g.vertices().
std::vector<long long> bfs_distances(const Graph& g, Vertex src);

struct Ball {
  Graph graph;                  // induced subgraph on distance <= r
  std::vector<Vertex> sphere;   // vertices at distance exactly r, sorted
};

Ball ball(const Graph& g, Vertex v, int radius);

// Path, cycle, or finite prefix of a ray, as an explicit vertex sequence.
struct PathWitness {
  enum class Kind { Path, Cycle, RayPrefix };
  Kind kind = Kind::Path;
  std::vector<Vertex> vertices;
  int certified_radius = 0;  // RayPrefix only: radius it was certified to

  // Consecutive vertices adjacent, internal vertices distinct, cycles close.
  bool valid_in(const Graph& g) const;
};

// Edge-list text format: '#' comment lines, then one "u v" pair per line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string emit_edge_list(const Graph& g);

}  // namespace sepforest
