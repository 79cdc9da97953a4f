#pragma once

#include <string>
#include <vector>

#include "sepforest/graph.hpp"

namespace sepforest {

// A separation (S, B): a finite adhesion set S together with a cut B inside
// the boundary of S. B must be closed component-wise: whenever an edge of
// the boundary leads into a component of G\S already reached by B, that edge
// belongs to B too.
struct Separation {
  std::vector<Vertex> adhesion;  // S, sorted
  std::vector<Edge> cut;         // B, sorted, normalized

  int order() const { return static_cast<int>(adhesion.size()); }

  auto operator<=>(const Separation&) const = default;
};

struct SeparationValidation {
  bool ok = false;
  Separation separation;
  std::string violation;  // names the violating edge or condition when !ok
};

SeparationValidation validate_separation(const Graph& g,
                                         const std::vector<Vertex>& s,
                                         const std::vector<Edge>& b);

// (S, B) -> (S, boundary(S) \ B). An involution.
Separation complement(const Graph& g, const Separation& sep);

struct SidePair {
  Graph a1;  // G[S + components reached by B]
  Graph a2;  // everything else, including S
};

SidePair sides(const Graph& g, const Separation& sep);

// Vertex sets of the two sides, cheaper than materializing subgraphs.
struct SideVertexSets {
  std::vector<Vertex> a1, a2;  // sorted
};

SideVertexSets side_vertex_sets(const Graph& g, const Separation& sep);

// Proper: G\S is disconnected and B is a non-empty proper subset of the
// boundary of S.
bool is_proper(const Graph& g, const Separation& sep);

// Partial order: sides nest (first sides contained, second sides reversed).
// Containment is non-strict, so leq is reflexive.
bool leq(const Graph& g, const Separation& s1, const Separation& s2);

// Nested: s1 comparable with s2 or with its complement.
bool nested(const Graph& g, const Separation& s1, const Separation& s2);

// All separations of order <= max_order in canonical order (adhesion
// lexicographic, then cut). Only tight separations are emitted: B is
// non-empty and every adhesion vertex meets an edge of B, which makes the
// enumeration the exact image of the indicator-function correspondence.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order);

// The proper members of enumerate_separations(g, max_order).
std::vector<Separation> proper_separations(const Graph& g, int max_order);

// Builds the separation with sides (G[U1], G[U2]) from a vertex cover pair:
// S = U1 and U2's intersection, B = boundary edges inside G[U1].
Separation from_vertex_partition(const Graph& g, const std::vector<Vertex>& u1,
                                 const std::vector<Vertex>& u2);

// Text form "S: 1,2 | B: (1,3),(2,4)".
std::string emit_separation(const Separation& sep);
Separation parse_separation(const std::string& text);

}  // namespace sepforest
