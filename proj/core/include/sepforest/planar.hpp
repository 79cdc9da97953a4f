#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sepforest/graph.hpp"

namespace sepforest {

// Per-vertex cyclic order of neighbors, stored as the successor list
// rotated to start at the least neighbor so equality is plain map equality.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::map<Vertex, std::vector<Vertex>> orders);

  const std::map<Vertex, std::vector<Vertex>>& orders() const { return orders_; }
  const std::vector<Vertex>& at(Vertex v) const;

  // Neighbor following u in v's cyclic order.
  Vertex successor(Vertex v, Vertex u) const;

  RotationSystem reversed() const;
  RotationSystem reversed_at(Vertex v) const;

  // Each cyclic order must be a permutation of the exact neighbor set.
  bool consistent_with(const Graph& g) const;

  bool operator==(const RotationSystem&) const = default;

  std::string serialize() const;  // one "v: n1 n2 ... nk" line per vertex
  static RotationSystem parse(const std::string& text);

  // Boundary form: cyclic orders given as ordered triples [x,y,z]; the
  // successor representation is reconstructed and every triple checked.
  static RotationSystem from_triples(
      const std::map<Vertex, std::vector<std::array<Vertex, 3>>>& triples,
      const Graph& g);

 private:
  std::map<Vertex, std::vector<Vertex>> orders_;
};

// Closed walk of a face traversal; vertices[i] -> vertices[i+1] are the
// directed edges, wrapping around.
struct FaceWalk {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
};

// Complete face partition of the directed edges under next-edge traversal.
// Requires g connected and the rotation consistent with g. The rotation is
// spherical iff |V| - |E| + |F| = 2.
std::vector<FaceWalk> faces(const Graph& g, const RotationSystem& rs);

bool spherical(const Graph& g, const RotationSystem& rs);

enum class KuratowskiKind { K5, K3_3 };

struct PlanarityResult {
  bool planar = false;
  RotationSystem rotation;  // realizing rotation when planar
  Graph witness;            // K5 or K3,3 subdivision when not
  KuratowskiKind kind = KuratowskiKind::K5;
};

PlanarityResult is_planar(const Graph& g);

// Simple generating family of cycles, stored as sorted edge sets.
struct TwoBasis {
  std::vector<std::vector<Edge>> cycles;
};

// Bounded faces of a planar rotation (all faces minus the outer one, which
// is the face through the least directed edge). Requires g 2-connected and
// planar; the result has exactly |E| - |V| + 1 members.
TwoBasis two_basis(const Graph& g);

struct TwoBasisCheck {
  bool ok = false;
  std::string violation;
};

// Simplicity by edge counting, generation by F2 rank against the cycle
// space, and every member must be a simple cycle.
TwoBasisCheck verify_two_basis(const Graph& g, const TwoBasis& basis);

// Equal or globally reversed.
bool combinatorially_equivalent(const RotationSystem& a, const RotationSystem& b);

// The canonical one of the two spherical rotation systems of a 3-connected
// planar graph: lexicographically least serialization.
RotationSystem rotation_choice(const Graph& g);

// Edge -> bit map deciding whether the two endpoint rotations come from the
// same spherical embedding, evaluated through the canonical pair of cycles
// through the edge that meet only at its endpoints.
struct Cocycle {
  std::map<Edge, int> value;
  int at(Vertex a, Vertex b) const { return value.at(make_edge(a, b)); }
};

// choices maps each vertex to one of its two spherical rotations.
Cocycle spherical_cocycle(const Graph& g,
                          const std::map<Vertex, std::vector<Vertex>>& choices);

struct DoubleCover {
  Graph graph;            // on ids 2x+i for (x, i), i in {0,1}
  RotationSystem rotation;
  static Vertex lift(Vertex x, int i) { return 2 * x + i; }
  static Vertex project(Vertex lifted) { return lifted / 2; }
  static int sheet(Vertex lifted) { return static_cast<int>(lifted % 2); }
};

// 2-to-1 cover twisting along the cocycle: (x,i) ~ (y,j) iff xy is an edge
// and i = c(x,y) + j. Sheet 0 keeps each chosen rotation, sheet 1 reverses
// it; the lifted system is coherent on every component.
DoubleCover double_cover(const Graph& g,
                         const std::map<Vertex, std::vector<Vertex>>& choices,
                         const Cocycle& c);

}  // namespace sepforest
