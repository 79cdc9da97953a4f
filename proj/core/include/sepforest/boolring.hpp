#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sepforest/separation.hpp"

namespace sepforest {

// An F2-valued function on the vertices of a fixed graph, stored as its
// sorted support. Functions with small coboundary are the currency here.
struct BoolFn {
  std::vector<Vertex> support;

  bool value_at(Vertex v) const;
  auto operator<=>(const BoolFn&) const = default;
};

BoolFn constant_fn(const Graph& g, bool one);
BoolFn fn_add(const Graph& g, const BoolFn& f, const BoolFn& h);   // pointwise +
BoolFn fn_mul(const BoolFn& f, const BoolFn& h);                   // pointwise *
BoolFn fn_star(const Graph& g, const BoolFn& f);                   // 1 + f

// Edges whose endpoints take different values.
std::vector<Edge> coboundary(const Graph& g, const BoolFn& f);

// The unique function with coboundary B and value 1 on S: the indicator of
// the side away from the cut.
BoolFn side_indicator(const Graph& g, const Separation& sep);

// Inverse direction: B is the coboundary, S the 1-valued endpoints of B.
// Throws for constant functions (empty coboundary).
Separation tight_separation(const Graph& g, const BoolFn& f);

// Nestedness of the sides the two functions describe: comparable supports,
// disjoint supports, or co-disjoint supports whose cut endpoints sit inside
// the other support. Agrees with nestedness of the tight separations.
bool nested_bool_fns(const Graph& g, const BoolFn& f, const BoolFn& h);

// Number of family members taking different values at u and v.
int separating_count(const std::vector<BoolFn>& family, Vertex u, Vertex v);

struct ClosureResult {
  std::vector<BoolFn> elements;  // canonical order
  bool cap_exceeded = false;
  std::size_t partial_size = 0;  // size reached when capped
};

// Least set containing the generators and closed under pointwise + and *.
ClosureResult subring_closure(const Graph& g, const std::vector<BoolFn>& gens,
                              std::size_t cap = 1u << 16);

// Every function with |coboundary| <= max_cut, found by enumerating edge
// subsets as candidate coboundaries. Exact and exhaustive.
std::vector<BoolFn> bounded_coboundary_elements(const Graph& g, int max_cut);

struct ThinCheck {
  bool thin = false;
  int order = 0;                  // |coboundary|
  std::size_t generator_count = 0;  // generators of the order-(n-1) subring
  std::size_t closure_size = 0;     // its closure size; replay to refute
  std::string reason;               // set when not thin
};

// Thin at order n: |coboundary| = n and f is outside the subring generated
// by all elements of coboundary size below n.
ThinCheck is_thin(const Graph& g, const BoolFn& f, int n,
                  std::size_t cap = 1u << 16);

// All elements of the order-n subring that are thin (at their own
// coboundary size) and separate u from v.
std::vector<BoolFn> thin_separating(const Graph& g, int n, Vertex u, Vertex v,
                                    std::size_t cap = 1u << 16);

// Iterative nested extraction: stage n adjoins a greedy maximal family of
// order-n thin separations compatible with everything chosen so far.
// The result is pairwise nested, closed under the side swap that keeps the
// cut (the involution image), and its indicators generate the full order-k
// subring.
std::vector<Separation> nested_thin_generators(const Graph& g, int k,
                                               std::size_t cap = 1u << 16);

}  // namespace sepforest
