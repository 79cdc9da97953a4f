#pragma once

#include <vector>

#include "sepforest/separation.hpp"

namespace sepforest {

// A symmetric family of proper separations over one graph, stored in
// canonical order. The nested flag records a verified pairwise check.
struct SeparationSystem {
  std::vector<Separation> members;  // sorted, closed under complement
  bool nested = false;

  bool contains(const Separation& sep) const;
  std::size_t size() const { return members.size(); }

  bool operator==(const SeparationSystem& other) const {
    return members == other.members;
  }
};

// Symmetric closure of the given proper separations. Throws naming the
// culprit if a member is improper; verifies nestedness of the result.
SeparationSystem make_system(const std::vector<Separation>& seps,
                             const Graph& g);

struct BetweennessReport {
  bool holds = false;       // every strict pair has finitely many between
  int max_between = 0;      // largest interval cardinality observed
  int longest_chain = 0;    // longest strict chain in the order
};

// Finite-betweenness check for a nested system: decidable exhaustively on
// finite graphs, where it always holds; the report carries the chain
// structure for truncation sweeps.
BetweennessReport check_finite_betweenness(const SeparationSystem& sys,
                                           const Graph& g);

}  // namespace sepforest
