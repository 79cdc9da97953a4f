#pragma once

#include "sepforest/boolring.hpp"
#include "sepforest/lazy.hpp"

namespace sepforest {

// Finite stand-in for an end: a component of the annulus between radius r
// and r+margin around the basepoint that still reaches the outer sphere.
// Components that die at larger radii are the documented failure mode of
// this proxy.
struct EndApprox {
  int radius = 0;  // annulus keeps vertices at distance >= radius
  int margin = 0;  // outer sphere at radius + margin
  Vertex id = -1;  // least vertex of the component
  std::vector<Vertex> component;       // sorted
  std::vector<Vertex> outer_boundary;  // component's outer-sphere vertices
};

// Deterministic list ordered by component id. margin >= 1.
std::vector<EndApprox> end_spectrum(const LazyGraph& g, int radius,
                                    int margin = 2);

// For each approximation at radius r, the index of the radius r-1
// approximation it refines (computed on the common truncation).
std::vector<std::size_t> refinement_links(const LazyGraph& g, int radius,
                                          int margin = 2);

// Do the two approximated ends fall on different sides of the separation?
// The separation must sit strictly inside the ball the annulus removes.
bool separates_end_pair(const LazyGraph& g, const Separation& sep,
                        const EndApprox& e1, const EndApprox& e2);

enum class CutStatus { Ok, Merged };

struct AccessibilityCut {
  CutStatus status = CutStatus::Ok;
  int value = 0;
  std::vector<Edge> cut;
};

// Exact min edge cut between the outer boundaries of the two end
// approximations inside the radius-R truncation. Reports a merge when the
// approximations fall into one component at that radius.
AccessibilityCut accessibility_cut(const LazyGraph& g, const EndApprox& e1,
                                   const EndApprox& e2, int truncation_radius);

// True iff m vertex-disjoint paths run from the inner sphere of the
// approximation's annulus out to the truncation sphere inside its component.
bool thick_end_estimate(const LazyGraph& g, const EndApprox& e, int m,
                        int truncation_radius);

}  // namespace sepforest
