#include "sepforest/ends.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sepforest/connectivity.hpp"

namespace sepforest {

namespace {

// Annulus components at the given inner radius inside the radius-R ball,
// restricted to those reaching the outer sphere.
std::vector<EndApprox> annulus_components(const Ball& truncation, Vertex base,
                                          int inner, int margin) {
  const Graph& t = truncation.graph;
  auto dist = bfs_distances(t, base);
  std::vector<Vertex> annulus;
  for (std::size_t i = 0; i < t.vertex_count(); ++i)
    if (dist[i] >= inner) annulus.push_back(t.vertices()[i]);
  std::set<Vertex> sphere(truncation.sphere.begin(), truncation.sphere.end());

  std::vector<EndApprox> out;
  for (const auto& comp : connected_components(t.induced(annulus))) {
    EndApprox e;
    e.radius = inner;
    e.margin = margin;
    e.component = comp;
    e.id = comp.front();
    for (Vertex v : comp)
      if (sphere.count(v)) e.outer_boundary.push_back(v);
    if (!e.outer_boundary.empty()) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const EndApprox& a, const EndApprox& b) { return a.id < b.id; });
  return out;
}

}  // namespace

std::vector<EndApprox> end_spectrum(const LazyGraph& g, int radius, int margin) {
  if (radius < 1) throw std::invalid_argument("radius must be positive");
  if (margin < 1) throw std::invalid_argument("margin must be positive");
  Ball t = ball(g, g.basepoint(), radius + margin);
  return annulus_components(t, g.basepoint(), radius, margin);
}

std::vector<std::size_t> refinement_links(const LazyGraph& g, int radius,
                                          int margin) {
  if (radius < 2) throw std::invalid_argument("radius must be at least 2");
  Ball t = ball(g, g.basepoint(), radius + margin);
  auto fine = annulus_components(t, g.basepoint(), radius, margin);
  auto coarse = annulus_components(t, g.basepoint(), radius - 1, margin + 1);
  std::vector<std::size_t> links;
  for (const auto& f : fine) {
    bool found = false;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      if (std::binary_search(coarse[i].component.begin(),
                             coarse[i].component.end(), f.id)) {
        links.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("refinement target missing");
  }
  return links;
}

bool separates_end_pair(const LazyGraph& g, const Separation& sep,
                        const EndApprox& e1, const EndApprox& e2) {
  if (e1.radius != e2.radius || e1.margin != e2.margin)
    throw std::invalid_argument("end approximations at different radii");
  if (e1.id == e2.id)
    throw std::invalid_argument("end approximations coincide");

  Ball t = ball(g, g.basepoint(), e1.radius + e1.margin);
  auto dist = bfs_distances(t.graph, g.basepoint());
  for (Vertex v : sep.adhesion) {
    if (!t.graph.has_vertex(v) || dist[t.graph.index_of(v)] > e1.radius - 1)
      throw std::invalid_argument(
          "separation not contained in truncation interior");
  }
  auto check = validate_separation(t.graph, sep.adhesion, sep.cut);
  if (!check.ok)
    throw std::invalid_argument("invalid separation on truncation: " +
                                check.violation);

  BoolFn f = side_indicator(t.graph, check.separation);
  return f.value_at(e1.id) != f.value_at(e2.id);
}

AccessibilityCut accessibility_cut(const LazyGraph& g, const EndApprox& e1,
                                   const EndApprox& e2, int truncation_radius) {
  if (e1.radius != e2.radius)
    throw std::invalid_argument("end approximations at different radii");
  if (e1.id == e2.id)
    throw std::invalid_argument("end approximations coincide");
  if (truncation_radius < e1.radius + e1.margin)
    throw std::invalid_argument("truncation smaller than the approximations");

  Ball t = ball(g, g.basepoint(), truncation_radius);
  int margin = truncation_radius - e1.radius;
  auto extended = annulus_components(t, g.basepoint(), e1.radius, margin);

  const EndApprox* c1 = nullptr;
  const EndApprox* c2 = nullptr;
  for (const auto& e : extended) {
    if (std::binary_search(e.component.begin(), e.component.end(), e1.id))
      c1 = &e;
    if (std::binary_search(e.component.begin(), e.component.end(), e2.id))
      c2 = &e;
  }
  if (!c1 || !c2) throw std::runtime_error("end approximation vanished");

  AccessibilityCut res;
  if (c1 == c2) {
    res.status = CutStatus::Merged;
    return res;
  }
  auto cut = min_edge_cut_between(t.graph, c1->outer_boundary,
                                  c2->outer_boundary);
  res.value = cut.value;
  res.cut = cut.cut_edges;
  return res;
}

bool thick_end_estimate(const LazyGraph& g, const EndApprox& e, int m,
                        int truncation_radius) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (truncation_radius < e.radius + e.margin)
    throw std::invalid_argument("truncation smaller than the approximation");

  Ball t = ball(g, g.basepoint(), truncation_radius);
  int margin = truncation_radius - e.radius;
  auto extended = annulus_components(t, g.basepoint(), e.radius, margin);
  for (const auto& c : extended) {
    if (!std::binary_search(c.component.begin(), c.component.end(), e.id))
      continue;
    auto dist = bfs_distances(t.graph, g.basepoint());
    std::vector<Vertex> inner;
    for (Vertex v : c.component)
      if (dist[t.graph.index_of(v)] == e.radius) inner.push_back(v);
    if (inner.empty() || c.outer_boundary.empty()) return false;
    Graph sub = t.graph.induced(c.component);
    return max_vertex_disjoint_paths(sub, inner, c.outer_boundary) >= m;
  }
  throw std::runtime_error("end approximation vanished");
}

}  // namespace sepforest
