#include "sepforest/minor.hpp"

#include <set>

namespace sepforest {

bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model) {
  // Branch sets: total, non-empty, disjoint, connected.
  std::set<Vertex> used;
  for (Vertex hv : h.vertices()) {
    auto it = model.branch_sets.find(hv);
    if (it == model.branch_sets.end() || it->second.empty()) return false;
    for (Vertex gv : it->second) {
      if (!g.has_vertex(gv)) return false;
      if (!used.insert(gv).second) return false;
    }
    if (!is_connected(g.induced(it->second))) return false;
  }

  // Edge map: total, injective, images are g-edges.
  std::set<Edge> images;
  for (const auto& he : h.edges()) {
    auto it = model.edge_map.find(he);
    if (it == model.edge_map.end()) return false;
    Edge ge = make_edge(it->second.first, it->second.second);
    if (!g.has_edge(ge.first, ge.second)) return false;
    if (!images.insert(ge).second) return false;
  }

  auto branch_of = [&](Vertex gv) -> Vertex {
    for (const auto& [hv, set] : model.branch_sets)
      for (Vertex x : set)
        if (x == gv) return hv;
    return -1;
  };

  for (const auto& he : h.edges()) {
    Edge ge = make_edge(model.edge_map.at(he).first, model.edge_map.at(he).second);
    Vertex b1 = branch_of(ge.first), b2 = branch_of(ge.second);
    // No image edge inside a branch set.
    if (b1 == b2 && b1 != -1) return false;
    // Endpoints land in the branch sets of the h-edge's endpoints.
    if (!((b1 == he.first && b2 == he.second) ||
          (b1 == he.second && b2 == he.first)))
      return false;
  }
  return true;
}

}  // namespace sepforest
