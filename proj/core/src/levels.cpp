#include "sepforest/levels.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sepforest {

Vertex LevelSpace::id_of(const LevelPoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p))
    throw std::invalid_argument("unknown level point");
  return static_cast<Vertex>(it - points.begin());
}

const LevelPoint& LevelSpace::point(Vertex id) const {
  if (id < 0 || id >= static_cast<Vertex>(points.size()))
    throw std::invalid_argument("level point id out of range");
  return points[static_cast<std::size_t>(id)];
}

LevelSpace level_space(const Graph& g, const TreeDecomposition& td) {
  auto check = validate_tree_decomposition(g, td);
  if (!check.ok)
    throw std::invalid_argument("invalid tree decomposition: " +
                                check.violated_axiom);
  LevelSpace z;
  z.td = td;
  for (const auto& [node, bag] : td.bags)
    for (Vertex x : bag) z.points.push_back({x, node});
  std::sort(z.points.begin(), z.points.end());
  return z;
}

Graph levels_graph(const Graph& g, const LevelSpace& z) {
  std::vector<Edge> edges;
  std::vector<Vertex> verts;
  for (std::size_t i = 0; i < z.points.size(); ++i)
    verts.push_back(static_cast<Vertex>(i));
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    for (std::size_t j = i + 1; j < z.points.size(); ++j) {
      if (z.points[i].node != z.points[j].node) continue;
      if (g.has_edge(z.points[i].base, z.points[j].base))
        edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
    }
  }
  return Graph::from_edges(edges, verts);
}

std::vector<Edge> torso_augmentation(const LevelSpace& z) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    for (std::size_t j = i + 1; j < z.points.size(); ++j) {
      if (z.points[i].node != z.points[j].node) continue;
      Vertex x = z.points[i].base, y = z.points[j].base;
      for (const auto& [node, bag] : z.td.bags) {
        if (node == z.points[i].node) continue;
        if (std::binary_search(bag.begin(), bag.end(), x) &&
            std::binary_search(bag.begin(), bag.end(), y)) {
          out.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
          break;
        }
      }
    }
  }
  return out;
}

AdhesionPieces adhesion_pieces(const Graph& g, const Separation& sep) {
  auto vs = side_vertex_sets(g, sep);
  AdhesionPieces out;
  out.sep = sep;

  std::set<Vertex> consumed;
  for (std::size_t i = 0; i < sep.adhesion.size(); ++i) {
    Vertex s = sep.adhesion[i];
    // Work inside the second side, minus earlier pieces, withholding the
    // adhesion vertices not yet processed.
    std::set<Vertex> withheld(sep.adhesion.begin() + i + 1, sep.adhesion.end());
    std::vector<Vertex> domain;
    for (Vertex v : vs.a2)
      if (!consumed.count(v) && !withheld.count(v)) domain.push_back(v);
    Graph sub = g.induced(domain);
    if (!sub.has_vertex(s))
      throw std::invalid_argument("adhesion vertex lost during peeling");
    for (const auto& comp : connected_components(sub)) {
      if (std::binary_search(comp.begin(), comp.end(), s)) {
        out.piece[s] = comp;
        consumed.insert(comp.begin(), comp.end());
        break;
      }
    }
  }
  return out;
}

MinorAugmentation minor_augmentation(
    const Graph& g, const LevelSpace& z,
    const std::map<Vertex, std::vector<Separation>>& node_members) {
  MinorAugmentation out;

  std::map<Separation, AdhesionPieces> cache;
  auto pieces_of = [&](const Separation& sep) -> const AdhesionPieces& {
    auto it = cache.find(sep);
    if (it == cache.end())
      it = cache.emplace(sep, adhesion_pieces(g, sep)).first;
    return it->second;
  };

  // Assemble the per-point union: the point itself plus its piece in every
  // class member whose adhesion contains the base vertex.
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    const auto& p = z.points[i];
    std::set<Vertex> acc{p.base};
    auto mem = node_members.find(p.node);
    if (mem != node_members.end()) {
      for (const auto& sep : mem->second) {
        if (!std::binary_search(sep.adhesion.begin(), sep.adhesion.end(),
                                p.base))
          continue;
        const auto& ap = pieces_of(sep);
        const auto& piece = ap.piece.at(p.base);
        acc.insert(piece.begin(), piece.end());
      }
    }
    out.pieces[static_cast<Vertex>(i)] = {acc.begin(), acc.end()};
  }

  for (std::size_t i = 0; i < z.points.size(); ++i) {
    for (std::size_t j = i + 1; j < z.points.size(); ++j) {
      if (z.points[i].node != z.points[j].node) continue;
      Vertex x = z.points[i].base, y = z.points[j].base;
      auto mem = node_members.find(z.points[i].node);
      if (mem == node_members.end()) continue;
      bool share = false;
      for (const auto& sep : mem->second) {
        if (std::binary_search(sep.adhesion.begin(), sep.adhesion.end(), x) &&
            std::binary_search(sep.adhesion.begin(), sep.adhesion.end(), y)) {
          share = true;
          break;
        }
      }
      if (!share) continue;
      const auto& px = out.pieces.at(static_cast<Vertex>(i));
      const auto& py = out.pieces.at(static_cast<Vertex>(j));
      bool joined = false;
      for (Vertex a : px) {
        for (Vertex b : g.neighbors(a)) {
          if (std::binary_search(py.begin(), py.end(), b)) {
            joined = true;
            break;
          }
        }
        if (joined) break;
      }
      if (joined)
        out.edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
    }
  }
  return out;
}

ComponentMinor component_minor_model(const Graph& level_union,
                                     const std::vector<Vertex>& component,
                                     const MinorAugmentation& aug,
                                     const Graph& base) {
  ComponentMinor out;
  out.pattern = level_union.induced(component);
  for (Vertex id : component) out.model.branch_sets[id] = aug.pieces.at(id);
  for (const auto& e : out.pattern.edges()) {
    const auto& pa = aug.pieces.at(e.first);
    const auto& pb = aug.pieces.at(e.second);
    Edge image{-1, -1};
    for (const auto& be : base.edges()) {
      bool a_in = std::binary_search(pa.begin(), pa.end(), be.first) &&
                  std::binary_search(pb.begin(), pb.end(), be.second);
      bool b_in = std::binary_search(pa.begin(), pa.end(), be.second) &&
                  std::binary_search(pb.begin(), pb.end(), be.first);
      if (a_in || b_in) {
        image = be;
        break;  // edges() is sorted: first hit is canonical
      }
    }
    if (image.first < 0)
      throw std::runtime_error("augmentation edge has no base edge");
    out.model.edge_map[e] = image;
  }
  return out;
}

std::vector<Edge> cross_level_edges(const LevelSpace& z) {
  std::vector<Edge> out;
  for (const auto& [t1, t2] : z.td.tree.edges()) {
    const auto& bag1 = z.td.bags.at(t1);
    const auto& bag2 = z.td.bags.at(t2);
    for (Vertex x : bag1) {
      if (!std::binary_search(bag2.begin(), bag2.end(), x)) continue;
      out.push_back(make_edge(z.id_of({x, t1}), z.id_of({x, t2})));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> level_forests(const Graph& within_level, const LevelSpace& z) {
  std::vector<Edge> out;
  std::map<Vertex, std::vector<Vertex>> levels;
  for (std::size_t i = 0; i < z.points.size(); ++i)
    levels[z.points[i].node].push_back(static_cast<Vertex>(i));

  for (const auto& [node, ids] : levels) {
    Graph sub = within_level.induced(ids);
    if (!is_connected(sub))
      throw std::invalid_argument("level " + std::to_string(node) +
                                  " is disconnected");
    // BFS tree from the least point.
    std::set<Vertex> seen{ids.front()};
    std::deque<Vertex> queue{ids.front()};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : sub.neighbors(v)) {
        if (seen.insert(w).second) {
          out.push_back(make_edge(v, w));
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph glue_treeing(const LevelSpace& z, const std::vector<Edge>& forests,
                   const std::vector<Edge>& cross_edges) {
  // Check the forests span their levels.
  std::map<Vertex, std::size_t> level_sizes;
  for (const auto& p : z.points) ++level_sizes[p.node];
  std::map<Vertex, std::size_t> forest_edges;
  for (const auto& e : forests) {
    const auto& p = z.point(e.first);
    const auto& q = z.point(e.second);
    if (p.node != q.node)
      throw std::invalid_argument("forest edge crosses levels");
    ++forest_edges[p.node];
  }
  for (const auto& [node, size] : level_sizes) {
    if (size > 0 && forest_edges[node] + 1 != size)
      throw std::invalid_argument("forest does not span level " +
                                  std::to_string(node));
  }

  // One cross edge per tree edge: the least adhesion vertex wins.
  std::map<Edge, Edge> transversal;  // tree edge -> chosen lift edge
  for (const auto& e : cross_edges) {
    const auto& p = z.point(e.first);
    const auto& q = z.point(e.second);
    if (p.base != q.base)
      throw std::invalid_argument("cross edge changes base vertex");
    Edge key = make_edge(p.node, q.node);
    auto it = transversal.find(key);
    if (it == transversal.end() || z.point(it->second.first).base > p.base)
      transversal[key] = e;
  }

  std::vector<Edge> edges = forests;
  for (const auto& [key, e] : transversal) edges.push_back(e);
  std::vector<Vertex> verts;
  for (std::size_t i = 0; i < z.points.size(); ++i)
    verts.push_back(static_cast<Vertex>(i));
  return Graph::from_edges(edges, verts);
}

Graph project_to_base(const Graph& tree_on_lift, const LevelSpace& z) {
  // Section: the least tree node per base vertex.
  std::map<Vertex, Vertex> section;  // base -> point id
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    const auto& p = z.points[i];
    auto it = section.find(p.base);
    if (it == section.end() || z.point(it->second).node > p.node)
      section[p.base] = static_cast<Vertex>(i);
  }
  std::set<Vertex> section_ids;
  for (const auto& [base, id] : section) section_ids.insert(id);

  // Treeing of the section: root each tree component at its least section
  // point; every other section point attaches to the next section point on
  // its path toward the root.
  std::set<Edge> lifted_edges;
  for (const auto& comp : connected_components(tree_on_lift)) {
    Vertex root = -1;
    for (Vertex id : comp)
      if (section_ids.count(id)) {
        root = id;
        break;
      }
    if (root < 0) continue;
    std::map<Vertex, Vertex> parent{{root, -1}};
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : tree_on_lift.neighbors(v)) {
        if (parent.count(w)) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    for (Vertex id : comp) {
      if (!section_ids.count(id) || id == root) continue;
      Vertex up = parent.at(id);
      while (!section_ids.count(up)) up = parent.at(up);
      lifted_edges.insert(make_edge(id, up));
    }
  }

  // Every pair of section points over a connected base piece must be
  // reachable inside the provided tree.
  for (const auto& comp : connected_components(z.td.base)) {
    std::set<Vertex> ids;
    for (Vertex v : comp) ids.insert(section.at(v));
    if (ids.empty()) continue;
    std::set<Vertex> reached{*ids.begin()};
    std::deque<Vertex> queue{*ids.begin()};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : tree_on_lift.neighbors(v))
        if (reached.insert(w).second) queue.push_back(w);
    }
    for (Vertex id : ids)
      if (!reached.count(id))
        throw std::invalid_argument("tree does not connect the section image");
  }

  std::vector<Edge> base_edges;
  for (const auto& e : lifted_edges)
    base_edges.push_back(
        make_edge(z.point(e.first).base, z.point(e.second).base));
  return Graph::from_edges(base_edges, z.td.base.vertices());
}

}  // namespace sepforest
