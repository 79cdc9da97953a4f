#include "sepforest/treedecomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepforest {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a,
                                     const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

SystemDecomposition decompose_system(const SeparationSystem& sys,
                                     const Graph& g) {
  if (!sys.nested) throw std::invalid_argument("system is not nested");

  SystemDecomposition out;
  out.td.base = g;
  std::vector<Edge> tree_edges;
  std::vector<Vertex> tree_nodes;
  Vertex next_node = 0;

  for (const auto& comp : connected_components(g)) {
    std::set<Vertex> comp_set(comp.begin(), comp.end());
    std::vector<Separation> members;
    for (const auto& sep : sys.members)
      if (!sep.adhesion.empty() && comp_set.count(sep.adhesion.front()))
        members.push_back(sep);

    if (members.empty()) {
      Vertex node = next_node++;
      tree_nodes.push_back(node);
      out.td.bags[node] = comp;
      continue;
    }

    std::size_t n = members.size();
    std::vector<SideVertexSets> side(n);
    for (std::size_t i = 0; i < n; ++i) side[i] = side_vertex_sets(g, members[i]);

    auto le = [&](std::size_t i, std::size_t j) {
      return std::includes(side[j].a1.begin(), side[j].a1.end(),
                           side[i].a1.begin(), side[i].a1.end()) &&
             std::includes(side[i].a2.begin(), side[i].a2.end(),
                           side[j].a2.begin(), side[j].a2.end());
    };

    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) lt[i][j] = le(i, j);

    std::vector<std::size_t> comp_index(n);
    for (std::size_t i = 0; i < n; ++i) {
      Separation c = complement(g, members[i]);
      auto it = std::lower_bound(members.begin(), members.end(), c);
      if (it == members.end() || !(*it == c))
        throw std::invalid_argument("system is not symmetric");
      comp_index[i] = static_cast<std::size_t>(it - members.begin());
    }

    auto predecessor = [&](std::size_t i, std::size_t j) {
      if (!lt[i][j]) return false;
      for (std::size_t m = 0; m < n; ++m)
        if (m != i && m != j && lt[i][m] && lt[m][j]) return false;
      return true;
    };

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && predecessor(comp_index[i], j)) uf.unite(i, j);

    // Classes keyed by least member index; nodes in that canonical order.
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);

    std::map<std::size_t, Vertex> node_of;
    for (const auto& [root, idxs] : classes) {
      Vertex node = next_node++;
      tree_nodes.push_back(node);
      node_of[root] = node;
      std::vector<Vertex> bag = side[idxs.front()].a1;
      for (std::size_t i : idxs) bag = intersect_sorted(bag, side[i].a1);
      if (bag.empty())
        throw std::invalid_argument("system produced an empty bag");
      out.td.bags[node] = bag;
      for (std::size_t i : idxs) out.node_members[node].push_back(members[i]);
    }

    std::set<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      Vertex a = node_of.at(uf.find(i));
      Vertex b = node_of.at(uf.find(comp_index[i]));
      if (a == b)
        throw std::invalid_argument(
            "separation merged with its complement; system is degenerate");
      edges.insert(make_edge(a, b));
    }
    tree_edges.insert(tree_edges.end(), edges.begin(), edges.end());
  }

  out.td.tree = Graph::from_edges(tree_edges, tree_nodes);
  return out;
}

std::vector<Separation> induced_separations(const TreeDecomposition& td) {
  std::set<Separation> out;
  for (const auto& [t1, t2] : td.tree.edges()) {
    const auto& bag1 = td.bags.at(t1);
    const auto& bag2 = td.bags.at(t2);
    std::vector<Vertex> s = intersect_sorted(bag1, bag2);
    std::set<Vertex> sset(s.begin(), s.end());

    // Bags on t1's side of the cut edge.
    Graph pruned = td.tree.remove_edges({make_edge(t1, t2)});
    std::set<Vertex> side1_nodes;
    for (const auto& cls : connected_components(pruned))
      if (std::binary_search(cls.begin(), cls.end(), t1))
        side1_nodes.insert(cls.begin(), cls.end());

    std::set<Vertex> u1;
    for (Vertex node : side1_nodes)
      u1.insert(td.bags.at(node).begin(), td.bags.at(node).end());

    Separation b1, b2;
    b1.adhesion = b2.adhesion = s;
    for (const auto& e : td.base.boundary(s)) {
      Vertex outer = sset.count(e.first) ? e.second : e.first;
      if (u1.count(outer))
        b1.cut.push_back(e);
      else
        b2.cut.push_back(e);
    }
    std::sort(b1.cut.begin(), b1.cut.end());
    std::sort(b2.cut.begin(), b2.cut.end());
    out.insert(std::move(b1));
    out.insert(std::move(b2));
  }
  return {out.begin(), out.end()};
}

SeparationSystem induced_system(const TreeDecomposition& td) {
  auto fam = induced_separations(td);
  SeparationSystem sys;
  sys.members = fam;
  sys.nested = true;
  for (std::size_t i = 0; i < fam.size() && sys.nested; ++i)
    for (std::size_t j = i + 1; j < fam.size() && sys.nested; ++j)
      if (!nested(td.base, fam[i], fam[j])) sys.nested = false;
  for (const auto& sep : fam)
    if (!is_proper(td.base, sep))
      throw std::invalid_argument("induced separation is improper: " +
                                  emit_separation(sep));
  return sys;
}

std::vector<Torso> torsos(const TreeDecomposition& td) {
  std::vector<Torso> out;
  for (const auto& [node, bag] : td.bags) {
    Torso t;
    t.part = node;
    std::set<Edge> es;
    Graph inner = td.base.induced(bag);
    for (const auto& e : inner.edges()) es.insert(e);
    for (Vertex nb : td.tree.neighbors(node)) {
      auto shared = intersect_sorted(bag, td.bags.at(nb));
      for (std::size_t i = 0; i < shared.size(); ++i) {
        for (std::size_t j = i + 1; j < shared.size(); ++j) {
          Edge e = make_edge(shared[i], shared[j]);
          if (!td.base.has_edge(e.first, e.second) && es.insert(e).second)
            t.virtual_edges.push_back(e);
        }
      }
    }
    std::sort(t.virtual_edges.begin(), t.virtual_edges.end());
    t.graph = Graph::from_edges({es.begin(), es.end()}, bag);
    out.push_back(std::move(t));
  }
  return out;
}

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& [node, bag] : td.bags)
    w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

TdValidation validate_tree_decomposition(const Graph& g,
                                         const TreeDecomposition& raw) {
  TdValidation res;
  // Hand-built input may carry unsorted bags; normalize first.
  TreeDecomposition td;
  td.tree = raw.tree;
  td.base = raw.base;
  for (const auto& [node, bag] : raw.bags) {
    auto sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    td.bags[node] = std::move(sorted);
  }
  for (Vertex node : td.tree.vertices())
    if (!td.bags.count(node)) {
      res.violated_axiom = "bagless tree node";
      return res;
    }
  for (const auto& [node, bag] : td.bags) {
    if (!td.tree.has_vertex(node)) {
      res.violated_axiom = "bag without tree node";
      return res;
    }
    for (Vertex v : bag)
      if (!g.has_vertex(v)) {
        res.violated_axiom = "bag vertex outside base graph";
        return res;
      }
  }

  // Acyclic with one tree component per base component.
  std::size_t tree_comps = connected_components(td.tree).size();
  if (td.tree.edge_count() + tree_comps != td.tree.vertex_count()) {
    res.violated_axiom = "tree-shape";
    return res;
  }
  if (tree_comps != connected_components(g).size()) {
    res.violated_axiom = "tree-shape";
    return res;
  }

  std::set<Vertex> covered;
  for (const auto& [node, bag] : td.bags) covered.insert(bag.begin(), bag.end());
  for (Vertex v : g.vertices())
    if (!covered.count(v)) {
      res.violated_axiom = "vertex-cover";
      return res;
    }

  for (const auto& [a, b] : g.edges()) {
    bool found = false;
    for (const auto& [node, bag] : td.bags) {
      if (std::binary_search(bag.begin(), bag.end(), a) &&
          std::binary_search(bag.begin(), bag.end(), b)) {
        found = true;
        break;
      }
    }
    if (!found) {
      res.violated_axiom = "edge-cover";
      return res;
    }
  }

  for (Vertex v : g.vertices()) {
    std::vector<Vertex> occupied;
    for (const auto& [node, bag] : td.bags)
      if (std::binary_search(bag.begin(), bag.end(), v)) occupied.push_back(node);
    if (occupied.empty()) continue;
    if (!is_connected(td.tree.induced(occupied))) {
      res.violated_axiom = "connected-occupied-subtree";
      return res;
    }
  }

  res.ok = true;
  return res;
}

std::string emit_td(const TreeDecomposition& td) {
  // Node ids remapped to 1..k in sorted order.
  std::map<Vertex, std::size_t> file_id;
  for (Vertex node : td.tree.vertices()) file_id[node] = file_id.size() + 1;

  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << width(td) + 1 << ' '
      << td.base.vertex_count() << '\n';
  for (Vertex node : td.tree.vertices()) {
    out << "b " << file_id.at(node);
    for (Vertex v : td.bags.at(node)) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree.edges())
    out << file_id.at(a) << ' ' << file_id.at(b) << '\n';
  return out.str();
}

TreeDecomposition parse_td(const std::string& text, const Graph& base) {
  TreeDecomposition td;
  td.base = base;
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> tree_edges;
  std::vector<Vertex> nodes;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      header_seen = true;
      continue;
    }
    if (line[0] == 'b') {
      char tag;
      Vertex id;
      ls >> tag >> id;
      std::vector<Vertex>& bag = td.bags[id - 1];
      Vertex v;
      while (ls >> v) bag.push_back(v);
      std::sort(bag.begin(), bag.end());
      nodes.push_back(id - 1);
      continue;
    }
    Vertex a, b;
    if (ls >> a >> b) tree_edges.push_back(make_edge(a - 1, b - 1));
  }
  if (!header_seen) throw std::invalid_argument("missing 's td' header");
  td.tree = Graph::from_edges(tree_edges, nodes);
  return td;
}

}  // namespace sepforest
