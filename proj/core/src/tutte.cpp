#include "sepforest/tutte.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sepforest/connectivity.hpp"

namespace sepforest {

std::string to_string(TorsoClass c) {
  switch (c) {
    case TorsoClass::ThreeConnected: return "3-connected";
    case TorsoClass::Cycle: return "cycle";
    case TorsoClass::Edge: return "edge";
  }
  return "?";
}

std::vector<Separation> two_separations(const Graph& g) {
  if (!is_k_connected(g, 2))
    throw std::invalid_argument("graph is not 2-connected");
  std::vector<Separation> out;
  for (auto& sep : enumerate_separations(g, 2))
    if (sep.order() == 2 && is_proper(g, sep)) out.push_back(std::move(sep));
  return out;
}

std::vector<Separation> totally_nested(const Graph& g,
                                       const std::vector<Separation>& seps) {
  std::vector<Separation> out;
  for (const auto& cand : seps) {
    bool ok = true;
    for (const auto& other : seps) {
      if (!nested(g, cand, other)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

TreeDecomposition tutte_decomposition(const Graph& g) {
  auto sys = make_system(totally_nested(g, two_separations(g)), g);
  return tree_decomposition_from_system(sys, g);
}

TorsoClass classify_torso(const Torso& t) {
  const Graph& h = t.graph;
  if (h.vertex_count() == 2 && h.edge_count() == 1) return TorsoClass::Edge;
  if (h.vertex_count() >= 3 && h.edge_count() == h.vertex_count() &&
      is_connected(h)) {
    bool all_two = true;
    for (Vertex v : h.vertices())
      if (h.degree(v) != 2) all_two = false;
    if (all_two) return TorsoClass::Cycle;
  }
  if (h.vertex_count() >= 4 && is_connected(h) && is_k_connected(h, 3))
    return TorsoClass::ThreeConnected;
  throw std::runtime_error("torso fits no class (pipeline bug)");
}

namespace {

// Iterative DFS biconnected-components with an edge stack.
struct BlockFinder {
  const Graph& g;
  std::map<Vertex, int> disc, low;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> block_edges;
  std::set<Vertex> cuts;
  int timer = 0;

  explicit BlockFinder(const Graph& graph) : g(graph) {}

  void pop_block(const Edge& until) {
    std::vector<Edge> es;
    while (!stack.empty()) {
      Edge e = stack.back();
      stack.pop_back();
      es.push_back(e);
      if (e == until) break;
    }
    block_edges.push_back(std::move(es));
  }

  void dfs(Vertex root) {
    struct Frame {
      Vertex v, parent;
      std::size_t next = 0;
    };
    std::vector<Frame> frames{{root, -1}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbs = g.neighbors(f.v);
      if (f.next < nbs.size()) {
        Vertex w = nbs[f.next++];
        if (w == f.parent) continue;
        if (!disc.count(w)) {
          stack.push_back(make_edge(f.v, w));
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          frames.push_back({w, f.v});
        } else if (disc[w] < disc[f.v]) {
          stack.push_back(make_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v, parent = f.parent;
        frames.pop_back();
        if (parent < 0) break;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= disc[parent]) {
          pop_block(make_edge(parent, v));
          if (parent != root) cuts.insert(parent);
        }
      }
    }
    if (root_children > 1) cuts.insert(root);
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockFinder bf(g);
  for (Vertex v : g.vertices())
    if (!bf.disc.count(v)) bf.dfs(v);

  BlockDecomposition out;
  for (auto& es : bf.block_edges) out.blocks.push_back(Graph::from_edges(es));
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) out.blocks.push_back(Graph::from_edges({}, {v}));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Graph& a, const Graph& b) {
              return a.vertices() < b.vertices() ||
                     (a.vertices() == b.vertices() && a.edges() < b.edges());
            });
  out.cutvertices.assign(bf.cuts.begin(), bf.cuts.end());
  return out;
}

TreeDecomposition tutte_blockwise(const Graph& g) {
  auto blocks = block_decomposition(g);

  TreeDecomposition td;
  td.base = g;
  std::vector<Vertex> nodes;
  std::vector<Edge> tree_edges;
  Vertex next = 0;
  // Per block: nodes of its (one-bag or Tutte) decomposition.
  std::vector<std::vector<Vertex>> block_nodes;

  for (const Graph& block : blocks.blocks) {
    std::vector<Vertex> mine;
    if (block.vertex_count() >= 3 && is_k_connected(block, 2)) {
      TreeDecomposition sub = tutte_decomposition(block);
      std::map<Vertex, Vertex> remap;
      for (Vertex n : sub.tree.vertices()) {
        remap[n] = next++;
        nodes.push_back(remap[n]);
        td.bags[remap[n]] = sub.bags.at(n);
        mine.push_back(remap[n]);
      }
      for (const auto& [a, b] : sub.tree.edges())
        tree_edges.push_back(make_edge(remap[a], remap[b]));
    } else {
      Vertex node = next++;
      nodes.push_back(node);
      td.bags[node] = block.vertices();
      mine.push_back(node);
    }
    block_nodes.push_back(std::move(mine));
  }

  // Join blocks sharing a cutvertex: a star centered at the first block.
  for (Vertex v : blocks.cutvertices) {
    std::vector<Vertex> holders;  // one node per block containing v
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
      if (!blocks.blocks[b].has_vertex(v)) continue;
      for (Vertex n : block_nodes[b]) {
        const auto& bag = td.bags.at(n);
        if (std::binary_search(bag.begin(), bag.end(), v)) {
          holders.push_back(n);
          break;
        }
      }
    }
    for (std::size_t i = 1; i < holders.size(); ++i)
      tree_edges.push_back(make_edge(holders[0], holders[i]));
  }

  td.tree = Graph::from_edges(tree_edges, nodes);
  return td;
}

}  // namespace sepforest
