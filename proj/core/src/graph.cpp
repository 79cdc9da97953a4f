#include "sepforest/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepforest {

Graph Graph::from_edges(const std::vector<Edge>& edges,
                        const std::vector<Vertex>& extra_vertices) {
  Graph g;
  std::set<Vertex> vs(extra_vertices.begin(), extra_vertices.end());
  std::set<Edge> es;
  for (const auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    es.insert(make_edge(e.first, e.second));
    vs.insert(e.first);
    vs.insert(e.second);
  }
  for (Vertex v : vs)
    if (v < 0) throw std::invalid_argument("negative vertex id " + std::to_string(v));
  g.verts_.assign(vs.begin(), vs.end());
  g.edges_.assign(es.begin(), es.end());
  g.adj_.resize(g.verts_.size());
  for (const auto& [u, v] : g.edges_) {
    g.adj_[g.index_of(u)].push_back(v);
    g.adj_[g.index_of(v)].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
  const auto& nb = adj_[index_of(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - verts_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return adj_[index_of(v)];
}

Graph Graph::induced(const std::vector<Vertex>& subset) const {
  std::set<Vertex> keep;
  for (Vertex v : subset) {
    if (!has_vertex(v))
      throw std::invalid_argument("unknown vertex " + std::to_string(v));
    keep.insert(v);
  }
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (keep.count(e.first) && keep.count(e.second)) es.push_back(e);
  return from_edges(es, {keep.begin(), keep.end()});
}

Graph Graph::remove_vertices(const std::vector<Vertex>& subset) const {
  std::set<Vertex> drop(subset.begin(), subset.end());
  std::vector<Vertex> keep;
  for (Vertex v : verts_)
    if (!drop.count(v)) keep.push_back(v);
  return induced(keep);
}

Graph Graph::remove_edges(const std::vector<Edge>& subset) const {
  std::set<Edge> drop;
  for (const auto& e : subset) drop.insert(make_edge(e.first, e.second));
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (!drop.count(e)) es.push_back(e);
  return from_edges(es, verts_);
}

std::vector<Edge> Graph::boundary(const std::vector<Vertex>& a) const {
  std::set<Vertex> in(a.begin(), a.end());
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (in.count(e.first) != in.count(e.second)) out.push_back(e);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (seen[i]) continue;
    std::vector<Vertex> cls;
    std::deque<Vertex> queue{g.vertices()[i]};
    seen[i] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      cls.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        std::size_t j = g.index_of(w);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<long long> bfs_distances(const Graph& g, Vertex src) {
  std::vector<long long> dist(g.vertex_count(), -1);
  dist[g.index_of(src)] = 0;
  std::deque<Vertex> queue{src};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    long long d = dist[g.index_of(v)];
    for (Vertex w : g.neighbors(v)) {
      auto& dw = dist[g.index_of(w)];
      if (dw < 0) {
        dw = d + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Ball ball(const Graph& g, Vertex v, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  auto dist = bfs_distances(g, v);
  std::vector<Vertex> inside, sphere;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (dist[i] < 0 || dist[i] > radius) continue;
    inside.push_back(g.vertices()[i]);
    if (dist[i] == radius) sphere.push_back(g.vertices()[i]);
  }
  return Ball{g.induced(inside), sphere};
}

bool PathWitness::valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  std::set<Vertex> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) return false;
  if (kind == Kind::Cycle) {
    if (vertices.size() < 3) return false;
    if (!g.has_edge(vertices.back(), vertices.front())) return false;
  }
  if (kind == Kind::RayPrefix && certified_radius < 0) return false;
  return true;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<Vertex> isolated;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Vertex u, v;
    if (ls >> u) {
      if (ls >> v)
        edges.push_back(make_edge(u, v));
      else
        isolated.push_back(u);
    }
  }
  return Graph::from_edges(edges, isolated);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  std::set<Vertex> covered;
  for (const auto& [u, v] : g.edges()) {
    covered.insert(u);
    covered.insert(v);
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (Vertex v : g.vertices())
    if (!covered.count(v)) out << v << '\n';
  return out.str();
}

}  // namespace sepforest
