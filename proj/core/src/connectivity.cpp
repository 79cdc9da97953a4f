#include "sepforest/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace sepforest {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Plain Edmonds-Karp with adjacency in deterministic insertion order.
struct FlowNet {
  struct Arc {
    int to, cap, flow = 0;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int n) : out(n) {}

  void add_arc(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  }

  int residual(int a) const { return arcs[a].cap - arcs[a].flow; }

  bool augment(int s, int t) {
    std::vector<int> via(out.size(), -1);
    via[s] = -2;
    std::deque<int> queue{s};
    while (!queue.empty() && via[t] == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int a : out[u]) {
        if (residual(a) > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[t] == -1) return false;
    for (int u = t; u != s;) {
      int a = via[u];
      arcs[a].flow += 1;
      arcs[a ^ 1].flow -= 1;
      u = arcs[a ^ 1].to;
    }
    return true;
  }

  int max_flow(int s, int t, int limit = kInf) {
    int total = 0;
    while (total < limit && augment(s, t)) ++total;
    return total;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(out.size(), false);
    seen[s] = true;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : out[u]) {
        if (residual(a) > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = true;
          queue.push_back(arcs[a].to);
        }
      }
    }
    return seen;
  }
};

// Vertex-split network for internally disjoint u-v paths. Node 2i is the
// entry of vertex i, 2i+1 its exit. No arc enters u and none leaves v, so
// every flow unit decomposes into a simple u-v path.
struct SplitNet {
  FlowNet net;
  const Graph& g;
  int s, t;

  SplitNet(const Graph& graph, Vertex u, Vertex v)
      : net(2 * static_cast<int>(graph.vertex_count())), g(graph) {
    s = 2 * static_cast<int>(g.index_of(u)) + 1;
    t = 2 * static_cast<int>(g.index_of(v));
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      Vertex w = g.vertices()[i];
      int cap = (w == u || w == v) ? kInf : 1;
      net.add_arc(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1, cap);
    }
    for (const auto& [a, b] : g.edges()) {
      int ia = static_cast<int>(g.index_of(a));
      int ib = static_cast<int>(g.index_of(b));
      // Only split arcs may carry a min cut, so edge arcs are uncapped;
      // the direct u-v edge stays a single path.
      int cap = make_edge(a, b) == make_edge(u, v) ? 1 : kInf;
      if (a != v && b != u) net.add_arc(2 * ia + 1, 2 * ib, cap);
      if (b != v && a != u) net.add_arc(2 * ib + 1, 2 * ia, cap);
    }
  }
};

}  // namespace

DisjointPathsResult internally_disjoint_paths(const Graph& g, Vertex u,
                                              Vertex v, int k) {
  if (u == v) throw std::invalid_argument("endpoints coincide");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("unknown endpoint");
  if (k < 1) throw std::invalid_argument("k must be positive");

  SplitNet sn(g, u, v);
  int flow = sn.net.max_flow(sn.s, sn.t, k);

  DisjointPathsResult res;
  if (flow >= k) {
    res.success = true;
    std::vector<bool> used(sn.net.arcs.size(), false);
    auto take = [&](int node) {
      for (int a : sn.net.out[node]) {
        if (!used[a] && sn.net.arcs[a].cap > 0 && sn.net.arcs[a].flow > 0) {
          used[a] = true;
          return sn.net.arcs[a].to;
        }
      }
      throw std::runtime_error("flow decomposition failed");
    };
    for (int p = 0; p < k; ++p) {
      PathWitness w;
      w.kind = PathWitness::Kind::Path;
      w.vertices.push_back(u);
      int node = sn.s;
      while (true) {
        int entry = take(node);  // exit node -> entry of next vertex
        w.vertices.push_back(g.vertices()[entry / 2]);
        if (entry == sn.t) break;
        node = take(entry);  // pass the split arc
      }
      res.paths.push_back(std::move(w));
    }
    return res;
  }
  res.success = false;
  if (!g.has_edge(u, v)) {
    auto seen = sn.net.reachable(sn.s);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (seen[2 * i] && !seen[2 * i + 1]) res.cut.push_back(g.vertices()[i]);
    res.cut_available = true;
  }
  return res;
}

int max_internally_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("endpoints coincide");
  SplitNet sn(g, u, v);
  return sn.net.max_flow(sn.s, sn.t);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  if (static_cast<long long>(g.vertex_count()) <= k) return false;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      Vertex u = g.vertices()[i], v = g.vertices()[j];
      if (g.has_edge(u, v)) continue;
      if (max_internally_disjoint_paths(g, u, v) < k) return false;
    }
  }
  return true;
}

EdgeCut min_edge_cut_between(const Graph& g, const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks) {
  if (sources.empty() || sinks.empty())
    throw std::invalid_argument("empty terminal set");
  std::set<Vertex> src(sources.begin(), sources.end());
  for (Vertex v : sinks)
    if (src.count(v)) throw std::invalid_argument("terminal sets intersect");

  int n = static_cast<int>(g.vertex_count());
  FlowNet net(n + 2);
  int s = n, t = n + 1;
  for (const auto& [a, b] : g.edges()) {
    int ia = static_cast<int>(g.index_of(a));
    int ib = static_cast<int>(g.index_of(b));
    net.add_arc(ia, ib, 1);
    net.add_arc(ib, ia, 1);
  }
  for (Vertex v : sources) net.add_arc(s, static_cast<int>(g.index_of(v)), kInf);
  for (Vertex v : sinks) net.add_arc(static_cast<int>(g.index_of(v)), t, kInf);

  EdgeCut cut;
  cut.value = net.max_flow(s, t);
  auto seen = net.reachable(s);
  std::set<Edge> witness;
  for (const auto& [a, b] : g.edges()) {
    bool sa = seen[g.index_of(a)], sb = seen[g.index_of(b)];
    if (sa != sb) witness.insert(make_edge(a, b));
  }
  cut.cut_edges.assign(witness.begin(), witness.end());
  return cut;
}

int max_vertex_disjoint_paths(const Graph& g, const std::vector<Vertex>& sources,
                              const std::vector<Vertex>& sinks) {
  if (sources.empty() || sinks.empty()) return 0;
  std::set<Vertex> sink_set(sinks.begin(), sinks.end());
  int bonus = 0;
  std::set<Vertex> overlap;
  for (Vertex v : sources) {
    if (sink_set.count(v)) {
      ++bonus;  // the one-vertex path
      overlap.insert(v);
    }
  }
  int n = static_cast<int>(g.vertex_count());
  FlowNet net(2 * n + 2);
  int s = 2 * n, t = 2 * n + 1;
  for (int i = 0; i < n; ++i) {
    int cap = overlap.count(g.vertices()[i]) ? 0 : 1;
    net.add_arc(2 * i, 2 * i + 1, cap);
  }
  for (const auto& [a, b] : g.edges()) {
    int ia = static_cast<int>(g.index_of(a));
    int ib = static_cast<int>(g.index_of(b));
    net.add_arc(2 * ia + 1, 2 * ib, 1);
    net.add_arc(2 * ib + 1, 2 * ia, 1);
  }
  for (Vertex v : sources)
    if (!overlap.count(v)) net.add_arc(s, 2 * static_cast<int>(g.index_of(v)), 1);
  for (Vertex v : sinks)
    if (!overlap.count(v))
      net.add_arc(2 * static_cast<int>(g.index_of(v)) + 1, t, 1);
  return bonus + net.max_flow(s, t);
}

}  // namespace sepforest
