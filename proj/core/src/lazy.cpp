#include "sepforest/lazy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace sepforest {

namespace {

// Bijection Z -> N: 0,-1,1,-2,2,... maps to 0,1,2,3,4,...
long long zigzag(long long n) { return n >= 0 ? 2 * n : -2 * n - 1; }
long long unzigzag(long long z) { return z % 2 == 0 ? z / 2 : -(z + 1) / 2; }

// Cantor pairing N x N -> N.
long long pair_nn(long long a, long long b) {
  return (a + b) * (a + b + 1) / 2 + b;
}

void unpair_nn(long long z, long long& a, long long& b) {
  long long w = 0;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  b = z - w * (w + 1) / 2;
  a = w - b;
}

}  // namespace

LazyGraph::LazyGraph(std::string name, std::vector<long long> params,
                     Vertex basepoint, Oracle oracle)
    : name_(std::move(name)),
      params_(std::move(params)),
      basepoint_(basepoint),
      oracle_(std::move(oracle)) {}

std::vector<Vertex> LazyGraph::neighbors(Vertex v) const {
  if (v < 0) throw std::invalid_argument("negative vertex id");
  auto nb = oracle_(v);
  std::sort(nb.begin(), nb.end());
  return nb;
}

Vertex LazyGraph::biinfinite_path_id(long long n) { return zigzag(n); }

LazyGraph LazyGraph::biinfinite_path() {
  return LazyGraph("biinfinite_path", {}, 0, [](Vertex v) {
    long long n = unzigzag(v);
    return std::vector<Vertex>{zigzag(n - 1), zigzag(n + 1)};
  });
}

Vertex LazyGraph::grid2d_id(long long x, long long y) {
  return pair_nn(zigzag(x), zigzag(y));
}

LazyGraph LazyGraph::grid2d() {
  return LazyGraph("grid2d", {}, grid2d_id(0, 0), [](Vertex v) {
    long long a, b;
    unpair_nn(v, a, b);
    long long x = unzigzag(a), y = unzigzag(b);
    return std::vector<Vertex>{grid2d_id(x - 1, y), grid2d_id(x + 1, y),
                               grid2d_id(x, y - 1), grid2d_id(x, y + 1)};
  });
}

LazyGraph LazyGraph::regular_tree(int degree) {
  if (degree < 2) throw std::invalid_argument("regular_tree needs degree >= 2");
  long long d = degree;
  // BFS numbering: root 0 has children 1..d; vertex v >= 1 has d-1 children
  // starting at d + 1 + (v-1)(d-1).
  return LazyGraph("regular_tree", {d}, 0, [d](Vertex v) {
    std::vector<Vertex> nb;
    if (v == 0) {
      for (long long c = 1; c <= d; ++c) nb.push_back(c);
      return nb;
    }
    nb.push_back(v <= d ? 0 : (v - d - 1) / (d - 1) + 1);
    long long first = d + 1 + (v - 1) * (d - 1);
    for (long long j = 0; j < d - 1; ++j) nb.push_back(first + j);
    return nb;
  });
}

Vertex LazyGraph::scaled_squares_id(long long scale, int corner) {
  if (corner < 0 || corner > 3) throw std::invalid_argument("corner out of range");
  return 4 * zigzag(scale) + corner;
}

LazyGraph LazyGraph::scaled_squares() {
  // Rings of four corners per scale, consecutive corners adjacent, plus a
  // matching corner-to-corner edge between consecutive scales.
  return LazyGraph("scaled_squares", {}, scaled_squares_id(0, 0), [](Vertex v) {
    long long scale = unzigzag(v / 4);
    int corner = static_cast<int>(v % 4);
    return std::vector<Vertex>{
        scaled_squares_id(scale, (corner + 1) % 4),
        scaled_squares_id(scale, (corner + 3) % 4),
        scaled_squares_id(scale - 1, corner),
        scaled_squares_id(scale + 1, corner)};
  });
}

Vertex LazyGraph::ladder_id(long long n, int side) {
  if (side < 0 || side > 1) throw std::invalid_argument("side out of range");
  return 2 * zigzag(n) + side;
}

LazyGraph LazyGraph::ladder() {
  return LazyGraph("ladder", {}, ladder_id(0, 0), [](Vertex v) {
    long long n = unzigzag(v / 2);
    int side = static_cast<int>(v % 2);
    return std::vector<Vertex>{ladder_id(n, 1 - side), ladder_id(n - 1, side),
                               ladder_id(n + 1, side)};
  });
}

LazyGraph LazyGraph::by_name(const std::string& name,
                             const std::vector<long long>& params) {
  if (name == "biinfinite_path") return biinfinite_path();
  if (name == "grid2d") return grid2d();
  if (name == "scaled_squares") return scaled_squares();
  if (name == "ladder") return ladder();
  if (name == "regular_tree") {
    if (params.size() != 1)
      throw std::invalid_argument("regular_tree needs one parameter (degree)");
    return regular_tree(static_cast<int>(params[0]));
  }
  throw std::invalid_argument("unknown generator " + name);
}

Ball ball(const LazyGraph& g, Vertex v, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::map<Vertex, int> dist{{v, 0}};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    int d = dist.at(u);
    if (d == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (!dist.count(w)) {
        dist[w] = d + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> inside, sphere;
  for (const auto& [u, d] : dist) {
    inside.push_back(u);
    if (d == radius) sphere.push_back(u);
  }
  std::vector<Edge> edges;
  for (Vertex u : inside)
    for (Vertex w : g.neighbors(u))
      if (dist.count(w) && u < w) edges.push_back({u, w});
  return Ball{Graph::from_edges(edges, inside), sphere};
}

}  // namespace sepforest
