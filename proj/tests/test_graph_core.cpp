#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "sepforest/connectivity.hpp"
#include "sepforest/lazy.hpp"
#include "sepforest/minor.hpp"

using namespace sepforest;

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS(Graph::from_edges({{0, 0}}));
  CHECK_THROWS(Graph::from_edges({{-1, 2}}));
  Graph g = Graph::from_edges({{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("connected components partition the vertices") {
  Graph p3 = corpus::path(3);
  CHECK(connected_components(p3).size() == 1);
  auto split = p3.remove_vertices({1});
  auto comps = connected_components(split);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0});
  CHECK(comps[1] == std::vector<Vertex>{2});
  CHECK(connected_components(corpus::diamond()).size() == 1);
}

TEST_CASE("ball on finite graphs") {
  Graph p3 = corpus::path(3);
  auto b = ball(p3, 1, 1);
  CHECK(b.graph == p3);
  CHECK(b.sphere == std::vector<Vertex>{0, 2});

  auto b0 = ball(corpus::complete(4), 2, 0);
  CHECK(b0.graph.vertex_count() == 1);
  CHECK(b0.graph.edge_count() == 0);
  CHECK(b0.sphere == std::vector<Vertex>{2});

  CHECK_THROWS(ball(p3, 9, 1));
}

TEST_CASE("grid ball is the 13-vertex diamond") {
  auto lazy = LazyGraph::grid2d();
  auto b = ball(lazy, lazy.basepoint(), 2);
  CHECK(b.graph.vertex_count() == 13);
  CHECK(b.sphere.size() == 8);
}

TEST_CASE("ball monotonicity on lazy generators") {
  for (const char* name : {"biinfinite_path", "grid2d", "scaled_squares", "ladder"}) {
    auto lazy = LazyGraph::by_name(name);
    for (int r = 0; r < 4; ++r) {
      auto small = ball(lazy, lazy.basepoint(), r);
      auto big = ball(lazy, lazy.basepoint(), r + 1);
      for (Vertex v : small.graph.vertices()) CHECK(big.graph.has_vertex(v));
      for (Vertex v : big.sphere) CHECK_FALSE(small.graph.has_vertex(v));
    }
  }
}

TEST_CASE("lazy truncation consistency") {
  auto lazy = LazyGraph::scaled_squares();
  for (int r = 1; r <= 3; ++r) {
    for (int R = r; R <= r + 2; ++R) {
      auto outer = ball(lazy, lazy.basepoint(), R);
      auto direct = ball(lazy, lazy.basepoint(), r);
      auto nested_ball = ball(outer.graph, lazy.basepoint(), r);
      CHECK(direct.graph == nested_ball.graph);
      CHECK(direct.sphere == nested_ball.sphere);
    }
  }
}

TEST_CASE("lazy oracle symmetry spot checks") {
  for (const char* name : {"biinfinite_path", "grid2d", "scaled_squares", "ladder"}) {
    auto lazy = LazyGraph::by_name(name);
    auto b = ball(lazy, lazy.basepoint(), 3);
    for (Vertex v : b.graph.vertices()) {
      for (Vertex w : lazy.neighbors(v)) {
        auto back = lazy.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
  }
  auto tree = LazyGraph::regular_tree(3);
  auto tree_ball = ball(tree, 0, 3);
  for (Vertex v : tree_ball.graph.vertices()) {
    CHECK(tree.neighbors(v).size() == 3);
    for (Vertex w : tree.neighbors(v)) {
      auto back = tree.neighbors(w);
      CHECK(std::binary_search(back.begin(), back.end(), v));
    }
  }
}

TEST_CASE("k-connectivity matches the brute oracle on the corpus") {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 16) continue;
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      CHECK(is_k_connected(g, k) == corpus::oracle_is_k_connected(g, k));
    }
  }
}

TEST_CASE("named connectivity facts") {
  CHECK(is_k_connected(corpus::complete(4), 3));
  CHECK_FALSE(is_k_connected(corpus::diamond(), 3));
  CHECK(is_k_connected(corpus::cycle(4), 2));
  CHECK_THROWS(is_k_connected(corpus::path(3).remove_vertices({1}), 1));
}

TEST_CASE("disjoint paths and cuts") {
  Graph k4 = corpus::complete(4);
  auto res = internally_disjoint_paths(k4, 0, 3, 3);
  REQUIRE(res.success);
  REQUIRE(res.paths.size() == 3);
  std::set<Vertex> internal;
  for (const auto& p : res.paths) {
    CHECK(p.valid_in(k4));
    CHECK(p.vertices.front() == 0);
    CHECK(p.vertices.back() == 3);
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
      CHECK(internal.insert(p.vertices[i]).second);
  }

  Graph p3 = corpus::path(3);
  auto cut = internally_disjoint_paths(p3, 0, 2, 2);
  CHECK_FALSE(cut.success);
  REQUIRE(cut.cut_available);
  CHECK(cut.cut == std::vector<Vertex>{1});

  Graph c4 = corpus::cycle(4);
  auto arcs = internally_disjoint_paths(c4, 0, 2, 2);
  REQUIRE(arcs.success);
  CHECK(arcs.paths.size() == 2);

  CHECK_THROWS(internally_disjoint_paths(k4, 1, 1, 1));
}

TEST_CASE("menger duality on small corpus graphs") {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 12) continue;
    CAPTURE(name);
    for (int k = 1; k <= 3; ++k) {
      bool conn = is_k_connected(g, k);
      bool all_pairs = static_cast<long long>(g.vertex_count()) > k;
      for (std::size_t i = 0; i < g.vertex_count() && all_pairs; ++i) {
        for (std::size_t j = i + 1; j < g.vertex_count() && all_pairs; ++j) {
          Vertex u = g.vertices()[i], v = g.vertices()[j];
          int have = g.has_edge(u, v)
                         ? k  // adjacent pairs cannot be separated by vertices
                         : max_internally_disjoint_paths(g, u, v);
          if (have < k) all_pairs = false;
        }
      }
      CHECK(conn == all_pairs);
    }
  }
}

TEST_CASE("path witness validation") {
  Graph c4 = corpus::cycle(4);
  PathWitness walk{PathWitness::Kind::Path, {0, 1, 2}, 0};
  CHECK(walk.valid_in(c4));
  PathWitness cyc{PathWitness::Kind::Cycle, {0, 1, 2, 3}, 0};
  CHECK(cyc.valid_in(c4));
  PathWitness bad{PathWitness::Kind::Path, {0, 2}, 0};
  CHECK_FALSE(bad.valid_in(c4));
  PathWitness dup{PathWitness::Kind::Path, {0, 1, 0}, 0};
  CHECK_FALSE(dup.valid_in(c4));
}

TEST_CASE("minor model verification") {
  Graph g = corpus::cycle(6);
  Graph h = corpus::complete(3);

  SUBCASE("identity model") {
    MinorModel id;
    for (Vertex v : h.vertices()) id.branch_sets[v] = {v};
    for (const auto& e : h.edges()) id.edge_map[e] = e;
    CHECK(verify_minor_model(h, h, id));
  }

  SUBCASE("C6 contracts onto K3") {
    MinorModel m;
    m.branch_sets[0] = {0, 1};
    m.branch_sets[1] = {2, 3};
    m.branch_sets[2] = {4, 5};
    m.edge_map[{0, 1}] = Edge{1, 2};
    m.edge_map[{0, 2}] = Edge{0, 5};
    m.edge_map[{1, 2}] = Edge{3, 4};
    CHECK(verify_minor_model(g, h, m));

    SUBCASE("overlapping branch sets fail") {
      m.branch_sets[1] = {1, 2, 3};
      CHECK_FALSE(verify_minor_model(g, h, m));
    }
    SUBCASE("wrong edge endpoint fails") {
      m.edge_map[{0, 1}] = Edge{3, 4};
      CHECK_FALSE(verify_minor_model(g, h, m));
    }
    SUBCASE("disconnected branch set fails") {
      m.branch_sets[0] = {0, 3};
      m.branch_sets[1] = {1, 2};
      CHECK_FALSE(verify_minor_model(g, h, m));
    }
  }
}

TEST_CASE("edge list round trip") {
  for (const auto& [name, g] : corpus::all_connected()) {
    CAPTURE(name);
    std::istringstream in(emit_edge_list(g));
    CHECK(parse_edge_list(in) == g);
  }
}
