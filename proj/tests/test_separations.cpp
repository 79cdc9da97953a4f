#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"

using namespace sepforest;

TEST_CASE("validation accepts the textbook cases") {
  Graph p3 = corpus::path(3);
  auto v = validate_separation(p3, {1}, {{1, 2}});
  REQUIRE(v.ok);
  CHECK(v.separation.adhesion == std::vector<Vertex>{1});

  // Diamond: adhesion at the shared edge, cut toward one apex.
  Graph d = corpus::diamond();
  auto w = validate_separation(d, {0, 1}, {{0, 2}, {1, 2}});
  CHECK(w.ok);

  // Star: each leaf is its own component, so one edge is a closed cut.
  Graph s3 = corpus::star(3);
  CHECK(validate_separation(s3, {0}, {{0, 1}}).ok);

  SUBCASE("closure violations are reported with the edge") {
    Graph c4 = corpus::cycle(4);
    auto bad = validate_separation(c4, {0, 2}, {{0, 1}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("closure") != std::string::npos);
  }
  SUBCASE("cut outside the boundary") {
    auto bad = validate_separation(p3, {0}, {{1, 2}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("boundary") != std::string::npos);
  }
  SUBCASE("adhesion across components") {
    Graph two = Graph::from_edges({{0, 1}, {2, 3}});
    auto bad = validate_separation(two, {0, 2}, {});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("components") != std::string::npos);
  }
}

TEST_CASE("complement is an involution and swaps sides") {
  Graph p3 = corpus::path(3);
  Separation s{{1}, {{1, 2}}};
  Separation c = complement(p3, s);
  CHECK(c.cut == std::vector<Edge>{{0, 1}});
  CHECK(complement(p3, c) == s);

  Graph s3 = corpus::star(3);
  Separation t{{0}, {{0, 1}}};
  CHECK(complement(s3, t).cut == std::vector<Edge>{{0, 2}, {0, 3}});

  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 10) continue;
    CAPTURE(name);
    for (const auto& sep : enumerate_separations(g, 2)) {
      CHECK(complement(g, complement(g, sep)) == sep);
      auto sp = sides(g, sep);
      auto cp = sides(g, complement(g, sep));
      CHECK(sp.a1 == cp.a2);
      CHECK(sp.a2 == cp.a1);
    }
  }
}

TEST_CASE("sides reproduce the construction") {
  Graph p3 = corpus::path(3);
  auto sp = sides(p3, {{1}, {{1, 2}}});
  CHECK(sp.a1 == Graph::from_edges({{1, 2}}));
  CHECK(sp.a2 == Graph::from_edges({{0, 1}}));

  Graph d = corpus::diamond();
  auto dp = sides(d, {{0, 1}, {{0, 2}, {1, 2}}});
  CHECK(dp.a1 == Graph::from_edges({{0, 1}, {0, 2}, {1, 2}}));
  CHECK(dp.a2 == Graph::from_edges({{0, 1}, {0, 3}, {1, 3}}));

  // Both sides cover the graph.
  for (const auto& sep : enumerate_separations(corpus::cycle(5), 2)) {
    auto s = sides(corpus::cycle(5), sep);
    std::set<Edge> all(s.a1.edges().begin(), s.a1.edges().end());
    all.insert(s.a2.edges().begin(), s.a2.edges().end());
    CHECK(all.size() == corpus::cycle(5).edge_count());
  }
}

TEST_CASE("proper separations") {
  Graph p3 = corpus::path(3);
  CHECK(is_proper(p3, {{1}, {{1, 2}}}));
  Graph c4 = corpus::cycle(4);
  CHECK_FALSE(is_proper(c4, {{0}, {{0, 1}, {0, 3}}}));  // C4 minus a vertex stays connected
  Graph s3 = corpus::star(3);
  CHECK_FALSE(is_proper(s3, {{0}, {{0, 1}, {0, 2}, {0, 3}}}));  // B = whole boundary
}

TEST_CASE("order relation is a partial order on enumerated separations") {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 8) continue;
    CAPTURE(name);
    auto seps = enumerate_separations(g, 2);
    std::size_t n = seps.size();

    // Library leq against direct side containment, then the order axioms
    // on the cached relation.
    std::vector<SideVertexSets> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = side_vertex_sets(g, seps[i]);
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool expect =
            std::includes(vs[j].a1.begin(), vs[j].a1.end(), vs[i].a1.begin(),
                          vs[i].a1.end()) &&
            std::includes(vs[i].a2.begin(), vs[i].a2.end(), vs[j].a2.begin(),
                          vs[j].a2.end());
        le[i][j] = leq(g, seps[i], seps[j]);
        CHECK(le[i][j] == expect);
      }
    }
    int violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][i]) ++violations;  // reflexivity
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && le[i][j] && le[j][i]) ++violations;  // antisymmetry
        if (!le[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (le[j][k] && !le[i][k]) ++violations;  // transitivity
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("order on the P5 chain") {
  Graph p5 = corpus::path(5);
  Separation s1{{1}, {{0, 1}}};         // toward 0
  Separation s2c{{3}, {{2, 3}}};        // complement points toward 4
  CHECK(leq(p5, s1, s2c));
  CHECK_FALSE(leq(p5, s2c, s1));
}

TEST_CASE("nestedness symmetry and complement invariance") {
  Graph c4 = corpus::cycle(4);
  // Crossing pair on the 4-cycle.
  Separation a{{0, 2}, {{0, 1}, {1, 2}}};
  Separation b{{1, 3}, {{1, 2}, {2, 3}}};
  CHECK_FALSE(nested(c4, a, b));
  CHECK(nested(c4, a, a));

  Graph spider = corpus::spider(3, 2);
  auto seps1 = proper_separations(spider, 1);
  for (const auto& x : seps1)
    for (const auto& y : seps1) CHECK(nested(spider, x, y));

  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 6) continue;
    CAPTURE(name);
    auto seps = enumerate_separations(g, 2);
    for (const auto& x : seps) {
      for (const auto& y : seps) {
        CHECK(nested(g, x, y) == nested(g, y, x));
        CHECK(nested(g, x, y) == nested(g, complement(g, x), y));
      }
    }
  }
}

TEST_CASE("enumeration matches the brute oracle") {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 10) continue;
    CAPTURE(name);
    int cap = g.vertex_count() > 8 ? 2 : 3;
    CHECK(enumerate_separations(g, cap) ==
          corpus::oracle_enumerate_separations(g, cap));
  }
}

TEST_CASE("frozen enumeration counts") {
  CHECK(enumerate_separations(corpus::path(3), 1).size() == 5);

  Graph k2 = Graph::from_edges({{0, 1}});
  auto e2 = enumerate_separations(k2, 1);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == Separation{{0}, {{0, 1}}});
  CHECK(e2[1] == Separation{{1}, {{0, 1}}});

  auto k4 = enumerate_separations(corpus::complete(4), 1);
  CHECK(k4.size() == 4);
  CHECK(proper_separations(corpus::complete(4), 1).empty());

  CHECK(enumerate_separations(corpus::path(5), 2).size() == 27);
}

TEST_CASE("partition correspondence") {
  Graph p3 = corpus::path(3);
  auto sep = from_vertex_partition(p3, {0, 1}, {1, 2});
  CHECK(sep == Separation{{1}, {{0, 1}}});

  // Degenerate second side: the cut is the full boundary.
  Graph s3 = corpus::star(3);
  auto degenerate = from_vertex_partition(s3, {0, 1, 2, 3}, {0});
  CHECK(degenerate.cut.size() == 3);

  CHECK_THROWS(from_vertex_partition(p3, {0}, {2}));

  SUBCASE("round trips with sides") {
    for (const auto& [name, g] : corpus::all_connected()) {
      if (g.vertex_count() > 8) continue;
      CAPTURE(name);
      for (const auto& s : enumerate_separations(g, 2)) {
        auto sp = sides(g, s);
        CHECK(from_vertex_partition(g, sp.a1.vertices(), sp.a2.vertices()) == s);
      }
    }
  }
}

TEST_CASE("text form round trip") {
  Separation s{{1, 4}, {{1, 2}, {4, 7}}};
  CHECK(emit_separation(s) == "S: 1,4 | B: (1,2),(4,7)");
  CHECK(parse_separation(emit_separation(s)) == s);
  Separation no_cut_text = parse_separation("S: 3 | B: ");
  CHECK(no_cut_text.adhesion == std::vector<Vertex>{3});
  CHECK(no_cut_text.cut.empty());
  CHECK_THROWS(parse_separation("garbage"));
}
