#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "sepforest/ends.hpp"

using namespace sepforest;

TEST_CASE("end spectra of the built-in generators") {
  auto line = LazyGraph::biinfinite_path();
  for (int r = 3; r <= 10; ++r) CHECK(end_spectrum(line, r).size() == 2);

  auto grid = LazyGraph::grid2d();
  for (int r = 3; r <= 6; ++r) CHECK(end_spectrum(grid, r).size() == 1);

  auto squares = LazyGraph::scaled_squares();
  for (int r = 3; r <= 6; ++r) CHECK(end_spectrum(squares, r).size() == 2);

  auto tree = LazyGraph::regular_tree(3);
  for (int r = 1; r <= 5; ++r)
    CHECK(end_spectrum(tree, r).size() == 3u << (r - 1));

  auto ladder = LazyGraph::ladder();
  CHECK(end_spectrum(ladder, 4).size() == 2);

  CHECK_THROWS(end_spectrum(line, 0));
  CHECK_THROWS(end_spectrum(line, 3, 0));
}

TEST_CASE("refinement maps deeper approximations into shallower ones") {
  for (const char* name :
       {"biinfinite_path", "grid2d", "scaled_squares", "ladder"}) {
    auto lazy = LazyGraph::by_name(name);
    for (int r = 3; r <= 6; ++r) {
      auto links = refinement_links(lazy, r);
      auto fine = end_spectrum(lazy, r);
      CHECK(links.size() == fine.size());
    }
  }
  auto tree = LazyGraph::regular_tree(3);
  auto links = refinement_links(tree, 4);
  auto coarse_size = end_spectrum(tree, 3, 3).size();
  for (std::size_t target : links) CHECK(target < coarse_size);
}

TEST_CASE("separations separate end pairs") {
  auto line = LazyGraph::biinfinite_path();
  auto ends = end_spectrum(line, 4);
  REQUIRE(ends.size() == 2);
  // order-1 separation at the basepoint, cut toward the positive side
  Separation sep{{0}, {{0, 2}}};  // ids: 0 is n=0, 2 is n=1
  CHECK(separates_end_pair(line, sep, ends[0], ends[1]));

  auto squares = LazyGraph::scaled_squares();
  auto sq_ends = end_spectrum(squares, 4);
  REQUIRE(sq_ends.size() == 2);
  // ring cut between scale 1 and 2: the four radial edges
  std::vector<Vertex> ring;
  std::vector<Edge> cut;
  for (int c = 0; c < 4; ++c) {
    ring.push_back(LazyGraph::scaled_squares_id(1, c));
    cut.push_back(make_edge(LazyGraph::scaled_squares_id(1, c),
                            LazyGraph::scaled_squares_id(2, c)));
  }
  std::sort(ring.begin(), ring.end());
  std::sort(cut.begin(), cut.end());
  CHECK(separates_end_pair(squares, Separation{ring, cut}, sq_ends[0],
                           sq_ends[1]));

  SUBCASE("separation too close to the annulus is rejected") {
    auto far_ends = end_spectrum(line, 2);
    REQUIRE(far_ends.size() == 2);
    Separation outer{{4}, {{4, 6}}};  // ids: n=2 and n=3
    CHECK_THROWS(separates_end_pair(line, outer, far_ends[0], far_ends[1]));
  }
  SUBCASE("mismatched approximations are rejected") {
    auto deep = end_spectrum(line, 5);
    CHECK_THROWS(separates_end_pair(line, sep, ends[0], deep[1]));
  }
}

TEST_CASE("accessibility cuts") {
  auto line = LazyGraph::biinfinite_path();
  for (int r = 3; r <= 10; ++r) {
    auto ends = end_spectrum(line, r);
    REQUIRE(ends.size() == 2);
    auto cut = accessibility_cut(line, ends[0], ends[1], r + 2);
    CHECK(cut.status == CutStatus::Ok);
    CHECK(cut.value == 1);
    CHECK(cut.cut.size() == 1);
  }

  auto squares = LazyGraph::scaled_squares();
  for (int r = 3; r <= 6; ++r) {
    auto ends = end_spectrum(squares, r);
    REQUIRE(ends.size() == 2);
    auto cut = accessibility_cut(squares, ends[0], ends[1], r + 2);
    CHECK(cut.status == CutStatus::Ok);
    CHECK(cut.value == 4);
  }

  auto ladder = LazyGraph::ladder();
  auto lends = end_spectrum(ladder, 4);
  REQUIRE(lends.size() == 2);
  CHECK(accessibility_cut(ladder, lends[0], lends[1], 7).value == 2);

  SUBCASE("merging is reported, not thrown") {
    // the two grid annulus flanks of a path-with-hole merge at larger radius:
    // fabricate by comparing scaled-squares ends against a too-small radius
    auto tree = LazyGraph::regular_tree(3);
    auto tends = end_spectrum(tree, 2);
    REQUIRE(tends.size() >= 2);
    auto res = accessibility_cut(tree, tends[0], tends[1], 5);
    CHECK(res.status == CutStatus::Ok);
    CHECK(res.value == 1);  // tree branches split by one edge
  }
}

TEST_CASE("thick end estimates") {
  auto grid = LazyGraph::grid2d();
  auto gends = end_spectrum(grid, 5);
  REQUIRE(gends.size() == 1);
  CHECK(thick_end_estimate(grid, gends[0], 5, 12));

  auto line = LazyGraph::biinfinite_path();
  auto lends = end_spectrum(line, 4);
  CHECK_FALSE(thick_end_estimate(line, lends[0], 2, 8));
  CHECK(thick_end_estimate(line, lends[0], 1, 8));

  auto tree = LazyGraph::regular_tree(3);
  auto tends = end_spectrum(tree, 3);
  CHECK_FALSE(thick_end_estimate(tree, tends[0], 2, 7));
}
