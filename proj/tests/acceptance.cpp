// Acceptance suite: one check per headline property, each printed as a
// single PASS/FAIL line. Run with no arguments for the full gate or with
// criterion numbers to select. Exits non-zero when any selected check fails.
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sepforest/boolring.hpp"
#include "sepforest/connectivity.hpp"
#include "sepforest/ends.hpp"
#include "sepforest/levels.hpp"
#include "sepforest/planar.hpp"
#include "sepforest/tutte.hpp"

using namespace sepforest;

namespace {

struct Check {
  int failures = 0;
  long long checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

// ---------------------------------------------------------------- 1 ----
// Construction roundtrip: the separations induced by the built tree equal
// the input system, over >= 30 graphs and >= 200 sampled nested systems.
void criterion_1(Check& c) {
  int graphs = 0, systems = 0;
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 24) continue;
    ++graphs;
    for (const auto& sys : corpus::sample_nested_systems(g, 3, 6, 101)) {
      ++systems;
      auto td = tree_decomposition_from_system(sys, g);
      c.expect(validate_tree_decomposition(g, td).ok,
               name + ": output fails validation");
      c.expect(induced_system(td) == sys, name + ": induced system differs");
    }
  }
  c.expect(graphs >= 30, "corpus too small: " + std::to_string(graphs));
  c.expect(systems >= 200, "too few systems: " + std::to_string(systems));
}

// ---------------------------------------------------------------- 2 ----
// Every torso of the 2-separation decomposition of a 2-connected graph is
// 3-connected (certified by exhaustive absence of cuts below 3) or a cycle.
void criterion_2(Check& c) {
  for (const auto& [name, g] : corpus::two_connected()) {
    if (g.vertex_count() > 20) continue;
    auto td = tutte_decomposition(g);
    c.expect(validate_tree_decomposition(g, td).ok, name + ": invalid output");
    for (const auto& t : torsos(td)) {
      TorsoClass cls;
      try {
        cls = classify_torso(t);
      } catch (const std::exception&) {
        c.expect(false, name + ": torso fits no class");
        continue;
      }
      if (cls == TorsoClass::ThreeConnected)
        c.expect(corpus::oracle_is_k_connected(t.graph, 3),
                 name + ": 3-connectivity certificate failed");
      else
        c.expect(cls == TorsoClass::Cycle || t.graph.vertex_count() == 2,
                 name + ": unexpected torso class");
    }
  }
}

// ---------------------------------------------------------------- 3 ----
// Indicator calculus: roundtrips both ways on every separation of order
// <= 3 of every corpus graph <= 16 vertices, and the nestedness test on
// indicators agrees with the separation-level test on every pair.
void criterion_3(Check& c) {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 16) continue;
    auto seps = enumerate_separations(g, 3);
    std::size_t n = g.vertex_count();

    std::vector<BoolFn> fns;
    for (const auto& s : seps) {
      BoolFn f = side_indicator(g, s);
      c.expect(tight_separation(g, f) == s, name + ": inverse roundtrip");
      c.expect(side_indicator(g, tight_separation(g, f)) == f,
               name + ": forward roundtrip");
      fns.push_back(std::move(f));
    }

    // Cached side masks: correspondence swept exhaustively over all pairs,
    // cross-checked against the library predicates on the smaller graphs.
    auto mask_of = [&](const std::vector<Vertex>& vs) {
      std::uint32_t m = 0;
      for (Vertex v : vs) m |= 1u << g.index_of(v);
      return m;
    };
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> a1(seps.size()), a2(seps.size()),
        supp(seps.size()), adhesion(seps.size());
    for (std::size_t i = 0; i < seps.size(); ++i) {
      auto side = side_vertex_sets(g, seps[i]);
      a1[i] = mask_of(side.a1);
      a2[i] = mask_of(side.a2);
      supp[i] = mask_of(fns[i].support);
      adhesion[i] = mask_of(seps[i].adhesion);
    }
    auto subset = [](std::uint32_t x, std::uint32_t y) { return (x & ~y) == 0; };
    bool cross_check = n <= 7;
    long long mismatches = 0;
    for (std::size_t i = 0; i < seps.size(); ++i) {
      for (std::size_t j = 0; j < seps.size(); ++j) {
        // separation level: comparable with the other or its side swap
        bool sep_nested =
            (subset(a1[i], a1[j]) && subset(a2[j], a2[i])) ||
            (subset(a1[j], a1[i]) && subset(a2[i], a2[j])) ||
            (subset(a1[i], a2[j]) && subset(a1[j], a2[i])) ||
            (subset(a2[j], a1[i]) && subset(a2[i], a1[j]));
        // indicator level: comparable, disjoint, or co-disjoint supports
        // with the cut endpoints inside the other support
        bool fn_nested =
            subset(supp[i], supp[j]) || subset(supp[j], supp[i]) ||
            (supp[i] & supp[j]) == 0 ||
            ((supp[i] | supp[j]) == full && subset(adhesion[i], supp[j]) &&
             subset(adhesion[j], supp[i])) ||
            subset(supp[i] & supp[j], adhesion[i] & adhesion[j]);
        if (sep_nested != fn_nested) ++mismatches;
        if (cross_check) {
          c.expect(sep_nested == nested(g, seps[i], seps[j]),
                   name + ": cached separation test drifted");
          c.expect(fn_nested == nested_bool_fns(g, fns[i], fns[j]),
                   name + ": cached indicator test drifted");
        }
      }
    }
    c.expect(mismatches == 0,
             name + ": " + std::to_string(mismatches) + " pair mismatches");
  }
}

// ---------------------------------------------------------------- 4 ----
// Facial cycle bases: verified, of size |E| - |V| + 1, and minimal in the
// sense that dropping any member breaks generation.
void criterion_4(Check& c) {
  int graphs = 0;
  for (const auto& [name, g] : corpus::two_connected_planar()) {
    ++graphs;
    auto basis = two_basis(g);
    c.expect(basis.cycles.size() == g.edge_count() - g.vertex_count() + 1,
             name + ": wrong basis size");
    c.expect(verify_two_basis(g, basis).ok, name + ": verification failed");
    for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
      TwoBasis smaller;
      for (std::size_t j = 0; j < basis.cycles.size(); ++j)
        if (j != i) smaller.cycles.push_back(basis.cycles[j]);
      c.expect(!verify_two_basis(g, smaller).ok,
               name + ": dropped element did not break generation");
    }
  }
  c.expect(graphs >= 15, "too few planar graphs: " + std::to_string(graphs));
}

// ---------------------------------------------------------------- 5 ----
// For every per-vertex choice among the two spherical rotations: the cover
// is a 2-to-1 local isomorphism, the lifted rotation is coherent on every
// component, and every component passes the face-count test.
void criterion_5(Check& c) {
  for (const auto& [name, g] : corpus::three_connected_planar_small()) {
    if (g.vertex_count() > 12) continue;
    auto rs = rotation_choice(g);
    std::size_t n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::map<Vertex, std::vector<Vertex>> choices;
      for (std::size_t i = 0; i < n; ++i) {
        Vertex v = g.vertices()[i];
        std::vector<Vertex> cyc = rs.at(v);
        if (mask >> i & 1) std::reverse(cyc.begin(), cyc.end());
        choices[v] = std::move(cyc);
      }
      auto cocycle = spherical_cocycle(g, choices);
      auto cover = double_cover(g, choices, cocycle);

      bool two_to_one = cover.graph.vertex_count() == 2 * n;
      std::map<Vertex, int> hits;
      for (Vertex lifted : cover.graph.vertices())
        ++hits[DoubleCover::project(lifted)];
      for (const auto& [base, k] : hits) two_to_one = two_to_one && k == 2;
      c.expect(two_to_one, name + ": projection is not 2-to-1");

      bool local_iso = true;
      for (Vertex lifted : cover.graph.vertices()) {
        std::set<Vertex> down;
        for (Vertex w : cover.graph.neighbors(lifted))
          down.insert(DoubleCover::project(w));
        auto base_nb = g.neighbors(DoubleCover::project(lifted));
        local_iso = local_iso &&
                    std::equal(down.begin(), down.end(), base_nb.begin(),
                               base_nb.end());
      }
      c.expect(local_iso, name + ": projection is not a local isomorphism");

      for (const auto& comp : connected_components(cover.graph)) {
        Graph sub = cover.graph.induced(comp);
        std::map<Vertex, std::vector<Vertex>> sub_rot;
        for (Vertex v : comp) sub_rot[v] = cover.rotation.at(v);
        c.expect(spherical(sub, RotationSystem(sub_rot)),
                 name + ": component fails the face count");
        auto inner = spherical_cocycle(sub, sub_rot);
        bool coherent = true;
        for (const auto& [e, bit] : inner.value) coherent = coherent && bit == 0;
        c.expect(coherent, name + ": lifted rotation not coherent");
      }
    }
  }
}

// ---------------------------------------------------------------- 6 ----
// Full pipeline: system -> decomposition -> levels -> forests -> glue ->
// project yields a spanning tree of every base component, exactly.
void criterion_6(Check& c) {
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 24) continue;
    for (const auto& sys : corpus::sample_nested_systems(g, 3, 6, 103)) {
      auto dec = decompose_system(sys, g);
      auto z = level_space(g, dec.td);
      Graph l = levels_graph(g, z);
      auto aug = torso_augmentation(z);
      std::vector<Edge> edges = l.edges();
      edges.insert(edges.end(), aug.begin(), aug.end());
      Graph within = Graph::from_edges(edges, l.vertices());
      Graph lift = glue_treeing(z, level_forests(within, z),
                                cross_level_edges(z));
      auto comps = connected_components(lift);
      c.expect(lift.edge_count() + comps.size() == lift.vertex_count(),
               name + ": lift is not a forest of the right size");

      Graph proj = project_to_base(lift, z);
      c.expect(connected_components(proj) == connected_components(g),
               name + ": projection changes components");
      c.expect(proj.edge_count() + connected_components(g).size() ==
                   proj.vertex_count(),
               name + ": projection is not a spanning tree");
    }
  }
}

// ---------------------------------------------------------------- 7 ----
// End counts and accessibility cuts of the built-in generators.
void criterion_7(Check& c) {
  auto line = LazyGraph::biinfinite_path();
  for (int r = 3; r <= 10; ++r) {
    auto ends = end_spectrum(line, r);
    c.expect(ends.size() == 2, "line: wrong end count at r=" + std::to_string(r));
    if (ends.size() == 2) {
      auto cut = accessibility_cut(line, ends[0], ends[1], r + 2);
      c.expect(cut.status == CutStatus::Ok && cut.value == 1,
               "line: wrong cut at r=" + std::to_string(r));
    }
  }

  auto grid = LazyGraph::grid2d();
  auto gends = end_spectrum(grid, 5);
  c.expect(gends.size() == 1, "grid: wrong end count");
  if (gends.size() == 1)
    c.expect(thick_end_estimate(grid, gends[0], 5, 12),
             "grid: thick estimate failed");

  auto squares = LazyGraph::scaled_squares();
  for (int r = 3; r <= 6; ++r) {
    auto ends = end_spectrum(squares, r);
    c.expect(ends.size() == 2,
             "squares: wrong end count at r=" + std::to_string(r));
    if (ends.size() == 2) {
      auto cut = accessibility_cut(squares, ends[0], ends[1], r + 2);
      c.expect(cut.status == CutStatus::Ok && cut.value == 4,
               "squares: cut " + std::to_string(cut.value) + " at r=" +
                   std::to_string(r));
    }
  }

  auto tree = LazyGraph::regular_tree(3);
  for (int r = 1; r <= 5; ++r)
    c.expect(end_spectrum(tree, r).size() == 3u << (r - 1),
             "tree: wrong spectrum at r=" + std::to_string(r));
}

// ---------------------------------------------------------------- 8 ----
// Nested thin generators: pairwise nested, all indicators thin, and the
// subring the indicators generate equals the brute order-2 subring.
void criterion_8(Check& c) {
  const std::size_t cap = 1u << 16;
  for (const auto& [name, g] : corpus::all_connected()) {
    if (g.vertex_count() > 12) continue;
    auto gens = nested_thin_generators(g, 2, cap);
    std::vector<BoolFn> images{constant_fn(g, true)};
    for (const auto& s : gens) {
      BoolFn f = side_indicator(g, s);
      int m = static_cast<int>(coboundary(g, f).size());
      c.expect(is_thin(g, f, m, cap).thin, name + ": non-thin generator");
      images.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        c.expect(nested(g, gens[i], gens[j]), name + ": generators not nested");
    auto lhs = subring_closure(g, images, cap);
    auto rhs = subring_closure(g, bounded_coboundary_elements(g, 2), cap);
    c.expect(!lhs.cap_exceeded && !rhs.cap_exceeded, name + ": cap exceeded");
    c.expect(lhs.elements == rhs.elements, name + ": closure mismatch");
  }
}

// ---------------------------------------------------------------- 9 ----
// The corridor chain on scaled-squares truncations keeps the finite
// betweenness property while the number of members separating (4,4) from
// (1,1) grows strictly with the radius.
void criterion_9(Check& c) {
  auto lazy = LazyGraph::scaled_squares();
  Vertex u = LazyGraph::scaled_squares_id(2, 0);
  Vertex v = LazyGraph::scaled_squares_id(0, 0);

  int prev = 0;
  for (int radius = 2; radius <= 5; ++radius) {
    auto t = ball(lazy, lazy.basepoint(), radius);
    const Graph& g = t.graph;
    std::vector<Separation> chain;
    for (int n = 1; n <= radius - 1; ++n) {
      std::vector<Vertex> s{LazyGraph::scaled_squares_id(1, 0),
                            LazyGraph::scaled_squares_id(-n, 0)};
      for (int k = -n; k <= 1; ++k) {
        s.push_back(LazyGraph::scaled_squares_id(k, 1));
        s.push_back(LazyGraph::scaled_squares_id(k, 3));
      }
      std::sort(s.begin(), s.end());
      std::set<Vertex> sset(s.begin(), s.end());
      std::vector<Vertex> rest;
      for (Vertex w : g.vertices())
        if (!sset.count(w)) rest.push_back(w);
      std::vector<Vertex> inner;
      for (const auto& comp : connected_components(g.induced(rest)))
        if (std::binary_search(comp.begin(), comp.end(), v)) inner = comp;
      std::vector<Edge> b;
      for (const auto& e : g.boundary(s)) {
        Vertex outer = sset.count(e.first) ? e.second : e.first;
        if (!std::binary_search(inner.begin(), inner.end(), outer))
          b.push_back(e);
      }
      auto val = validate_separation(g, s, b);
      c.expect(val.ok, "chain member invalid at radius " +
                           std::to_string(radius));
      if (val.ok) chain.push_back(val.separation);
    }
    auto sys = make_system(chain, g);
    c.expect(sys.nested, "chain not nested at radius " + std::to_string(radius));
    if (sys.nested)
      c.expect(check_finite_betweenness(sys, g).holds,
               "betweenness fails at radius " + std::to_string(radius));
    std::vector<BoolFn> images;
    for (const auto& s : chain) images.push_back(side_indicator(g, s));
    int count = separating_count(images, u, v);
    c.expect(count == radius - 1 && count > prev,
             "separating count " + std::to_string(count) + " at radius " +
                 std::to_string(radius));
    prev = count;
  }
}

struct Criterion {
  int number;
  const char* label;
  std::function<void(Check&)> fn;
};

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> cs = {
      {1, "construction roundtrip over sampled nested systems", criterion_1},
      {2, "2-separation torso dichotomy with brute certificates", criterion_2},
      {3, "indicator calculus roundtrips and nestedness transport", criterion_3},
      {4, "facial cycle bases: size, verification, minimality", criterion_4},
      {5, "orientation double covers for every rotation choice", criterion_5},
      {6, "glue treeing projects to base spanning trees", criterion_6},
      {7, "end spectra and accessibility cuts of the generators", criterion_7},
      {8, "nested thin generators span the order-2 subring", criterion_8},
      {9, "corridor chain: finite betweenness, growing separation", criterion_9},
  };
  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& crit : all_criteria()) {
    if (!selected.empty() && !selected.count(crit.number)) continue;
    Check check;
    auto start = std::chrono::steady_clock::now();
    crit.fn(check);
    auto secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (check.failures == 0) {
      std::printf("CRITERION %d: PASS  (%lld checks, %.1fs)  %s\n",
                  crit.number, check.checks, secs, crit.label);
    } else {
      ++failed;
      std::printf("CRITERION %d: FAIL  (%d of %lld checks, %.1fs)  %s\n",
                  crit.number, check.failures, check.checks, secs, crit.label);
      std::printf("  first failure: %s\n", check.first_failure.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
