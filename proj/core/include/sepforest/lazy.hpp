#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sepforest/graph.hpp"

namespace sepforest {

// Infinite (or just unbounded) graph presented by a pure neighbor oracle
// plus a basepoint. All access goes through radius-bounded truncations.
// The oracle must be symmetric (u in N(v) iff v in N(u)) and deterministic,
// so truncations are replayable.
class LazyGraph {
 public:
  using Oracle = std::function<std::vector<Vertex>(Vertex)>;

  LazyGraph(std::string name, std::vector<long long> params, Vertex basepoint,
            Oracle oracle);

  const std::string& name() const { return name_; }
  const std::vector<long long>& params() const { return params_; }
  Vertex basepoint() const { return basepoint_; }

  // Sorted neighbor list for v.
  std::vector<Vertex> neighbors(Vertex v) const;

  // Built-in generators. Vertex ids encode the generator's natural
  // coordinates through fixed bijections so runs are reproducible.
  static LazyGraph biinfinite_path();
  static LazyGraph grid2d();
  static LazyGraph regular_tree(int degree);
  static LazyGraph scaled_squares();
  static LazyGraph ladder();

  // Lookup by generator name; regular_tree takes its degree as parameter.
  static LazyGraph by_name(const std::string& name,
                           const std::vector<long long>& params = {});

  // Vertex id of the scaled_squares point at the given scale and ring
  // corner (0..3, consecutive corners adjacent along the ring).
  static Vertex scaled_squares_id(long long scale, int corner);
  static Vertex grid2d_id(long long x, long long y);
  static Vertex biinfinite_path_id(long long n);
  static Vertex ladder_id(long long n, int side);

 private:
  std::string name_;
  std::vector<long long> params_;
  Vertex basepoint_;
  Oracle oracle_;
};

Ball ball(const LazyGraph& g, Vertex v, int radius);

}  // namespace sepforest
