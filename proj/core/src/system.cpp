#include "sepforest/system.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sepforest {

bool SeparationSystem::contains(const Separation& sep) const {
  return std::binary_search(members.begin(), members.end(), sep);
}

SeparationSystem make_system(const std::vector<Separation>& seps,
                             const Graph& g) {
  std::set<Separation> closed;
  for (const auto& sep : seps) {
    if (!is_proper(g, sep))
      throw std::invalid_argument("improper separation: " + emit_separation(sep));
    closed.insert(sep);
    closed.insert(complement(g, sep));
  }
  SeparationSystem sys;
  sys.members.assign(closed.begin(), closed.end());
  for (const auto& sep : sys.members) {
    if (!is_proper(g, sep))
      throw std::invalid_argument("improper separation after closure: " +
                                  emit_separation(sep));
  }
  sys.nested = true;
  for (std::size_t i = 0; i < sys.members.size() && sys.nested; ++i)
    for (std::size_t j = i + 1; j < sys.members.size() && sys.nested; ++j)
      if (!nested(g, sys.members[i], sys.members[j])) sys.nested = false;
  return sys;
}

BetweennessReport check_finite_betweenness(const SeparationSystem& sys,
                                           const Graph& g) {
  if (!sys.nested) throw std::invalid_argument("system is not nested");
  const auto& m = sys.members;
  std::size_t n = m.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) lt[i][j] = leq(g, m[i], m[j]);

  BetweennessReport rep;
  rep.holds = true;  // finite systems always qualify
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lt[i][j]) continue;
      int between = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && lt[i][k] && lt[k][j]) ++between;
      rep.max_between = std::max(rep.max_between, between);
    }
  }

  // Longest strict chain via DP over the order (it is acyclic).
  std::vector<int> depth(n, -1);
  std::function<int(std::size_t)> height = [&](std::size_t i) -> int {
    if (depth[i] >= 0) return depth[i];
    depth[i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && lt[i][j]) depth[i] = std::max(depth[i], 1 + height(j));
    return depth[i];
  };
  for (std::size_t i = 0; i < n; ++i)
    rep.longest_chain = std::max(rep.longest_chain, height(i));
  return rep;
}

}  // namespace sepforest
