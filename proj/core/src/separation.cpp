#include "sepforest/separation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepforest {

namespace {

// Component id (least vertex) of every vertex of G\S, -1 on S itself.
std::map<Vertex, Vertex> components_off(const Graph& g,
                                        const std::set<Vertex>& s) {
  std::vector<Vertex> rest;
  for (Vertex v : g.vertices())
    if (!s.count(v)) rest.push_back(v);
  Graph off = g.induced(rest);
  std::map<Vertex, Vertex> comp;
  for (const auto& cls : connected_components(off))
    for (Vertex v : cls) comp[v] = cls.front();
  for (Vertex v : s) comp[v] = -1;
  return comp;
}

Vertex outer_endpoint(const Edge& e, const std::set<Vertex>& s) {
  return s.count(e.first) ? e.second : e.first;
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

SeparationValidation validate_separation(const Graph& g,
                                         const std::vector<Vertex>& s,
                                         const std::vector<Edge>& b) {
  SeparationValidation res;
  std::set<Vertex> sset;
  for (Vertex v : s) {
    if (!g.has_vertex(v)) {
      res.violation = "adhesion vertex " + std::to_string(v) + " not in graph";
      return res;
    }
    sset.insert(v);
  }
  if (!sset.empty()) {
    std::vector<Vertex> comp_hits;
    for (const auto& cls : connected_components(g)) {
      for (Vertex v : cls)
        if (sset.count(v)) {
          comp_hits.push_back(cls.front());
          break;
        }
    }
    if (comp_hits.size() > 1) {
      res.violation = "adhesion set spans multiple components";
      return res;
    }
  }

  std::set<Edge> bset;
  for (const auto& raw : b) {
    Edge e = make_edge(raw.first, raw.second);
    if (!g.has_edge(e.first, e.second)) {
      res.violation = "cut edge " + edge_str(e) + " not in graph";
      return res;
    }
    if (sset.count(e.first) == sset.count(e.second)) {
      res.violation = "cut edge " + edge_str(e) + " not in the boundary of S";
      return res;
    }
    bset.insert(e);
  }

  auto comp = components_off(g, sset);
  std::set<Vertex> reached;  // components hit by B
  for (const auto& e : bset) reached.insert(comp.at(outer_endpoint(e, sset)));
  for (const auto& e : g.boundary({sset.begin(), sset.end()})) {
    if (reached.count(comp.at(outer_endpoint(e, sset))) && !bset.count(e)) {
      res.violation = "closure condition fails at edge " + edge_str(e);
      return res;
    }
  }

  res.ok = true;
  res.separation.adhesion.assign(sset.begin(), sset.end());
  res.separation.cut.assign(bset.begin(), bset.end());
  return res;
}

Separation complement(const Graph& g, const Separation& sep) {
  std::set<Edge> b(sep.cut.begin(), sep.cut.end());
  Separation out;
  out.adhesion = sep.adhesion;
  for (const auto& e : g.boundary(sep.adhesion))
    if (!b.count(e)) out.cut.push_back(e);
  std::sort(out.cut.begin(), out.cut.end());
  return out;
}

SideVertexSets side_vertex_sets(const Graph& g, const Separation& sep) {
  std::set<Vertex> sset(sep.adhesion.begin(), sep.adhesion.end());
  auto comp = components_off(g, sset);
  std::set<Vertex> reached;
  for (const auto& e : sep.cut) reached.insert(comp.at(outer_endpoint(e, sset)));

  SideVertexSets out;
  for (Vertex v : g.vertices()) {
    bool in_cbar = !sset.count(v) && reached.count(comp.at(v));
    if (in_cbar || sset.count(v)) out.a1.push_back(v);
    if (!in_cbar) out.a2.push_back(v);
  }
  return out;
}

SidePair sides(const Graph& g, const Separation& sep) {
  auto vs = side_vertex_sets(g, sep);
  return SidePair{g.induced(vs.a1), g.induced(vs.a2)};
}

bool is_proper(const Graph& g, const Separation& sep) {
  if (sep.cut.empty()) return false;
  std::set<Vertex> sset(sep.adhesion.begin(), sep.adhesion.end());
  auto boundary = g.boundary(sep.adhesion);
  if (sep.cut.size() == boundary.size()) return false;
  std::set<Vertex> comps;
  for (const auto& [v, c] : components_off(g, sset))
    if (c >= 0) comps.insert(c);
  return comps.size() >= 2;
}

namespace {

Vertex component_of_adhesion(const Graph& g, const Separation& sep) {
  if (sep.adhesion.empty()) return -1;
  for (const auto& cls : connected_components(g))
    if (std::binary_search(cls.begin(), cls.end(), sep.adhesion.front()))
      return cls.front();
  return -1;
}

}  // namespace

bool leq(const Graph& g, const Separation& s1, const Separation& s2) {
  Vertex c1 = component_of_adhesion(g, s1), c2 = component_of_adhesion(g, s2);
  if (c1 != c2 && c1 >= 0 && c2 >= 0)
    throw std::invalid_argument("separations live in different components");
  auto v1 = side_vertex_sets(g, s1), v2 = side_vertex_sets(g, s2);
  return std::includes(v2.a1.begin(), v2.a1.end(), v1.a1.begin(), v1.a1.end()) &&
         std::includes(v1.a2.begin(), v1.a2.end(), v2.a2.begin(), v2.a2.end());
}

bool nested(const Graph& g, const Separation& s1, const Separation& s2) {
  Separation s2c = complement(g, s2);
  return leq(g, s1, s2) || leq(g, s2, s1) || leq(g, s1, s2c) || leq(g, s2c, s1);
}

namespace {

void subsets_of_size(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<Separation> enumerate_separations(const Graph& g, int max_order) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  if (max_order < 1) return {};
  const auto& verts = g.vertices();
  std::vector<Separation> out;

  for (int k = 1; k <= max_order && k <= static_cast<int>(verts.size()); ++k) {
    subsets_of_size(verts.size(), static_cast<std::size_t>(k),
                    [&](const std::vector<std::size_t>& pick) {
      std::set<Vertex> sset;
      for (std::size_t i : pick) sset.insert(verts[i]);
      auto comp = components_off(g, sset);

      // Boundary edges grouped by the component they lead into.
      std::map<Vertex, std::vector<Edge>> bundle;
      std::vector<Vertex> svec(sset.begin(), sset.end());
      for (const auto& e : g.boundary(svec))
        bundle[comp.at(outer_endpoint(e, sset))].push_back(e);
      std::vector<Vertex> comp_ids;
      for (const auto& [c, _] : bundle) comp_ids.push_back(c);
      if (comp_ids.empty() || comp_ids.size() > 24) return;

      for (std::uint64_t mask = 1; mask < (1ull << comp_ids.size()); ++mask) {
        std::set<Vertex> touched;
        Separation sep;
        sep.adhesion = svec;
        for (std::size_t i = 0; i < comp_ids.size(); ++i) {
          if (!(mask >> i & 1)) continue;
          for (const auto& e : bundle.at(comp_ids[i])) {
            sep.cut.push_back(e);
            touched.insert(sset.count(e.first) ? e.first : e.second);
          }
        }
        if (touched.size() != sset.size()) continue;  // not tight
        std::sort(sep.cut.begin(), sep.cut.end());
        out.push_back(std::move(sep));
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Separation> proper_separations(const Graph& g, int max_order) {
  std::vector<Separation> out;
  for (auto& sep : enumerate_separations(g, max_order))
    if (is_proper(g, sep)) out.push_back(std::move(sep));
  return out;
}

Separation from_vertex_partition(const Graph& g, const std::vector<Vertex>& u1,
                                 const std::vector<Vertex>& u2) {
  std::set<Vertex> set1(u1.begin(), u1.end()), set2(u2.begin(), u2.end());
  for (Vertex v : g.vertices())
    if (!set1.count(v) && !set2.count(v))
      throw std::invalid_argument("cover condition violated: vertex " +
                                  std::to_string(v) + " uncovered");
  for (const auto& [a, b] : g.edges()) {
    bool in1 = set1.count(a) && set1.count(b);
    bool in2 = set2.count(a) && set2.count(b);
    if (!in1 && !in2)
      throw std::invalid_argument("cover condition violated: edge (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ") uncovered");
  }
  std::vector<Vertex> s;
  for (Vertex v : u1)
    if (set2.count(v)) s.push_back(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  std::set<Vertex> sset(s.begin(), s.end());
  std::vector<Edge> b;
  for (const auto& e : g.boundary(s)) {
    if (set1.count(e.first) && set1.count(e.second)) b.push_back(e);
  }
  auto check = validate_separation(g, s, b);
  if (!check.ok)
    throw std::invalid_argument("partition does not induce a separation: " +
                                check.violation);
  return check.separation;
}

std::string emit_separation(const Separation& sep) {
  std::ostringstream out;
  out << "S: ";
  for (std::size_t i = 0; i < sep.adhesion.size(); ++i) {
    if (i) out << ',';
    out << sep.adhesion[i];
  }
  out << " | B: ";
  for (std::size_t i = 0; i < sep.cut.size(); ++i) {
    if (i) out << ',';
    out << '(' << sep.cut[i].first << ',' << sep.cut[i].second << ')';
  }
  return out.str();
}

Separation parse_separation(const std::string& text) {
  auto bar = text.find('|');
  auto scolon = text.find(':');
  if (bar == std::string::npos || scolon == std::string::npos || scolon > bar)
    throw std::invalid_argument("malformed separation text");
  auto bcolon = text.find(':', bar);
  if (bcolon == std::string::npos)
    throw std::invalid_argument("malformed separation text");

  Separation sep;
  std::string spart = text.substr(scolon + 1, bar - scolon - 1);
  std::string bpart = text.substr(bcolon + 1);
  auto digits = [](const std::string& str, std::size_t& pos) {
    while (pos < str.size() && !(isdigit(str[pos]) || str[pos] == '-')) ++pos;
    if (pos >= str.size()) return false;
    return true;
  };
  std::size_t pos = 0;
  while (digits(spart, pos)) {
    std::size_t used = 0;
    sep.adhesion.push_back(std::stoll(spart.substr(pos), &used));
    pos += used;
  }
  pos = 0;
  std::vector<Vertex> nums;
  while (digits(bpart, pos)) {
    std::size_t used = 0;
    nums.push_back(std::stoll(bpart.substr(pos), &used));
    pos += used;
  }
  if (nums.size() % 2)
    throw std::invalid_argument("odd number of cut endpoints");
  for (std::size_t i = 0; i < nums.size(); i += 2)
    sep.cut.push_back(make_edge(nums[i], nums[i + 1]));
  std::sort(sep.adhesion.begin(), sep.adhesion.end());
  std::sort(sep.cut.begin(), sep.cut.end());
  return sep;
}

}  // namespace sepforest
