#include "sepforest/dot.hpp"

#include <set>
#include <sstream>

namespace sepforest {

std::string export_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  std::set<Vertex> covered;
  for (const auto& [u, v] : g.edges()) {
    covered.insert(u);
    covered.insert(v);
  }
  for (Vertex v : g.vertices())
    if (!covered.count(v)) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "graph T {\n  node [shape=box];\n";
  for (const auto& [node, bag] : td.bags) {
    out << "  b" << node << " [label=\"";
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (i) out << ' ';
      out << bag[i];
    }
    out << "\"];\n";
  }
  for (const auto& [a, b] : td.tree.edges())
    out << "  b" << a << " -- b" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot_levels(const LevelSpace& z, const Graph& lift) {
  std::ostringstream out;
  out << "graph Z {\n";
  for (Vertex id : lift.vertices()) {
    const auto& p = z.point(id);
    out << "  p" << id << " [label=\"(" << p.base << "," << p.node
        << ")\" colorscheme=set312 style=filled fillcolor="
        << (p.node % 12) + 1 << "];\n";
  }
  for (const auto& [a, b] : lift.edges())
    out << "  p" << a << " -- p" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sepforest
