// Command-line surface for the decomposition toolkit: ingestion,
// decomposition, analysis, emission. Output is deterministic ASCII so runs
// are byte-reproducible.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "sepforest/boolring.hpp"
#include "sepforest/connectivity.hpp"
#include "sepforest/dot.hpp"
#include "sepforest/ends.hpp"
#include "sepforest/lazy.hpp"
#include "sepforest/levels.hpp"
#include "sepforest/planar.hpp"
#include "sepforest/tutte.hpp"

using namespace sepforest;

namespace {

struct Options {
  std::string in, out, gen, dot, flips;
  std::string system_in, system_out, rotation_in, rotation_out;
  int radius = 4;
  int margin = 2;
  int order_cap = 3;
  long long closure_cap = 1 << 16;
  int degree = 3;
  int threads = 1;
  bool project = false;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error("cannot open " + opt.out);
  out << text;
}

void write_dot(const Options& opt, const std::string& text) {
  if (opt.dot.empty()) return;
  std::ofstream out(opt.dot);
  if (!out) throw std::runtime_error("cannot open " + opt.dot);
  out << text;
}

Graph load_graph(const Options& opt) {
  if (opt.in.empty()) throw std::runtime_error("--in is required");
  return parse_edge_list_file(opt.in);
}

LazyGraph load_generator(const Options& opt) {
  std::vector<long long> params;
  if (opt.gen == "regular_tree") params.push_back(opt.degree);
  return LazyGraph::by_name(opt.gen, params);
}

void enforce_enumeration_bounds(const Graph& g, const Options& opt) {
  if (opt.order_cap > 4)
    throw std::runtime_error("--order-cap is limited to 4");
  if (g.vertex_count() > 20)
    throw std::runtime_error("separation enumeration is limited to 20 vertices");
}

// The canonical bounded-order system: every proper separation of order at
// most the cap that is nested with all of them.
SeparationSystem canonical_system(const Graph& g, int cap) {
  std::vector<Separation> keep;
  for (const auto& comp : connected_components(g)) {
    Graph sub = g.induced(comp);
    auto pool = proper_separations(sub, cap);
    for (const auto& cand : pool) {
      bool ok = true;
      for (const auto& other : pool) {
        if (!nested(sub, cand, other)) {
          ok = false;
          break;
        }
      }
      if (ok) keep.push_back(cand);
    }
  }
  return make_system(keep, g);
}

int cmd_generate(const Options& opt) {
  auto lazy = load_generator(opt);
  auto b = ball(lazy, lazy.basepoint(), opt.radius);
  std::ostringstream out;
  out << "# gen=" << lazy.name();
  for (long long p : lazy.params()) out << " param=" << p;
  out << " radius=" << opt.radius << " vertices=" << b.graph.vertex_count()
      << " edges=" << b.graph.edge_count() << '\n';
  out << emit_edge_list(b.graph);
  write_output(opt, out.str());
  write_dot(opt, export_dot(b.graph));
  return 0;
}

SeparationSystem read_system(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Separation> members;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Separation sep = parse_separation(line);
    auto check = validate_separation(g, sep.adhesion, sep.cut);
    if (!check.ok)
      throw std::runtime_error("invalid separation \"" + line +
                               "\": " + check.violation);
    members.push_back(check.separation);
  }
  auto sys = make_system(members, g);
  if (!sys.nested) throw std::runtime_error("separation system is not nested");
  return sys;
}

int cmd_decompose(const Options& opt) {
  Graph g = load_graph(opt);
  SeparationSystem sys;
  if (!opt.system_in.empty()) {
    sys = read_system(g, opt.system_in);
  } else {
    enforce_enumeration_bounds(g, opt);
    sys = canonical_system(g, opt.order_cap);
  }
  if (!opt.system_out.empty()) {
    std::ofstream sout(opt.system_out);
    if (!sout) throw std::runtime_error("cannot open " + opt.system_out);
    for (const auto& sep : sys.members) sout << emit_separation(sep) << '\n';
  }
  auto td = tree_decomposition_from_system(sys, g);
  write_output(opt, emit_td(td));
  write_dot(opt, export_dot(td));
  return 0;
}

int cmd_tutte(const Options& opt) {
  Graph g = load_graph(opt);
  auto td = tutte_blockwise(g);
  std::map<Vertex, std::size_t> file_id;
  for (Vertex node : td.tree.vertices()) file_id[node] = file_id.size() + 1;
  std::ostringstream out;
  out << emit_td(td);
  for (const auto& t : torsos(td)) {
    if (t.graph.vertex_count() < 2) continue;
    out << "c torso " << file_id.at(t.part) << ' '
        << to_string(classify_torso(t)) << '\n';
  }
  write_output(opt, out.str());
  write_dot(opt, export_dot(td));
  return 0;
}

int cmd_basis(const Options& opt) {
  Graph g = load_graph(opt);
  auto basis = two_basis(g);
  auto check = verify_two_basis(g, basis);
  if (!check.ok)
    throw std::runtime_error("basis verification failed: " + check.violation);
  std::ostringstream out;
  out << "# two-basis: " << basis.cycles.size() << " cycles over "
      << g.edge_count() << " edges\n";
  for (const auto& cycle : basis.cycles) {
    out << "c " << cycle.size() << ':';
    for (const auto& e : cycle) out << " (" << e.first << ',' << e.second << ')';
    out << '\n';
  }
  write_output(opt, out.str());
  return 0;
}

std::set<Vertex> parse_flips(const std::string& text) {
  std::set<Vertex> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(std::stoll(item));
  return out;
}

int cmd_cover(const Options& opt) {
  Graph g = load_graph(opt);
  auto rs = rotation_choice(g);
  std::map<Vertex, std::vector<Vertex>> choices;
  if (!opt.rotation_in.empty()) {
    std::ifstream rin(opt.rotation_in);
    if (!rin) throw std::runtime_error("cannot open " + opt.rotation_in);
    std::ostringstream text;
    text << rin.rdbuf();
    RotationSystem given = RotationSystem::parse(text.str());
    if (!given.consistent_with(g))
      throw std::runtime_error("rotation file inconsistent with the graph");
    for (const auto& [v, cyc] : given.orders()) {
      RotationSystem canon({{0, rs.at(v)}});
      RotationSystem mine({{0, cyc}});
      if (!(mine == canon) && !(mine == canon.reversed()))
        throw std::runtime_error("rotation at vertex " + std::to_string(v) +
                                 " is not one of the two spherical choices");
      choices[v] = cyc;
    }
  } else {
    auto flips = parse_flips(opt.flips);
    for (const auto& [v, cyc] : rs.orders()) {
      std::vector<Vertex> c = cyc;
      if (flips.count(v)) std::reverse(c.begin(), c.end());
      choices[v] = c;
    }
  }
  if (!opt.rotation_out.empty()) {
    std::ofstream rout(opt.rotation_out);
    if (!rout) throw std::runtime_error("cannot open " + opt.rotation_out);
    rout << RotationSystem(choices).serialize();
  }
  auto c = spherical_cocycle(g, choices);
  int weight = 0;
  for (const auto& [e, bit] : c.value) weight += bit;
  auto cover = double_cover(g, choices, c);

  std::ostringstream out;
  out << "# cover: vertices=" << cover.graph.vertex_count()
      << " edges=" << cover.graph.edge_count() << " cocycle-weight=" << weight
      << '\n';
  int idx = 0;
  for (const auto& comp : connected_components(cover.graph)) {
    Graph sub = cover.graph.induced(comp);
    std::map<Vertex, std::vector<Vertex>> sub_rot;
    for (Vertex v : comp) sub_rot[v] = cover.rotation.at(v);
    bool ok = spherical(sub, RotationSystem(sub_rot));
    out << "# component " << idx++ << ": vertices=" << comp.size()
        << " spherical=" << (ok ? "yes" : "no") << '\n';
  }
  out << emit_edge_list(cover.graph);
  write_output(opt, out.str());
  write_dot(opt, export_dot(cover.graph));
  return 0;
}

int cmd_levels(const Options& opt) {
  Graph g = load_graph(opt);
  enforce_enumeration_bounds(g, opt);
  auto dec = decompose_system(canonical_system(g, opt.order_cap), g);
  auto z = level_space(g, dec.td);
  Graph l = levels_graph(g, z);
  auto aug = torso_augmentation(z);
  auto w = cross_level_edges(z);

  std::ostringstream out;
  out << "# levels: points=" << z.size() << " within=" << l.edge_count()
      << " torso=" << aug.size() << " cross=" << w.size() << '\n';
  for (std::size_t i = 0; i < z.size(); ++i)
    out << "# point " << i << " = (" << z.points[i].base << ','
        << z.points[i].node << ")\n";
  out << "# within-level edges\n";
  for (const auto& [a, b] : l.edges()) out << a << ' ' << b << '\n';
  out << "# torso augmentation\n";
  for (const auto& [a, b] : aug) out << a << ' ' << b << '\n';
  out << "# cross-level edges\n";
  for (const auto& [a, b] : w) out << a << ' ' << b << '\n';
  write_output(opt, out.str());
  write_dot(opt, export_dot_levels(z, l));
  return 0;
}

int cmd_glue(const Options& opt) {
  Graph g = load_graph(opt);
  enforce_enumeration_bounds(g, opt);
  auto dec = decompose_system(canonical_system(g, opt.order_cap), g);
  auto z = level_space(g, dec.td);
  Graph l = levels_graph(g, z);
  auto aug = torso_augmentation(z);
  std::vector<Edge> edges = l.edges();
  edges.insert(edges.end(), aug.begin(), aug.end());
  Graph within = Graph::from_edges(edges, l.vertices());
  Graph lift = glue_treeing(z, level_forests(within, z), cross_level_edges(z));

  std::ostringstream out;
  if (opt.project) {
    Graph base_tree = project_to_base(lift, z);
    out << "# projected treeing: vertices=" << base_tree.vertex_count()
        << " edges=" << base_tree.edge_count() << '\n';
    out << emit_edge_list(base_tree);
  } else {
    out << "# glue treeing: points=" << lift.vertex_count()
        << " edges=" << lift.edge_count() << '\n';
    for (std::size_t i = 0; i < z.size(); ++i)
      out << "# point " << i << " = (" << z.points[i].base << ','
          << z.points[i].node << ")\n";
    out << emit_edge_list(lift);
  }
  write_output(opt, out.str());
  write_dot(opt, export_dot_levels(z, lift));
  return 0;
}

int cmd_ends(const Options& opt) {
  auto lazy = load_generator(opt);
  auto spectrum = end_spectrum(lazy, opt.radius, opt.margin);
  std::ostringstream out;
  out << "# ends report: gen=" << lazy.name() << " radius=" << opt.radius
      << " margin=" << opt.margin << '\n';
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    out << "end " << i << ": id=" << spectrum[i].id
        << " size=" << spectrum[i].component.size()
        << " outer=" << spectrum[i].outer_boundary.size() << '\n';
  if (spectrum.size() >= 2) {
    auto cut = accessibility_cut(lazy, spectrum[0], spectrum[1],
                                 opt.radius + opt.margin);
    if (cut.status == CutStatus::Merged)
      out << "ends>=" << spectrum.size() << ", min-cut=merged\n";
    else
      out << "ends>=" << spectrum.size() << ", min-cut=" << cut.value << '\n';
  } else {
    out << "ends>=" << spectrum.size() << ", min-cut=n/a\n";
  }
  write_output(opt, out.str());
  return 0;
}

int cmd_analyze(const Options& opt) {
  Graph g = load_graph(opt);
  std::ostringstream out;
  out << "# analyze\n";
  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  auto comps = connected_components(g);
  out << "components: " << comps.size() << '\n';
  std::size_t dmin = g.vertex_count() ? g.degree(g.vertices()[0]) : 0, dmax = 0;
  for (Vertex v : g.vertices()) {
    dmin = std::min(dmin, g.degree(v));
    dmax = std::max(dmax, g.degree(v));
  }
  out << "degree: min=" << dmin << " max=" << dmax << '\n';
  int conn = 0;
  if (comps.size() == 1)
    for (int k = 1; k <= 3 && is_k_connected(g, k); ++k) conn = k;
  out << "connectivity: " << conn << '\n';
  auto pr = is_planar(g);
  if (pr.planar)
    out << "planar: yes\n";
  else
    out << "planar: no (witness: "
        << (pr.kind == KuratowskiKind::K5 ? "K5" : "K3,3") << " subdivision)\n";
  auto blocks = block_decomposition(g);
  out << "blocks: " << blocks.blocks.size()
      << " cutvertices: " << blocks.cutvertices.size() << '\n';
  auto td = tutte_blockwise(g);
  out << "tutte-width: " << width(td) << '\n';
  if (comps.size() == 1 && g.vertex_count() <= 12) {
    auto gens = nested_thin_generators(
        g, 2, static_cast<std::size_t>(opt.closure_cap));
    out << "thin-generators: " << gens.size() << " (order<=2)\n";
  }
  write_output(opt, out.str());
  write_dot(opt, export_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural graph decomposition toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--in", opt.in, "input edge-list file");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--dot", opt.dot, "also write a DOT rendering");
    cmd->add_option("--threads", opt.threads, "worker threads (output unchanged)");
    return cmd;
  };

  auto* generate =
      add_common(app.add_subcommand("generate", "materialize a truncation"));
  generate->add_option("--gen", opt.gen, "generator name")->required();
  generate->add_option("--radius", opt.radius, "truncation radius");
  generate->add_option("--degree", opt.degree, "regular_tree degree");

  auto* decompose = add_common(
      app.add_subcommand("decompose", "canonical bounded-order decomposition"));
  decompose->add_option("--order-cap", opt.order_cap,
                        "separation order cap (<=4)");
  decompose->add_option("--system-in", opt.system_in,
                        "decompose along this separation system");
  decompose->add_option("--system-out", opt.system_out,
                        "write the separation system used");

  add_common(app.add_subcommand("tutte", "blockwise 2-separation decomposition"));

  add_common(app.add_subcommand("basis", "facial cycle basis of a planar graph"));

  auto* cover =
      add_common(app.add_subcommand("cover", "orientation double cover"));
  cover->add_option("--flip", opt.flips,
                    "comma list of vertices whose rotation flips");
  cover->add_option("--rotation-in", opt.rotation_in,
                    "per-vertex rotation choices to use");
  cover->add_option("--rotation-out", opt.rotation_out,
                    "write the rotation choices used");

  auto* levels =
      add_common(app.add_subcommand("levels", "level space of the decomposition"));
  levels->add_option("--order-cap", opt.order_cap, "separation order cap (<=4)");

  auto* glue =
      add_common(app.add_subcommand("glue", "spanning treeing of the level lift"));
  glue->add_option("--order-cap", opt.order_cap, "separation order cap (<=4)");
  glue->add_flag("--project", opt.project, "emit the projected base treeing");

  auto* ends = add_common(app.add_subcommand("ends", "end spectrum of a generator"));
  ends->add_option("--gen", opt.gen, "generator name")->required();
  ends->add_option("--radius", opt.radius, "spectrum radius");
  ends->add_option("--margin", opt.margin, "outer margin");
  ends->add_option("--degree", opt.degree, "regular_tree degree");

  auto* analyze =
      add_common(app.add_subcommand("analyze", "structural summary report"));
  analyze->add_option("--closure-cap", opt.closure_cap,
                      "subring closure size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("generate")) return cmd_generate(opt);
    if (app.got_subcommand("decompose")) return cmd_decompose(opt);
    if (app.got_subcommand("tutte")) return cmd_tutte(opt);
    if (app.got_subcommand("basis")) return cmd_basis(opt);
    if (app.got_subcommand("cover")) return cmd_cover(opt);
    if (app.got_subcommand("levels")) return cmd_levels(opt);
    if (app.got_subcommand("glue")) return cmd_glue(opt);
    if (app.got_subcommand("ends")) return cmd_ends(opt);
    if (app.got_subcommand("analyze")) return cmd_analyze(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
