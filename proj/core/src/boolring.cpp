#include "sepforest/boolring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace sepforest {

namespace {

// Dense index-space mask over g.vertices(); keeps closure loops tight.
using Mask = std::vector<std::uint64_t>;

Mask to_mask(const Graph& g, const BoolFn& f) {
  Mask m((g.vertex_count() + 63) / 64, 0);
  for (Vertex v : f.support) {
    std::size_t i = g.index_of(v);
    m[i / 64] |= 1ull << (i % 64);
  }
  return m;
}

BoolFn from_mask(const Graph& g, const Mask& m) {
  BoolFn f;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (m[i / 64] >> (i % 64) & 1) f.support.push_back(g.vertices()[i]);
  return f;
}

Mask mask_add(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

Mask mask_mul(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

}  // namespace

bool BoolFn::value_at(Vertex v) const {
  return std::binary_search(support.begin(), support.end(), v);
}

BoolFn constant_fn(const Graph& g, bool one) {
  BoolFn f;
  if (one) f.support = g.vertices();
  return f;
}

BoolFn fn_add(const Graph& g, const BoolFn& f, const BoolFn& h) {
  return from_mask(g, mask_add(to_mask(g, f), to_mask(g, h)));
}

BoolFn fn_mul(const BoolFn& f, const BoolFn& h) {
  BoolFn out;
  std::set_intersection(f.support.begin(), f.support.end(), h.support.begin(),
                        h.support.end(), std::back_inserter(out.support));
  return out;
}

BoolFn fn_star(const Graph& g, const BoolFn& f) {
  BoolFn out;
  std::set_difference(g.vertices().begin(), g.vertices().end(),
                      f.support.begin(), f.support.end(),
                      std::back_inserter(out.support));
  return out;
}

std::vector<Edge> coboundary(const Graph& g, const BoolFn& f) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (f.value_at(e.first) != f.value_at(e.second)) out.push_back(e);
  return out;
}

BoolFn side_indicator(const Graph& g, const Separation& sep) {
  auto vs = side_vertex_sets(g, sep);
  BoolFn f;
  f.support = vs.a2;
  // Value 1 everywhere outside this separation's component as well; the
  // second side already contains those vertices by construction.
  return f;
}

Separation tight_separation(const Graph& g, const BoolFn& f) {
  auto delta = coboundary(g, f);
  if (delta.empty())
    throw std::invalid_argument("constant function has no separation");
  std::set<Vertex> s;
  for (const auto& [a, b] : delta) s.insert(f.value_at(a) ? a : b);
  Separation sep;
  sep.adhesion.assign(s.begin(), s.end());
  sep.cut = delta;
  return sep;
}

bool nested_bool_fns(const Graph& g, const BoolFn& f, const BoolFn& h) {
  auto geq = [](const BoolFn& x, const BoolFn& y) {
    return std::includes(x.support.begin(), x.support.end(), y.support.begin(),
                         y.support.end());
  };
  // Comparable supports, or one side comparable with the swap of the other.
  // The swap conditions carry the incident coboundary endpoints along so
  // that the test agrees with nestedness of the underlying separations.
  if (geq(f, h) || geq(h, f)) return true;

  BoolFn meet = fn_mul(f, h);
  BoolFn join;
  std::set_union(f.support.begin(), f.support.end(), h.support.begin(),
                 h.support.end(), std::back_inserter(join.support));

  auto one_side_endpoints = [&](const BoolFn& x) {
    BoolFn s;
    for (const auto& [a, b] : coboundary(g, x))
      s.support.push_back(x.value_at(a) ? a : b);
    std::sort(s.support.begin(), s.support.end());
    s.support.erase(std::unique(s.support.begin(), s.support.end()),
                    s.support.end());
    return s;
  };

  if (meet.support.empty()) return true;
  if (join.support.size() == g.vertex_count()) {
    if (geq(h, one_side_endpoints(f)) && geq(f, one_side_endpoints(h)))
      return true;
  }
  BoolFn sf = one_side_endpoints(f), sh = one_side_endpoints(h);
  return geq(sf, meet) && geq(sh, meet);
}

int separating_count(const std::vector<BoolFn>& family, Vertex u, Vertex v) {
  int count = 0;
  for (const auto& f : family)
    if (f.value_at(u) != f.value_at(v)) ++count;
  return count;
}

ClosureResult subring_closure(const Graph& g, const std::vector<BoolFn>& gens,
                              std::size_t cap) {
  std::set<Mask> seen;
  std::vector<Mask> elements;
  std::vector<Mask> work;
  for (const auto& f : gens) {
    Mask m = to_mask(g, f);
    if (seen.insert(m).second) {
      elements.push_back(m);
      work.push_back(m);
    }
  }
  ClosureResult res;
  while (!work.empty()) {
    Mask x = work.back();
    work.pop_back();
    std::size_t snapshot = elements.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (Mask m : {mask_add(x, elements[i]), mask_mul(x, elements[i])}) {
        if (seen.insert(m).second) {
          if (seen.size() > cap) {
            res.cap_exceeded = true;
            res.partial_size = seen.size();
            return res;
          }
          elements.push_back(m);
          work.push_back(m);
        }
      }
    }
  }
  for (const auto& m : elements) res.elements.push_back(from_mask(g, m));
  std::sort(res.elements.begin(), res.elements.end());
  return res;
}

std::vector<BoolFn> bounded_coboundary_elements(const Graph& g, int max_cut) {
  if (max_cut < 0) return {};
  const auto& edges = g.edges();
  std::size_t n = g.vertex_count();
  std::vector<BoolFn> out;

  // For a candidate coboundary: components of the graph without those
  // edges, then parity-consistent 2-colorings of the component quotient.
  auto try_subset = [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> removed(edges.size(), false);
    for (std::size_t i : pick) removed[i] = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removed[i]) continue;
      std::size_t a = find(g.index_of(edges[i].first));
      std::size_t b = find(g.index_of(edges[i].second));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    // Every picked edge must join two distinct components.
    for (std::size_t i : pick) {
      if (find(g.index_of(edges[i].first)) == find(g.index_of(edges[i].second)))
        return;
    }
    // Components as quotient nodes.
    std::map<std::size_t, std::size_t> qid;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = find(i);
      if (!qid.count(r)) {
        std::size_t next = qid.size();
        qid[r] = next;
      }
    }
    std::size_t q = qid.size();
    if (q > 24) throw std::runtime_error("too many components for enumeration");

    // Propagate must-differ constraints; reject odd cycles per subset.
    std::vector<int> color(q, -1);
    std::vector<std::vector<std::pair<std::size_t, int>>> cadj(q);
    for (std::size_t i : pick) {
      std::size_t a = qid.at(find(g.index_of(edges[i].first)));
      std::size_t b = qid.at(find(g.index_of(edges[i].second)));
      cadj[a].push_back({b, 1});
      cadj[b].push_back({a, 1});
    }
    std::vector<std::size_t> roots;
    std::vector<int> offset(q, 0);  // color relative to the constraint root
    for (std::size_t s = 0; s < q; ++s) {
      if (color[s] >= 0) continue;
      roots.push_back(s);
      color[s] = static_cast<int>(roots.size()) - 1;  // constraint comp. id
      offset[s] = 0;
      std::vector<std::size_t> queue{s};
      while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        for (auto [y, parity] : cadj[x]) {
          if (color[y] < 0) {
            color[y] = color[s];
            offset[y] = offset[x] ^ parity;
            queue.push_back(y);
          } else if ((offset[x] ^ parity) != offset[y]) {
            return;  // odd constraint cycle
          }
        }
      }
    }
    if (roots.size() > 20)
      throw std::runtime_error("too many free components for enumeration");

    for (std::uint64_t choice = 0; choice < (1ull << roots.size()); ++choice) {
      BoolFn f;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = qid.at(find(i));
        int bit = static_cast<int>(choice >> color[c] & 1) ^ offset[c];
        if (bit) f.support.push_back(g.vertices()[i]);
      }
      out.push_back(std::move(f));
    }
  };

  std::vector<std::size_t> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    try_subset(pick);
    if (left == 0) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
      pick.push_back(i);
      rec(i + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(0, max_cut);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThinCheck is_thin(const Graph& g, const BoolFn& f, int n, std::size_t cap) {
  ThinCheck res;
  auto delta = coboundary(g, f);
  res.order = static_cast<int>(delta.size());
  if (res.order != n) {
    res.reason = "coboundary size is " + std::to_string(res.order) +
                 ", not " + std::to_string(n);
    return res;
  }
  auto gens = bounded_coboundary_elements(g, n - 1);
  auto closure = subring_closure(g, gens, cap);
  if (closure.cap_exceeded)
    throw std::runtime_error("closure cap exceeded at size " +
                             std::to_string(closure.partial_size));
  res.generator_count = gens.size();
  res.closure_size = closure.elements.size();
  if (std::binary_search(closure.elements.begin(), closure.elements.end(), f)) {
    res.reason = "already in the order-" + std::to_string(n - 1) + " subring";
    return res;
  }
  res.thin = true;
  return res;
}

std::vector<BoolFn> thin_separating(const Graph& g, int n, Vertex u, Vertex v,
                                    std::size_t cap) {
  std::vector<BoolFn> out;
  if (u == v) return out;

  // Closure of each lower order, for thinness at the element's own size.
  std::vector<std::vector<BoolFn>> closures(n);
  for (int m = 0; m < n; ++m) {
    auto c = subring_closure(g, bounded_coboundary_elements(g, m), cap);
    if (c.cap_exceeded)
      throw std::runtime_error("closure cap exceeded at size " +
                               std::to_string(c.partial_size));
    closures[m] = std::move(c.elements);
  }

  for (auto& f : bounded_coboundary_elements(g, n)) {
    if (f.value_at(u) == f.value_at(v)) continue;
    int m = static_cast<int>(coboundary(g, f).size());
    if (m == 0) continue;
    const auto& below = closures[m - 1];
    if (std::binary_search(below.begin(), below.end(), f)) continue;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Separation> nested_thin_generators(const Graph& g, int k,
                                               std::size_t cap) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<Separation> chosen;
  std::vector<BoolFn> chosen_fns;

  for (int n = 1; n <= k; ++n) {
    auto below = subring_closure(g, bounded_coboundary_elements(g, n - 1), cap);
    if (below.cap_exceeded)
      throw std::runtime_error("closure cap exceeded at size " +
                               std::to_string(below.partial_size));

    // Order-n thin candidates as tight separations, canonical order.
    std::vector<std::pair<Separation, BoolFn>> cands;
    for (auto& f : bounded_coboundary_elements(g, n)) {
      if (static_cast<int>(coboundary(g, f).size()) != n) continue;
      if (std::binary_search(below.elements.begin(), below.elements.end(), f))
        continue;
      cands.push_back({tight_separation(g, f), f});
    }
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Greedy kernel: keep whatever is nested with everything kept so far.
    for (auto& [sep, f] : cands) {
      bool ok = true;
      for (const auto& prev : chosen_fns) {
        if (!nested_bool_fns(g, f, prev)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(sep);
      chosen_fns.push_back(f);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace sepforest
