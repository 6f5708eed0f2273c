#ifndef LIEC_CONSTRUCTIVE_HPP
#define LIEC_CONSTRUCTIVE_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/error.hpp"
#include "liec/family.hpp"
#include "liec/graph.hpp"
#include "liec/structure.hpp"
#include "liec/tree_coloring.hpp"

namespace liec {

struct TraceStep {
  std::string rule;
  std::string detail;
};

/// Which case of the case analysis produced each part of a coloring. Nested
/// sub-instances append their own steps in the order they are solved.
struct ConstructionTrace {
  std::vector<TraceStep> steps;

  void add(std::string rule, std::string detail = {}) { steps.push_back({std::move(rule), std::move(detail)}); }

  bool fired(std::string_view prefix) const {
    return std::any_of(steps.begin(), steps.end(), [&](const auto& s) { return s.rule.starts_with(prefix); });
  }
};

/// A 2-aliec of a shrub: the root edge has color a, and `proper` tells whether
/// the root edge is the (isolated) only violation.
struct ShrubColoring {
  EdgeColoring coloring;
  bool proper = false;
};

namespace detail {

inline std::string describe(const Graph& g, const std::vector<EdgeId>& ids) {
  std::string out;
  for (EdgeId id : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v);
  }
  return out;
}

inline std::vector<EdgeId> minus(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> sb = b;
  std::sort(sb.begin(), sb.end());
  std::erase_if(a, [&](EdgeId id) { return std::binary_search(sb.begin(), sb.end(), id); });
  return a;
}

inline std::vector<EdgeId> plus(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline EdgeId eid(const Graph& g, Vertex a, Vertex b) {
  auto id = g.edge_id(a, b);
  if (!id) fail(ErrorCode::InternalInvariant, "expected edge " + std::to_string(a) + "-" + std::to_string(b));
  return *id;
}

inline std::vector<EdgeId> edges_at(const Graph& g, Vertex v, const std::vector<EdgeId>& within) {
  std::vector<EdgeId> out;
  for (const auto& inc : g.incident(v))
    if (std::find(within.begin(), within.end(), inc.edge) != within.end()) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

/// Merges `part` into `into`; an edge already present must carry the same color.
inline void absorb(EdgeColoring& into, const EdgeColoring& part) {
  for (const auto& [e, c] : part) {
    if (auto old = into.get(e); old && *old != c) fail(ErrorCode::InternalInvariant, "conflicting colors while merging parts");
    into.set(e, c);
  }
}

inline EdgeColoring paint(const Graph& g, const std::vector<EdgeId>& ids, Color c) {
  EdgeColoring out;
  for (EdgeId id : ids) out.set(g.edge(id), c);
  return out;
}

inline EdgeColoring drop(EdgeColoring c, Edge e) {
  c.erase(e);
  return c;
}

inline bool liec_on(const Graph& g, const std::vector<EdgeId>& ids, const EdgeColoring& c) {
  return verify_liec(g.spanning_subgraph(ids), c).ok();
}

/// Renames colors so that edge `e` gets color `target` (a transposition).
inline EdgeColoring rename_to(const EdgeColoring& c, Edge e, Color target) { return invert(c, c.at(e), target); }

inline bool is_odd_path_on(const Graph& g, const std::vector<EdgeId>& ids) {
  return !ids.empty() && is_odd_path(edge_subgraph(g, ids).graph);
}

/// 2-aliec of the shrub formed by `ids`, rooted at the leaf `root`. A 2-liec is
/// returned whenever one exists.
inline ShrubColoring shrub_aliec_on(const Graph& g, const std::vector<EdgeId>& ids, Vertex root) {
  const auto at_root = edges_at(g, root, ids);
  if (at_root.size() != 1) fail(ErrorCode::PreconditionViolated, "shrub root must be a leaf");
  const EdgeId root_id = at_root.front();
  TreeColoringEngine engine(g, ids, 2, {}, {{root_id, 1U << kColorA}}, {root});
  const Vertex w = g.edge(root_id).other(root);
  const auto vals = engine.values(w, kColorA);
  ShrubColoring out;
  out.coloring.set(g.edge(root_id), kColorA);
  const auto liec_vals = vals & ~TreeColoringEngine::bit(1);
  int target;
  if (liec_vals) {
    target = std::countr_zero(liec_vals);
  } else if (vals & TreeColoringEngine::bit(1)) {
    target = 1;
    out.proper = true;
  } else {
    fail(ErrorCode::InternalInvariant, "shrub without a 2-aliec");
  }
  if (!engine.reconstruct(w, kColorA, target, out.coloring)) fail(ErrorCode::InternalInvariant, "shrub reconstruction failed");
  out.coloring.set_palette(2);
  return out;
}

/// Locally irregular coloring of a forest with the fewest colors up to kmax.
inline std::optional<EdgeColoring> forest_min_liec_on(const Graph& g, const std::vector<EdgeId>& ids, int kmax) {
  for (int k = 1; k <= kmax; ++k)
    if (auto c = complete_forest(g, ids, k)) return c;
  return std::nullopt;
}

/// Colors the tree K (edges `k`) hanging at the short leg `v` of a spidey H
/// whose edges are all colored c, so that H together with K is locally
/// irregular. Returns colors for the edges of K only.
inline EdgeColoring glue_spidey_on(const Graph& g, const std::vector<EdgeId>& h, Vertex v, const std::vector<EdgeId>& k,
                                   ConstructionTrace& trace) {
  EdgeColoring out;
  if (k.empty()) return out;
  const auto hk = plus(h, k);
  auto finish = [&](const EdgeColoring& kcol, const std::string& rule) {
    EdgeColoring all = paint(g, h, kColorC);
    absorb(all, kcol);
    if (!liec_on(g, hk, all)) fail(ErrorCode::InternalInvariant, rule + ": glued coloring is not locally irregular");
    trace.add(rule, "leg " + std::to_string(v) + ", K = " + describe(g, k));
    return kcol;
  };

  if (is_odd_path_on(g, k)) {
    for (EdgeId ev : edges_at(g, v, k)) {
      const auto rest = minus(k, {ev});
      const auto parts = edge_components(g, mask_of(g, rest));
      if (!std::all_of(parts.begin(), parts.end(), [](const Reach& r) { return r.edges.size() % 2 == 0; })) continue;
      EdgeColoring kcol;
      if (!rest.empty()) {
        auto two = complete_forest(g, rest, 2);
        if (!two) fail(ErrorCode::InternalInvariant, "even paths without a 2-liec");
        kcol = *two;
      }
      kcol.set(g.edge(ev), kColorC);
      return finish(kcol, "spidey.odd-path");
    }
    fail(ErrorCode::InternalInvariant, "odd path without a splitting edge at the leg");
  }

  if (auto two = complete_forest(g, k, 2)) return finish(*two, "spidey.K-2-liec");

  // K is colorable but has no 2-liec: work with the shrubs of K at v.
  struct Part {
    Vertex w;
    EdgeId root;
    std::vector<EdgeId> edges;
    ShrubColoring col;
    int a_degree;
  };
  std::vector<Part> parts;
  const EdgeMask kmask = mask_of(g, k);
  for (EdgeId id : edges_at(g, v, k)) {
    Part p;
    p.root = id;
    p.w = g.edge(id).other(v);
    p.edges = shrub_edges(g, v, id, kmask);
    p.col = shrub_aliec_on(g, p.edges, v);
    p.a_degree = color_degree(g.spanning_subgraph(p.edges), p.col.coloring, p.w, kColorA);
    parts.push_back(std::move(p));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) { return x.w < y.w; });
  std::stable_partition(parts.begin(), parts.end(), [](const Part& p) { return p.col.proper; });
  const auto l = std::count_if(parts.begin(), parts.end(), [](const Part& p) { return p.col.proper; });
  if (parts.size() > 4) fail(ErrorCode::InternalInvariant, "K without a 2-liec has a vertex of degree above four");
  if (l >= 2) fail(ErrorCode::InternalInvariant, "two proper shrub aliecs at the leg would give K a 2-liec");

  if (l == 1) {
    const std::size_t others = parts.size() - 1;
    for (unsigned mask = 0; mask < (1U << others); ++mask) {
      EdgeColoring kcol = drop(parts[0].col.coloring, g.edge(parts[0].root));
      kcol.set(g.edge(parts[0].root), kColorC);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const bool flip = (mask >> (i - 1)) & 1U;
        absorb(kcol, flip ? invert(parts[i].col.coloring, kColorA, kColorB) : parts[i].col.coloring);
      }
      EdgeColoring all = paint(g, h, kColorC);
      absorb(all, kcol);
      if (liec_on(g, hk, all)) return finish(kcol, mask == 0 ? "spidey.case3" : "spidey.case3.inverted");
    }
    fail(ErrorCode::InternalInvariant, "single proper shrub case could not be completed");
  }

  std::stable_sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) { return x.a_degree > y.a_degree; });
  std::vector<int> seq;
  for (const auto& p : parts) seq.push_back(p.a_degree);
  const std::array<Color, 2> as_cb{kColorC, kColorB};
  EdgeColoring kcol;
  if (seq == std::vector<int>{3, 2, 2}) {
    absorb(kcol, recolor(parts[0].col.coloring, as_cb));
    absorb(kcol, invert(parts[1].col.coloring, kColorA, kColorB));
    absorb(kcol, parts[2].col.coloring);
    return finish(kcol, "spidey.case4.seq-3-2-2");
  }
  if (seq == std::vector<int>{4, 3, 3, 2}) {
    absorb(kcol, parts[0].col.coloring);
    absorb(kcol, recolor(parts[1].col.coloring, as_cb));
    absorb(kcol, parts[2].col.coloring);
    absorb(kcol, invert(parts[3].col.coloring, kColorA, kColorB));
    return finish(kcol, "spidey.case4.seq-4-3-3-2");
  }
  fail(ErrorCode::InternalInvariant, "shrub-based coloring at the leg is not inversion resistant");
}

/// Star H = `h` at `center` colored c, each tree component of `rest` glued at
/// its leg. Returns colors for H and `rest`.
inline EdgeColoring glue_star_on(const Graph& g, Vertex center, const std::vector<EdgeId>& h, const std::vector<EdgeId>& rest,
                                 ConstructionTrace& trace) {
  if (h.size() < 3) fail(ErrorCode::InternalInvariant, "star center needs degree at least three");
  EdgeColoring out = paint(g, h, kColorC);
  std::vector<Vertex> legs;
  for (EdgeId id : h) legs.push_back(g.edge(id).other(center));
  for (const auto& comp : edge_components(g, mask_of(g, rest))) {
    Vertex leg = -1;
    for (Vertex x : comp.vertices)
      if (std::find(legs.begin(), legs.end(), x) != legs.end()) {
        if (leg >= 0) fail(ErrorCode::InternalInvariant, "component touches two legs");
        leg = x;
      }
    if (leg < 0) fail(ErrorCode::InternalInvariant, "component does not touch the star");
    absorb(out, glue_spidey_on(g, h, leg, comp.edges, trace));
  }
  return out;
}

inline EdgeColoring tree_impl(const Graph& g, ConstructionTrace& trace) {
  if (!is_tree(g)) fail(ErrorCode::NotATree, "tree construction needs a tree");
  if (is_odd_path(g)) fail(ErrorCode::NotColorable, "odd paths admit no locally irregular coloring");
  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  for (EdgeId i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  auto c = forest_min_liec_on(g, all, 3);
  if (!c) fail(ErrorCode::InternalInvariant, "colorable tree without a 3-liec");
  trace.add("tree.exact", std::to_string(c->colors_used()) + " colors");
  return *c;
}

inline EdgeColoring even_cycle(const Graph& g, ConstructionTrace& trace) {
  const auto cyc = cycles(g).front();
  const std::size_t len = cyc.size();
  EdgeColoring out;
  for (std::size_t i = 0; i < len; ++i) {
    const Edge e(cyc[i], cyc[(i + 1) % len]);
    const bool tail = len % 4 == 2 && i >= len - 2;
    out.set(e, tail ? kColorC : static_cast<Color>((i / 2) % 2));
  }
  trace.add(len % 4 == 0 ? "unicyclic.even-cycle.4k" : "unicyclic.even-cycle.4k+2", "length " + std::to_string(len));
  return out;
}

inline EdgeColoring finish_unicyclic(const Graph& g, const EdgeColoring& c, const std::string& rule) {
  if (!verify_liec(g, c).ok()) fail(ErrorCode::InternalInvariant, rule + ": result is not locally irregular");
  if (c.max_color() > kColorC) fail(ErrorCode::InternalInvariant, rule + ": more than three colors");
  return c;
}

inline EdgeColoring unicyclic_triangle(const Graph& g, std::vector<Vertex> cyc, ConstructionTrace& trace) {
  EdgeMask off = full_mask(g);
  for (std::size_t i = 0; i < 3; ++i) off[static_cast<std::size_t>(eid(g, cyc[i], cyc[(i + 1) % 3]))] = false;
  std::sort(cyc.begin(), cyc.end());
  auto pendant_even_path = [&](Vertex u) {
    const auto r = reach(g, u, off);
    if (r.edges.empty()) return true;
    const auto sub = edge_subgraph(g, r.edges);
    if (!is_path(sub.graph) || r.edges.size() % 2 != 0) return false;
    return edges_at(g, u, r.edges).size() == 1;
  };
  Vertex u1 = -1;
  for (Vertex u : cyc)
    if (!pendant_even_path(u)) {
      u1 = u;
      break;
    }
  if (u1 < 0) fail(ErrorCode::InTPrime, "triangle with pendant even paths only");
  std::vector<Vertex> others;
  for (Vertex u : cyc)
    if (u != u1) others.push_back(u);
  const Vertex u2 = others[0], u3 = others[1];

  const auto t1 = reach(g, u1, off).edges;
  const auto g1 = plus(t1, {eid(g, u1, u2)});
  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  for (EdgeId i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  const auto g0 = minus(all, g1);

  const auto phi0 = shrub_aliec_on(g, g0, u1);
  EdgeColoring base = phi0.coloring;
  if (phi0.proper) base.set(Edge(u1, u3), kColorC);
  const std::string branch = phi0.proper ? ".G0-proper" : ".G0-liec";

  const auto h = edges_at(g, u1, g1);
  if (h.size() == 2) {
    auto phi1 = forest_min_liec_on(g, g1, 3);
    if (!phi1) fail(ErrorCode::InternalInvariant, "colorable tree without a 3-liec");
    EdgeColoring c = base;
    absorb(c, rename_to(*phi1, Edge(u1, u2), kColorC));
    if (verify_liec(g, c).ok()) {
      trace.add("unicyclic.triangle.deg2" + branch, "u1 = " + std::to_string(u1));
      return finish_unicyclic(g, c, "unicyclic.triangle.deg2");
    }
    // The arbitrary 3-liec of G1 can clash at the far end of H once u1u3 joins
    // color c; recolor G1 against the fixed G0 part instead.
    std::map<EdgeId, unsigned> only_c;
    for (EdgeId id : h) only_c[id] = 1U << kColorC;
    auto fixed = complete_forest(g, g1, 3, base, only_c);
    if (!fixed) fail(ErrorCode::InternalInvariant, "unicyclic.triangle.deg2: no compatible coloring of G1");
    trace.add("unicyclic.triangle.deg2" + branch + ".context", "u1 = " + std::to_string(u1));
    return finish_unicyclic(g, *fixed, "unicyclic.triangle.deg2.context");
  }

  EdgeColoring c = base;
  absorb(c, glue_star_on(g, u1, h, minus(g1, h), trace));
  trace.add("unicyclic.triangle.spidey" + branch, "u1 = " + std::to_string(u1));
  return finish_unicyclic(g, c, "unicyclic.triangle.spidey");
}

inline EdgeColoring unicyclic_long(const Graph& g, const std::vector<Vertex>& cyc, ConstructionTrace& trace) {
  const std::size_t len = cyc.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < len; ++i)
    if (g.degree(cyc[i]) > g.degree(cyc[best]) || (g.degree(cyc[i]) == g.degree(cyc[best]) && cyc[i] < cyc[best])) best = i;
  // Orient the cycle from u1 towards its smaller cycle neighbor.
  std::vector<Vertex> ord;
  const Vertex next = cyc[(best + 1) % len], prev = cyc[(best + len - 1) % len];
  const bool forward = next < prev;
  for (std::size_t i = 0; i < len; ++i) ord.push_back(forward ? cyc[(best + i) % len] : cyc[(best + len - i) % len]);
  const Vertex u1 = ord[0], u2 = ord[1], u3 = ord[2];

  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  for (EdgeId i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  const auto at_u1 = edges_at(g, u1, all);

  if (g.degree(u1) >= 4) {
    const auto e1 = minus(at_u1, {eid(g, u1, u2)});
    EdgeMask m = full_mask(g);
    for (EdgeId id : e1) m[static_cast<std::size_t>(id)] = false;
    const auto g0 = reach(g, u2, m).edges;
    const auto g1 = minus(all, g0);
    EdgeColoring c = glue_star_on(g, u1, e1, minus(g1, e1), trace);
    const auto phi0 = shrub_aliec_on(g, g0, u1);
    EdgeColoring part = phi0.coloring;
    if (phi0.proper) part.set(Edge(u1, u2), kColorC);
    absorb(c, part);
    trace.add(phi0.proper ? "unicyclic.case1.G0-proper" : "unicyclic.case1.G0-liec", "u1 = " + std::to_string(u1));
    return finish_unicyclic(g, c, "unicyclic.case1");
  }

  // deg(u1) = 3
  const auto e1 = at_u1;
  EdgeMask m = full_mask(g);
  for (EdgeId id : e1) m[static_cast<std::size_t>(id)] = false;
  const auto g0 = reach(g, u2, m).edges;
  const auto g1 = minus(all, g0);
  EdgeColoring c = glue_star_on(g, u1, e1, minus(g1, e1), trace);

  if (g.degree(u2) == 2) {
    const auto phi0 = shrub_aliec_on(g, g0, u2);
    EdgeColoring part = phi0.coloring;
    if (phi0.proper) part.set(Edge(u2, u3), kColorC);
    absorb(c, part);
    trace.add(phi0.proper ? "unicyclic.case2.deg2.G0-proper" : "unicyclic.case2.deg2.G0-liec", "u1 = " + std::to_string(u1));
    return finish_unicyclic(g, c, "unicyclic.case2.deg2");
  }

  Vertex v2 = -1;
  for (const auto& inc : g.incident(u2))
    if (inc.neighbor != u1 && inc.neighbor != u3) v2 = inc.neighbor;
  const EdgeMask m0 = mask_of(g, g0);
  const auto s1 = shrub_edges(g, u2, eid(g, u2, u3), m0);
  const auto s2 = shrub_edges(g, u2, eid(g, u2, v2), m0);
  const auto p1 = shrub_aliec_on(g, s1, u2);
  const auto p2 = shrub_aliec_on(g, s2, u2);
  std::string rule;
  if (!p1.proper && !p2.proper) {
    absorb(c, p1.coloring);
    absorb(c, invert(p2.coloring, kColorA, kColorB));
    rule = "unicyclic.case2.deg3.both-liec";
  } else if (p1.proper && p2.proper) {
    absorb(c, p1.coloring);
    absorb(c, p2.coloring);
    rule = "unicyclic.case2.deg3.both-proper";
  } else if (p1.proper) {
    EdgeColoring q = p1.coloring;
    q.set(Edge(u2, u3), kColorC);
    absorb(c, q);
    absorb(c, p2.coloring);
    rule = "unicyclic.case2.deg3.cycle-shrub-proper";
  } else {
    EdgeColoring q = p2.coloring;
    q.set(Edge(u2, v2), kColorC);
    absorb(c, p1.coloring);
    absorb(c, q);
    rule = "unicyclic.case2.deg3.pendant-shrub-proper";
  }
  trace.add(rule, "u1 = " + std::to_string(u1));
  return finish_unicyclic(g, c, rule);
}

inline EdgeColoring unicyclic_impl(const Graph& g, ConstructionTrace& trace) {
  const auto cls = classify(g);
  if (cls.tag == ClassTag::OddCycle) fail(ErrorCode::InTPrime, "odd cycle");
  if (cls.tag == ClassTag::EvenCycle) return even_cycle(g, trace);
  if (cls.tag != ClassTag::Unicyclic) fail(ErrorCode::NotUnicyclic, "graph is not unicyclic");
  if (is_T_member(g)) fail(ErrorCode::InTPrime, "graph belongs to the triangle family");
  const auto cyc = cycles(g).front();
  if (cyc.size() == 3) return unicyclic_triangle(g, cyc, trace);
  return unicyclic_long(g, cyc, trace);
}

inline EdgeColoring cactus_impl(const Graph& g, ConstructionTrace& trace);

/// Dispatch on the structural class; used for the sub-instances of the cactus
/// induction.
inline EdgeColoring construct_impl(const Graph& g, ConstructionTrace& trace) {
  switch (classify(g).tag) {
    case ClassTag::EvenPath:
    case ClassTag::Tree: return tree_impl(g, trace);
    case ClassTag::OddPath:
    case ClassTag::OddCycle: fail(ErrorCode::InTPrime, "odd path or odd cycle");
    case ClassTag::EvenCycle:
    case ClassTag::Unicyclic: return unicyclic_impl(g, trace);
    case ClassTag::CactusVertexDisjointCycles: return cactus_impl(g, trace);
    default: fail(ErrorCode::WrongClass, "no construction for this graph class");
  }
}

inline EdgeColoring solve_part(const Graph& g, const std::vector<EdgeId>& ids, ConstructionTrace& trace) {
  const auto sub = edge_subgraph(g, ids);
  return lift(sub, construct_impl(sub.graph, trace));
}

inline bool colorable_part(const Graph& g, const std::vector<EdgeId>& ids) {
  return is_colorable(edge_subgraph(g, ids).graph);
}

/// One attempt of the cactus induction step at a given proper end-cycle.
/// nullopt means a sub-instance this choice needs turned out not colorable.
inline std::optional<EdgeColoring> cactus_step(const Graph& g, const EndCycleInfo& end, ConstructionTrace& trace) {
  const auto& cyc = end.cycle;
  const Vertex u1 = end.root_vertex;
  const Vertex u2 = std::min(cyc[1], cyc.back());
  const Vertex u3 = std::max(cyc[1], cyc.back());
  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  for (EdgeId i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;

  Vertex v = -1;
  for (const auto& [w, id] : g.incident(u1)) {
    if (w == u2 || w == u3) continue;
    EdgeMask m = full_mask(g);
    m[static_cast<std::size_t>(id)] = false;
    if (reach(g, w, m).cyclic()) {
      v = w;
      break;
    }
  }
  if (v < 0) fail(ErrorCode::InternalInvariant, "root vertex without a neighbor towards the other cycles");
  const Edge e_v(u1, v), e_2(u1, u2), e_3(u1, u3);
  const EdgeId id_v = eid(g, u1, v), id_2 = eid(g, u1, u2), id_3 = eid(g, u1, u3);
  const std::string where = "C at " + std::to_string(u1);

  auto done = [&](const EdgeColoring& c, const std::string& rule) {
    if (!verify_liec(g, c).ok()) fail(ErrorCode::InternalInvariant, rule + ": result is not locally irregular");
    if (c.max_color() > kColorC) fail(ErrorCode::InternalInvariant, rule + ": more than three colors");
    trace.add(rule, where);
    return std::optional<EdgeColoring>(c);
  };

  if (g.degree(u1) == 3) {
    EdgeMask m = full_mask(g);
    m[static_cast<std::size_t>(id_v)] = false;
    const auto g1 = reach(g, u1, m).edges;
    const auto g0 = minus(all, g1);
    const auto g0p = plus(g0, {id_2});
    const auto g1p = minus(g1, {id_2});

    if (colorable_part(g, g0p)) {
      EdgeColoring phi0 = rename_to(solve_part(g, g0p, trace), e_v, kColorC);
      if (phi0.at(e_2) != kColorC) fail(ErrorCode::InternalInvariant, "pendant path at u1 not monochromatic");
      const auto s = shrub_aliec_on(g, g1p, u1);
      if (!s.proper) {
        absorb(phi0, s.coloring);
        return done(phi0, "cactus.case1.G0prime-colorable.G1prime-liec");
      }
      EdgeColoring phi2 = rename_to(solve_part(g, plus(g0p, {id_3}), trace), e_2, kColorC);
      if (phi2.at(e_3) != kColorC) fail(ErrorCode::InternalInvariant, "two pendant edges at u1 differ in color");
      absorb(phi2, drop(s.coloring, e_3));
      return done(phi2, "cactus.case1.G0prime-colorable.G1prime-proper");
    }

    if (!colorable_part(g, g1)) {
      if (cyc.size() == 3) fail(ErrorCode::InternalInvariant, "both sides non-colorable around a triangle would put G in the family");
      Vertex w = -1;
      for (const auto& inc : g.incident(u3))
        if (inc.neighbor != u1 && std::find(cyc.begin(), cyc.end(), inc.neighbor) != cyc.end()) w = inc.neighbor;
      const auto g0pp = plus(g0p, {id_3, eid(g, u3, w)});
      EdgeColoring phi0 = rename_to(solve_part(g, g0pp, trace), Edge(u3, w), kColorA);
      if (phi0.at(e_2) == kColorC) phi0 = invert(phi0, kColorB, kColorC);
      // The rest is the even path u2 ... w; pairs of edges alternate c, b from u2.
      const auto path = minus(all, g0pp);
      const EdgeMask pm = mask_of(g, path);
      Vertex prev = -1, cur = u2;
      for (std::size_t i = 0; i < path.size(); ++i) {
        Vertex nxt = -1;
        for (const auto& inc : g.incident(cur))
          if (pm[static_cast<std::size_t>(inc.edge)] && inc.neighbor != prev) nxt = inc.neighbor;
        phi0.set(Edge(cur, nxt), (i / 2) % 2 == 0 ? kColorC : kColorB);
        prev = cur;
        cur = nxt;
      }
      return done(phi0, "cactus.case1.G1-odd-cycle");
    }

    if (!colorable_part(g, g0)) {
      trace.add("cactus.case1.G0-not-colorable", where);
      return std::nullopt;
    }
    EdgeColoring phi0 = rename_to(solve_part(g, g0, trace), e_v, kColorC);
    EdgeColoring phi1 = solve_part(g, g1, trace);
    const Color c2 = phi1.at(e_2), c3 = phi1.at(e_3);
    if (c2 == kColorC || c3 == kColorC) {
      const Color spare = (c2 != kColorA && c3 != kColorA) ? kColorA : kColorB;
      phi1 = invert(phi1, kColorC, spare);
    }
    absorb(phi0, phi1);
    return done(phi0, "cactus.case1.G1-colorable");
  }

  // deg(u1) >= 4
  const auto h = edges_at(g, u1, all);
  EdgeMask off_h = full_mask(g);
  for (EdgeId id : h) off_h[static_cast<std::size_t>(id)] = false;
  const auto g0p = reach(g, v, off_h).edges;
  const auto g1p = reach(g, u2, off_h).edges;
  const auto g2 = minus(minus(minus(all, h), g0p), g1p);
  const auto g1 = plus(g1p, {id_2});
  const auto g0 = plus(g0p, {id_v});
  const auto hp = minus(h, {id_2, id_v});
  const auto t2 = plus(hp, g2);

  if (!colorable_part(g, g0)) {
    trace.add("cactus.case2.G0-not-colorable", where);
    return std::nullopt;
  }

  if (is_odd_path_on(g, t2)) {
    const auto s2 = shrub_aliec_on(g, t2, u3);
    if (!s2.proper) fail(ErrorCode::InternalInvariant, "odd path shrub with a 2-liec");
    const auto s1 = shrub_aliec_on(g, g1, u1);
    if (s1.proper) {
      EdgeColoring c = rename_to(solve_part(g, g0, trace), e_v, kColorA);
      absorb(c, drop(s1.coloring, e_2));
      absorb(c, drop(s2.coloring, e_3));
      c.set(e_2, kColorC);
      c.set(e_3, kColorC);
      return done(c, "cactus.case2.odd-path.G1-proper");
    }
    const auto g0pp = plus(g0, {id_3});
    if (!colorable_part(g, g0pp)) {
      trace.add("cactus.case2.G0pp-not-colorable", where);
      return std::nullopt;
    }
    EdgeColoring c = rename_to(solve_part(g, g0pp, trace), e_v, kColorC);
    if (c.at(e_3) != kColorC) fail(ErrorCode::InternalInvariant, "pendant path at u1 not monochromatic");
    absorb(c, s1.coloring);
    absorb(c, drop(s2.coloring, e_3));
    return done(c, "cactus.case2.odd-path.G1-liec");
  }

  EdgeColoring phi2;
  if (hp.size() == 2) {
    auto t = forest_min_liec_on(g, t2, 3);
    if (!t) fail(ErrorCode::InternalInvariant, "colorable tree without a 3-liec");
    phi2 = rename_to(*t, e_3, kColorC);
    for (EdgeId id : hp)
      if (phi2.at(g.edge(id)) != kColorC) fail(ErrorCode::InternalInvariant, "H' not monochromatic");
  } else {
    phi2 = glue_star_on(g, u1, hp, g2, trace);
  }
  EdgeColoring phi0 = rename_to(solve_part(g, g0, trace), e_v, kColorA);
  const auto s1 = shrub_aliec_on(g, g1, u1);
  if (!s1.proper) {
    absorb(phi0, invert(s1.coloring, kColorA, kColorB));
    absorb(phi0, phi2);
    return done(phi0, "cactus.case2.colorable.G1-liec");
  }
  EdgeColoring phi3 = glue_star_on(g, u1, plus(hp, {id_2}), g2, trace);
  absorb(phi0, drop(s1.coloring, e_2));
  absorb(phi0, phi3);
  return done(phi0, "cactus.case2.colorable.G1-proper");
}

inline EdgeColoring cactus_impl(const Graph& g, ConstructionTrace& trace) {
  const auto cls = classify(g);
  if (cls.tag != ClassTag::CactusVertexDisjointCycles) {
    if (cls.tag == ClassTag::EvenCycle || cls.tag == ClassTag::Unicyclic || cls.tag == ClassTag::OddCycle)
      return unicyclic_impl(g, trace);
    fail(ErrorCode::WrongClass, "graph is not a cactus with vertex-disjoint cycles");
  }
  if (is_T_member(g)) fail(ErrorCode::InTPrime, "graph belongs to the triangle family");
  for (const auto& end : proper_end_cycles(g))
    if (auto c = cactus_step(g, end, trace)) return *c;
  fail(ErrorCode::InternalInvariant, "no proper end-cycle admits the induction step");
}

}  // namespace detail

/// 2-aliec of a shrub with its root edge colored a (0); a 2-liec whenever the
/// shrub has one. Colors are given in the shrub's own vertex ids.
inline EdgeColoring shrub_2aliec(const Shrub& s) {
  std::vector<EdgeId> all(static_cast<std::size_t>(s.tree().size()));
  for (EdgeId i = 0; i < s.tree().size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return detail::shrub_aliec_on(s.tree(), all, s.root()).coloring;
}

struct ShrubBasedResult {
  std::optional<EdgeColoring> liec;
  std::vector<bool> inverted;             // which shrubs were inverted to reach `liec`
  std::vector<int> a_sequence;            // of v under the uninverted shrub-based coloring
  std::vector<EdgeColoring> shrub_colorings;  // 2-liec of each shrub at v, in tree ids

  bool resistant() const { return !liec.has_value(); }
};

/// Combines 2-liecs of the shrubs at v, trying every subset of shrub
/// inversions. Requires maximum degree at most four and a 2-liec for each shrub.
inline ShrubBasedResult shrub_based_coloring(const Graph& t, Vertex v) {
  if (!is_tree(t)) fail(ErrorCode::NotATree, "shrub-based coloring needs a tree");
  if (!t.contains(v)) fail(ErrorCode::UnknownVertex, "vertex not in tree");
  if (t.max_degree() > 4) fail(ErrorCode::PreconditionViolated, "maximum degree above four");
  ShrubBasedResult out;
  const EdgeMask all = full_mask(t);
  std::vector<Incidence> inc(t.incident(v).begin(), t.incident(v).end());
  std::sort(inc.begin(), inc.end(), [](const auto& a, const auto& b) { return a.neighbor < b.neighbor; });
  for (const auto& [w, id] : inc) {
    const auto s = detail::shrub_aliec_on(t, shrub_edges(t, v, id, all), v);
    if (s.proper) fail(ErrorCode::PreconditionViolated, "shrub at " + std::to_string(w) + " has only a proper 2-aliec");
    out.shrub_colorings.push_back(s.coloring);
  }
  const std::size_t k = out.shrub_colorings.size();
  out.a_sequence = color_sequence(t, combine(std::span<const EdgeColoring>(out.shrub_colorings)), v, kColorA);
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    std::vector<EdgeColoring> parts;
    for (std::size_t i = 0; i < k; ++i)
      parts.push_back((mask >> i) & 1U ? invert(out.shrub_colorings[i], kColorA, kColorB) : out.shrub_colorings[i]);
    auto c = combine(std::span<const EdgeColoring>(parts));
    if (verify_liec(t, c).ok()) {
      out.liec = std::move(c);
      for (std::size_t i = 0; i < k; ++i) out.inverted.push_back((mask >> i) & 1U);
      break;
    }
  }
  return out;
}

/// Locally irregular coloring of a tree with the fewest colors (at most three;
/// at most two when the maximum degree is five or more).
inline EdgeColoring tree_liec(const Graph& t, ConstructionTrace* trace = nullptr) {
  ConstructionTrace local;
  auto c = detail::tree_impl(t, trace ? *trace : local);
  return c;
}

inline bool is_spidey(const Graph& h, Vertex* center = nullptr) {
  if (!is_tree(h)) return false;
  Vertex u = -1;
  for (Vertex x = 0; x < h.order(); ++x) {
    if (h.degree(x) >= 3) {
      if (u >= 0) return false;
      u = x;
    }
  }
  if (u < 0) return false;
  const auto r = reach(h, u, full_mask(h));
  // distance at most two from the center
  std::vector<int> dist(static_cast<std::size_t>(h.order()), -1);
  dist[static_cast<std::size_t>(u)] = 0;
  std::vector<Vertex> queue{u};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& inc : h.incident(queue[i]))
      if (dist[static_cast<std::size_t>(inc.neighbor)] < 0) {
        dist[static_cast<std::size_t>(inc.neighbor)] = dist[static_cast<std::size_t>(queue[i])] + 1;
        queue.push_back(inc.neighbor);
      }
  for (int d : dist)
    if (d > 2) return false;
  if (center) *center = u;
  return static_cast<int>(r.vertices.size()) == h.order();
}

struct GluedColoring {
  Graph graph;                 // h on ids 0..|h|-1, the rest of k after it
  std::vector<Vertex> k_ids;   // id in `graph` of each vertex of k
  EdgeColoring coloring;
  ConstructionTrace trace;
};

/// 3-liec of the graph obtained by identifying the short leg `leg` of the
/// spidey h with the vertex `attach` of the tree k, with every edge of h in
/// color c.
inline GluedColoring spidey_glue(const Graph& h, Vertex leg, const Graph& k, Vertex attach) {
  Vertex center = -1;
  if (!is_spidey(h, &center)) fail(ErrorCode::NotASpidey, "h is not a spidey");
  if (!h.contains(leg) || h.degree(leg) != 1 || !h.has_edge(leg, center)) fail(ErrorCode::NotAShortLeg, "leg is not a short leg");
  if (!is_tree(k)) fail(ErrorCode::NotATree, "k must be a tree");
  if (!k.contains(attach)) fail(ErrorCode::UnknownVertex, "attach vertex not in k");
  GluedColoring out;
  out.k_ids.resize(static_cast<std::size_t>(k.order()));
  Vertex next = h.order();
  for (Vertex x = 0; x < k.order(); ++x) out.k_ids[static_cast<std::size_t>(x)] = x == attach ? leg : next++;
  std::vector<Edge> edges = h.edges();
  for (const auto& e : k.edges()) edges.emplace_back(out.k_ids[static_cast<std::size_t>(e.u)], out.k_ids[static_cast<std::size_t>(e.v)]);
  out.graph = Graph(next, std::move(edges));
  std::vector<EdgeId> hid, kid;
  for (EdgeId i = 0; i < out.graph.size(); ++i) (i < h.size() ? hid : kid).push_back(i);
  out.coloring = detail::paint(out.graph, hid, kColorC);
  detail::absorb(out.coloring, detail::glue_spidey_on(out.graph, hid, leg, kid, out.trace));
  return out;
}

/// 3-liec of a connected unicyclic graph outside the exceptional family.
inline EdgeColoring unicyclic_3liec(const Graph& g, ConstructionTrace* trace = nullptr) {
  ConstructionTrace local;
  return detail::unicyclic_impl(g, trace ? *trace : local);
}

/// 3-liec of a connected cactus with vertex-disjoint cycles outside the
/// exceptional family, by induction on the number of cycles.
inline EdgeColoring cactus_vdc_3liec(const Graph& g, ConstructionTrace* trace = nullptr) {
  ConstructionTrace local;
  return detail::cactus_impl(g, trace ? *trace : local);
}

struct Construction {
  EdgeColoring coloring;
  ConstructionTrace trace;
};

/// Dispatches to the construction matching the graph's class.
inline Construction construct(const Graph& g) {
  Construction out;
  out.coloring = detail::construct_impl(g, out.trace);
  return out;
}

}  // namespace liec

#endif  // LIEC_CONSTRUCTIVE_HPP
