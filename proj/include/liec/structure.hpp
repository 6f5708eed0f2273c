#ifndef LIEC_STRUCTURE_HPP
#define LIEC_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liec/error.hpp"
#include "liec/graph.hpp"

namespace liec {

using EdgeMask = std::vector<bool>;

inline EdgeMask full_mask(const Graph& g) { return EdgeMask(static_cast<std::size_t>(g.size()), true); }

inline EdgeMask mask_of(const Graph& g, std::span<const EdgeId> ids) {
  EdgeMask m(static_cast<std::size_t>(g.size()), false);
  for (EdgeId id : ids) m[static_cast<std::size_t>(id)] = true;
  return m;
}

inline std::vector<EdgeId> ids_of(const EdgeMask& m) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<EdgeId>(i));
  return out;
}

/// Vertices and edges reachable from `start` through edges allowed by `allowed`.
struct Reach {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  bool cyclic() const { return edges.size() >= vertices.size(); }
};

inline Reach reach(const Graph& g, Vertex start, const EdgeMask& allowed) {
  Reach out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> taken(static_cast<std::size_t>(g.size()), false);
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    out.vertices.push_back(x);
    for (const auto& [y, id] : g.incident(x)) {
      if (!allowed[static_cast<std::size_t>(id)]) continue;
      if (!taken[static_cast<std::size_t>(id)]) {
        taken[static_cast<std::size_t>(id)] = true;
        out.edges.push_back(id);
      }
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

/// Components (with at least one edge) of the spanning subgraph given by `allowed`,
/// ordered by their smallest vertex.
inline std::vector<Reach> edge_components(const Graph& g, const EdgeMask& allowed) {
  std::vector<Reach> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    Reach r = reach(g, v, allowed);
    for (Vertex x : r.vertices) seen[static_cast<std::size_t>(x)] = true;
    if (!r.edges.empty()) out.push_back(std::move(r));
  }
  return out;
}

/// Partition into maximal connected subgraphs; isolated vertices become
/// singleton components.
inline std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  const EdgeMask all = full_mask(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    Reach r = reach(g, v, all);
    for (Vertex x : r.vertices) seen[static_cast<std::size_t>(x)] = true;
    out.push_back(induced_subgraph(g, r.vertices));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return static_cast<int>(reach(g, 0, full_mask(g)).vertices.size()) == g.order();
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

/// Connected, acyclic, and no vertex of degree above two.
inline bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

inline bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline bool is_odd_path(const Graph& g) { return is_path(g) && g.size() % 2 == 1; }

namespace detail {

/// Fundamental cycles of a DFS forest; each is an ordered vertex list. The graph
/// is a cactus exactly when these cycles are pairwise edge-disjoint, in which
/// case they are all of its cycles.
struct CycleScan {
  std::vector<std::vector<Vertex>> cycles;
  bool cactus = true;
};

inline CycleScan scan_cycles(const Graph& g) {
  CycleScan out;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  std::vector<int> on_cycle(static_cast<std::size_t>(g.size()), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (depth[static_cast<std::size_t>(root)] >= 0) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    // Iterative DFS with explicit neighbor cursor; neighbors in insertion order.
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [x, cursor] = stack.back();
      const auto inc = g.incident(x);
      if (cursor == inc.size()) {
        stack.pop_back();
        continue;
      }
      const auto [y, id] = inc[cursor++];
      const auto xs = static_cast<std::size_t>(x);
      const auto ys = static_cast<std::size_t>(y);
      if (id == parent_edge[xs]) continue;
      if (depth[ys] < 0) {
        depth[ys] = depth[xs] + 1;
        parent[ys] = x;
        parent_edge[ys] = id;
        stack.push_back({y, 0});
      } else if (depth[ys] < depth[xs]) {
        // back edge x -> ancestor y
        std::vector<Vertex> cyc;
        ++on_cycle[static_cast<std::size_t>(id)];
        for (Vertex w = x; w != y; w = parent[static_cast<std::size_t>(w)]) {
          cyc.push_back(w);
          ++on_cycle[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(w)])];
        }
        cyc.push_back(y);
        std::reverse(cyc.begin(), cyc.end());
        out.cycles.push_back(std::move(cyc));
      }
    }
  }
  for (int c : on_cycle)
    if (c > 1) out.cactus = false;
  return out;
}

}  // namespace detail

inline bool is_cactus(const Graph& g) { return detail::scan_cycles(g).cactus; }

/// All cycles of a cactus, each as an ordered vertex sequence starting at its
/// smallest vertex and continuing towards the smaller of its two cycle neighbors.
inline std::vector<std::vector<Vertex>> cycles(const Graph& g) {
  auto scan = detail::scan_cycles(g);
  if (!scan.cactus) fail(ErrorCode::NotACactus, "cycles share an edge");
  for (auto& cyc : scan.cycles) {
    std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  }
  std::sort(scan.cycles.begin(), scan.cycles.end());
  return scan.cycles;
}

enum class ClassTag {
  EvenPath,
  OddPath,
  EvenCycle,
  OddCycle,
  Tree,
  Unicyclic,
  CactusVertexDisjointCycles,
  Cactus,
  General,
};

constexpr std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::EvenPath: return "EvenPath";
    case ClassTag::OddPath: return "OddPath";
    case ClassTag::EvenCycle: return "EvenCycle";
    case ClassTag::OddCycle: return "OddCycle";
    case ClassTag::Tree: return "Tree";
    case ClassTag::Unicyclic: return "Unicyclic";
    case ClassTag::CactusVertexDisjointCycles: return "CactusVertexDisjointCycles";
    case ClassTag::Cactus: return "Cactus";
    case ClassTag::General: return "General";
  }
  return "General";
}

struct GraphClass {
  ClassTag tag = ClassTag::General;
  std::optional<int> girth;
  int cycle_count = 0;
};

inline bool vertex_disjoint(const std::vector<std::vector<Vertex>>& cyc, int n) {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& c : cyc)
    for (Vertex v : c)
      if (++hits[static_cast<std::size_t>(v)] > 1) return false;
  return true;
}

/// Most specific structural class of a connected graph. The one-vertex graph is
/// reported as the even path of length zero.
inline GraphClass classify(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) fail(ErrorCode::DisconnectedInput, "classify needs a connected graph");
  GraphClass out;
  const int cycle_rank = g.size() - g.order() + 1;
  out.cycle_count = cycle_rank;
  if (cycle_rank == 0) {
    if (g.max_degree() <= 2)
      out.tag = g.size() % 2 == 0 ? ClassTag::EvenPath : ClassTag::OddPath;
    else
      out.tag = ClassTag::Tree;
    return out;
  }
  const auto scan = detail::scan_cycles(g);
  int girth = g.order() + 1;
  for (const auto& c : scan.cycles) girth = std::min(girth, static_cast<int>(c.size()));
  out.girth = girth;
  if (!scan.cactus) {
    out.tag = ClassTag::General;
    out.cycle_count = static_cast<int>(scan.cycles.size());
    return out;
  }
  if (cycle_rank == 1) {
    if (is_cycle(g))
      out.tag = g.size() % 2 == 0 ? ClassTag::EvenCycle : ClassTag::OddCycle;
    else
      out.tag = ClassTag::Unicyclic;
    return out;
  }
  out.tag = vertex_disjoint(scan.cycles, g.order()) ? ClassTag::CactusVertexDisjointCycles : ClassTag::Cactus;
  return out;
}

/// A tree rooted at one of its leaves.
class Shrub {
 public:
  Shrub(Graph tree, Vertex root, std::vector<Vertex> host_ids = {})
      : tree_(std::move(tree)), root_(root), host_ids_(std::move(host_ids)) {
    if (!is_tree(tree_)) fail(ErrorCode::NotATree, "shrub must be a tree");
    if (!tree_.contains(root_)) fail(ErrorCode::UnknownVertex, "shrub root not in tree");
    if (tree_.degree(root_) != 1) fail(ErrorCode::PreconditionViolated, "shrub root must be a leaf");
  }

  const Graph& tree() const { return tree_; }
  Vertex root() const { return root_; }
  Vertex root_neighbor() const { return tree_.incident(root_)[0].neighbor; }
  Edge root_edge() const { return {root_, root_neighbor()}; }
  EdgeId root_edge_id() const { return tree_.incident(root_)[0].edge; }

  /// Host id of a local vertex (identity when the shrub was built standalone).
  Vertex host(Vertex v) const { return host_ids_.empty() ? v : host_ids_.at(static_cast<std::size_t>(v)); }
  Edge host(const Edge& e) const { return {host(e.u), host(e.v)}; }
  const std::vector<Vertex>& host_ids() const { return host_ids_; }

 private:
  Graph tree_;
  Vertex root_;
  std::vector<Vertex> host_ids_;
};

/// Edge ids (in `t`) of the shrub of tree `t` rooted at `v` that starts with edge `first`.
inline std::vector<EdgeId> shrub_edges(const Graph& t, Vertex v, EdgeId first, const EdgeMask& allowed) {
  EdgeMask m = allowed;
  for (const auto& inc : t.incident(v)) m[static_cast<std::size_t>(inc.edge)] = false;
  const Vertex w = t.edge(first).other(v);
  auto r = reach(t, w, m);
  r.edges.push_back(first);
  std::sort(r.edges.begin(), r.edges.end());
  return r.edges;
}

/// The deg(v) shrubs of tree `t` hanging at `v`, ordered by the id of the
/// neighbor of `v` they contain.
inline std::vector<Shrub> shrubs_at(const Graph& t, Vertex v) {
  if (!is_tree(t)) fail(ErrorCode::NotATree, "shrubs_at needs a tree");
  if (!t.contains(v)) fail(ErrorCode::UnknownVertex, "vertex not in tree");
  std::vector<Incidence> inc(t.incident(v).begin(), t.incident(v).end());
  std::sort(inc.begin(), inc.end(), [](const auto& a, const auto& b) { return a.neighbor < b.neighbor; });
  std::vector<Shrub> out;
  const EdgeMask all = full_mask(t);
  for (const auto& [w, id] : inc) {
    auto sub = edge_subgraph(t, shrub_edges(t, v, id, all));
    const Vertex root = static_cast<Vertex>(std::find(sub.to_host.begin(), sub.to_host.end(), v) - sub.to_host.begin());
    out.emplace_back(std::move(sub.graph), root, std::move(sub.to_host));
  }
  return out;
}

struct EndCycleInfo {
  std::vector<Vertex> cycle;
  Vertex root_vertex = -1;
};

/// Every proper end-cycle with its root vertex, ordered by root vertex id. The
/// cycle is listed starting at the root vertex.
inline std::vector<EndCycleInfo> proper_end_cycles(const Graph& g) {
  const auto cls = classify(g);
  if (cls.tag != ClassTag::CactusVertexDisjointCycles) {
    if (cls.cycle_count <= 1 && (cls.tag == ClassTag::Unicyclic || cls.tag == ClassTag::EvenCycle || cls.tag == ClassTag::OddCycle))
      fail(ErrorCode::FewerThanTwoCycles, "graph has a single cycle");
    fail(ErrorCode::NotCactusVdc, "graph is not a cactus with vertex-disjoint cycles");
  }
  const auto all = cycles(g);
  std::vector<EndCycleInfo> out;
  for (const auto& cyc : all) {
    std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : cyc) on[static_cast<std::size_t>(v)] = true;
    // G - V(C)
    EdgeMask outside(static_cast<std::size_t>(g.size()), false);
    for (EdgeId id = 0; id < g.size(); ++id) {
      const auto& e = g.edge(id);
      outside[static_cast<std::size_t>(id)] = !on[static_cast<std::size_t>(e.u)] && !on[static_cast<std::size_t>(e.v)];
    }
    int cyclic = 0;
    for (const auto& comp : edge_components(g, outside))
      if (comp.cyclic()) ++cyclic;
    if (cyclic > 1) continue;
    // G - E(C)
    EdgeMask off_cycle = full_mask(g);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      off_cycle[static_cast<std::size_t>(*g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]))] = false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!reach(g, cyc[i], off_cycle).cyclic()) continue;
      EndCycleInfo info;
      info.cycle = cyc;
      std::rotate(info.cycle.begin(), info.cycle.begin() + static_cast<std::ptrdiff_t>(i), info.cycle.end());
      info.root_vertex = cyc[i];
      out.push_back(std::move(info));
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root_vertex < b.root_vertex; });
  return out;
}

/// The proper end-cycle whose root vertex has the smallest id.
inline EndCycleInfo find_proper_end_cycle(const Graph& g) {
  auto all = proper_end_cycles(g);
  if (all.empty()) fail(ErrorCode::InternalInvariant, "no proper end-cycle found");
  return all.front();
}

}  // namespace liec

#endif  // LIEC_STRUCTURE_HPP
