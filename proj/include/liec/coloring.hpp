#ifndef LIEC_COLORING_HPP
#define LIEC_COLORING_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "liec/error.hpp"
#include "liec/graph.hpp"
#include "liec/structure.hpp"

namespace liec {

using Color = int;

/// Colors a, b, c, d of the constructions.
inline constexpr Color kColorA = 0;
inline constexpr Color kColorB = 1;
inline constexpr Color kColorC = 2;
inline constexpr Color kColorD = 3;

/// Map from edges (as vertex pairs) to colors 0..palette-1. Keyed by vertex
/// pairs rather than edge ids so that colorings of edge-disjoint subgraphs of a
/// common host can be merged directly.
class EdgeColoring {
 public:
  using Map = std::map<Edge, Color>;

  EdgeColoring() = default;

  void set(Edge e, Color c) {
    if (c < 0) fail(ErrorCode::PreconditionViolated, "negative color");
    colors_[e] = c;
    palette_ = std::max(palette_, c + 1);
  }

  std::optional<Color> get(Edge e) const {
    auto it = colors_.find(e);
    if (it == colors_.end()) return std::nullopt;
    return it->second;
  }

  Color at(Edge e) const {
    auto c = get(e);
    if (!c) fail(ErrorCode::PartialColoring, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is uncolored");
    return *c;
  }

  bool contains(Edge e) const { return colors_.contains(e); }
  bool erase(Edge e) { return colors_.erase(e) > 0; }

  int palette() const { return palette_; }
  void set_palette(int k) {
    if (k < max_color() + 1) fail(ErrorCode::PreconditionViolated, "palette smaller than colors in use");
    palette_ = k;
  }

  int max_color() const {
    int best = -1;
    for (const auto& [e, c] : colors_) best = std::max(best, c);
    return best;
  }

  /// Number of distinct colors actually present.
  int colors_used() const {
    std::set<Color> used;
    for (const auto& [e, c] : colors_) used.insert(c);
    return static_cast<int>(used.size());
  }

  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) { return a.colors_ == b.colors_; }

 private:
  Map colors_;
  int palette_ = 0;
};

/// Result of a local-irregularity check: empty `violations` means the coloring
/// is a locally irregular edge coloring.
struct LiecCheck {
  std::vector<Edge> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

namespace detail {

/// Per-vertex color-degree table over the edges of `g`.
inline std::vector<std::map<Color, int>> color_degrees(const Graph& g, const EdgeColoring& c) {
  std::vector<std::map<Color, int>> deg(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges()) {
    const Color x = c.at(e);
    ++deg[static_cast<std::size_t>(e.u)][x];
    ++deg[static_cast<std::size_t>(e.v)][x];
  }
  return deg;
}

}  // namespace detail

/// Checks that every color class induces a locally irregular subgraph of `g`.
/// Colors on edges outside `g` are ignored.
inline LiecCheck verify_liec(const Graph& g, const EdgeColoring& c) {
  const auto deg = detail::color_degrees(g, c);
  LiecCheck out;
  for (const auto& e : g.edges()) {
    const Color x = c.at(e);
    if (deg[static_cast<std::size_t>(e.u)].at(x) == deg[static_cast<std::size_t>(e.v)].at(x)) out.violations.push_back(e);
  }
  return out;
}

inline int color_degree(const Graph& g, const EdgeColoring& c, Vertex v, Color x) {
  int count = 0;
  for (const auto& inc : g.incident(v))
    if (c.at(Edge(v, inc.neighbor)) == x) ++count;
  return count;
}

/// x-degrees of the x-neighbors of v, non-increasing.
inline std::vector<int> color_sequence(const Graph& g, const EdgeColoring& c, Vertex v, Color x) {
  std::vector<int> out;
  for (const auto& inc : g.incident(v))
    if (c.at(Edge(v, inc.neighbor)) == x) out.push_back(color_degree(g, c, inc.neighbor, x));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Swaps colors x and y everywhere.
inline EdgeColoring invert(const EdgeColoring& c, Color x, Color y) {
  EdgeColoring out;
  for (const auto& [e, col] : c) out.set(e, col == x ? y : (col == y ? x : col));
  out.set_palette(std::max({c.palette(), x + 1, y + 1}));
  return out;
}

/// Applies `map[old] = new` to every edge.
inline EdgeColoring recolor(const EdgeColoring& c, std::span<const Color> map) {
  EdgeColoring out;
  for (const auto& [e, col] : c) out.set(e, map[static_cast<std::size_t>(col)]);
  return out;
}

/// Union of colorings on pairwise edge-disjoint parts.
inline EdgeColoring combine(std::span<const EdgeColoring> parts) {
  EdgeColoring out;
  int palette = 0;
  for (const auto& part : parts) {
    for (const auto& [e, col] : part) {
      if (out.contains(e))
        fail(ErrorCode::OverlappingEdges, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " colored twice");
      out.set(e, col);
    }
    palette = std::max(palette, part.palette());
  }
  out.set_palette(std::max(palette, out.palette()));
  return out;
}

inline EdgeColoring combine(std::initializer_list<EdgeColoring> parts) {
  return combine(std::span<const EdgeColoring>(parts.begin(), parts.size()));
}

/// Combination of colorings of graphs `(graph, coloring)`: each part must color
/// exactly its own graph's edges and the graphs must be edge-disjoint.
inline EdgeColoring combine(std::span<const std::pair<Graph, EdgeColoring>> parts) {
  std::vector<EdgeColoring> pieces;
  for (const auto& [g, c] : parts) {
    EdgeColoring piece;
    for (const auto& e : g.edges()) piece.set(e, c.at(e));
    piece.set_palette(std::max(piece.palette(), c.palette()));
    pieces.push_back(std::move(piece));
  }
  return combine(std::span<const EdgeColoring>(pieces));
}

/// Restriction to the edges of `g`.
inline EdgeColoring restrict_to(const EdgeColoring& c, const Graph& g) {
  EdgeColoring out;
  for (const auto& e : g.edges()) out.set(e, c.at(e));
  return out;
}

/// Coloring of a compact subgraph expressed in host vertex ids.
inline EdgeColoring lift(const Subgraph& sub, const EdgeColoring& c) {
  EdgeColoring out;
  for (const auto& [e, col] : c) out.set(sub.host(e), col);
  out.set_palette(std::max(out.palette(), c.palette()));
  return out;
}

/// Coloring of a host graph expressed in the local ids of a compact subgraph.
inline EdgeColoring pull(const Subgraph& sub, const EdgeColoring& host_coloring) {
  EdgeColoring out;
  for (const auto& e : sub.graph.edges()) out.set(e, host_coloring.at(sub.host(e)));
  return out;
}

enum class AliecTag { Liec, ProperAliec, Invalid };

constexpr std::string_view to_string(AliecTag t) {
  switch (t) {
    case AliecTag::Liec: return "Liec";
    case AliecTag::ProperAliec: return "ProperAliec";
    case AliecTag::Invalid: return "Invalid";
  }
  return "Invalid";
}

struct AliecStatus {
  AliecTag tag = AliecTag::Invalid;
  std::vector<Edge> violations;
};

/// Liec, proper almost-liec (only the root edge violates and it has no
/// adjacent edge of its own color), or neither.
inline AliecStatus aliec_status(const Shrub& s, const EdgeColoring& c) {
  const Graph& t = s.tree();
  auto check = verify_liec(t, c);
  AliecStatus out{AliecTag::Liec, check.violations};
  if (check.ok()) return out;
  const Edge root = s.root_edge();
  const bool only_root = check.violations.size() == 1 && check.violations.front() == root;
  const Color rc = c.at(root);
  const Vertex w = s.root_neighbor();
  const bool isolated = color_degree(t, c, w, rc) == 1;
  out.tag = only_root && isolated ? AliecTag::ProperAliec : AliecTag::Invalid;
  return out;
}

}  // namespace liec

#endif  // LIEC_COLORING_HPP
