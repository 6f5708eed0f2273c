#ifndef LIEC_GENERATORS_HPP
#define LIEC_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "liec/error.hpp"
#include "liec/graph.hpp"
#include "liec/structure.hpp"

namespace liec {

enum class GenKind { Path, Cycle, Star, Spidey, BowtieB, TFamily, RandomTree, RandomUnicyclic, RandomCactusVdc };

constexpr std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Path: return "path";
    case GenKind::Cycle: return "cycle";
    case GenKind::Star: return "star";
    case GenKind::Spidey: return "spidey";
    case GenKind::BowtieB: return "bowtie";
    case GenKind::TFamily: return "tfamily";
    case GenKind::RandomTree: return "random-tree";
    case GenKind::RandomUnicyclic: return "random-unicyclic";
    case GenKind::RandomCactusVdc: return "random-cactus";
  }
  return "?";
}

inline GenKind parse_gen_kind(std::string_view s) {
  for (auto k : {GenKind::Path, GenKind::Cycle, GenKind::Star, GenKind::Spidey, GenKind::BowtieB, GenKind::TFamily,
                 GenKind::RandomTree, GenKind::RandomUnicyclic, GenKind::RandomCactusVdc})
    if (to_string(k) == s) return k;
  fail(ErrorCode::InvalidSpec, "unknown generator kind '" + std::string(s) + "'");
}

/// Parameters used by each kind:
///   Path/Cycle: length (edges).  Star: legs.  Spidey: legs (short) and long_legs.
///   TFamily: seed, steps.  RandomTree/RandomUnicyclic: seed, size (vertices).
///   RandomCactusVdc: seed, cycles, max_edges.
struct GenSpec {
  GenKind kind = GenKind::Path;
  int length = 1;
  int legs = 3;
  int long_legs = 0;
  std::uint64_t seed = 0;
  int size = 5;
  int steps = 2;
  int cycles = 2;
  int max_edges = 22;
};

/// mt19937_64 with a rejection-sampled uniform, so streams are identical on
/// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    if (hi < lo) fail(ErrorCode::InvalidSpec, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline Graph path_graph(int len) {
  std::vector<Edge> e;
  for (int i = 0; i < len; ++i) e.emplace_back(i, i + 1);
  return Graph(len + 1, std::move(e));
}

inline Graph cycle_graph(int len) {
  std::vector<Edge> e;
  for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
  return Graph(len, std::move(e));
}

inline Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(rng.uniform(0, i - 1), i);
  return Graph(n, std::move(e));
}

inline Graph t_family(Rng& rng, int steps) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  int n = 3;
  std::vector<Vertex> open{0, 1, 2};  // degree-2 triangle vertices
  for (int s = 0; s < steps && !open.empty(); ++s) {
    const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(open.size()) - 1));
    const Vertex at = open[pick];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    const bool odd = rng.coin();
    const int len = odd ? 2 * rng.uniform(0, 1) + 1 : 2 * rng.uniform(1, 2);
    Vertex prev = at;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, n);
      prev = n++;
    }
    if (odd) {
      e.emplace_back(prev, n);
      e.emplace_back(prev, n + 1);
      e.emplace_back(n, n + 1);
      open.push_back(n);
      open.push_back(n + 1);
      n += 2;
    }
  }
  return Graph(n, std::move(e));
}

inline Graph random_unicyclic(Rng& rng, int n) {
  const int g = rng.uniform(3, n);
  std::vector<Edge> e;
  for (int i = 0; i < g; ++i) e.emplace_back(i, (i + 1) % g);
  for (int i = g; i < n; ++i) e.emplace_back(rng.uniform(0, i - 1), i);
  return Graph(n, std::move(e));
}

inline Graph random_cactus(Rng& rng, int count, int max_edges) {
  std::vector<Edge> e;
  int n = 0;
  auto add_cycle = [&](int len) {
    const int base = n;
    for (int i = 0; i < len; ++i) e.emplace_back(base + i, base + (i + 1) % len);
    n += len;
    return base;
  };
  // Each later cycle costs at least 4 edges (a connecting edge and a triangle).
  auto reserve = [&](int left) { return 4 * left; };
  const int first_room = max_edges - reserve(count - 1);
  add_cycle(rng.uniform(3, std::min(5, first_room)));
  for (int c = 1; c < count; ++c) {
    const int room = max_edges - static_cast<int>(e.size()) - reserve(count - 1 - c);
    const int link = rng.uniform(1, std::min(3, room - 3));
    const int len = rng.uniform(3, std::min(5, room - link));
    Vertex prev = rng.uniform(0, n - 1);
    for (int i = 0; i < link - 1; ++i) {
      e.emplace_back(prev, n);
      prev = n++;
    }
    const Vertex start = add_cycle(len);
    e.emplace_back(prev, start + rng.uniform(0, len - 1));
  }
  const int pendants = rng.uniform(0, std::min(5, max_edges - static_cast<int>(e.size())));
  for (int i = 0; i < pendants; ++i) {
    e.emplace_back(rng.uniform(0, n - 1), n);
    ++n;
  }
  return Graph(n, std::move(e));
}

}  // namespace detail

/// Two bow-ties (pairs of triangles sharing a vertex) whose centers are joined
/// by a cut edge.
inline Graph bowtie_B() {
  return Graph(10, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {5, 6}, {6, 7}, {5, 7}, {5, 8}, {8, 9}, {5, 9}, {0, 5}});
}

inline Graph generate(const GenSpec& s) {
  Rng rng(s.seed);
  switch (s.kind) {
    case GenKind::Path:
      if (s.length < 1) fail(ErrorCode::InvalidSpec, "path length must be at least 1");
      return detail::path_graph(s.length);
    case GenKind::Cycle:
      if (s.length < 3) fail(ErrorCode::InvalidSpec, "cycle length must be at least 3");
      return detail::cycle_graph(s.length);
    case GenKind::Star: {
      if (s.legs < 1) fail(ErrorCode::InvalidSpec, "star needs at least one leg");
      std::vector<Edge> e;
      for (int i = 1; i <= s.legs; ++i) e.emplace_back(0, i);
      return Graph(s.legs + 1, std::move(e));
    }
    case GenKind::Spidey: {
      if (s.legs < 0 || s.long_legs < 0 || s.legs + s.long_legs < 3) fail(ErrorCode::InvalidSpec, "spidey needs at least three legs");
      std::vector<Edge> e;
      int n = 1;
      for (int i = 0; i < s.legs; ++i) e.emplace_back(0, n++);
      for (int i = 0; i < s.long_legs; ++i) {
        e.emplace_back(0, n);
        e.emplace_back(n, n + 1);
        n += 2;
      }
      return Graph(n, std::move(e));
    }
    case GenKind::BowtieB: return bowtie_B();
    case GenKind::TFamily:
      if (s.steps < 0) fail(ErrorCode::InvalidSpec, "steps must be nonnegative");
      return detail::t_family(rng, s.steps);
    case GenKind::RandomTree:
      if (s.size < 1) fail(ErrorCode::InvalidSpec, "tree needs at least one vertex");
      return detail::random_tree(rng, s.size);
    case GenKind::RandomUnicyclic:
      if (s.size < 3) fail(ErrorCode::InvalidSpec, "unicyclic graph needs at least three vertices");
      return detail::random_unicyclic(rng, s.size);
    case GenKind::RandomCactusVdc:
      if (s.cycles < 1) fail(ErrorCode::InvalidSpec, "cactus needs at least one cycle");
      if (s.max_edges < 4 * s.cycles - 1) fail(ErrorCode::InvalidSpec, "edge limit too small for the cycle count");
      return detail::random_cactus(rng, s.cycles, s.max_edges);
  }
  fail(ErrorCode::InvalidSpec, "unknown generator kind");
}

/// Canonical form of a graph: the lexicographically smallest upper-triangle
/// adjacency string over all vertex orders that respect the ordered partition
/// from color refinement. Isomorphic graphs get equal forms and the form
/// determines the graph.
struct Canonical {
  std::vector<int> cells;
  std::string matrix;
  std::vector<Vertex> order;  // order[i] = original vertex placed at position i

  friend bool operator<(const Canonical& a, const Canonical& b) {
    return std::tie(a.cells, a.matrix) < std::tie(b.cells, b.matrix);
  }
  friend bool operator==(const Canonical& a, const Canonical& b) { return a.cells == b.cells && a.matrix == b.matrix; }
};

namespace detail {

inline std::vector<int> refine(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> color(n);
  for (Vertex v = 0; v < g.order(); ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      for (const auto& inc : g.incident(v)) s.push_back(color[static_cast<std::size_t>(inc.neighbor)]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), color[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<int>> keys(sig.begin(), sig.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    if (keys.size() == classes) break;
    classes = keys.size();
  }
  return color;
}

}  // namespace detail

inline Canonical canonical_form(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto color = detail::refine(g);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::pair(color[static_cast<std::size_t>(a)], a) < std::pair(color[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  Canonical best;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[static_cast<std::size_t>(order[j])] == color[static_cast<std::size_t>(order[i])]) ++j;
    ranges.emplace_back(i, j);
    best.cells.push_back(static_cast<int>(j - i));
    i = j;
  }
  auto encode = [&] {
    std::string m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
    return m;
  };
  bool first = true;
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == ranges.size()) {
      auto m = encode();
      if (first || m < best.matrix) {
        best.matrix = std::move(m);
        best.order = order;
        first = false;
      }
      return;
    }
    const auto [lo, hi] = ranges[cell];
    auto b = order.begin() + static_cast<std::ptrdiff_t>(lo), e = order.begin() + static_cast<std::ptrdiff_t>(hi);
    std::sort(b, e);
    do self(self, cell + 1);
    while (std::next_permutation(b, e));
  };
  visit(visit, 0);
  return best;
}

/// The graph relabeled into its canonical vertex order.
inline Graph canonical_graph(const Graph& g) {
  const auto c = canonical_form(g);
  std::vector<Vertex> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < c.order.size(); ++i) pos[static_cast<std::size_t>(c.order[i])] = static_cast<Vertex>(i);
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.emplace_back(pos[static_cast<std::size_t>(x.u)], pos[static_cast<std::size_t>(x.v)]);
  std::sort(e.begin(), e.end());
  return Graph(g.order(), std::move(e));
}

/// All connected graphs with 1..max_edges edges up to isomorphism, by edge
/// count and then canonical form.
inline std::vector<Graph> enumerate_connected_graphs(int max_edges) {
  if (max_edges > 8) fail(ErrorCode::TooLarge, "enumeration supports at most 8 edges");
  std::vector<Graph> out;
  if (max_edges < 1) return out;
  std::vector<Graph> level{Graph(2, {{0, 1}})};
  for (int m = 1;; ++m) {
    out.insert(out.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::map<Canonical, Graph> next;
    auto offer = [&](Graph h) {
      auto key = canonical_form(h);
      if (!next.contains(key)) next.emplace(std::move(key), canonical_graph(h));
    };
    for (const auto& g : level) {
      for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
          if (g.has_edge(a, b)) continue;
          auto e = g.edges();
          e.emplace_back(a, b);
          offer(Graph(g.order(), std::move(e)));
        }
        auto e = g.edges();
        e.emplace_back(a, g.order());
        offer(Graph(g.order() + 1, std::move(e)));
      }
    }
    level.clear();
    for (auto& [k, g] : next) level.push_back(std::move(g));
  }
  return out;
}

namespace detail {

inline std::string ahu(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (const auto& inc : t.incident(v))
    if (inc.neighbor != parent) kids.push_back(ahu(t, inc.neighbor, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<Vertex> tree_centers(const Graph& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.order()));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < t.order(); ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = t.order();
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (const auto& inc : t.incident(v))
        if (--deg[static_cast<std::size_t>(inc.neighbor)] == 1) next.push_back(inc.neighbor);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace detail

/// Canonical string of a free tree (rooted encodings at its centers).
inline std::string tree_code(const Graph& t) {
  std::string best;
  for (Vertex c : detail::tree_centers(t)) {
    auto s = detail::ahu(t, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

/// All trees with 1..max_vertices vertices up to isomorphism.
inline std::vector<Graph> enumerate_trees(int max_vertices) {
  if (max_vertices > 14) fail(ErrorCode::TooLarge, "tree enumeration supports at most 14 vertices");
  std::vector<Graph> out;
  if (max_vertices < 1) return out;
  std::vector<Graph> level{Graph(1)};
  for (int n = 1;; ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n == max_vertices) break;
    std::map<std::string, Graph> next;
    for (const auto& t : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        auto e = t.edges();
        e.emplace_back(v, t.order());
        Graph h(t.order() + 1, std::move(e));
        auto code = tree_code(h);
        next.try_emplace(std::move(code), std::move(h));
      }
    level.clear();
    for (auto& [k, t] : next) level.push_back(std::move(t));
  }
  return out;
}

/// All shrubs with 2..max_vertices vertices up to rooted isomorphism.
inline std::vector<Shrub> enumerate_shrubs(int max_vertices) {
  std::vector<Shrub> out;
  std::set<std::string> seen;
  for (const auto& t : enumerate_trees(max_vertices)) {
    if (t.order() < 2) continue;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (t.degree(v) != 1) continue;
      auto code = std::to_string(t.order()) + detail::ahu(t, v, -1);
      if (seen.insert(code).second) out.emplace_back(t, v);
    }
  }
  return out;
}

}  // namespace liec

#endif  // LIEC_GENERATORS_HPP
