#ifndef LIEC_FAMILY_HPP
#define LIEC_FAMILY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "liec/error.hpp"
#include "liec/graph.hpp"
#include "liec/structure.hpp"

namespace liec {

/// One growth step of the triangle family: a path glued at a degree-2
/// triangle vertex `at`. Odd paths end in a fresh triangle.
struct TAttachment {
  Vertex at = -1;
  std::vector<Vertex> path;  // starts at `at`
  std::optional<std::array<Vertex, 2>> triangle;  // the two new triangle vertices at the far end

  int length() const { return static_cast<int>(path.size()) - 1; }
};

struct TDecomposition {
  std::array<Vertex, 3> base_triangle{};
  std::vector<TAttachment> attachments;
};

/// Rebuilds the graph described by a decomposition on `n` vertices, checking
/// every growth rule along the way.
inline Graph replay(const TDecomposition& d, int n) {
  std::vector<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false), in_triangle(static_cast<std::size_t>(n), false);
  auto add = [&](Vertex a, Vertex b) {
    edges.emplace_back(a, b);
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  };
  auto fresh = [&](Vertex v) {
    if (v < 0 || v >= n || used[static_cast<std::size_t>(v)]) fail(ErrorCode::PreconditionViolated, "decomposition reuses a vertex");
    used[static_cast<std::size_t>(v)] = true;
  };
  const auto& [a, b, c] = d.base_triangle;
  for (Vertex v : d.base_triangle) {
    fresh(v);
    in_triangle[static_cast<std::size_t>(v)] = true;
  }
  add(a, b);
  add(b, c);
  add(a, c);
  for (const auto& step : d.attachments) {
    if (step.path.empty() || step.path.front() != step.at) fail(ErrorCode::PreconditionViolated, "path must start at the attachment vertex");
    const auto at = static_cast<std::size_t>(step.at);
    if (!in_triangle[at] || deg[at] != 2) fail(ErrorCode::PreconditionViolated, "attachment vertex must be a degree-2 triangle vertex");
    const bool odd = step.length() % 2 == 1;
    if (step.length() < 1 || odd != step.triangle.has_value()) fail(ErrorCode::PreconditionViolated, "path parity does not match its end");
    for (std::size_t i = 1; i < step.path.size(); ++i) {
      fresh(step.path[i]);
      add(step.path[i - 1], step.path[i]);
    }
    if (step.triangle) {
      const Vertex end = step.path.back();
      const auto [x, y] = *step.triangle;
      fresh(x);
      fresh(y);
      add(end, x);
      add(x, y);
      add(end, y);
      for (Vertex v : {end, x, y}) in_triangle[static_cast<std::size_t>(v)] = true;
    }
  }
  return Graph(n, std::move(edges));
}

/// Membership in the triangle family. On success the returned decomposition
/// replays exactly to `g`.
inline std::optional<TDecomposition> is_T_member(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) fail(ErrorCode::DisconnectedInput, "family membership needs a connected graph");
  const auto scan = detail::scan_cycles(g);
  if (!scan.cactus || scan.cycles.empty()) return std::nullopt;
  for (const auto& c : scan.cycles)
    if (c.size() != 3) return std::nullopt;
  if (!vertex_disjoint(scan.cycles, g.order())) return std::nullopt;

  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> tri_of(n, -1);
  std::vector<std::array<Vertex, 3>> tris;
  for (const auto& c : scan.cycles) {
    std::array<Vertex, 3> t{c[0], c[1], c[2]};
    std::sort(t.begin(), t.end());
    for (Vertex v : t) tri_of[static_cast<std::size_t>(v)] = static_cast<int>(tris.size());
    tris.push_back(t);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const int limit = tri_of[static_cast<std::size_t>(v)] >= 0 ? 3 : 2;
    if (g.degree(v) > limit) return std::nullopt;
  }
  // Walk the path leaving a triangle vertex through its unique off-triangle edge.
  auto walk = [&](Vertex start) {
    std::vector<Vertex> path{start};
    Vertex prev = -1, cur = start;
    while (true) {
      Vertex next = -1;
      for (const auto& inc : g.incident(cur)) {
        const Vertex y = inc.neighbor;
        if (y == prev) continue;
        if (cur == start && tri_of[static_cast<std::size_t>(y)] == tri_of[static_cast<std::size_t>(start)]) continue;
        next = y;
        break;
      }
      if (next < 0) break;  // reached a leaf
      path.push_back(next);
      if (tri_of[static_cast<std::size_t>(next)] >= 0) break;
      prev = cur;
      cur = next;
    }
    return path;
  };

  TDecomposition d;
  d.base_triangle = tris.front();
  std::vector<bool> visited(tris.size(), false);
  std::vector<int> queue{0};
  visited[0] = true;
  int edges_seen = 3;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto& t = tris[static_cast<std::size_t>(queue[qi])];
    for (Vertex v : t) {
      if (g.degree(v) != 3) continue;
      auto path = walk(v);
      const Vertex end = path.back();
      const int end_tri = tri_of[static_cast<std::size_t>(end)];
      if (end_tri >= 0 && visited[static_cast<std::size_t>(end_tri)]) continue;  // edge back to the parent triangle
      TAttachment step;
      step.at = v;
      step.path = path;
      if (end_tri >= 0) {
        std::array<Vertex, 2> rest{};
        int j = 0;
        for (Vertex x : tris[static_cast<std::size_t>(end_tri)])
          if (x != end) rest[static_cast<std::size_t>(j++)] = x;
        step.triangle = rest;
        visited[static_cast<std::size_t>(end_tri)] = true;
        queue.push_back(end_tri);
        if (step.length() % 2 == 0) return std::nullopt;
        edges_seen += step.length() + 3;
      } else {
        if (step.length() % 2 == 1) return std::nullopt;
        edges_seen += step.length();
      }
      d.attachments.push_back(std::move(step));
    }
  }
  if (edges_seen != g.size()) return std::nullopt;
  try {
    if (!(replay(d, g.order()) == g)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return d;
}

/// Odd path, odd cycle, or a member of the triangle family.
inline bool is_T_prime_member(const Graph& g) {
  const auto cls = classify(g);
  if (cls.tag == ClassTag::OddPath || cls.tag == ClassTag::OddCycle) return true;
  return is_T_member(g).has_value();
}

/// A connected graph admits a locally irregular edge coloring iff it lies
/// outside the exceptional family.
inline bool is_colorable(const Graph& g) { return !is_T_prime_member(g); }

/// Brute-force colorability: searches all set partitions of E(g) for one whose
/// every class induces a locally irregular subgraph. Independent of the
/// coloring module on purpose; serves as an oracle.
inline bool exhaustive_colorable(const Graph& g, int max_edges = 9) {
  const int m = g.size();
  if (m > max_edges) fail(ErrorCode::TooLarge, "graph has " + std::to_string(m) + " edges, oracle limit is " + std::to_string(max_edges));
  if (m == 0) return true;
  const auto& edges = g.edges();
  std::vector<int> cls(static_cast<std::size_t>(m), 0);
  std::vector<int> deg(static_cast<std::size_t>(g.order() * m), 0);
  auto class_ok = [&]() {
    std::fill(deg.begin(), deg.end(), 0);
    for (int i = 0; i < m; ++i) {
      const auto& e = edges[static_cast<std::size_t>(i)];
      ++deg[static_cast<std::size_t>(e.u * m + cls[static_cast<std::size_t>(i)])];
      ++deg[static_cast<std::size_t>(e.v * m + cls[static_cast<std::size_t>(i)])];
    }
    for (int i = 0; i < m; ++i) {
      const auto& e = edges[static_cast<std::size_t>(i)];
      const int b = cls[static_cast<std::size_t>(i)];
      if (deg[static_cast<std::size_t>(e.u * m + b)] == deg[static_cast<std::size_t>(e.v * m + b)]) return false;
    }
    return true;
  };
  // Restricted growth strings enumerate every set partition exactly once.
  auto rec = [&](auto&& self, int i, int blocks) -> bool {
    if (i == m) return class_ok();
    for (int b = 0; b <= blocks; ++b) {
      cls[static_cast<std::size_t>(i)] = b;
      if (self(self, i + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace liec

#endif  // LIEC_FAMILY_HPP
