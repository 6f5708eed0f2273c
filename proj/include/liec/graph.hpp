#ifndef LIEC_GRAPH_HPP
#define LIEC_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liec/error.hpp"

namespace liec {

using Vertex = int;
using EdgeId = int;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph on the dense vertex set 0..n-1. Isolated vertices are
/// allowed; loops and parallel edges are rejected at construction. Instances are
/// immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {}, std::vector<Vertex> labels = {})
      : n_(n), adjacency_(static_cast<std::size_t>(n)), labels_(std::move(labels)) {
    if (n < 0) fail(ErrorCode::UnknownVertex, "negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      fail(ErrorCode::UnknownVertex, "label map size does not match vertex count");
    edges_.reserve(edges.size());
    for (const auto& e : edges) add(e.u, e.v);
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

  std::span<const Incidence> incident(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  int max_degree() const {
    int best = 0;
    for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
    return best;
  }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return std::nullopt;
    const auto& row = adjacency_[static_cast<std::size_t>(a)];
    for (const auto& inc : row)
      if (inc.neighbor == b) return inc.edge;
    return std::nullopt;
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  /// External id of a vertex (the id used in the input file), identity by default.
  Vertex label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? v : labels_[static_cast<std::size_t>(v)];
  }
  const std::vector<Vertex>& labels() const { return labels_; }

  /// Same vertex set, only the listed edges.
  Graph spanning_subgraph(std::span<const EdgeId> ids) const {
    std::vector<Edge> picked;
    picked.reserve(ids.size());
    for (EdgeId id : ids) picked.push_back(edge(id));
    return Graph(n_, std::move(picked), labels_);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.size() != b.size()) return false;
    auto ea = a.edges_;
    auto eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
  }

 private:
  void check_vertex(Vertex v) const {
    if (!contains(v)) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " out of range");
  }

  void add(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
      fail(ErrorCode::DuplicateEdge, "edge " + std::to_string(a) + " " + std::to_string(b) + " repeated");
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.emplace_back(a, b);
    adjacency_[static_cast<std::size_t>(a)].push_back({b, id});
    adjacency_[static_cast<std::size_t>(b)].push_back({a, id});
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Vertex> labels_;
};

/// A graph extracted from a host graph together with the map back to host ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  Vertex host(Vertex local) const { return to_host.at(static_cast<std::size_t>(local)); }
  Edge host(const Edge& e) const { return {host(e.u), host(e.v)}; }
};

/// Compact subgraph spanned by the given host edges. Local ids follow host id order.
inline Subgraph edge_subgraph(const Graph& host, std::span<const EdgeId> ids) {
  std::vector<Vertex> vertices;
  for (EdgeId id : ids) {
    vertices.push_back(host.edge(id).u);
    vertices.push_back(host.edge(id).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (EdgeId id : ids) edges.emplace_back(local(host.edge(id).u), local(host.edge(id).v));
  const int n = static_cast<int>(vertices.size());
  return {Graph(n, std::move(edges)), std::move(vertices)};
}

/// Compact subgraph induced by a vertex set.
inline Subgraph induced_subgraph(const Graph& host, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> local(static_cast<std::size_t>(host.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : host.edges()) {
    const int a = local[static_cast<std::size_t>(e.u)];
    const int b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  const int n = static_cast<int>(vertices.size());
  return {Graph(n, std::move(edges)), std::move(vertices)};
}

/// Parses "u v" lines. Blank lines and '#' comments are ignored. Arbitrary
/// nonnegative ids are compacted to 0..n-1 in increasing order; the original
/// ids are kept as vertex labels.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::istringstream in(line);
    std::string a, b, extra;
    in >> a >> b;
    auto is_id = [](const std::string& s) {
      return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!is_id(a) || !is_id(b) || (in >> extra))
      fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": expected two nonnegative integers");
    raw.emplace_back(std::stoll(a), std::stoll(b));
    if (end == text.size()) break;
  }

  std::map<long long, Vertex> compact;
  for (const auto& [a, b] : raw) {
    compact.emplace(a, 0);
    compact.emplace(b, 0);
  }
  std::vector<Vertex> labels;
  labels.reserve(compact.size());
  for (auto& [id, local] : compact) {
    local = static_cast<Vertex>(labels.size());
    labels.push_back(static_cast<Vertex>(id));
  }
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a == b) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
    edges.emplace_back(compact.at(a), compact.at(b));
  }
  // Graph's constructor reports duplicates; rethrow in terms of input ids.
  try {
    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::DuplicateEdge) fail(ErrorCode::DuplicateEdge, "duplicate edge in input");
    throw;
  }
}

/// Edge-list text using the graph's labels.
inline std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) out += std::to_string(g.label(e.u)) + " " + std::to_string(g.label(e.v)) + "\n";
  return out;
}

}  // namespace liec

#endif  // LIEC_GRAPH_HPP
