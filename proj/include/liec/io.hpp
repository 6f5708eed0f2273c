#ifndef LIEC_IO_HPP
#define LIEC_IO_HPP

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include <json.hpp>

#include "liec/coloring.hpp"
#include "liec/constructive.hpp"
#include "liec/graph.hpp"
#include "liec/solver.hpp"
#include "liec/structure.hpp"

namespace liec {

using json = nlohmann::json;

// All JSON uses the graph's external labels, so output matches the input file.

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  return {{"n", g.order()}, {"edges", edges}};
}

inline json to_json(const Graph& g, const EdgeColoring& c) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v), c.at(e)});
  return {{"palette", c.palette()}, {"edges", edges}};
}

inline json edges_json(const Graph& g, const std::vector<Edge>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({g.label(e.u), g.label(e.v)});
  return out;
}

/// Reads a coloring file for `g`; edges are given by external labels. The
/// output of `construct` is accepted as well.
inline EdgeColoring coloring_from_json(const Graph& g, const json& input) {
  const json& j = input.is_object() && input.contains("coloring") ? input["coloring"] : input;
  std::map<Vertex, Vertex> local;
  for (Vertex v = 0; v < g.order(); ++v) local[g.label(v)] = v;
  auto find = [&](const json& x) {
    const auto it = local.find(x.get<Vertex>());
    if (it == local.end()) fail(ErrorCode::UnknownVertex, "coloring mentions vertex " + x.dump() + " not in the graph");
    return it->second;
  };
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) fail(ErrorCode::MalformedLine, "coloring JSON needs an edges array");
  EdgeColoring c;
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 3) fail(ErrorCode::MalformedLine, "coloring entries are [u, v, color]");
    const Vertex a = find(row[0]), b = find(row[1]);
    if (!g.has_edge(a, b)) fail(ErrorCode::UnknownVertex, "coloring mentions a non-edge " + row.dump());
    c.set(Edge(a, b), row[2].get<Color>());
  }
  if (j.contains("palette")) c.set_palette(std::max(c.palette(), j["palette"].get<int>()));
  for (const auto& e : g.edges())
    if (!c.contains(e)) fail(ErrorCode::PartialColoring, "edge " + std::to_string(g.label(e.u)) + " " + std::to_string(g.label(e.v)) + " is uncolored");
  return c;
}

inline json to_json(const GraphClass& c) {
  json out{{"tag", to_string(c.tag)}, {"cycles", c.cycle_count}};
  out["girth"] = c.girth ? json(*c.girth) : json(nullptr);
  return out;
}

inline json to_json(const ConstructionTrace& t) {
  json out = json::array();
  for (const auto& s : t.steps) out.push_back({{"rule", s.rule}, {"detail", s.detail}});
  return out;
}

inline json to_json(const Graph& g, const SolveReport& r, bool timing) {
  json out{{"nodes_explored", r.nodes_explored}};
  out["chi"] = r.chi ? json(*r.chi) : json(nullptr);
  out["witness"] = r.witness ? to_json(g, *r.witness) : json(nullptr);
  if (timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return out;
}

}  // namespace liec

#endif  // LIEC_IO_HPP
