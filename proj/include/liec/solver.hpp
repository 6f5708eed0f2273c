#ifndef LIEC_SOLVER_HPP
#define LIEC_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/error.hpp"
#include "liec/graph.hpp"

namespace liec {

struct SolverOptions {
  int kmax = 5;
  int edge_budget = 20;
  int threads = 1;
};

struct SolveReport {
  std::optional<int> chi;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

/// Edges in DFS discovery order from vertex 0 (then from each unvisited vertex),
/// neighbors visited in increasing id order.
inline std::vector<EdgeId> dfs_edge_order(const Graph& g) {
  std::vector<EdgeId> order;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> taken(static_cast<std::size_t>(g.size()), false);
  std::vector<std::vector<Incidence>> sorted(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    sorted[static_cast<std::size_t>(v)].assign(inc.begin(), inc.end());
    std::sort(sorted[static_cast<std::size_t>(v)].begin(), sorted[static_cast<std::size_t>(v)].end(),
              [](const auto& a, const auto& b) { return a.neighbor < b.neighbor; });
  }
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      const Vertex x = stack.back().first;
      auto& cursor = stack.back().second;
      const auto& inc = sorted[static_cast<std::size_t>(x)];
      if (cursor == inc.size()) {
        stack.pop_back();
        continue;
      }
      const auto [y, id] = inc[cursor++];
      if (!taken[static_cast<std::size_t>(id)]) {
        taken[static_cast<std::size_t>(id)] = true;
        order.push_back(id);
      }
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back({y, 0});
      }
    }
  }
  return order;
}

/// Backtracking search for a k-liec. Edges are colored in a fixed order; a new
/// color may only be opened as the next unused one, which removes palette
/// permutations. A vertex is finalized once all its edges are colored; an edge
/// whose two endpoints are both finalized has final color-degrees and is
/// checked then. No other pruning is applied, so the search is exhaustive.
class LiecSearch {
 public:
  LiecSearch(const Graph& g, int k) : g_(g), k_(k), order_(dfs_edge_order(g)) {
    const auto n = static_cast<std::size_t>(g.order());
    color_.assign(static_cast<std::size_t>(g.size()), -1);
    count_.assign(n * static_cast<std::size_t>(k), 0);
    remaining_.resize(n);
    for (Vertex v = 0; v < g.order(); ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  /// Assigns a prefix of the order up front; returns false if that prefix
  /// already violates a finalized edge.
  bool seed(const std::vector<Color>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      apply(order_[i], prefix[i]);
      if (!consistent(order_[i])) return false;
    }
    depth_ = prefix.size();
    for (Color c : prefix) used_ = std::max(used_, c + 1);
    return true;
  }

  bool run() { return search(depth_, used_); }

  EdgeColoring witness() const {
    EdgeColoring out;
    for (EdgeId id = 0; id < g_.size(); ++id) out.set(g_.edge(id), color_[static_cast<std::size_t>(id)]);
    out.set_palette(k_);
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<EdgeId>& order() const { return order_; }

 private:
  int& count(Vertex v, Color c) { return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

  void apply(EdgeId id, Color c) {
    const Edge& e = g_.edge(id);
    color_[static_cast<std::size_t>(id)] = c;
    ++count(e.u, c);
    ++count(e.v, c);
    --remaining_[static_cast<std::size_t>(e.u)];
    --remaining_[static_cast<std::size_t>(e.v)];
  }

  void undo(EdgeId id) {
    const Edge& e = g_.edge(id);
    const Color c = color_[static_cast<std::size_t>(id)];
    --count(e.u, c);
    --count(e.v, c);
    ++remaining_[static_cast<std::size_t>(e.u)];
    ++remaining_[static_cast<std::size_t>(e.v)];
    color_[static_cast<std::size_t>(id)] = -1;
  }

  bool finalized_ok(Vertex x) {
    if (remaining_[static_cast<std::size_t>(x)] != 0) return true;
    for (const auto& [y, id] : g_.incident(x)) {
      if (remaining_[static_cast<std::size_t>(y)] != 0) continue;
      const Color c = color_[static_cast<std::size_t>(id)];
      if (count(x, c) == count(y, c)) return false;
    }
    return true;
  }

  bool consistent(EdgeId id) {
    const Edge& e = g_.edge(id);
    return finalized_ok(e.u) && finalized_ok(e.v);
  }

  bool search(std::size_t depth, int used) {
    ++nodes_;
    if (depth == order_.size()) return true;
    const EdgeId id = order_[depth];
    const int limit = std::min(k_, used + 1);
    for (Color c = 0; c < limit; ++c) {
      apply(id, c);
      if (consistent(id) && search(depth + 1, std::max(used, c + 1))) return true;
      undo(id);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<Color> color_;
  std::vector<int> count_;
  std::vector<int> remaining_;
  std::size_t depth_ = 0;
  int used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A k-liec of g, or nullopt when none exists. Throws BudgetExceeded when the
/// graph is larger than the configured edge budget.
inline std::optional<EdgeColoring> exists_k_liec(const Graph& g, int k, const SolverOptions& opts = {},
                                                 std::uint64_t* nodes = nullptr) {
  if (k < 1) fail(ErrorCode::PreconditionViolated, "k must be positive");
  if (g.size() > opts.edge_budget)
    fail(ErrorCode::BudgetExceeded, std::to_string(g.size()) + " edges exceed the solver budget of " + std::to_string(opts.edge_budget));
  if (g.size() == 0) {
    EdgeColoring empty;
    empty.set_palette(k);
    return empty;
  }

  // Fan out over the colors of the second edge. Branch i explores exactly the
  // subtree the sequential search would visit i-th, so taking the first
  // successful branch in order reproduces the sequential witness.
  if (opts.threads > 1 && g.size() >= 2 && k >= 2) {
    std::vector<std::future<std::pair<std::optional<EdgeColoring>, std::uint64_t>>> jobs;
    for (Color c = 0; c < 2; ++c) {
      jobs.push_back(std::async(std::launch::async, [&g, k, c] {
        detail::LiecSearch search(g, k);
        std::optional<EdgeColoring> found;
        if (search.seed({0, c}) && search.run()) found = search.witness();
        return std::make_pair(found, search.nodes());
      }));
    }
    std::optional<EdgeColoring> best;
    std::uint64_t total = 1;
    for (auto& job : jobs) {
      auto [found, count] = job.get();
      total += count;
      if (!best && found) best = std::move(found);
    }
    if (nodes) *nodes += total;
    return best;
  }

  detail::LiecSearch search(g, k);
  const bool ok = search.run();
  if (nodes) *nodes += search.nodes();
  if (!ok) return std::nullopt;
  return search.witness();
}

/// Probes k = 1..kmax; chi is the first k admitting a k-liec. An absent chi
/// only means nothing was found up to kmax.
inline SolveReport chromatic_index_irregular(const Graph& g, const SolverOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  for (int k = 1; k <= opts.kmax; ++k) {
    if (auto w = exists_k_liec(g, k, opts, &report.nodes_explored)) {
      report.chi = k;
      report.witness = std::move(w);
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace liec

#endif  // LIEC_SOLVER_HPP
