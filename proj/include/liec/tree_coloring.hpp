#ifndef LIEC_TREE_COLORING_HPP
#define LIEC_TREE_COLORING_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/error.hpp"
#include "liec/graph.hpp"
#include "liec/structure.hpp"

namespace liec {

/// Exact dynamic program over a forest of uncolored ("free") edges of a host
/// graph. It finds colors 0..k-1 for the free edges such that every free edge
/// is locally irregular and every already colored context edge touching a free
/// edge stays locally irregular.
///
/// For a vertex x entered from its parent through an edge of color p, the table
/// holds the set of values d^p(x) reachable by a valid coloring of the subtree
/// below x. A vertex combines its children by choosing how many child edges get
/// each color and checking, by bipartite assignment, that every child can take
/// its color with a degree different from the one x then has.
///
/// Context edges are allowed only when their far endpoint is untouched by free
/// edges; that endpoint's color-degree is then final.
class TreeColoringEngine {
 public:
  using Values = std::uint64_t;

  TreeColoringEngine(const Graph& host, std::vector<EdgeId> free, int k, EdgeColoring context = {},
                     std::map<EdgeId, unsigned> allowed = {}, std::vector<Vertex> roots = {})
      : host_(host), k_(k), context_(std::move(context)), allowed_(std::move(allowed)) {
    if (k < 1 || k > 8) fail(ErrorCode::PreconditionViolated, "palette size out of range");
    const auto n = static_cast<std::size_t>(host.order());
    is_free_.assign(static_cast<std::size_t>(host.size()), false);
    for (EdgeId id : free) is_free_[static_cast<std::size_t>(id)] = true;
    touched_.assign(n, false);
    for (EdgeId id : free) {
      touched_[static_cast<std::size_t>(host.edge(id).u)] = true;
      touched_[static_cast<std::size_t>(host.edge(id).v)] = true;
    }
    offset_.assign(n, std::vector<int>(static_cast<std::size_t>(k_), 0));
    forbid_.assign(n, std::vector<Values>(static_cast<std::size_t>(k_), 0));
    load_context();
    orient(roots);
    table_.assign(n, std::vector<Values>(static_cast<std::size_t>(k_), 0));
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      for (Color p = 0; p < k_; ++p)
        if (parent_[static_cast<std::size_t>(*it)] >= 0) table_[static_cast<std::size_t>(*it)][static_cast<std::size_t>(p)] = evaluate(*it, p);
  }

  /// Colors all free edges, or nullopt if impossible. The result contains the
  /// context too.
  std::optional<EdgeColoring> complete() const {
    EdgeColoring out = context_;
    for (Vertex r : roots_)
      if (!reconstruct(r, -1, -1, out)) return std::nullopt;
    return out;
  }

  /// Achievable d^p(x) for a non-root vertex x whose parent edge has color p.
  Values values(Vertex x, Color p) const { return table_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(p)); }

  Vertex parent(Vertex x) const { return parent_.at(static_cast<std::size_t>(x)); }

  /// Colors the subtree strictly below x assuming its parent edge has color p
  /// and d^p(x) must equal `target`.
  bool reconstruct(Vertex x, Color p, int target, EdgeColoring& out) const {
    const auto& kids = children_[static_cast<std::size_t>(x)];
    bool done = false;
    for_each_split(static_cast<int>(kids.size()), [&](const std::vector<int>& split) {
      auto deg = degrees(x, p, split);
      if (p >= 0 && deg[static_cast<std::size_t>(p)] != target) return false;
      auto assignment = assign(x, split, deg);
      if (!assignment) return false;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Color c = (*assignment)[i];
        const auto& [y, id] = kids[i];
        out.set(host_.edge(id), c);
        const Values ok = table_[static_cast<std::size_t>(y)][static_cast<std::size_t>(c)] & ~bit(deg[static_cast<std::size_t>(c)]);
        const int t = std::countr_zero(ok);
        if (!reconstruct(y, c, t, out)) fail(ErrorCode::InternalInvariant, "tree table inconsistent");
      }
      done = true;
      return true;
    });
    return done;
  }

  static constexpr Values bit(int d) { return d >= 0 && d < 64 ? Values{1} << d : 0; }

 private:
  bool allowed(EdgeId id, Color c) const {
    auto it = allowed_.find(id);
    return it == allowed_.end() || ((it->second >> c) & 1U);
  }

  void load_context() {
    const auto n = static_cast<std::size_t>(host_.order());
    std::vector<std::vector<int>> fixed(n, std::vector<int>(static_cast<std::size_t>(k_), 0));
    for (EdgeId id = 0; id < host_.size(); ++id) {
      if (is_free_[static_cast<std::size_t>(id)]) continue;
      const Edge e = host_.edge(id);
      auto c = context_.get(e);
      if (!c) continue;
      if (*c >= k_) fail(ErrorCode::PreconditionViolated, "context color outside palette");
      ++fixed[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(*c)];
      ++fixed[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(*c)];
    }
    for (EdgeId id = 0; id < host_.size(); ++id) {
      if (is_free_[static_cast<std::size_t>(id)]) continue;
      const Edge e = host_.edge(id);
      auto c = context_.get(e);
      if (!c) continue;
      const bool tu = touched_[static_cast<std::size_t>(e.u)];
      const bool tv = touched_[static_cast<std::size_t>(e.v)];
      if (tu && tv) fail(ErrorCode::InternalInvariant, "context edge joins two vertices of the free forest");
      const auto cs = static_cast<std::size_t>(*c);
      if (tu) {
        ++offset_[static_cast<std::size_t>(e.u)][cs];
        forbid_[static_cast<std::size_t>(e.u)][cs] |= bit(fixed[static_cast<std::size_t>(e.v)][cs]);
      }
      if (tv) {
        ++offset_[static_cast<std::size_t>(e.v)][cs];
        forbid_[static_cast<std::size_t>(e.v)][cs] |= bit(fixed[static_cast<std::size_t>(e.u)][cs]);
      }
    }
  }

  void orient(const std::vector<Vertex>& preferred) {
    const auto n = static_cast<std::size_t>(host_.order());
    parent_.assign(n, -2);
    children_.assign(n, {});
    auto grow = [&](Vertex r) {
      parent_[static_cast<std::size_t>(r)] = -1;
      roots_.push_back(r);
      std::vector<Vertex> stack{r};
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        order_.push_back(x);
        for (const auto& [y, id] : host_.incident(x)) {
          if (!is_free_[static_cast<std::size_t>(id)]) continue;
          if (parent_[static_cast<std::size_t>(y)] != -2) {
            if (y != parent_[static_cast<std::size_t>(x)]) fail(ErrorCode::NotATree, "free edges contain a cycle");
            continue;
          }
          parent_[static_cast<std::size_t>(y)] = x;
          children_[static_cast<std::size_t>(x)].push_back({y, id});
          stack.push_back(y);
        }
      }
    };
    for (Vertex r : preferred)
      if (touched_[static_cast<std::size_t>(r)] && parent_[static_cast<std::size_t>(r)] == -2) grow(r);
    for (Vertex v = 0; v < host_.order(); ++v)
      if (touched_[static_cast<std::size_t>(v)] && parent_[static_cast<std::size_t>(v)] == -2) grow(v);
  }

  template <typename Visit>
  void for_each_split(int m, Visit&& visit) const {
    std::vector<int> split(static_cast<std::size_t>(k_), 0);
    // Lexicographically decreasing compositions of m into k parts.
    auto rec = [&](auto&& self, int index, int left) -> bool {
      if (index == k_ - 1) {
        split[static_cast<std::size_t>(index)] = left;
        return visit(split);
      }
      for (int take = left; take >= 0; --take) {
        split[static_cast<std::size_t>(index)] = take;
        if (self(self, index + 1, left - take)) return true;
      }
      return false;
    };
    rec(rec, 0, m);
  }

  std::vector<int> degrees(Vertex x, Color p, const std::vector<int>& split) const {
    std::vector<int> deg(static_cast<std::size_t>(k_));
    for (Color c = 0; c < k_; ++c) {
      const auto cs = static_cast<std::size_t>(c);
      deg[cs] = offset_[static_cast<std::size_t>(x)][cs] + (p == c ? 1 : 0) + split[cs];
    }
    return deg;
  }

  /// Assigns each child a color respecting the split counts, or nullopt.
  std::optional<std::vector<Color>> assign(Vertex x, const std::vector<int>& split, const std::vector<int>& deg) const {
    for (Color c = 0; c < k_; ++c)
      if (forbid_[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] & bit(deg[static_cast<std::size_t>(c)]))
        return std::nullopt;
    const auto& kids = children_[static_cast<std::size_t>(x)];
    const std::size_t m = kids.size();
    std::vector<unsigned> can(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [y, id] = kids[i];
      for (Color c = 0; c < k_; ++c) {
        const auto cs = static_cast<std::size_t>(c);
        if (split[cs] == 0 || !allowed(id, c)) continue;
        if (table_[static_cast<std::size_t>(y)][cs] & ~bit(deg[cs])) can[i] |= 1U << c;
      }
      if (can[i] == 0) return std::nullopt;
    }
    // Slots: color c has split[c] places. Kuhn's augmenting paths over slots.
    std::vector<Color> slot_color;
    for (Color c = 0; c < k_; ++c)
      for (int j = 0; j < split[static_cast<std::size_t>(c)]; ++j) slot_color.push_back(c);
    std::vector<int> slot_owner(slot_color.size(), -1);
    auto try_kid = [&](auto&& self, std::size_t i, std::vector<bool>& seen) -> bool {
      for (std::size_t s = 0; s < slot_color.size(); ++s) {
        if (seen[s] || !((can[i] >> slot_color[s]) & 1U)) continue;
        seen[s] = true;
        if (slot_owner[s] < 0 || self(self, static_cast<std::size_t>(slot_owner[s]), seen)) {
          slot_owner[s] = static_cast<int>(i);
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<bool> seen(slot_color.size(), false);
      if (!try_kid(try_kid, i, seen)) return std::nullopt;
    }
    std::vector<Color> out(m, -1);
    for (std::size_t s = 0; s < slot_color.size(); ++s) out[static_cast<std::size_t>(slot_owner[s])] = slot_color[s];
    return out;
  }

  Values evaluate(Vertex x, Color p) const {
    Values result = 0;
    const int m = static_cast<int>(children_[static_cast<std::size_t>(x)].size());
    for_each_split(m, [&](const std::vector<int>& split) {
      auto deg = degrees(x, p, split);
      if (deg[static_cast<std::size_t>(p)] >= 64) fail(ErrorCode::TooLarge, "vertex degree too large for the tree table");
      if (!(result & bit(deg[static_cast<std::size_t>(p)])) && assign(x, split, deg)) result |= bit(deg[static_cast<std::size_t>(p)]);
      return false;
    });
    return result;
  }

  const Graph& host_;
  int k_;
  EdgeColoring context_;
  std::map<EdgeId, unsigned> allowed_;
  std::vector<bool> is_free_;
  std::vector<bool> touched_;
  std::vector<std::vector<int>> offset_;
  std::vector<std::vector<Values>> forbid_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Incidence>> children_;
  std::vector<Vertex> roots_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Values>> table_;
};

/// Locally irregular coloring of the free forest with at most k colors,
/// compatible with the context, or nullopt.
inline std::optional<EdgeColoring> complete_forest(const Graph& host, std::vector<EdgeId> free, int k,
                                                   EdgeColoring context = {}, std::map<EdgeId, unsigned> allowed = {}) {
  TreeColoringEngine engine(host, std::move(free), k, std::move(context), std::move(allowed));
  return engine.complete();
}

}  // namespace liec

#endif  // LIEC_TREE_COLORING_HPP
