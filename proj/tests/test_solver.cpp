#include <gtest/gtest.h>

#include "liec/liec.hpp"

using namespace liec;

namespace {

// Plain enumeration of all k^m colorings.
bool brute_k_liec(const Graph& g, int k) {
  std::uint64_t total = 1;
  for (int i = 0; i < g.size(); ++i) total *= static_cast<std::uint64_t>(k);
  for (std::uint64_t code = 0; code < total; ++code) {
    EdgeColoring c;
    std::uint64_t x = code;
    for (const auto& e : g.edges()) {
      c.set(e, static_cast<Color>(x % static_cast<std::uint64_t>(k)));
      x /= static_cast<std::uint64_t>(k);
    }
    if (verify_liec(g, c).ok()) return true;
  }
  return false;
}

Graph cycle(int n) { return generate({.kind = GenKind::Cycle, .length = n}); }

}  // namespace

TEST(ExistsK, Cycles) {
  EXPECT_FALSE(exists_k_liec(cycle(6), 2));
  EXPECT_TRUE(exists_k_liec(cycle(6), 3));
  EXPECT_TRUE(exists_k_liec(cycle(4), 2));
  EXPECT_FALSE(exists_k_liec(bowtie_B(), 3));
}

TEST(Chi, Examples) {
  auto b = chromatic_index_irregular(bowtie_B());
  ASSERT_TRUE(b.chi);
  EXPECT_EQ(*b.chi, 4);
  ASSERT_TRUE(b.witness);
  EXPECT_TRUE(verify_liec(bowtie_B(), *b.witness).ok());
  EXPECT_LE(b.witness->max_color(), 3);

  EXPECT_EQ(chromatic_index_irregular(generate({.kind = GenKind::Path, .length = 2})).chi, 1);
  auto k3 = chromatic_index_irregular(cycle(3));
  EXPECT_FALSE(k3.chi);
  EXPECT_FALSE(is_colorable(cycle(3)));
}

TEST(Budget, Exceeded) {
  SolverOptions opts;
  opts.edge_budget = 5;
  try {
    exists_k_liec(cycle(6), 3, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(ExistsK, AgreesWithBruteForceUpToSixEdges) {
  for (const auto& g : enumerate_connected_graphs(6))
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(exists_k_liec(g, k).has_value(), brute_k_liec(g, k)) << to_edge_list(g) << "k=" << k;
}

TEST(ExistsK, WitnessesVerifyAndAreMonotone) {
  for (const auto& g : enumerate_connected_graphs(7)) {
    bool before = false;
    for (int k = 1; k <= 4; ++k) {
      auto w = exists_k_liec(g, k);
      if (before) {
        EXPECT_TRUE(w);
      }
      if (w) {
        EXPECT_TRUE(verify_liec(g, *w).ok());
        EXPECT_LT(w->max_color(), k);
      }
      before = w.has_value();
    }
  }
}

TEST(Chi, PresentExactlyWhenColorable) {
  for (const auto& g : enumerate_connected_graphs(7)) {
    auto r = chromatic_index_irregular(g);
    EXPECT_EQ(r.chi.has_value(), exhaustive_colorable(g)) << to_edge_list(g);
    if (r.chi && *r.chi > 1) {
      EXPECT_FALSE(exists_k_liec(g, *r.chi - 1));
    }
  }
}

TEST(Determinism, SameWitnessAcrossRunsAndThreads) {
  SolverOptions par;
  par.threads = 2;
  for (const auto& g : {bowtie_B(), cycle(10), generate({.kind = GenKind::RandomUnicyclic, .seed = 9, .size = 12})}) {
    auto a = chromatic_index_irregular(g);
    auto b = chromatic_index_irregular(g);
    auto c = chromatic_index_irregular(g, par);
    EXPECT_EQ(a.chi, b.chi);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
    EXPECT_EQ(a.chi, c.chi);
    EXPECT_EQ(a.witness, c.witness);
  }
}

TEST(DfsOrder, CoversEveryEdgeOnce) {
  auto g = bowtie_B();
  auto order = detail::dfs_edge_order(g);
  std::set<EdgeId> ids(order.begin(), order.end());
  EXPECT_EQ(static_cast<int>(ids.size()), g.size());
  EXPECT_EQ(static_cast<int>(order.size()), g.size());
  EXPECT_EQ(g.edge(order.front()), Edge(0, 1));
}
