#include <gtest/gtest.h>

#include "liec/liec.hpp"

using namespace liec;

TEST(TMember, Examples) {
  auto k3 = generate({.kind = GenKind::Cycle, .length = 3});
  auto d = is_T_member(k3);
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->attachments.empty());

  auto even_tail = parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 4");
  EXPECT_TRUE(is_T_member(even_tail));

  auto odd_tail = parse_edge_list("0 1\n1 2\n2 0\n0 3");
  EXPECT_FALSE(is_T_member(odd_tail));
  EXPECT_TRUE(exhaustive_colorable(odd_tail));

  auto joined = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3");
  EXPECT_TRUE(is_T_member(joined));
  EXPECT_FALSE(exhaustive_colorable(joined));
}

TEST(TMember, OddPathBackToAnExistingTriangleIsColorable) {
  // an odd path from a triangle vertex closing on another vertex of the same triangle
  auto g = parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 4\n4 1");
  EXPECT_FALSE(is_T_member(g));
  EXPECT_TRUE(exhaustive_colorable(g));
  // an odd path between two triangles that are already present
  auto h = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4");
  EXPECT_FALSE(is_T_member(h));
  EXPECT_TRUE(exhaustive_colorable(h));
}

TEST(TMember, RejectsDisconnected) {
  EXPECT_THROW(is_T_member(parse_edge_list("0 1\n1 2\n2 0\n3 4")), Error);
}

TEST(TPrime, Examples) {
  EXPECT_TRUE(is_T_prime_member(generate({.kind = GenKind::Path, .length = 3})));
  EXPECT_TRUE(is_T_prime_member(generate({.kind = GenKind::Cycle, .length = 7})));
  EXPECT_FALSE(is_T_prime_member(generate({.kind = GenKind::Cycle, .length = 6})));
}

TEST(Exhaustive, Examples) {
  EXPECT_FALSE(exhaustive_colorable(generate({.kind = GenKind::Path, .length = 1})));
  EXPECT_FALSE(exhaustive_colorable(generate({.kind = GenKind::Cycle, .length = 3})));
  EXPECT_TRUE(exhaustive_colorable(generate({.kind = GenKind::Path, .length = 2})));
  try {
    exhaustive_colorable(generate({.kind = GenKind::Path, .length = 10}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Colorable, Examples) {
  EXPECT_TRUE(is_colorable(bowtie_B()));
  EXPECT_FALSE(is_colorable(generate({.kind = GenKind::Cycle, .length = 9})));
  for (const auto& t : enumerate_trees(9))
    if (t.size() > 0) {
      EXPECT_EQ(is_colorable(t), !is_odd_path(t));
    }
}

TEST(Colorable, AgreesWithOracleUpToSevenEdges) {
  int checked = 0;
  for (const auto& g : enumerate_connected_graphs(7)) {
    EXPECT_EQ(is_colorable(g), exhaustive_colorable(g)) << to_edge_list(g);
    ++checked;
  }
  EXPECT_EQ(checked, 131);
}

TEST(TMember, OddSizeAndReplay) {
  for (const auto& g : enumerate_connected_graphs(8)) {
    auto d = is_T_member(g);
    if (!d) continue;
    EXPECT_EQ(g.size() % 2, 1);
    EXPECT_TRUE(replay(*d, g.order()) == g);
  }
}

TEST(TMember, GeneratedMembers) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = generate({.kind = GenKind::TFamily, .seed = seed, .steps = static_cast<int>(seed % 6)});
    auto d = is_T_member(g);
    ASSERT_TRUE(d) << to_edge_list(g);
    EXPECT_EQ(g.size() % 2, 1);
    EXPECT_FALSE(is_colorable(g));
    EXPECT_TRUE(replay(*d, g.order()) == g);
    if (g.size() <= 9) {
      EXPECT_FALSE(exhaustive_colorable(g));
    }
  }
}

TEST(Replay, RejectsBadSteps) {
  TDecomposition d;
  d.base_triangle = {0, 1, 2};
  d.attachments.push_back({0, {0, 3, 4}, std::array<Vertex, 2>{5, 6}});
  EXPECT_THROW(replay(d, 7), Error);  // even path ending in a triangle
}
