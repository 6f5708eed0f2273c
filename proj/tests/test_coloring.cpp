#include <gtest/gtest.h>

#include "liec/liec.hpp"

using namespace liec;

namespace {

EdgeColoring uniform_coloring(const Graph& g, Color c) {
  EdgeColoring out;
  for (const auto& e : g.edges()) out.set(e, c);
  return out;
}

EdgeColoring from_digits(const Graph& g, std::uint64_t code, int k) {
  EdgeColoring out;
  for (const auto& e : g.edges()) {
    out.set(e, static_cast<Color>(code % static_cast<std::uint64_t>(k)));
    code /= static_cast<std::uint64_t>(k);
  }
  return out;
}

}  // namespace

TEST(Verify, SmallCases) {
  auto p2 = generate({.kind = GenKind::Path, .length = 2});
  EXPECT_TRUE(verify_liec(p2, uniform_coloring(p2, 0)).ok());
  auto k2 = generate({.kind = GenKind::Path, .length = 1});
  for (Color c = 0; c < 3; ++c) EXPECT_EQ(verify_liec(k2, uniform_coloring(k2, c)).violations.size(), 1U);
}

TEST(Verify, PartialColoringRejected) {
  auto p2 = generate({.kind = GenKind::Path, .length = 2});
  EdgeColoring c;
  c.set(Edge(0, 1), 0);
  EXPECT_THROW(verify_liec(p2, c), Error);
}

TEST(Verify, NoTwoColoringOfSixCycle) {
  auto c6 = generate({.kind = GenKind::Cycle, .length = 6});
  for (std::uint64_t code = 0; code < 64; ++code) EXPECT_FALSE(verify_liec(c6, from_digits(c6, code, 2)).ok());
}

TEST(Verify, MatchesPerClassCheckAndPaletteInvariance) {
  const std::array<Color, 3> perm{2, 0, 1};
  for (const auto& g : enumerate_connected_graphs(5)) {
    std::uint64_t total = 1;
    for (int i = 0; i < g.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; code += 7) {
      auto c = from_digits(g, code, 3);
      const bool ok = verify_liec(g, c).ok();
      EXPECT_EQ(ok, verify_liec(g, recolor(c, perm)).ok());
      bool classes_ok = true;
      for (Color x = 0; x < 3; ++x) {
        std::vector<EdgeId> ids;
        for (EdgeId id = 0; id < g.size(); ++id)
          if (c.at(g.edge(id)) == x) ids.push_back(id);
        if (ids.empty()) continue;
        auto sub = edge_subgraph(g, ids).graph;
        for (const auto& e : sub.edges()) classes_ok = classes_ok && sub.degree(e.u) != sub.degree(e.v);
      }
      EXPECT_EQ(ok, classes_ok);
    }
  }
}

TEST(ColorDegree, Star) {
  auto star = generate({.kind = GenKind::Star, .legs = 3});
  auto c = uniform_coloring(star, 0);
  EXPECT_EQ(color_degree(star, c, 0, 0), 3);
  EXPECT_EQ(color_degree(star, c, 1, 0), 1);
  EXPECT_EQ(color_degree(star, c, 1, 2), 0);
  EXPECT_EQ(color_sequence(star, c, 0, 0), (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(color_sequence(star, c, 0, 1).empty());
}

TEST(ColorSequence, ThreeTwoTwo) {
  // v = 0 with neighbors 1, 2, 3 of a-degree 3, 2, 2
  auto t = parse_edge_list("0 1\n0 2\n0 3\n1 4\n1 5\n2 6\n3 7");
  auto c = uniform_coloring(t, kColorA);
  EXPECT_EQ(color_sequence(t, c, 0, kColorA), (std::vector<int>{3, 2, 2}));
}

TEST(Invert, InvolutionAndIdentity) {
  auto p4 = generate({.kind = GenKind::Path, .length = 4});
  EdgeColoring c;
  c.set(Edge(0, 1), 0);
  c.set(Edge(1, 2), 0);
  c.set(Edge(2, 3), 1);
  c.set(Edge(3, 4), 1);
  ASSERT_TRUE(verify_liec(p4, c).ok());
  EXPECT_EQ(invert(invert(c, 0, 1), 0, 1), c);
  EXPECT_EQ(invert(c, 1, 1), c);
  EXPECT_TRUE(verify_liec(p4, invert(c, 0, 1)).ok());
}

TEST(Combine, StarFromShrubs) {
  auto star = generate({.kind = GenKind::Star, .legs = 3});
  std::vector<EdgeColoring> parts;
  for (const auto& s : shrubs_at(star, 0)) {
    EdgeColoring c;
    c.set(s.host(s.root_edge()), static_cast<Color>(parts.size()));
    parts.push_back(c);
  }
  auto all = combine(std::span<const EdgeColoring>(parts));
  EXPECT_EQ(all.size(), 3U);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [e, c] : parts[i]) EXPECT_EQ(all.at(e), c);
}

TEST(Combine, OverlapRejected) {
  EdgeColoring a, b;
  a.set(Edge(0, 1), 0);
  b.set(Edge(1, 0), 1);
  try {
    combine({a, b});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingEdges);
  }
}

TEST(Combine, GraphPartsRestrictBack) {
  auto t = parse_edge_list("0 1\n1 2\n1 3\n3 4");
  const EdgeMask all = full_mask(t);
  std::vector<std::pair<Graph, EdgeColoring>> parts;
  for (const auto& [w, id] : t.incident(1)) {
    auto sub = t.spanning_subgraph(shrub_edges(t, 1, id, all));
    parts.emplace_back(sub, uniform_coloring(sub, static_cast<Color>(parts.size())));
  }
  auto c = combine(std::span<const std::pair<Graph, EdgeColoring>>(parts));
  EXPECT_EQ(static_cast<int>(c.size()), t.size());
  for (const auto& [g, part] : parts) EXPECT_EQ(restrict_to(c, g), part);
}

TEST(Aliec, Examples) {
  Shrub k2(generate({.kind = GenKind::Path, .length = 1}), 0);
  EXPECT_EQ(aliec_status(k2, uniform_coloring(k2.tree(), 0)).tag, AliecTag::ProperAliec);
  Shrub p2(generate({.kind = GenKind::Path, .length = 2}), 0);
  EXPECT_EQ(aliec_status(p2, uniform_coloring(p2.tree(), 0)).tag, AliecTag::Liec);
  Shrub p3(generate({.kind = GenKind::Path, .length = 3}), 0);
  EXPECT_EQ(aliec_status(p3, uniform_coloring(p3.tree(), 0)).tag, AliecTag::Invalid);
}

TEST(Aliec, RecoloringNeighborEdgeMakesRootViolation) {
  Shrub s(parse_edge_list("0 1\n1 2\n2 3\n2 4\n1 5"), 0);
  EdgeColoring c;
  c.set(Edge(0, 1), 0);
  c.set(Edge(1, 5), 0);
  c.set(Edge(1, 2), 1);
  c.set(Edge(2, 3), 1);
  c.set(Edge(2, 4), 1);
  EXPECT_EQ(aliec_status(s, c).tag, AliecTag::Liec);
  c.set(Edge(1, 5), 1);
  // 1 now has a-degree 1, same as the root
  EXPECT_EQ(aliec_status(s, c).tag, AliecTag::ProperAliec);
}

TEST(Aliec, InversionPreservesTag) {
  for (const auto& s : enumerate_shrubs(7)) {
    std::uint64_t total = 1ULL << s.tree().size();
    for (std::uint64_t code = 0; code < total; ++code) {
      auto c = from_digits(s.tree(), code, 2);
      EXPECT_EQ(aliec_status(s, c).tag, aliec_status(s, invert(c, 0, 1)).tag);
      EXPECT_EQ(verify_liec(s.tree(), c).ok(), verify_liec(s.tree(), invert(c, 0, 1)).ok());
    }
  }
}
