#include <gtest/gtest.h>

#include "liec/liec.hpp"

using namespace liec;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

EdgeColoring all_a(const Graph& g) {
  EdgeColoring c;
  for (const auto& e : g.edges()) c.set(e, kColorA);
  return c;
}

void expect_liec(const Graph& g, const EdgeColoring& c, int max_colors) {
  EXPECT_TRUE(verify_liec(g, c).ok()) << to_edge_list(g);
  EXPECT_LE(c.max_color() + 1, max_colors) << to_edge_list(g);
}

}  // namespace

TEST(Shrub2Aliec, Examples) {
  Shrub k2(generate({.kind = GenKind::Path, .length = 1}), 0);
  EXPECT_EQ(aliec_status(k2, shrub_2aliec(k2)).tag, AliecTag::ProperAliec);
  Shrub p2(generate({.kind = GenKind::Path, .length = 2}), 0);
  auto c = shrub_2aliec(p2);
  EXPECT_EQ(aliec_status(p2, c).tag, AliecTag::Liec);
  EXPECT_EQ(c, all_a(p2.tree()));
}

TEST(Shrub2Aliec, EveryShrubUpToTenVertices) {
  for (const auto& s : enumerate_shrubs(10)) {
    auto c = shrub_2aliec(s);
    EXPECT_NE(aliec_status(s, c).tag, AliecTag::Invalid) << to_edge_list(s.tree());
    EXPECT_EQ(c.at(s.root_edge()), kColorA);
    EXPECT_LE(c.max_color(), 1);
  }
}

TEST(ShrubBased, DegreeTwoAlwaysFixable) {
  auto p4 = generate({.kind = GenKind::Path, .length = 4});
  auto r = shrub_based_coloring(p4, 2);
  ASSERT_FALSE(r.resistant());
  EXPECT_TRUE(verify_liec(p4, *r.liec).ok());
  EXPECT_EQ(std::count(r.inverted.begin(), r.inverted.end(), true), 1);
}

TEST(ShrubBased, InvertingLastShrubFixesFourThreeTwo) {
  auto t = parse_edge_list("0 1\n0 2\n0 3\n1 4\n1 5\n1 6\n2 7\n2 8\n3 9");
  auto c = all_a(t);
  EXPECT_EQ(color_sequence(t, c, 0, kColorA), (std::vector<int>{4, 3, 2}));
  EXPECT_FALSE(verify_liec(t, c).ok());
  for (const auto& e : {Edge(0, 3), Edge(3, 9)}) c.set(e, kColorB);
  EXPECT_TRUE(verify_liec(t, c).ok());
}

TEST(ShrubBased, ThreeTwoTwoIsResistant) {
  auto t = parse_edge_list("0 1\n0 2\n1 3\n0 4\n3 5\n1 6\n6 7");
  auto r = shrub_based_coloring(t, 1);
  EXPECT_TRUE(r.resistant());
  EXPECT_EQ(r.a_sequence, (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(r.shrub_colorings.size(), 3U);
}

TEST(ShrubBased, FourThreeThreeTwoResistantNeedsThirteenVertices) {
  // hand-built shrub-based coloring: every shrub monochromatic in a
  auto t = parse_edge_list("0 1\n0 2\n0 3\n0 4\n1 5\n1 6\n1 7\n2 8\n2 9\n3 10\n3 11\n4 12");
  const EdgeMask all = full_mask(t);
  std::vector<std::vector<EdgeId>> shrubs;
  for (const auto& [w, id] : t.incident(0)) shrubs.push_back(shrub_edges(t, 0, id, all));
  for (const auto& s : shrubs) EXPECT_TRUE(verify_liec(t.spanning_subgraph(s), all_a(t)).ok());
  EXPECT_EQ(color_sequence(t, all_a(t), 0, kColorA), (std::vector<int>{4, 3, 3, 2}));
  for (unsigned mask = 0; mask < 16; ++mask) {
    auto c = all_a(t);
    for (std::size_t i = 0; i < 4; ++i)
      if ((mask >> i) & 1U)
        for (EdgeId id : shrubs[i]) c.set(t.edge(id), kColorB);
    EXPECT_FALSE(verify_liec(t, c).ok()) << mask;
  }
}

TEST(ShrubBased, Preconditions) {
  EXPECT_EQ(code_of([] { shrub_based_coloring(generate({.kind = GenKind::Star, .legs = 3}), 0); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { shrub_based_coloring(generate({.kind = GenKind::Star, .legs = 5}), 1); }), ErrorCode::PreconditionViolated);
}

TEST(ShrubBased, ResistantOnlyInTheTwoSequences) {
  for (const auto& t : enumerate_trees(10)) {
    if (t.order() < 2 || t.max_degree() > 4) continue;
    for (Vertex v = 0; v < t.order(); ++v) {
      try {
        auto r = shrub_based_coloring(t, v);
        if (!r.resistant()) {
          EXPECT_TRUE(verify_liec(t, *r.liec).ok());
          continue;
        }
        const bool three = t.degree(v) == 3 && r.a_sequence == std::vector<int>{3, 2, 2};
        const bool four = t.degree(v) == 4 && r.a_sequence == std::vector<int>{4, 3, 3, 2};
        EXPECT_TRUE(three || four) << to_edge_list(t) << "v=" << v;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
      }
    }
  }
}

TEST(TreeLiec, Examples) {
  auto star = generate({.kind = GenKind::Star, .legs = 5});
  EXPECT_EQ(tree_liec(star).colors_used(), 1);
  EXPECT_EQ(tree_liec(generate({.kind = GenKind::Path, .length = 2})).colors_used(), 1);
  EXPECT_EQ(code_of([] { tree_liec(generate({.kind = GenKind::Path, .length = 5})); }), ErrorCode::NotColorable);
}

TEST(TreeLiec, AllTreesUpToElevenVertices) {
  for (const auto& t : enumerate_trees(11)) {
    if (t.size() == 0 || is_odd_path(t)) continue;
    auto c = tree_liec(t);
    expect_liec(t, c, t.max_degree() >= 5 ? 2 : 3);
  }
}

TEST(TreeLiec, MinimalAgainstSolver) {
  for (const auto& t : enumerate_trees(10)) {
    if (t.size() == 0 || is_odd_path(t)) continue;
    EXPECT_EQ(tree_liec(t).max_color() + 1, chromatic_index_irregular(t).chi) << to_edge_list(t);
  }
}

TEST(SpideyGlue, OddPath) {
  auto h = generate({.kind = GenKind::Spidey, .legs = 3});
  auto r = spidey_glue(h, 1, generate({.kind = GenKind::Path, .length = 3}), 0);
  EXPECT_TRUE(r.trace.fired("spidey.odd-path"));
  expect_liec(r.graph, r.coloring, 3);
  for (const auto& e : h.edges()) EXPECT_EQ(r.coloring.at(e), kColorC);
}

TEST(SpideyGlue, KWithTwoLiec) {
  auto h = generate({.kind = GenKind::Spidey, .legs = 2, .long_legs = 1});
  auto r = spidey_glue(h, 1, generate({.kind = GenKind::Path, .length = 4}), 0);
  EXPECT_TRUE(r.trace.fired("spidey.K-2-liec"));
  expect_liec(r.graph, r.coloring, 3);
  for (const auto& e : h.edges()) EXPECT_EQ(r.coloring.at(e), kColorC);
}

TEST(SpideyGlue, ResistantThreeTwoTwo) {
  auto k = parse_edge_list("0 1\n0 2\n1 3\n2 4\n3 5\n0 6\n6 7\n1 8\n8 9");
  ASSERT_FALSE(complete_forest(k, ids_of(full_mask(k)), 2));
  auto h = generate({.kind = GenKind::Spidey, .legs = 3});
  auto r = spidey_glue(h, 1, k, 0);
  EXPECT_TRUE(r.trace.fired("spidey.case4.seq-3-2-2"));
  expect_liec(r.graph, r.coloring, 3);
  auto s = spidey_glue(h, 1, k, 2);
  EXPECT_TRUE(s.trace.fired("spidey.case3"));
  expect_liec(s.graph, s.coloring, 3);
}

TEST(SpideyGlue, MonochromaticOnAllSmallTrees) {
  for (const auto& h : {generate({.kind = GenKind::Spidey, .legs = 3}), generate({.kind = GenKind::Spidey, .legs = 1, .long_legs = 3}),
                        generate({.kind = GenKind::Spidey, .legs = 2, .long_legs = 2})}) {
    for (const auto& k : enumerate_trees(8)) {
      if (k.order() < 2) continue;
      for (Vertex a = 0; a < k.order(); ++a) {
        auto r = spidey_glue(h, 1, k, a);
        expect_liec(r.graph, r.coloring, 3);
        for (const auto& e : h.edges()) EXPECT_EQ(r.coloring.at(e), kColorC);
      }
    }
  }
}

TEST(SpideyGlue, Errors) {
  auto k = generate({.kind = GenKind::Path, .length = 2});
  EXPECT_EQ(code_of([&] { spidey_glue(generate({.kind = GenKind::Path, .length = 4}), 0, k, 0); }), ErrorCode::NotASpidey);
  auto h = generate({.kind = GenKind::Spidey, .legs = 2, .long_legs = 1});
  EXPECT_EQ(code_of([&] { spidey_glue(h, 4, k, 0); }), ErrorCode::NotAShortLeg);
  EXPECT_EQ(code_of([&] { spidey_glue(h, 0, k, 0); }), ErrorCode::NotAShortLeg);
}

TEST(Unicyclic, Cycles) {
  auto c6 = generate({.kind = GenKind::Cycle, .length = 6});
  auto c = unicyclic_3liec(c6);
  expect_liec(c6, c, 3);
  EXPECT_EQ(c.colors_used(), 3);
  for (int n : {4, 8, 10, 12}) expect_liec(generate({.kind = GenKind::Cycle, .length = n}), unicyclic_3liec(generate({.kind = GenKind::Cycle, .length = n})), 3);
}

TEST(Unicyclic, TriangleWithPendant) {
  auto g = parse_edge_list("0 1\n1 2\n2 0\n0 3");
  EXPECT_FALSE(is_T_prime_member(g));
  ConstructionTrace t;
  expect_liec(g, unicyclic_3liec(g, &t), 3);
  EXPECT_TRUE(t.fired("unicyclic.triangle"));
}

TEST(Unicyclic, CaseTraces) {
  struct Case {
    const char* edges;
    const char* rule;
  };
  const Case cases[] = {
      {"0 1\n1 2\n2 0\n0 3\n0 4", "unicyclic.triangle.spidey"},
      {"0 1\n1 2\n2 0\n1 3\n0 4\n4 5\n4 6", "unicyclic.triangle.deg2.G0-proper.context"},
      {"0 1\n1 2\n2 3\n3 0\n0 4\n0 5", "unicyclic.case1"},
      {"0 1\n1 2\n2 3\n3 0\n0 4", "unicyclic.case2.deg2"},
      {"0 1\n1 2\n2 3\n3 0\n0 4\n1 5", "unicyclic.case2.deg3"},
      {"0 1\n1 2\n2 3\n3 4\n4 5\n5 0", "unicyclic.even-cycle.4k+2"},
  };
  for (const auto& c : cases) {
    auto g = parse_edge_list(c.edges);
    ConstructionTrace t;
    expect_liec(g, unicyclic_3liec(g, &t), 3);
    EXPECT_TRUE(t.fired(c.rule)) << c.rule;
  }
}

TEST(Unicyclic, Errors) {
  EXPECT_EQ(code_of([] { unicyclic_3liec(generate({.kind = GenKind::Cycle, .length = 5})); }), ErrorCode::InTPrime);
  EXPECT_EQ(code_of([] { unicyclic_3liec(parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 4")); }), ErrorCode::InTPrime);
  EXPECT_EQ(code_of([] { unicyclic_3liec(generate({.kind = GenKind::Star, .legs = 3})); }), ErrorCode::NotUnicyclic);
}

TEST(Unicyclic, RandomAgainstSolver) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 300; ++seed) {
    auto g = generate({.kind = GenKind::RandomUnicyclic, .seed = seed, .size = 4 + static_cast<int>(seed % 11)});
    if (is_T_prime_member(g)) continue;
    auto c = unicyclic_3liec(g);
    expect_liec(g, c, 3);
    auto chi = chromatic_index_irregular(g).chi;
    ASSERT_TRUE(chi);
    EXPECT_LE(*chi, c.max_color() + 1);
    ++done;
  }
}

TEST(Cactus, Examples) {
  // joined by a single edge the two triangles form a member of the exceptional family
  auto bridge = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3");
  EXPECT_EQ(code_of([&] { cactus_vdc_3liec(bridge); }), ErrorCode::InTPrime);

  auto joined = parse_edge_list("0 1\n1 2\n2 0\n0 6\n6 3\n3 4\n4 5\n5 3");
  ConstructionTrace t;
  expect_liec(joined, cactus_vdc_3liec(joined, &t), 3);
  EXPECT_TRUE(t.fired("cactus.case1"));

  auto even = parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 4\n4 5\n5 6\n6 4\n3 7");
  EXPECT_FALSE(is_T_prime_member(even));
  expect_liec(even, cactus_vdc_3liec(even), 3);

  auto uni = parse_edge_list("0 1\n1 2\n2 3\n3 0\n0 4");
  ConstructionTrace u;
  expect_liec(uni, cactus_vdc_3liec(uni, &u), 3);
  EXPECT_TRUE(u.fired("unicyclic."));
}

TEST(Cactus, CaseTwoAtHighDegreeRoot) {
  auto g = parse_edge_list("0 1\n1 2\n2 0\n0 3\n0 4\n4 5\n5 6\n6 7\n7 5");
  ConstructionTrace t;
  expect_liec(g, cactus_vdc_3liec(g, &t), 3);
  EXPECT_TRUE(t.fired("cactus.case2"));
}

TEST(Cactus, Errors) {
  EXPECT_EQ(code_of([] { cactus_vdc_3liec(bowtie_B()); }), ErrorCode::WrongClass);
  EXPECT_EQ(code_of([] { cactus_vdc_3liec(parse_edge_list("0 1\n1 2\n2 0\n0 3\n3 4\n4 5\n5 3")); }), ErrorCode::InTPrime);
}

TEST(Cactus, RandomSoundness) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 300; ++seed) {
    auto g = generate({.kind = GenKind::RandomCactusVdc, .seed = seed, .cycles = 2 + static_cast<int>(seed % 3), .max_edges = 18});
    if (is_T_prime_member(g)) continue;
    expect_liec(g, cactus_vdc_3liec(g), 3);
    ++done;
  }
}

TEST(Construct, Dispatch) {
  EXPECT_EQ(code_of([] { construct(generate({.kind = GenKind::Cycle, .length = 7})); }), ErrorCode::InTPrime);
  EXPECT_EQ(code_of([] { construct(bowtie_B()); }), ErrorCode::WrongClass);
  auto r = construct(generate({.kind = GenKind::RandomTree, .seed = 4, .size = 15}));
  EXPECT_TRUE(r.trace.fired("tree."));
}
