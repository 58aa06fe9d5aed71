#include <gtest/gtest.h>

#include <random>

#include "blfd/factor.hpp"
#include "blfd/generators.hpp"

using namespace blfd;

TEST(SmallGap, Definition) {
  EXPECT_TRUE(is_small_gap({0, 2}, 2));
  EXPECT_FALSE(is_small_gap({0, 3}, 3));
  EXPECT_TRUE(is_small_gap({1}, 3));
  EXPECT_TRUE(is_small_gap({3}, 3));
  EXPECT_TRUE(is_small_gap({}, 3));
  EXPECT_TRUE(is_small_gap({1, 3}, 3));
  EXPECT_FALSE(is_small_gap({0, 4}, 4));
  EXPECT_TRUE(is_small_gap({0, 4}, 2));  // only {0..cap} matters
}

TEST(MaxMatching, KnownSizes) {
  EXPECT_EQ(max_matching(gen::cycle(5)).size(), 2u);
  EXPECT_EQ(max_matching(gen::petersen()).size(), 5u);
  EXPECT_EQ(max_matching(gen::complete_bipartite(3, 3)).size(), 3u);
  EXPECT_EQ(max_matching(MultiGraph(4)).size(), 0u);
  EXPECT_EQ(brute_max_matching(gen::petersen()), 5u);
}

TEST(MaxMatching, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 500; ++round) {
    std::size_t n = 2 + rng() % 12;
    auto g = gen::random_multigraph(rng, n, rng() % 15, 6, 2);
    auto m = max_matching(g);
    EXPECT_TRUE(is_matching(g, m.edges));
    EXPECT_EQ(m.size(), brute_max_matching(g));
    for (EdgeId e : m.edges) {
      EXPECT_EQ(m.mate[g.edge(e).u], e);
      EXPECT_EQ(m.mate[g.edge(e).v], e);
    }
  }
}

TEST(MaxMatching, OddCyclesNeedBlossoms) {
  // Two triangles joined through a path: augmenting needs a contraction.
  MultiGraph g(8);
  g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(2, 0);
  g.add_edge(2, 3), g.add_edge(3, 4), g.add_edge(4, 5);
  g.add_edge(5, 6), g.add_edge(6, 7), g.add_edge(7, 5);
  EXPECT_EQ(max_matching(g).size(), 4u);
}

TEST(SolveFactor, SingleEdge) {
  FactorInstance forced{gen::path(1), {{1}, {1}}};
  auto s = solve_factor(forced);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, std::vector<EdgeId>{0});
  FactorInstance clash{gen::path(1), {{0}, {1}}};
  EXPECT_FALSE(solve_factor(clash));
  EXPECT_FALSE(brute_factor(clash));
}

TEST(BruteFactor, Basics) {
  FactorInstance empty{MultiGraph(3), {{0}, {0, 1}, {0}}};
  ASSERT_TRUE(brute_factor(empty));
  EXPECT_TRUE(brute_factor(empty)->empty());
  FactorInstance no_zero{MultiGraph(2), {{0}, {1}}};
  EXPECT_FALSE(brute_factor(no_zero));
  EXPECT_FALSE(solve_factor(no_zero));
  FactorInstance forced{gen::path(2), {{0, 1}, {2}, {0, 1}}};
  EXPECT_EQ(*brute_factor(forced), (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(*solve_factor(forced), (std::vector<EdgeId>{0, 1}));
}

TEST(SolveFactor, ParityGadget) {
  // Star with three leaves: centre needs 0 or 2 selected edges.
  auto s3 = gen::star(3);
  FactorInstance inst{s3, {{0, 2}, {1}, {0, 1}, {1}}};
  auto sel = solve_factor(inst);
  ASSERT_TRUE(sel);
  EXPECT_EQ(*sel, (std::vector<EdgeId>{0, 2}));
  inst.sets = {{0, 2}, {1}, {1}, {1}};
  EXPECT_FALSE(solve_factor(inst));
  inst.sets = {{1, 3}, {1}, {1}, {1}};
  EXPECT_TRUE(solve_factor(inst));
}

TEST(SolveFactor, RejectsUnsupportedShapes) {
  auto s3 = gen::star(3);
  FactorInstance not_small{s3, {{0, 3}, {0, 1}, {0, 1}, {0, 1}}};
  EXPECT_THROW(solve_factor(not_small), std::invalid_argument);
  FactorInstance small_but_odd{s3, {{0, 1, 3}, {0, 1}, {0, 1}, {0, 1}}};
  EXPECT_TRUE(is_small_gap(small_but_odd.sets[0], 3));
  EXPECT_THROW(solve_factor(small_but_odd), UnsupportedDegreeSet);
  FactorInstance missing{s3, {{0}}};
  EXPECT_THROW(solve_factor(missing), std::invalid_argument);
}

TEST(SolveFactor, AgreesWithBruteForce) {
  std::mt19937_64 rng(43);
  const std::vector<DegreeSet> shapes{{1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}};
  for (int round = 0; round < 1000; ++round) {
    std::size_t n = 2 + rng() % 9;
    auto h = gen::random_multigraph(rng, n, rng() % 17, 5, 2);
    FactorInstance inst{h, {}};
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) {
        inst.sets.push_back(shapes[rng() % shapes.size()]);
      } else {
        std::size_t a = rng() % (h.degree(v) + 1);
        inst.sets.push_back(DegreeSet::interval(a, a + rng() % 3));
      }
    }
    bool supported = true;
    for (Vertex v = 0; v < n; ++v) {
      auto c = inst.sets[v].capped(h.degree(v));
      if (!c.empty() && !c.is_interval() && !(c.values().size() == 2 && c.values()[1] == c.values()[0] + 2)) {
        supported = false;
      }
    }
    ASSERT_TRUE(supported);
    auto fast = solve_factor(inst);
    auto slow = brute_factor(inst);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << serialize_factor_instance(inst);
    if (fast) {
      EXPECT_TRUE(inst.satisfied_by(*fast));
    }
  }
}

TEST(FactorFormat, RoundTrip) {
  FactorInstance inst{gen::path(2), {{0, 1}, {2}, {0, 2}}};
  auto text = serialize_factor_instance(inst);
  EXPECT_EQ(text, "3 2\n0 1\n1 2\n0: {0,1}\n1: {2}\n2: {0,2}\n");
  auto back = parse_factor_instance(text);
  EXPECT_EQ(back.h, inst.h);
  EXPECT_EQ(back.sets, inst.sets);
  EXPECT_EQ(parse_factor_instance("2 1\n0 1\n0: { 1 , 0 }\n1:{}\n").sets[0], (DegreeSet{0, 1}));
  EXPECT_THROW(parse_factor_instance("2 1\n0 1\n0: {1}\n"), ParseError);
  EXPECT_THROW(parse_factor_instance("2 1\n0 1\n0: 1\n1: {1}\n"), ParseError);
  EXPECT_THROW(parse_factor_instance("2 1\n0 1\n0: {1}\n0: {1}\n1: {0}\n"), ParseError);
}
