#include <gtest/gtest.h>

#include <random>
#include <set>

#include "blfd/generators.hpp"
#include "blfd/oracle.hpp"

using namespace blfd;

namespace {

std::size_t parallel_pairs(const MultiGraph& g) {
  std::size_t pairs = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.edges_between(u, v).size() == 2) ++pairs;
    }
  }
  return pairs;
}

// Random multigraphs small enough for the 2^m reference.
std::vector<MultiGraph> small_corpus() {
  std::mt19937_64 rng(101);
  std::vector<MultiGraph> out;
  for (int i = 0; i < 120; ++i) {
    std::size_t n = 3 + rng() % 6;
    std::size_t m = 2 + rng() % 13;
    out.push_back(gen::random_multigraph(rng, n, m, 2 + rng() % 4, 1 + rng() % 3));
  }
  return out;
}

const BoundSpec kBounds[] = {
    BoundSpec::make(kInfinite, 1), BoundSpec::make(2, 1), BoundSpec::make(1, 1),
    BoundSpec::make(3, 2),         BoundSpec::make(2, 2), BoundSpec::make(kInfinite, kInfinite),
};

}  // namespace

TEST(SolveExact, KnownInstances) {
  EXPECT_EQ(solve_exact(gen::star(4), BoundSpec::make(2, 1)).outcome, Outcome::no);
  EXPECT_EQ(solve_exact(gen::complete(4), BoundSpec::make(kInfinite, 1)).outcome, Outcome::no);
  auto r = solve_exact(gen::cycle(3), BoundSpec::make(kInfinite, 1));
  ASSERT_EQ(r.outcome, Outcome::yes);
  EXPECT_TRUE(verify(gen::cycle(3), r.labeling, BoundSpec::make(kInfinite, 1)));
  EXPECT_EQ(solve_exact(MultiGraph{}, BoundSpec::make(1, 1)).outcome, Outcome::yes);
  EXPECT_THROW(solve_exact(gen::cycle(3), BoundSpec::make(1, 1), {.budget = 0}), std::invalid_argument);
}

TEST(SolveExact, TripleEdgeHasNoDecomposition) {
  MultiGraph g(2);
  for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
  EXPECT_EQ(solve_exact(g, BoundSpec::make(kInfinite, kInfinite)).outcome, Outcome::no);
}

TEST(CountBrute, KnownCounts) {
  // B must be a single edge of the triangle, leaving a 2-path in A.
  EXPECT_EQ(count_brute(gen::cycle(3), BoundSpec::make(kInfinite, 1)), 3u);
  EXPECT_EQ(count_brute(MultiGraph{}, BoundSpec::make(1, 1)), 1u);
  EXPECT_EQ(count_brute(gen::path(1), BoundSpec::make(2, 1)), 2u);
  EXPECT_THROW(count_brute(gen::path(25), BoundSpec::make(2, 1)), std::length_error);
}

TEST(Enumerate, SingleEdgeBothWays) {
  auto r = enumerate(gen::path(1), BoundSpec::make(1, 1));
  EXPECT_EQ(r.labelings.size(), 2u);
  EXPECT_TRUE(r.complete);
}

TEST(Enumerate, MatchesBruteForce) {
  for (const auto& g : small_corpus()) {
    for (const auto& b : kBounds) {
      std::uint64_t brute = count_brute(g, b);
      auto raw = enumerate(g, b, {.up_to_parallel_exchange = false});
      ASSERT_TRUE(raw.complete);
      EXPECT_EQ(raw.labelings.size(), brute);
      for (const auto& lab : raw.labelings) EXPECT_TRUE(verify(g, lab, b));
      std::set<EdgeLabeling> distinct(raw.labelings.begin(), raw.labelings.end());
      EXPECT_EQ(distinct.size(), raw.labelings.size());
      // Exchanging the two edges of a parallel pair is a bijection on
      // solutions and never fixes one.
      auto reduced = enumerate(g, b);
      EXPECT_EQ(reduced.labelings.size() << parallel_pairs(g), brute);
      EXPECT_EQ(solve_exact(g, b).outcome == Outcome::yes, brute > 0);
    }
  }
}

TEST(Enumerate, LimitStopsEarly) {
  auto g = gen::path(6);
  auto all = enumerate(g, BoundSpec::make(kInfinite, kInfinite));
  ASSERT_TRUE(all.complete);
  auto some = enumerate(g, BoundSpec::make(kInfinite, kInfinite), {.limit = 3});
  EXPECT_EQ(some.labelings.size(), 3u);
  EXPECT_FALSE(some.complete);
  EXPECT_TRUE(std::equal(some.labelings.begin(), some.labelings.end(), all.labelings.begin()));
}

TEST(SolveExact, PropagationDoesNotChangeOutcome) {
  for (const auto& g : small_corpus()) {
    for (const auto& b : kBounds) {
      auto with = solve_exact(g, b);
      auto without = solve_exact(g, b, {.propagate = false});
      EXPECT_EQ(with.outcome, without.outcome);
      EXPECT_LE(with.nodes, without.nodes);
    }
  }
}

TEST(SolveExact, Timeout) {
  std::mt19937_64 rng(5);
  auto g = gen::random_multigraph(rng, 40, 58, 3, 1);
  auto r = solve_exact(g, BoundSpec::make(3, 3), {.budget = 5});
  EXPECT_EQ(r.outcome, Outcome::timeout);
  EXPECT_TRUE(r.labeling.empty());
}

TEST(SolveExact, IndependentOfWorkerCount) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 12; ++round) {
    auto g = gen::random_multigraph(rng, 14 + rng() % 10, 22 + rng() % 12, 3, 2);
    for (const auto& b : {BoundSpec::make(2, 1), BoundSpec::make(kInfinite, 1), BoundSpec::make(3, 2)}) {
      for (std::uint64_t budget : {std::uint64_t{40}, std::uint64_t{1'000'000}}) {
        auto one = solve_exact(g, b, {.budget = budget});
        for (unsigned w : {2u, 3u}) {
          for (unsigned d : {1u, 4u}) {
            auto many = solve_exact(g, b, {.budget = budget, .workers = w, .split_depth = d});
            EXPECT_EQ(many.outcome, one.outcome);
            EXPECT_EQ(many.nodes, one.nodes);
            EXPECT_EQ(many.labeling, one.labeling);
          }
        }
      }
    }
  }
}

TEST(SolveExact, YesLabelingsVerify) {
  std::mt19937_64 rng(9);
  int yes = 0;
  for (int round = 0; round < 200; ++round) {
    auto g = gen::random_multigraph(rng, 20, 25 + rng() % 10, 3, 2);
    for (const auto& b : kBounds) {
      auto r = solve_exact(g, b, {.budget = 200'000});
      if (r.outcome != Outcome::yes) continue;
      ++yes;
      EXPECT_TRUE(verify(g, r.labeling, b));
    }
  }
  EXPECT_GT(yes, 100);
}
