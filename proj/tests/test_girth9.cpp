#include <gtest/gtest.h>

#include <random>
#include <map>
#include <numeric>
#include <set>

#include "blfd/generators.hpp"
#include "blfd/girth9.hpp"
#include "blfd/oracle.hpp"
#include "face_hosts.hpp"

using namespace blfd;
using namespace blfd::hosts;

namespace {

std::vector<EdgeLabeling> all_labelings(const MultiGraph& g, const BoundSpec& b) {
  EnumerateOptions opt;
  opt.up_to_parallel_exchange = false;
  auto en = enumerate(g, b, opt);
  EXPECT_TRUE(en.complete);
  return en.labelings;
}

// Base with the listed 1-based stub positions matched, everything else in A.
EdgeLabeling stub_base(const Host& h, const std::set<std::size_t>& matched) {
  EdgeSubgraph sub = without_face(h.g, h.cfg);
  EdgeLabeling base(sub.graph.edge_count(), Part::A);
  for (std::size_t p : matched) base[*sub.from_parent[*h.cfg.stub[p - 1]]] = Part::B;
  return base;
}

std::set<std::size_t> matched_face_edges(const FaceConfig& cfg, const EdgeLabeling& lab) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (lab[cfg.edges[i]] == Part::B) out.insert(i + 1);
  }
  return out;
}

}  // namespace

TEST(Preconditions, Examples) {
  Embedded k4 = subdivide_all(gen::plane_k4(), 2);
  auto ok = check_preconditions(k4.graph, k4.rotation);
  EXPECT_TRUE(ok.passed());
  EXPECT_EQ(ok.girth, 9u);

  Embedded pet = gen::drawn_petersen();
  auto p = check_preconditions(pet.graph, pet.rotation);
  EXPECT_FALSE(p.girth_ok);
  EXPECT_EQ(p.girth, 5u);
  EXPECT_FALSE(p.euler_ok);

  MultiGraph star = gen::star(4);
  auto s = check_preconditions(star, RotationSystem::identity(star));
  EXPECT_FALSE(s.subcubic);
  EXPECT_TRUE(s.euler_ok);

  RotationSystem broken = RotationSystem::identity(k4.graph);
  broken.order[0].pop_back();
  auto b = check_preconditions(k4.graph, broken);
  EXPECT_FALSE(b.rotation_valid);
  EXPECT_FALSE(b.passed());
}

TEST(Reductions, PendantOnSaturatedVertexGoesToTheMatching) {
  MultiGraph g = gen::cycle(3);
  Vertex leaf = g.add_vertex();
  g.add_edge(0, leaf);
  Reduction red = reduce_degree1(g, leaf);
  EXPECT_EQ(red.u, 0u);
  // Triangle 01, 12, 20 with 0 saturated by the linear forest.
  EdgeLabeling base{Part::A, Part::B, Part::A};
  EdgeLabeling full = red.extend(base);
  EXPECT_EQ(full[3], Part::B);
  EXPECT_TRUE(verify(g, full, kLinearPlusMatching));

  EdgeLabeling light{Part::B, Part::A, Part::A};  // vertex 0 has one forest edge
  EXPECT_EQ(red.extend(light)[3], Part::A);
}

TEST(Reductions, IsolatedEdgeGoesToTheForest) {
  MultiGraph g = gen::path(1);
  Reduction red = reduce_degree1(g, 1);
  EXPECT_EQ(red.reduced.edge_count(), 0u);
  EdgeLabeling full = red.extend({});
  EXPECT_EQ(full, EdgeLabeling{Part::A});
}

TEST(Reductions, RejectBadArguments) {
  MultiGraph c = gen::cycle(9);
  EXPECT_THROW(reduce_degree1(c, 0), std::invalid_argument);
  EXPECT_THROW(reduce_adjacent_2s(c, 0, 2), std::invalid_argument);
  MultiGraph star = gen::star(3);
  EXPECT_THROW(reduce_adjacent_2s(star, 0, 1), std::invalid_argument);
  Reduction red = reduce_adjacent_2s(c, 0, 1);
  EXPECT_THROW(red.extend(EdgeLabeling(8, Part::B)), std::invalid_argument);
}

TEST(Reductions, AdjacentTwosOnC9) {
  MultiGraph c = gen::cycle(9);
  Reduction red = reduce_adjacent_2s(c, 0, 1);
  EXPECT_EQ(red.reduced.edge_count(), 8u);
  EdgeLabeling base(8);
  for (EdgeId e = 0; e < 8; ++e) base[e] = e % 2 ? Part::B : Part::A;
  EXPECT_TRUE(verify(c, red.extend(base), kLinearPlusMatching));

  // Path a-u-v-b; the middle edge goes to A when at most one side edge is in A.
  MultiGraph p4 = gen::path(3);
  Reduction mid = reduce_adjacent_2s(p4, 1, 2);
  EXPECT_EQ(mid.extend({Part::A, Part::B})[1], Part::A);
  EXPECT_EQ(mid.extend({Part::A, Part::A})[1], Part::B);
}

TEST(Reductions, ExtendEveryBaseOfSmallGraphs) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    gen::for_each_sorted_subcubic(n, 2, false, [&](const MultiGraph& g) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        Reduction red = reduce_degree1(g, v);
        for (const auto& base : all_labelings(red.reduced, kLinearPlusMatching)) {
          ASSERT_TRUE(verify(g, red.extend(base), kLinearPlusMatching));
          ++checked;
        }
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (g.degree(ed.u) != 2 || g.degree(ed.v) != 2) continue;
        Reduction red = reduce_adjacent_2s(g, ed.u, ed.v);
        for (const auto& base : all_labelings(red.reduced, kLinearPlusMatching)) {
          ASSERT_TRUE(verify(g, red.extend(base), kLinearPlusMatching));
          ++checked;
        }
      }
    });
  }
  EXPECT_GT(checked, 10000u);
}

TEST(Reductions, PendantTreesOnC9) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    MultiGraph g = gen::cycle(9);
    for (int grow = 0; grow < 6; ++grow) {
      std::vector<Vertex> open;
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (g.degree(x) < 3) open.push_back(x);
      }
      Vertex at = open[rng() % open.size()];
      g.add_edge(at, g.add_vertex());
    }
    ReductionChain chain = reduce_exhaustively(g);
    EXPECT_EQ(chain.kernel.edge_count(), 0u);
    EdgeLabeling lab = chain.lift({});
    ASSERT_TRUE(verify(g, lab, kLinearPlusMatching));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 1) continue;
      Reduction red = reduce_degree1(g, v);
      for (const auto& base : all_labelings(red.reduced, kLinearPlusMatching)) {
        ASSERT_TRUE(verify(g, red.extend(base), kLinearPlusMatching));
      }
    }
  }
}

TEST(Reductions, ExhaustiveChain) {
  ReductionChain c9 = reduce_exhaustively(gen::cycle(9));
  EXPECT_EQ(c9.kernel.edge_count(), 0u);
  EXPECT_EQ(c9.steps.size(), 9u);
  EXPECT_TRUE(verify(gen::cycle(9), c9.lift({}), kLinearPlusMatching));

  Embedded d = subdivide_all(gen::plane_dodecahedron(), 1);
  EXPECT_TRUE(reduce_exhaustively(d.graph).steps.empty());

  MultiGraph k4 = gen::complete(4);
  EXPECT_TRUE(reduce_exhaustively(k4).steps.empty());
}

TEST(FaceConfigs, MatchAndReject) {
  Host h = synthetic_host(FaceKind::nine_face, {});
  EXPECT_EQ(h.cfg.size(), 9u);
  EXPECT_EQ(*h.cfg.u[0], 9u);
  EXPECT_FALSE(h.cfg.stub[2].has_value());

  std::vector<Vertex> shifted{1, 2, 3, 4, 5, 6, 7, 8, 0};
  EXPECT_THROW(make_face_config(h.g, shifted, FaceKind::nine_face), std::invalid_argument);
  EXPECT_THROW(make_face_config(h.g, h.cfg.v, FaceKind::ten_face), std::invalid_argument);

  Embedded d = subdivide_all(gen::plane_dodecahedron(), 1);
  std::size_t tens = 0;
  for (const auto& f : faces(d.graph, d.rotation).faces) tens += match_face(d.graph, f, FaceKind::ten_face).has_value();
  EXPECT_EQ(tens, 12u);

  // The reflected walk of the synthetic 9-face is recognized as well.
  FaceWalk walk;
  for (Vertex i = 0; i < 9; ++i) {
    walk.vertices.push_back((9 - i) % 9);
    walk.edges.push_back(h.g.edges_between((9 - i) % 9, (17 - i) % 9).front());
  }
  EXPECT_TRUE(match_face(h.g, walk, FaceKind::nine_face).has_value());
}

TEST(TenFace, MatchedStubsAtThreeSevenNine) {
  Host h = synthetic_host(FaceKind::ten_face, {});
  auto ext = extend_over_10face(h.g, h.cfg, stub_base(h, {3, 7, 9}));
  EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{1, 5}));
  EXPECT_TRUE(verify(h.g, ext.labeling, kLinearPlusMatching));
}

TEST(TenFace, AllStubsInTheForest) {
  Host h = synthetic_host(FaceKind::ten_face, {});
  auto ext = extend_over_10face(h.g, h.cfg, stub_base(h, {}));
  EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{1, 3, 5, 7, 9}));
}

TEST(TenFace, AllStubsMatchedIsAnObstruction) {
  Host h = synthetic_host(FaceKind::ten_face, {});
  auto base = stub_base(h, {1, 3, 5, 7, 9});
  EXPECT_THROW(extend_over_10face(h.g, h.cfg, base), ExtensionObstruction);
  EXPECT_FALSE(extension_exists(h.g, h.cfg, base));
  EXPECT_THROW(extend_over_9face(h.g, h.cfg, base), std::invalid_argument);
}

TEST(TenFace, EveryBaseOfEverySyntheticHost) {
  std::size_t extended = 0, obstructed = 0;
  for (const auto& links : link_sets(FaceKind::ten_face)) {
    Host h = synthetic_host(FaceKind::ten_face, links);
    ASSERT_LE(h.g.edge_count(), 19u);
    EdgeSubgraph sub = without_face(h.g, h.cfg);
    for (const auto& base : all_labelings(sub.graph, kLinearPlusMatching)) {
      try {
        auto ext = extend_over_10face(h.g, h.cfg, base);
        ASSERT_TRUE(verify(h.g, ext.labeling, kLinearPlusMatching));
        ++extended;
      } catch (const ExtensionObstruction&) {
        ASSERT_FALSE(extension_exists(h.g, h.cfg, base));
        ++obstructed;
      }
    }
  }
  EXPECT_GT(extended, 1000u);
  EXPECT_GT(obstructed, 0u);
}

TEST(NineFace, NoStubMatchedWithSeparatePaths) {
  Host h = synthetic_host(FaceKind::nine_face, {});
  auto ext = extend_over_9face(h.g, h.cfg, stub_base(h, {}));
  EXPECT_EQ(ext.branch, ExtensionBranch::nine_none_matched);
  EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{1, 3, 6, 8}));
}

TEST(NineFace, NoStubMatchedWithFourAndSixJoinedUsesTheReflection) {
  Host h = synthetic_host(FaceKind::nine_face, {{4, 6}});
  auto ext = extend_over_9face(h.g, h.cfg, stub_base(h, {}));
  EXPECT_EQ(ext.branch, ExtensionBranch::nine_none_matched);
  // v1v2, v3v4, v6v7, v8v9 reflected: v1v2, v8v9, v5v6, v3v4.
  EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{1, 3, 5, 8}));
  EXPECT_TRUE(verify(h.g, ext.labeling, kLinearPlusMatching));
}

TEST(NineFace, TwoAndFourMatched) {
  Host h = synthetic_host(FaceKind::nine_face, {});
  auto ext = extend_over_9face(h.g, h.cfg, stub_base(h, {2, 4}));
  EXPECT_EQ(ext.branch, ExtensionBranch::nine_pair_v2v4);
  EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{5, 7, 9}));
}

TEST(NineFace, OneAndFourMatchedHasItsOwnBranch) {
  for (auto links : {std::vector<std::pair<std::size_t, std::size_t>>{}, {{2, 8}}, {{2, 6}}}) {
    Host h = synthetic_host(FaceKind::nine_face, links);
    auto ext = extend_over_9face(h.g, h.cfg, stub_base(h, {1, 4}));
    EXPECT_EQ(ext.branch, ExtensionBranch::nine_pair_v1v4);
    EXPECT_EQ(matched_face_edges(h.cfg, ext.labeling), (std::set<std::size_t>{2, 6, 8}));
    auto mirrored = extend_over_9face(h.g, h.cfg, stub_base(h, {2, 8}));
    EXPECT_EQ(mirrored.branch, ExtensionBranch::nine_pair_v1v4);
  }
}

TEST(NineFace, Obstructions) {
  Host h = synthetic_host(FaceKind::nine_face, {{1, 2}});
  auto all = stub_base(h, {1, 2, 4, 6, 8});
  EXPECT_THROW(extend_over_9face(h.g, h.cfg, all), ExtensionObstruction);
  EXPECT_FALSE(extension_exists(h.g, h.cfg, all));
  auto joined = stub_base(h, {4, 6, 8});
  EXPECT_THROW(extend_over_9face(h.g, h.cfg, joined), ExtensionObstruction);
  EXPECT_FALSE(extension_exists(h.g, h.cfg, joined));

  Host apart = synthetic_host(FaceKind::nine_face, {});
  auto ext = extend_over_9face(apart.g, apart.cfg, stub_base(apart, {4, 6, 8}));
  EXPECT_EQ(ext.branch, ExtensionBranch::nine_three_v1v2_free);
  EXPECT_EQ(matched_face_edges(apart.cfg, ext.labeling), (std::set<std::size_t>{1}));
}

TEST(NineFace, RejectsInvalidBases) {
  Host h = synthetic_host(FaceKind::nine_face, {});
  EdgeSubgraph sub = without_face(h.g, h.cfg);
  EXPECT_THROW(extend_over_9face(h.g, h.cfg, EdgeLabeling(sub.graph.edge_count() + 1, Part::A)), std::invalid_argument);
  EXPECT_THROW(extend_over_10face(h.g, h.cfg, stub_base(h, {})), std::invalid_argument);
}

TEST(NineFace, EveryBaseOfEverySyntheticHostAndEveryBranch) {
  branch_counters().reset();
  std::size_t extended = 0, obstructed = 0;
  for (const auto& links : link_sets(FaceKind::nine_face)) {
    Host h = synthetic_host(FaceKind::nine_face, links);
    ASSERT_LE(h.g.edge_count(), 18u);
    EdgeSubgraph sub = without_face(h.g, h.cfg);
    for (const auto& base : all_labelings(sub.graph, kLinearPlusMatching)) {
      try {
        auto ext = extend_over_9face(h.g, h.cfg, base);
        ASSERT_TRUE(verify(h.g, ext.labeling, kLinearPlusMatching));
        ++extended;
      } catch (const ExtensionObstruction&) {
        ASSERT_FALSE(extension_exists(h.g, h.cfg, base));
        ++obstructed;
      }
    }
  }
  EXPECT_GT(extended, 1000u);
  EXPECT_GT(obstructed, 0u);
  for (std::size_t b = 1; b < kBranchCount; ++b) {
    EXPECT_GT(branch_counters()[static_cast<ExtensionBranch>(b)], 0u) << to_string(static_cast<ExtensionBranch>(b));
  }
}

TEST(NineFace, RandomBasesOnLargerHosts) {
  // Stubs lead into random subcubic trees; bases come from the oracle on
  // graphs whose tree edges are shuffled into fresh orders.
  std::mt19937_64 rng(99);
  std::size_t done = 0;
  for (int round = 0; round < 200; ++round) {
    Host h = synthetic_host(FaceKind::nine_face, {});
    for (int grow = 0; grow < 8; ++grow) {
      std::vector<Vertex> open;
      for (Vertex x = 9; x < h.g.vertex_count(); ++x) {
        if (h.g.degree(x) < 3) open.push_back(x);
      }
      Vertex at = open[rng() % open.size()];
      Vertex y = open[rng() % open.size()];
      if (y != at && rng() % 3 == 0 && h.g.edges_between(at, y).empty()) {
        h.g.add_edge(at, y);
      } else {
        h.g.add_edge(at, h.g.add_vertex());
      }
    }
    EdgeSubgraph sub = without_face(h.g, h.cfg);
    auto bases = all_labelings(sub.graph, kLinearPlusMatching);
    if (bases.empty()) continue;
    const auto& base = bases[rng() % bases.size()];
    try {
      ASSERT_TRUE(verify(h.g, extend_over_9face(h.g, h.cfg, base).labeling, kLinearPlusMatching));
      ++done;
    } catch (const ExtensionObstruction&) {
      ASSERT_FALSE(extension_exists(h.g, h.cfg, base));
    }
  }
  EXPECT_GT(done, 100u);
}

TEST(TenFace, FacesOfTheSubdividedDodecahedron) {
  Embedded d = subdivide_all(gen::plane_dodecahedron(), 1);
  std::size_t extended = 0;
  for (const auto& f : faces(d.graph, d.rotation).faces) {
    auto cfg = match_face(d.graph, f, FaceKind::ten_face);
    ASSERT_TRUE(cfg);
    EdgeSubgraph sub = without_face(d.graph, *cfg);
    auto res = solve_exact(sub.graph, kLinearPlusMatching);
    ASSERT_EQ(res.outcome, Outcome::yes);
    try {
      ASSERT_TRUE(verify(d.graph, extend_over_10face(d.graph, *cfg, res.labeling).labeling, kLinearPlusMatching));
      ++extended;
    } catch (const ExtensionObstruction&) {
    }
  }
  EXPECT_GT(extended, 0u);
}

TEST(NineFace, FacesOfThePartlySubdividedDodecahedron) {
  std::size_t nine = 0, extended = 0;
  for (const auto& m : girth9_corpus()) {
    if (m.name.rfind("dodecahedron-nine-faces", 0) != 0) continue;
    const MultiGraph& g = m.emb.graph;
    for (const auto& f : faces(g, m.emb.rotation).faces) {
      auto cfg = match_face(g, f, FaceKind::nine_face);
      if (!cfg) continue;
      ++nine;
      EdgeSubgraph sub = without_face(g, *cfg);
      auto res = solve_exact(sub.graph, kLinearPlusMatching);
      ASSERT_EQ(res.outcome, Outcome::yes);
      try {
        ASSERT_TRUE(verify(g, extend_over_9face(g, *cfg, res.labeling).labeling, kLinearPlusMatching));
        ++extended;
      } catch (const ExtensionObstruction&) {
        ASSERT_FALSE(extension_exists(g, *cfg, res.labeling));
      }
    }
  }
  EXPECT_GE(nine, 20u);
  EXPECT_GT(extended, 0u);
}

TEST(Discharging, CycleAndK4) {
  Embedded c9 = gen::plane_cycle(9);
  auto r = discharging_audit(c9.graph, c9.rotation);
  EXPECT_EQ(r.face_length, (std::vector<std::size_t>{9, 9}));
  EXPECT_EQ(r.total_initial, -12);
  EXPECT_EQ(r.total_final, -12);
  EXPECT_TRUE(r.euler_consistent);
  EXPECT_FALSE(r.no_adjacent_twos);
  for (long c : r.vertex_final) EXPECT_EQ(c, 0);

  Embedded k4 = gen::plane_k4();
  auto q = discharging_audit(k4.graph, k4.rotation);
  EXPECT_EQ(q.face_initial, (std::vector<long>{-3, -3, -3, -3}));
  EXPECT_EQ(q.total_initial, -12);
  EXPECT_TRUE(q.transfers.empty());
  EXPECT_FALSE(q.girth_at_least_9);
}

TEST(Discharging, CorpusAndFlags) {
  for (const auto& m : girth9_corpus()) {
    auto r = discharging_audit(m.emb.graph, m.emb.rotation);
    EXPECT_TRUE(r.total_matches()) << m.name << "\n" << r.to_string();
    EXPECT_EQ(r.total_final, r.total_initial);
    EXPECT_TRUE(r.euler_consistent) << m.name;
  }
  Embedded pet = subdivide_all(gen::drawn_petersen(), 2);
  auto p = discharging_audit(pet.graph, pet.rotation);
  EXPECT_FALSE(p.euler_consistent);
  EXPECT_FALSE(p.total_matches());
  EXPECT_FALSE(p.flags.empty());

  // Every face a 10-face with five 3-vertices: the hypothesis fails and the
  // faces end negative.
  Embedded d = subdivide_all(gen::plane_dodecahedron(), 1);
  auto q = discharging_audit(d.graph, d.rotation);
  EXPECT_FALSE(q.long_faces_have_six_threes);
  EXPECT_TRUE(q.no_adjacent_twos);
  EXPECT_EQ(q.negative.size(), 12u);
}

TEST(Discharging, DisconnectedAndIsolated) {
  MultiGraph g(19);
  for (Vertex i = 0; i < 9; ++i) g.add_edge(i, (i + 1) % 9);
  for (Vertex i = 0; i < 9; ++i) g.add_edge(9 + i, 9 + (i + 1) % 9);
  auto r = discharging_audit(g, RotationSystem::identity(g));
  EXPECT_EQ(r.component_totals, (std::vector<long>{-12, -12, -12}));
  EXPECT_EQ(r.expected_total, -36);
  EXPECT_TRUE(r.total_matches());
}

TEST(Subdivision, Examples) {
  MultiGraph c9 = subdivide_all(gen::cycle(3), 2);
  EXPECT_EQ(c9.vertex_count(), 9u);
  EXPECT_EQ(c9.edge_count(), 9u);
  EXPECT_EQ(girth(c9), 9u);

  MultiGraph k4 = subdivide_all(gen::complete(4), 2);
  EXPECT_EQ(k4.vertex_count(), 16u);
  EXPECT_EQ(k4.edge_count(), 18u);
  EXPECT_EQ(girth(k4), 9u);
  EXPECT_EQ(k4.max_degree(), 3u);

  MultiGraph p = gen::petersen();
  EXPECT_EQ(subdivide_all(p, 0), p);

  Embedded cube = subdivide_all(gen::plane_cube(), 3);
  EXPECT_TRUE(check_preconditions(cube.graph, cube.rotation).passed());
  EXPECT_EQ(girth(cube.graph), 16u);
}

TEST(Subdivision, GirthScales) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    MultiGraph g = gen::random_multigraph(rng, 3 + rng() % 8, 2 + rng() % 12, 3, 2);
    std::size_t t = rng() % 4;
    Length before = girth(g);
    Length after = girth(subdivide_all(g, t));
    if (before == kInfinite) {
      EXPECT_EQ(after, kInfinite);
    } else {
      EXPECT_EQ(after, (t + 1) * before);
    }
  }
}

TEST(Experiment, CorpusShapeAndSmallRuns) {
  auto corpus = girth9_corpus();
  EXPECT_GE(corpus.size(), 20u);
  std::set<std::string> names;
  for (const auto& m : corpus) {
    EXPECT_TRUE(check_preconditions(m.emb.graph, m.emb.rotation).passed()) << m.name;
    names.insert(m.name);
  }
  EXPECT_EQ(names.size(), corpus.size());

  std::vector<CorpusMember> small;
  for (const auto& m : corpus) {
    if (m.name == "k4-t2" || m.name == "cube-t2" || m.name == "c9" || m.name == "two-c9") small.push_back(m);
  }
  ASSERT_EQ(small.size(), 4u);
  ExperimentOptions opt;
  opt.workers = 2;
  auto rep = experiment_girth9(small, opt);
  for (const auto& m : rep.members) {
    EXPECT_EQ(m.outcome, Outcome::yes) << m.name;
    EXPECT_TRUE(m.verified) << m.name;
    EXPECT_EQ(m.direct, Outcome::yes) << m.name;
  }
  EXPECT_EQ(rep.members[0].name, small[0].name);
  EXPECT_FALSE(rep.any_no());
}

TEST(Experiment, NonPlanarOrSmallGirthIsStillRunButFlagged) {
  Embedded k4 = gen::plane_k4();
  auto rep = experiment_girth9({{"k4", k4}});
  EXPECT_FALSE(rep.members[0].preconditions.passed());
  EXPECT_EQ(rep.members[0].outcome, Outcome::no);
}
