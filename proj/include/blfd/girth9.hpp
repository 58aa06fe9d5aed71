#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "blfd/decomp.hpp"
#include "blfd/generators.hpp"
#include "blfd/graph.hpp"
#include "blfd/oracle.hpp"

namespace blfd {

inline const BoundSpec kLinearPlusMatching = BoundSpec::make(kInfinite, 1);

// ---------------------------------------------------------------------------
// Preconditions

struct PreconditionReport {
  bool rotation_valid = true;
  bool subcubic = true;
  bool girth_ok = true;
  bool euler_ok = true;
  std::size_t max_degree = 0;
  Length girth = kInfinite;
  long euler_value = 0;
  std::size_t components = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Subcubic, girth at least `min_girth`, and V - E + F = 2 on every
/// component of the rotation. Never throws; failures are listed.
inline PreconditionReport check_preconditions(const MultiGraph& g, const RotationSystem& rot, Length min_girth = 9) {
  PreconditionReport r;
  r.max_degree = g.max_degree();
  r.subcubic = r.max_degree <= 3;
  if (!r.subcubic) r.failures.push_back("max degree " + std::to_string(r.max_degree) + " > 3");
  r.girth = girth(g);
  r.girth_ok = r.girth >= min_girth;
  if (!r.girth_ok) r.failures.push_back("girth " + bound_to_string(r.girth) + " < " + std::to_string(min_girth));
  try {
    FaceSet fs = faces(g, rot);
    r.components = fs.components;
    r.euler_value = fs.euler_value;
    r.euler_ok = fs.spherical;
    if (!r.euler_ok) r.failures.push_back("rotation is not planar: V - E + F = " + std::to_string(fs.euler_value));
  } catch (const GraphError& e) {
    r.rotation_valid = r.euler_ok = false;
    r.failures.push_back(std::string("invalid rotation: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reductions of a minimal counterexample, with their extenders

enum class ReductionKind { pendant, adjacent_twos };

/// g with one edge removed. Vertex ids are kept, so the vertex of a pendant
/// reduction stays behind as an isolated vertex.
struct Reduction {
  ReductionKind kind;
  MultiGraph reduced;
  std::vector<EdgeId> to_parent;  // reduced edge -> edge of g
  EdgeId removed;
  Vertex u, v;  // pendant: u is the neighbour of the degree-1 vertex v

  std::size_t parent_edge_count() const { return reduced.edge_count() + 1; }

  /// Turns an (inf,1) labeling of the reduced graph into one of g.
  EdgeLabeling extend(const EdgeLabeling& base) const {
    if (base.size() != reduced.edge_count()) throw std::invalid_argument("base labeling has the wrong size");
    if (auto r = verify(reduced, base, kLinearPlusMatching); !r) {
      throw std::invalid_argument("base labeling does not verify: " + r.violation->describe());
    }
    auto a_degree = [&](Vertex x) {
      std::size_t d = 0;
      for (EdgeId e : reduced.incident(x)) d += base[e] == Part::A;
      return d;
    };
    bool to_a = kind == ReductionKind::pendant ? a_degree(u) <= 1 : a_degree(u) + a_degree(v) <= 1;
    EdgeLabeling out(parent_edge_count());
    for (EdgeId e = 0; e < base.size(); ++e) out[to_parent[e]] = base[e];
    out[removed] = to_a ? Part::A : Part::B;
    return out;
  }
};

namespace detail {

inline Reduction drop_edge(const MultiGraph& g, ReductionKind kind, EdgeId e, Vertex u, Vertex v) {
  std::vector<EdgeId> gone{e};
  EdgeSubgraph sub = remove_edges(g, gone);
  return {kind, std::move(sub.graph), std::move(sub.to_parent), e, u, v};
}

}  // namespace detail

inline Reduction reduce_degree1(const MultiGraph& g, Vertex v) {
  if (v >= g.vertex_count() || g.degree(v) != 1) throw std::invalid_argument("vertex must have degree 1");
  EdgeId e = g.incident(v)[0];
  return detail::drop_edge(g, ReductionKind::pendant, e, g.edge(e).other(v), v);
}

inline Reduction reduce_adjacent_2s(const MultiGraph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || g.degree(u) != 2 || g.degree(v) != 2) {
    throw std::invalid_argument("both vertices must have degree 2");
  }
  auto between = g.edges_between(u, v);
  if (between.empty()) throw std::invalid_argument("vertices are not adjacent");
  return detail::drop_edge(g, ReductionKind::adjacent_twos, between.front(), u, v);
}

/// Reductions applied until no degree-1 vertex and no edge between two
/// 2-vertices remains.
struct ReductionChain {
  MultiGraph kernel;
  std::vector<Reduction> steps;

  EdgeLabeling lift(EdgeLabeling lab) const {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) lab = it->extend(lab);
    return lab;
  }
};

inline ReductionChain reduce_exhaustively(const MultiGraph& g) {
  ReductionChain chain{g, {}};
  while (true) {
    const MultiGraph& h = chain.kernel;
    std::optional<Reduction> step;
    for (Vertex x = 0; x < h.vertex_count() && !step; ++x) {
      if (h.degree(x) == 1) step = reduce_degree1(h, x);
    }
    for (EdgeId e = 0; e < h.edge_count() && !step; ++e) {
      const Edge& ed = h.edge(e);
      if (h.degree(ed.u) == 2 && h.degree(ed.v) == 2) step = reduce_adjacent_2s(h, ed.u, ed.v);
    }
    if (!step) return chain;
    chain.kernel = step->reduced;
    chain.steps.push_back(std::move(*step));
  }
}

// ---------------------------------------------------------------------------
// Face configurations

enum class FaceKind { ten_face, nine_face };

inline const char* to_string(FaceKind k) { return k == FaceKind::ten_face ? "ten_face" : "nine_face"; }

/// A face with a canonical ordering v_1..v_t matching the degree pattern of
/// its kind. Index i of the vectors holds v_{i+1}; edges[i] joins v_{i+1}
/// and v_{i+2} (cyclically). stub[i] is the edge from a 3-vertex v_{i+1} to
/// its neighbour u_{i+1} off the face.
struct FaceConfig {
  FaceKind kind;
  std::vector<Vertex> v;
  std::vector<EdgeId> edges;
  std::vector<std::optional<Vertex>> u;
  std::vector<std::optional<EdgeId>> stub;

  std::size_t size() const noexcept { return v.size(); }
};

/// 1-based positions of the 3-vertices.
inline std::vector<std::size_t> three_positions(FaceKind k) {
  if (k == FaceKind::ten_face) return {1, 3, 5, 7, 9};
  return {1, 2, 4, 6, 8};
}

inline std::size_t face_size(FaceKind k) { return k == FaceKind::ten_face ? 10 : 9; }

/// Builds the configuration for a cyclic vertex order; throws
/// std::invalid_argument unless it bounds a non-degenerate face with the
/// pattern of `kind` and every 3-vertex has its third neighbour off the face.
inline FaceConfig make_face_config(const MultiGraph& g, const std::vector<Vertex>& order, FaceKind kind) {
  const std::size_t t = face_size(kind);
  if (order.size() != t) throw std::invalid_argument("face ordering has the wrong length");
  std::vector<bool> on_face(g.vertex_count(), false);
  for (Vertex x : order) {
    if (x >= g.vertex_count()) throw std::invalid_argument("face vertex out of range");
    if (on_face[x]) throw std::invalid_argument("face repeats a vertex");
    on_face[x] = true;
  }
  FaceConfig cfg{kind, order, {}, std::vector<std::optional<Vertex>>(t), std::vector<std::optional<EdgeId>>(t)};
  for (std::size_t i = 0; i < t; ++i) {
    auto between = g.edges_between(order[i], order[(i + 1) % t]);
    if (between.size() != 1) throw std::invalid_argument("consecutive face vertices must share exactly one edge");
    cfg.edges.push_back(between.front());
  }
  auto threes = three_positions(kind);
  for (std::size_t i = 0; i < t; ++i) {
    bool three = std::find(threes.begin(), threes.end(), i + 1) != threes.end();
    if (g.degree(order[i]) != (three ? 3u : 2u)) throw std::invalid_argument("degree pattern does not match");
    if (!three) continue;
    for (EdgeId e : g.incident(order[i])) {
      if (e == cfg.edges[i] || e == cfg.edges[(i + t - 1) % t]) continue;
      Vertex w = g.edge(e).other(order[i]);
      if (on_face[w]) throw std::invalid_argument("3-vertex has its third neighbour on the face");
      cfg.u[i] = w;
      cfg.stub[i] = e;
    }
  }
  return cfg;
}

/// Tries all canonical orderings of a face walk; nullopt if none fits.
inline std::optional<FaceConfig> match_face(const MultiGraph& g, const FaceWalk& face, FaceKind kind) {
  const std::size_t t = face.length();
  if (t != face_size(kind)) return std::nullopt;
  for (std::size_t s = 0; s < t; ++s) {
    for (int dir : {1, -1}) {
      std::vector<Vertex> order;
      for (std::size_t i = 0; i < t; ++i) order.push_back(face.vertices[dir == 1 ? (s + i) % t : (s + t - i) % t]);
      try {
        return make_face_config(g, order, kind);
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return std::nullopt;
}

/// g without the face edges; extension bases are labelings of this graph.
inline EdgeSubgraph without_face(const MultiGraph& g, const FaceConfig& cfg) { return remove_edges(g, cfg.edges); }

// ---------------------------------------------------------------------------
// Extensions over 9- and 10-faces

enum class ExtensionBranch : unsigned {
  ten_face,
  nine_none_matched,
  nine_only_v2,
  nine_only_v4_split_v1v2,
  nine_only_v4_split_v2v6,
  nine_only_v6_split_v1v2,
  nine_only_v6_split_v2v4,
  nine_pair_v1v2,
  nine_pair_v2v4,
  nine_pair_v2v6,
  nine_pair_v4v6_split_v1v2,
  nine_pair_v4v6_split_v2v8,
  nine_pair_v4v8,
  nine_pair_v1v4,
  nine_three_v1v2_free,
  nine_three_other,
  nine_four_matched,
  count_
};

inline constexpr std::size_t kBranchCount = static_cast<std::size_t>(ExtensionBranch::count_);

inline const char* to_string(ExtensionBranch b) {
  static constexpr const char* names[kBranchCount] = {
      "ten_face",
      "nine.none_matched",
      "nine.only_v2",
      "nine.only_v4.split_v1v2",
      "nine.only_v4.split_v2v6",
      "nine.only_v6.split_v1v2",
      "nine.only_v6.split_v2v4",
      "nine.pair_v1v2",
      "nine.pair_v2v4",
      "nine.pair_v2v6",
      "nine.pair_v4v6.split_v1v2",
      "nine.pair_v4v6.split_v2v8",
      "nine.pair_v4v8",
      "nine.pair_v1v4",
      "nine.three.v1v2_free",
      "nine.three.other",
      "nine.four_matched",
  };
  return names[static_cast<std::size_t>(b)];
}

/// Process-wide hit counters, one per branch.
struct BranchCounters {
  std::array<std::atomic<std::uint64_t>, kBranchCount> hits{};

  void reset() {
    for (auto& h : hits) h = 0;
  }
  std::uint64_t operator[](ExtensionBranch b) const { return hits[static_cast<std::size_t>(b)]; }
};

inline BranchCounters& branch_counters() {
  static BranchCounters counters;
  return counters;
}

/// The extension is undefined: the base realizes one of the obstructions.
class ExtensionObstruction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FaceExtension {
  EdgeLabeling labeling;
  ExtensionBranch branch;
};

namespace detail {

struct StubState {
  std::array<bool, 11> matched{};          // 1-based positions
  std::array<std::size_t, 11> component{};  // part-A component of a free stub
};

inline StubState read_stubs(const FaceConfig& cfg, const EdgeSubgraph& sub, const EdgeLabeling& base) {
  if (base.size() != sub.graph.edge_count()) throw std::invalid_argument("base labeling has the wrong size");
  if (auto r = verify(sub.graph, base, kLinearPlusMatching); !r) {
    throw std::invalid_argument("base labeling does not verify: " + r.violation->describe());
  }
  ForestView forest(sub.graph, base, Part::A);
  StubState s;
  for (std::size_t p : three_positions(cfg.kind)) {
    EdgeId e = *sub.from_parent[*cfg.stub[p - 1]];
    s.matched[p] = base[e] == Part::B;
    s.component[p] = forest.path_of(cfg.v[p - 1]);
  }
  return s;
}

// Copies the base and puts the face edges with the listed 1-based indices
// into B, all other face edges into A; face edge i joins v_i and v_{i+1}.
inline EdgeLabeling assemble(const MultiGraph& g, const FaceConfig& cfg, const EdgeSubgraph& sub,
                             const EdgeLabeling& base, const std::vector<std::size_t>& matched_face_edges) {
  EdgeLabeling out(g.edge_count(), Part::A);
  for (EdgeId e = 0; e < base.size(); ++e) out[sub.to_parent[e]] = base[e];
  for (EdgeId e : cfg.edges) out[e] = Part::A;
  for (std::size_t i : matched_face_edges) out[cfg.edges[i - 1]] = Part::B;
  if (auto r = verify(g, out, kLinearPlusMatching); !r) {
    throw std::logic_error("face extension fails verification: " + r.violation->describe());
  }
  return out;
}

struct NinePlan {
  ExtensionBranch branch;
  std::vector<std::size_t> matched_face_edges;
};

// The case table in one orientation. nullopt means the reflected ordering
// is the one the table covers.
inline std::optional<NinePlan> nine_plan(const StubState& s) {
  auto m = [&](std::size_t i) { return s.matched[i]; };
  auto differ = [&](std::size_t i, std::size_t j) { return s.component[i] != s.component[j]; };
  std::vector<std::size_t> set;
  for (std::size_t i : {1, 2, 4, 6, 8}) {
    if (m(i)) set.push_back(i);
  }
  auto is = [&](std::initializer_list<std::size_t> want) { return std::equal(set.begin(), set.end(), want.begin(), want.end()); };
  using B = ExtensionBranch;
  switch (set.size()) {
    case 0:
      if (differ(4, 6)) return NinePlan{B::nine_none_matched, {1, 3, 6, 8}};
      return std::nullopt;
    case 1:
      if (is({2})) return NinePlan{B::nine_only_v2, {3, 5, 7, 9}};
      if (is({4})) {
        if (differ(1, 2)) return NinePlan{B::nine_only_v4_split_v1v2, {2, 5, 7, 9}};
        return NinePlan{B::nine_only_v4_split_v2v6, {1, 6, 8}};
      }
      if (is({6})) {
        if (differ(1, 2)) return NinePlan{B::nine_only_v6_split_v1v2, {2, 4, 7, 9}};
        return NinePlan{B::nine_only_v6_split_v2v4, {1, 4, 8}};
      }
      return std::nullopt;
    case 2:
      if (is({1, 2})) {
        if (differ(4, 6)) return NinePlan{B::nine_pair_v1v2, {3, 6, 8}};
        return std::nullopt;
      }
      if (is({2, 4})) return NinePlan{B::nine_pair_v2v4, {5, 7, 9}};
      if (is({2, 6})) return NinePlan{B::nine_pair_v2v6, {3, 7, 9}};
      if (is({4, 6})) {
        if (differ(1, 2)) return NinePlan{B::nine_pair_v4v6_split_v1v2, {2, 7, 9}};
        return NinePlan{B::nine_pair_v4v6_split_v2v8, {1, 8}};
      }
      if (is({4, 8})) {
        if (differ(2, 6)) return NinePlan{B::nine_pair_v4v8, {1, 6}};
        return std::nullopt;
      }
      // Not among the listed subcases; this matching needs no condition.
      if (is({1, 4})) return NinePlan{B::nine_pair_v1v4, {2, 6, 8}};
      return std::nullopt;
    case 3:
      if (!m(1) && !m(2)) {
        if (!differ(1, 2)) throw ExtensionObstruction("u1v1 and u2v2 lie on one path of the linear forest");
        return NinePlan{B::nine_three_v1v2_free, {1}};
      }
      [[fallthrough]];
    case 4:
      if (!m(1)) return std::nullopt;
      {
        NinePlan plan{set.size() == 3 ? B::nine_three_other : B::nine_four_matched, {}};
        for (std::size_t i : {2, 4, 6, 8}) {
          if (!m(i)) plan.matched_face_edges.push_back(i);
        }
        return plan;
      }
    default:
      throw ExtensionObstruction("all five stub edges are in the matching");
  }
}

// The reflection v_i -> v_{3-i} (indices mod 9) keeps the 9-face pattern.
inline std::size_t reflect9(std::size_t i) { return (12 - i) % 9 == 0 ? 9 : (12 - i) % 9; }

}  // namespace detail

/// Extends an (inf,1) labeling of g - E(F) over a 10-face: the face edge
/// v_i v_{i+1} joins the matching for every odd i whose stub is in the
/// linear forest. Throws ExtensionObstruction if every stub is matched.
inline FaceExtension extend_over_10face(const MultiGraph& g, const FaceConfig& cfg, const EdgeLabeling& base) {
  if (cfg.kind != FaceKind::ten_face) throw std::invalid_argument("configuration is not a 10-face");
  EdgeSubgraph sub = without_face(g, cfg);
  detail::StubState s = detail::read_stubs(cfg, sub, base);
  std::vector<std::size_t> matched;
  for (std::size_t i : {1, 3, 5, 7, 9}) {
    if (!s.matched[i]) matched.push_back(i);
  }
  if (matched.empty()) throw ExtensionObstruction("all five stub edges are in the matching");
  FaceExtension out{detail::assemble(g, cfg, sub, base, matched), ExtensionBranch::ten_face};
  ++branch_counters().hits[static_cast<std::size_t>(out.branch)];
  return out;
}

/// Extends an (inf,1) labeling of g - E(F) over a 9-face by the case table
/// on the matched stubs, reflecting the ordering where the table needs it.
/// Throws ExtensionObstruction when all five stubs are matched, or when
/// exactly u1v1 and u2v2 are free and lie on one path.
inline FaceExtension extend_over_9face(const MultiGraph& g, const FaceConfig& cfg, const EdgeLabeling& base) {
  if (cfg.kind != FaceKind::nine_face) throw std::invalid_argument("configuration is not a 9-face");
  EdgeSubgraph sub = without_face(g, cfg);
  detail::StubState s = detail::read_stubs(cfg, sub, base);
  std::optional<detail::NinePlan> plan = detail::nine_plan(s);
  bool reflected = !plan;
  if (reflected) {
    detail::StubState r;
    for (std::size_t i : {1, 2, 4, 6, 8}) {
      r.matched[i] = s.matched[detail::reflect9(i)];
      r.component[i] = s.component[detail::reflect9(i)];
    }
    plan = detail::nine_plan(r);
    if (!plan) throw std::logic_error("9-face case table misses a stub pattern");
    // Edge v'_i v'_{i+1} of the reflected order is v_{3-i} v_{2-i}, i.e. edge 2-i.
    for (std::size_t& i : plan->matched_face_edges) i = (11 - i) % 9 == 0 ? 9 : (11 - i) % 9;
  }
  FaceExtension out{detail::assemble(g, cfg, sub, base, plan->matched_face_edges), plan->branch};
  ++branch_counters().hits[static_cast<std::size_t>(out.branch)];
  return out;
}

// ---------------------------------------------------------------------------
// Discharging audit

struct ChargeTransfer {
  std::size_t face;
  Vertex vertex;
  long amount;
};

/// Faces get |f| - 6, vertices 2d - 6; every face then sends 1 to a 2-vertex
/// per occurrence on its boundary walk. An isolated vertex counts as a
/// component with one face of length 0.
struct ChargeReport {
  std::vector<std::size_t> face_length;
  std::vector<long> face_initial, face_final;
  std::vector<long> vertex_initial, vertex_final;
  std::vector<ChargeTransfer> transfers;
  std::vector<long> component_totals;
  long total_initial = 0;
  long total_final = 0;
  long expected_total = 0;  // -12 per component
  bool euler_consistent = true;

  bool subcubic = true;
  bool girth_at_least_9 = true;
  bool min_degree_two = true;
  bool no_adjacent_twos = true;
  bool long_faces_have_six_threes = true;  // every 9- or 10-face

  std::vector<std::string> flags;     // failed hypotheses and Euler problems
  std::vector<std::string> negative;  // objects ending with a negative charge

  bool total_matches() const noexcept { return total_initial == expected_total; }
  bool hypotheses_hold() const noexcept {
    return subcubic && girth_at_least_9 && min_degree_two && no_adjacent_twos && long_faces_have_six_threes;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "faces " << face_length.size() << ", vertices " << vertex_initial.size() << ", components "
        << component_totals.size() << "\n";
    out << "initial total " << total_initial << " (expected " << expected_total << ")"
        << ", final total " << total_final << "\n";
    out << "euler " << (euler_consistent ? "consistent" : "INCONSISTENT") << ", hypotheses "
        << (hypotheses_hold() ? "hold" : "fail") << "\n";
    for (const auto& f : flags) out << "flag: " << f << "\n";
    for (const auto& n : negative) out << "negative: " << n << "\n";
    return out.str();
  }
};

inline ChargeReport discharging_audit(const MultiGraph& g, const RotationSystem& rot) {
  FaceSet fs = faces(g, rot);
  Components comps = connected_components(g);
  ChargeReport r;
  r.euler_consistent = fs.spherical;
  if (!fs.spherical) r.flags.push_back("V - E + F differs from 2 on some component; the rotation is not planar");
  r.component_totals.assign(comps.count, 0);
  r.expected_total = -12 * static_cast<long>(comps.count);

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    long c = 2 * static_cast<long>(g.degree(v)) - 6;
    r.vertex_initial.push_back(c);
    r.component_totals[comps.of[v]] += c;
    if (g.degree(v) > 3) r.subcubic = false;
    if (g.degree(v) < 2) r.min_degree_two = false;
  }
  for (const FaceWalk& f : fs.faces) {
    long c = static_cast<long>(f.length()) - 6;
    r.face_length.push_back(f.length());
    r.face_initial.push_back(c);
    r.component_totals[comps.of[f.vertices.front()]] += c;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 0) continue;
    r.face_length.push_back(0);
    r.face_initial.push_back(-6);
    r.component_totals[comps.of[v]] += -6;
  }
  r.total_initial = std::accumulate(r.face_initial.begin(), r.face_initial.end(), 0L) +
                    std::accumulate(r.vertex_initial.begin(), r.vertex_initial.end(), 0L);

  r.face_final = r.face_initial;
  r.vertex_final = r.vertex_initial;
  for (std::size_t i = 0; i < fs.faces.size(); ++i) {
    std::map<Vertex, long> sent;
    for (Vertex x : fs.faces[i].vertices) {
      if (g.degree(x) == 2) ++sent[x];
    }
    for (auto [x, amount] : sent) {
      r.transfers.push_back({i, x, amount});
      r.face_final[i] -= amount;
      r.vertex_final[x] += amount;
    }
  }
  r.total_final = std::accumulate(r.face_final.begin(), r.face_final.end(), 0L) +
                  std::accumulate(r.vertex_final.begin(), r.vertex_final.end(), 0L);

  Length gir = girth(g);
  r.girth_at_least_9 = gir >= 9;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 2 && g.degree(e.v) == 2) r.no_adjacent_twos = false;
  }
  for (std::size_t i = 0; i < fs.faces.size(); ++i) {
    const FaceWalk& f = fs.faces[i];
    if (f.length() != 9 && f.length() != 10) continue;
    std::vector<Vertex> threes;
    for (Vertex x : f.vertices) {
      if (g.degree(x) == 3) threes.push_back(x);
    }
    std::sort(threes.begin(), threes.end());
    threes.erase(std::unique(threes.begin(), threes.end()), threes.end());
    if (threes.size() < 6) {
      r.long_faces_have_six_threes = false;
      r.flags.push_back("face " + std::to_string(i) + " of length " + std::to_string(f.length()) + " has only " +
                        std::to_string(threes.size()) + " 3-vertices");
    }
  }
  if (!r.subcubic) r.flags.push_back("not subcubic");
  if (!r.girth_at_least_9) r.flags.push_back("girth " + bound_to_string(gir) + " < 9");
  if (!r.min_degree_two) r.flags.push_back("vertex of degree below 2");
  if (!r.no_adjacent_twos) r.flags.push_back("two adjacent 2-vertices");
  if (comps.count > 1) r.flags.push_back(std::to_string(comps.count) + " components, audited with -12 each");
  if (!r.total_matches()) {
    r.flags.push_back("initial total " + std::to_string(r.total_initial) + " differs from " +
                      std::to_string(r.expected_total));
  }

  for (std::size_t i = 0; i < r.face_final.size(); ++i) {
    if (r.face_final[i] < 0) r.negative.push_back("face " + std::to_string(i) + ": " + std::to_string(r.face_final[i]));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (r.vertex_final[v] < 0) {
      r.negative.push_back("vertex " + std::to_string(v) + ": " + std::to_string(r.vertex_final[v]));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subdivision and the corpus

/// Every edge becomes a path of t+1 edges. Vertices keep their ids, new
/// vertices follow; the segments of edge e are (t+1)e .. (t+1)e + t, from
/// e.u towards e.v.
inline MultiGraph subdivide_all(const MultiGraph& g, std::size_t t) {
  MultiGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    for (std::size_t j = 0; j < t; ++j) {
      Vertex x = out.add_vertex();
      out.add_edge(prev, x);
      prev = x;
    }
    out.add_edge(prev, e.v);
  }
  return out;
}

/// Same, carrying the rotation along.
inline Embedded subdivide_all(const Embedded& emb, std::size_t t) {
  Embedded out{subdivide_all(emb.graph, t), {}};
  out.rotation = RotationSystem::identity(out.graph);
  for (Vertex v = 0; v < emb.graph.vertex_count(); ++v) {
    auto& ring = out.rotation.order[v];
    ring.clear();
    for (EdgeId e : emb.rotation.order[v]) ring.push_back(emb.graph.edge(e).u == v ? (t + 1) * e : (t + 1) * e + t);
  }
  return out;
}

/// Replaces edge e by a path of extra[e] + 1 edges, keeping the rotation.
inline Embedded subdivide_each(const Embedded& emb, const std::vector<std::size_t>& extra) {
  if (extra.size() != emb.graph.edge_count()) throw std::invalid_argument("one subdivision count per edge");
  const MultiGraph& g = emb.graph;
  Embedded out{MultiGraph(g.vertex_count()), {}};
  std::vector<EdgeId> first(g.edge_count()), last(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex prev = g.edge(e).u;
    for (std::size_t j = 0; j < extra[e]; ++j) {
      Vertex x = out.graph.add_vertex();
      EdgeId s = out.graph.add_edge(prev, x);
      if (j == 0) first[e] = s;
      prev = x;
    }
    last[e] = out.graph.add_edge(prev, g.edge(e).v);
    if (extra[e] == 0) first[e] = last[e];
  }
  out.rotation = RotationSystem::identity(out.graph);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& ring = out.rotation.order[v];
    ring.clear();
    for (EdgeId e : emb.rotation.order[v]) ring.push_back(g.edge(e).u == v ? first[e] : last[e]);
  }
  return out;
}

struct CorpusMember {
  std::string name;
  Embedded emb;
};

/// Planar subcubic graphs of girth at least 9: subdivisions of small cubic
/// plane graphs with t = 2 and 3, and hand-built graphs.
inline std::vector<CorpusMember> girth9_corpus() {
  std::vector<CorpusMember> out;
  std::vector<std::pair<std::string, Embedded>> cubic = {
      {"k4", gen::plane_k4()},          {"prism3", gen::plane_prism(3)}, {"cube", gen::plane_cube()},
      {"prism5", gen::plane_prism(5)},  {"prism6", gen::plane_prism(6)}, {"prism7", gen::plane_prism(7)},
      {"dodecahedron", gen::plane_dodecahedron()},
  };
  for (const auto& [name, emb] : cubic) {
    for (std::size_t t : {2, 3}) out.push_back({name + "-t" + std::to_string(t), subdivide_all(emb, t)});
  }
  out.push_back({"c9", gen::plane_cycle(9)});
  out.push_back({"c12", gen::plane_cycle(12)});
  out.push_back({"theta-5-5-5", gen::plane_theta(5, 5, 5)});
  out.push_back({"theta-3-6-7", gen::plane_theta(3, 6, 7)});
  // Every face a 10-face with alternating degrees 3, 2: no reduction applies.
  Embedded dodeca = gen::plane_dodecahedron();
  out.push_back({"dodecahedron-t1", subdivide_all(dodeca, 1)});
  // 10- and 11-faces; the extra vertices create a few adjacent 2-vertices.
  std::vector<std::size_t> extra(dodeca.graph.edge_count(), 1);
  for (EdgeId e = 0; e < 5; ++e) extra[e] = 2;
  out.push_back({"dodecahedron-mixed", subdivide_each(dodeca, extra)});
  // Subdivide every edge except a set with at most one edge per face: the
  // faces keeping an edge become 9-faces with five 3-vertices, and no
  // reduction applies.
  FaceSet dodeca_faces = faces(dodeca.graph, dodeca.rotation);
  for (bool reverse : {false, true}) {
    std::vector<std::vector<std::size_t>> face_of(dodeca.graph.edge_count());
    for (std::size_t f = 0; f < dodeca_faces.faces.size(); ++f) {
      for (EdgeId e : dodeca_faces.faces[f].edges) face_of[e].push_back(f);
    }
    std::vector<bool> face_used(dodeca_faces.faces.size(), false);
    std::vector<std::size_t> keep(dodeca.graph.edge_count(), 1);
    for (EdgeId i = 0; i < dodeca.graph.edge_count(); ++i) {
      EdgeId e = reverse ? dodeca.graph.edge_count() - 1 - i : i;
      if (std::any_of(face_of[e].begin(), face_of[e].end(), [&](std::size_t f) { return face_used[f]; })) continue;
      for (std::size_t f : face_of[e]) face_used[f] = true;
      keep[e] = 0;
    }
    out.push_back({reverse ? "dodecahedron-nine-faces-b" : "dodecahedron-nine-faces-a", subdivide_each(dodeca, keep)});
  }
  // K4 with paths of 3 and 4 edges: faces of length 10 and 11.
  Embedded k4 = gen::plane_k4();
  std::vector<std::size_t> k4_extra(k4.graph.edge_count());
  for (EdgeId e = 0; e < k4_extra.size(); ++e) k4_extra[e] = 2 + e % 2;
  out.push_back({"k4-mixed", subdivide_each(k4, k4_extra)});
  // Two disjoint 9-cycles, one inside the other.
  Embedded two{MultiGraph(18), {}};
  for (Vertex i = 0; i < 9; ++i) two.graph.add_edge(i, (i + 1) % 9);
  for (Vertex i = 0; i < 9; ++i) two.graph.add_edge(9 + i, 9 + (i + 1) % 9);
  two.rotation = RotationSystem::identity(two.graph);
  out.push_back({"two-c9", two});
  return out;
}

// ---------------------------------------------------------------------------
// Experiment

struct ExperimentOptions {
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;  // corpus members run in parallel
  bool direct = true;    // also run the oracle on the unreduced graph
};

struct MemberResult {
  std::string name;
  std::size_t vertices = 0, edges = 0;
  PreconditionReport preconditions;
  std::size_t reductions = 0;
  std::size_t kernel_edges = 0;
  Outcome outcome = Outcome::timeout;  // via reductions and the oracle on the kernel
  bool verified = false;               // yes-labeling of the full graph passes verify
  std::optional<Outcome> direct;       // oracle on the full graph
  std::uint64_t nodes = 0;
  double millis = 0;
};

struct ExperimentReport {
  std::vector<MemberResult> members;

  std::size_t count(Outcome o) const {
    return std::count_if(members.begin(), members.end(), [&](const MemberResult& m) { return m.outcome == o; });
  }
  bool any_no() const {
    return std::any_of(members.begin(), members.end(), [](const MemberResult& m) {
      return m.outcome == Outcome::no || m.direct == Outcome::no;
    });
  }

  std::string to_string() const {
    std::ostringstream out;
    for (const auto& m : members) {
      out << m.name << " n=" << m.vertices << " m=" << m.edges << " pre=" << (m.preconditions.passed() ? "ok" : "FAIL")
          << " reductions=" << m.reductions << " kernel_edges=" << m.kernel_edges << " outcome=" << blfd::to_string(m.outcome)
          << (m.verified ? " verified" : "") << " direct=" << (m.direct ? blfd::to_string(*m.direct) : "-")
          << " nodes=" << m.nodes << " ms=" << static_cast<long>(m.millis) << "\n";
    }
    out << "yes " << count(Outcome::yes) << ", no " << count(Outcome::no) << ", timeout " << count(Outcome::timeout)
        << " of " << members.size() << "\n";
    return out.str();
  }
};

inline MemberResult run_member(const CorpusMember& member, const ExperimentOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  const MultiGraph& g = member.emb.graph;
  MemberResult r;
  r.name = member.name;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.preconditions = check_preconditions(g, member.emb.rotation);
  ReductionChain chain = reduce_exhaustively(g);
  r.reductions = chain.steps.size();
  r.kernel_edges = chain.kernel.edge_count();
  OracleOptions oo;
  oo.budget = opt.budget;
  OracleResult kernel = solve_exact(chain.kernel, kLinearPlusMatching, oo);
  r.outcome = kernel.outcome;
  r.nodes = kernel.nodes;
  if (kernel.outcome == Outcome::yes) {
    EdgeLabeling full = chain.lift(kernel.labeling);
    r.verified = static_cast<bool>(verify(g, full, kLinearPlusMatching));
  }
  if (opt.direct) {
    OracleResult d = solve_exact(g, kLinearPlusMatching, oo);
    r.direct = d.outcome;
    r.nodes += d.nodes;
    if (d.outcome == Outcome::yes && !verify(g, d.labeling, kLinearPlusMatching)) {
      throw std::logic_error("oracle labeling fails verification on " + member.name);
    }
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs every member; results keep corpus order whatever the worker count.
inline ExperimentReport experiment_girth9(const std::vector<CorpusMember>& corpus, const ExperimentOptions& opt = {}) {
  ExperimentReport rep;
  rep.members.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) rep.members[i] = run_member(corpus[i], opt);
  };
  unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rep;
}

}  // namespace blfd
