#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blfd/cnf.hpp"
#include "blfd/decomp.hpp"
#include "blfd/graph.hpp"
#include "blfd/oracle.hpp"

namespace blfd {

/// A constructed graph with named vertices. `plan` is the decomposition the
/// construction is designed around (normalized parts), `attach` the
/// degree-1 attachment set of an alpha gadget.
struct GadgetOutput {
  MultiGraph g;
  std::map<std::string, Vertex> marked;
  std::vector<Vertex> attach;
  EdgeLabeling plan;
  BoundSpec bounds;

  Vertex at(const std::string& name) const {
    auto it = marked.find(name);
    if (it == marked.end()) throw std::out_of_range("no vertex named " + name);
    return it->second;
  }
};

enum class ForcerKind { long1, short1, short_kl, long_kl, symmetric, longinf, path };

inline const char* to_string(ForcerKind k) {
  switch (k) {
    case ForcerKind::long1: return "long1";
    case ForcerKind::short1: return "short1";
    case ForcerKind::short_kl: return "short";
    case ForcerKind::long_kl: return "long";
    case ForcerKind::symmetric: return "symmetric";
    case ForcerKind::longinf: return "longinf";
    case ForcerKind::path: return "path";
  }
  return "?";
}

inline ForcerKind parse_forcer_kind(std::string_view s) {
  for (auto k : {ForcerKind::long1, ForcerKind::short1, ForcerKind::short_kl, ForcerKind::long_kl,
                 ForcerKind::symmetric, ForcerKind::longinf, ForcerKind::path}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown forcer kind '" + std::string(s) + "'");
}

namespace detail {

// Grows a graph and its intended labeling together. Doubled edges get A on
// the first copy and B on the second, matching the oracle's convention.
struct Builder {
  MultiGraph g;
  EdgeLabeling plan;
  std::map<std::string, Vertex> marked;

  Vertex vertex() { return g.add_vertex(); }
  Vertex named(const std::string& name) {
    Vertex v = vertex();
    marked[name] = v;
    return v;
  }
  EdgeId edge(Vertex u, Vertex v, Part p) {
    plan.push_back(p);
    return g.add_edge(u, v);
  }
  void doubled(Vertex u, Vertex v) {
    edge(u, v, Part::A);
    edge(u, v, Part::B);
  }
};

inline std::size_t short_singles(std::size_t k, std::size_t l) { return (k - 1) / (l + 1) + 1; }

// Path v_0..v_k ending in `tip`; v_i v_{i+1} stays single iff
// i = k-1-mu(l+1), and single edges belong to `big`.
inline void attach_short(Builder& b, std::size_t k, std::size_t l, Vertex tip, Part big) {
  Vertex prev = b.vertex();
  for (std::size_t i = 0; i < k; ++i) {
    Vertex next = i + 1 == k ? tip : b.vertex();
    if ((k - 1 - i) % (l + 1) == 0) {
      b.edge(prev, next, big);
    } else {
      b.doubled(prev, next);
    }
    prev = next;
  }
}

inline void attach_long(Builder& b, std::size_t k, std::size_t l, Vertex tip, Part big) {
  Vertex v1 = b.vertex();
  attach_short(b, k, l, v1, big);
  Vertex v2 = b.vertex();
  attach_short(b, k, l, v2, big);
  b.edge(v1, tip, other(big));
  b.edge(v2, tip, other(big));
}

inline void attach_long1(Builder& b, Vertex tip, Part big) {
  Vertex p[5];
  for (auto& x : p) x = b.vertex();
  b.doubled(p[0], p[1]);
  b.edge(p[1], p[2], big);
  b.edge(p[2], p[3], big);
  b.doubled(p[3], p[4]);
  b.edge(p[2], tip, other(big));
}

inline void attach_short1(Builder& b, Vertex tip, Part big) {
  Vertex t = b.vertex();
  attach_long1(b, t, big);
  b.edge(tip, t, big);
}

// Path of length k ending in `tip`, all but the last edge doubled. The tip
// ends a k-path of `tip_part`.
inline void attach_symmetric(Builder& b, std::size_t k, Vertex tip, Part tip_part) {
  Vertex prev = b.vertex();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Vertex next = b.vertex();
    b.doubled(prev, next);
    prev = next;
  }
  b.edge(prev, tip, tip_part);
}

inline void attach_longinf(Builder& b, std::size_t k, Vertex tip, Part big) {
  for (int side = 0; side < 2; ++side) {
    Vertex w = b.vertex();
    attach_short(b, k + 1, k, w, big);
    attach_short(b, k + 1, k, w, big);
    b.edge(w, tip, other(big));
  }
}

inline void attach_path(Builder& b, std::size_t k, Vertex tip, Part big) {
  Vertex prev = b.vertex();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    attach_short(b, k + 1, k, prev, big);
    attach_short(b, k + 1, k, prev, big);
    Vertex next = i + 2 == k ? tip : b.vertex();
    b.edge(prev, next, other(big));
    prev = next;
  }
}

// Vertex and edge counts of each forcer, tip included.
struct Size {
  std::size_t vertices, edges;
};

inline Size short_size(std::size_t k, std::size_t l) { return {k + 1, 2 * k - short_singles(k, l)}; }

inline Size forcer_size(ForcerKind kind, std::size_t k, std::size_t l) {
  switch (kind) {
    case ForcerKind::long1: return {6, 7};
    case ForcerKind::short1: return {7, 8};
    case ForcerKind::short_kl: return short_size(k, l);
    case ForcerKind::long_kl: return {2 * short_size(k, l).vertices + 1, 2 * short_size(k, l).edges + 2};
    case ForcerKind::symmetric: return {k + 1, 2 * k - 1};
    case ForcerKind::longinf: return {4 * k + 7, 8 * k + 6};
    case ForcerKind::path: return {k + 2 * (k - 1) * (k + 1), (k - 1) + 2 * (k - 1) * (2 * k + 1)};
  }
  return {0, 0};
}

inline void check_size(const MultiGraph& g, Size want, const std::string& what) {
  if (g.vertex_count() != want.vertices || g.edge_count() != want.edges) {
    throw std::logic_error(what + " has " + std::to_string(g.vertex_count()) + " vertices and " +
                           std::to_string(g.edge_count()) + " edges, expected " + std::to_string(want.vertices) +
                           " and " + std::to_string(want.edges));
  }
}

}  // namespace detail

/// Bounds under which a forcer is meant to be decomposed. For long1 and
/// short1 `k` is the bound of the long forest (at least 4, or kInfinite).
inline BoundSpec forcer_bounds(ForcerKind kind, std::size_t k, std::size_t l = 0) {
  switch (kind) {
    case ForcerKind::long1:
    case ForcerKind::short1:
      if (k < 4) throw std::invalid_argument("long1 and short1 forcers need k >= 4");
      return BoundSpec::make(k, 1);
    case ForcerKind::short_kl:
    case ForcerKind::long_kl:
      if (!(k > l && l >= 2) || k == kInfinite) throw std::invalid_argument("short and long forcers need k > l >= 2");
      return BoundSpec::make(k, l);
    case ForcerKind::symmetric:
      if (k < 2 || k == kInfinite) throw std::invalid_argument("symmetric forcers need k >= 2");
      return BoundSpec::make(k, k);
    case ForcerKind::longinf:
    case ForcerKind::path:
      if (k < 2 || k == kInfinite) throw std::invalid_argument("(inf,k) forcers need k >= 2");
      return BoundSpec::make(kInfinite, k);
  }
  throw std::invalid_argument("unknown forcer kind");
}

/// Builds a stand-alone forcer; vertex 0 is the tip.
inline GadgetOutput build_forcer(ForcerKind kind, std::size_t k = 4, std::size_t l = 0) {
  BoundSpec bounds = forcer_bounds(kind, k, l);
  detail::Builder b;
  Vertex tip = b.named("tip");
  switch (kind) {
    case ForcerKind::long1: detail::attach_long1(b, tip, Part::A); break;
    case ForcerKind::short1: detail::attach_short1(b, tip, Part::A); break;
    case ForcerKind::short_kl: detail::attach_short(b, k, l, tip, Part::A); break;
    case ForcerKind::long_kl: detail::attach_long(b, k, l, tip, Part::A); break;
    case ForcerKind::symmetric: detail::attach_symmetric(b, k, tip, Part::B); break;
    case ForcerKind::longinf: detail::attach_longinf(b, k, tip, Part::A); break;
    case ForcerKind::path: detail::attach_path(b, k, tip, Part::A); break;
  }
  detail::check_size(b.g, detail::forcer_size(kind, k, l), std::string(to_string(kind)) + " forcer");
  return {std::move(b.g), std::move(b.marked), {}, std::move(b.plan), bounds};
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PropertyReport {
  std::string subject;
  BoundSpec bounds;
  std::size_t decompositions = 0;
  bool complete = false;
  std::vector<Check> checks;

  bool passed() const {
    return complete && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  std::string to_string() const {
    std::string out = subject + " under (" + bounds.to_string() + "): " + std::to_string(decompositions) +
                      " decomposition(s)" + (complete ? "" : ", enumeration incomplete") + "\n";
    for (const auto& c : checks) {
      out += std::string(c.pass ? "  ok   " : "  FAIL ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
    }
    return out;
  }
};

namespace detail {

// Within each class of parallel edges, lower ids take A first, so two
// labelings that only exchange parallel copies compare equal.
inline EdgeLabeling parallel_normal_form(const MultiGraph& g, EdgeLabeling lab) {
  for (const auto& cls : parallel_classes(g)) {
    std::size_t as = 0;
    for (EdgeId e : cls) as += lab[e] == Part::A;
    for (std::size_t i = 0; i < cls.size(); ++i) lab[cls[i]] = i < as ? Part::A : Part::B;
  }
  return lab;
}

inline bool ends_path_of_length(const ForestView& f, Vertex v, Length len) {
  return f.degree(v) == 1 && f.length_at(v) == len;
}

// Tip condition of each forcer kind for one decomposition.
inline bool tip_condition(ForcerKind kind, const MultiGraph& g, const EdgeLabeling& lab, Vertex tip, const BoundSpec& b) {
  ForestView fa(g, lab, Part::A), fb(g, lab, Part::B);
  switch (kind) {
    case ForcerKind::long1: return fa.degree(tip) == 0 && fb.degree(tip) == 1;
    case ForcerKind::short1: return fb.degree(tip) == 0 && fa.degree(tip) >= 1 && fa.length_at(tip) == 1;
    case ForcerKind::short_kl: return fb.degree(tip) == 0 && ends_path_of_length(fa, tip, b.k);
    case ForcerKind::long_kl:
    case ForcerKind::longinf: return fa.degree(tip) == 0 && fb.degree(tip) == 2;
    case ForcerKind::symmetric:
      return (fa.degree(tip) == 0 && ends_path_of_length(fb, tip, b.l)) ||
             (fb.degree(tip) == 0 && ends_path_of_length(fa, tip, b.k));
    case ForcerKind::path: return fa.degree(tip) == 0 && ends_path_of_length(fb, tip, b.l - 1);
  }
  return false;
}

inline const char* tip_condition_text(ForcerKind kind) {
  switch (kind) {
    case ForcerKind::long1: return "tip has degree 0 in A and 1 in B";
    case ForcerKind::short1: return "tip has degree 0 in B and lies on an A-path of length 1";
    case ForcerKind::short_kl: return "tip has degree 0 in B and ends an A-path of length k";
    case ForcerKind::long_kl:
    case ForcerKind::longinf: return "tip has degree 0 in A and 2 in B";
    case ForcerKind::symmetric: return "tip has degree 0 in one part and ends a k-path of the other";
    case ForcerKind::path: return "tip has degree 0 in A and ends a B-path of length k-1";
  }
  return "";
}

}  // namespace detail

/// Enumerates the forcer's decompositions (parallel copies not told apart)
/// and checks the count and the tip condition of every decomposition.
inline PropertyReport check_forcer_property(ForcerKind kind, std::size_t k = 4, std::size_t l = 0,
                                            const EnumerateOptions& opt = {}) {
  GadgetOutput f = build_forcer(kind, k, l);
  PropertyReport rep;
  rep.subject = std::string(to_string(kind)) + " forcer";
  rep.bounds = f.bounds;
  EnumerateResult en = enumerate(f.g, f.bounds, opt);
  rep.decompositions = en.labelings.size();
  rep.complete = en.complete;
  const std::size_t expected = kind == ForcerKind::symmetric ? 2 : 1;
  rep.checks.push_back({"decomposition count is " + std::to_string(expected), en.complete && rep.decompositions == expected,
                        "found " + std::to_string(rep.decompositions)});
  bool tips = !en.labelings.empty();
  for (const auto& lab : en.labelings) tips = tips && detail::tip_condition(kind, f.g, lab, f.at("tip"), f.bounds);
  rep.checks.push_back({detail::tip_condition_text(kind), tips, {}});
  bool plan_ok = static_cast<bool>(verify(f.g, f.plan, f.bounds)) &&
                 std::find(en.labelings.begin(), en.labelings.end(), f.plan) != en.labelings.end();
  rep.checks.push_back({"constructed decomposition is valid and among those found", plan_ok, {}});
  if (kind == ForcerKind::symmetric) {
    bool swapped = en.labelings.size() == 2 &&
                   en.labelings[1] == detail::parallel_normal_form(f.g, swap_parts(en.labelings[0]));
    rep.checks.push_back({"the two decompositions differ by exchanging the parts", swapped, {}});
  }
  return rep;
}

namespace detail {

// Alpha gadget on the ring v_1 P_1 w_1 Q_1 v_2 ... with a_i at v_i and b_i at
// w_i. The plan covers the attachment set with part A (cover_big) or B.
inline std::vector<Vertex> attach_alpha(Builder& b, std::size_t alpha, std::size_t k, std::size_t l, bool cover_big,
                                        const std::string& prefix) {
  std::vector<Vertex> v(alpha), w(alpha), a(alpha), bb(alpha);
  for (std::size_t i = 0; i < alpha; ++i) {
    std::string idx = std::to_string(i + 1);
    v[i] = b.named(prefix + "v" + idx);
    w[i] = b.named(prefix + "w" + idx);
    a[i] = b.named(prefix + "a" + idx);
    bb[i] = b.named(prefix + "b" + idx);
  }
  const bool equal = k == l;
  // Part holding the P paths; with k > l it is always A.
  const Part p_part = equal && !cover_big ? Part::B : Part::A;
  const Part q_part = other(p_part);
  const Part a_part = cover_big ? Part::A : Part::B;
  auto chain = [&](Vertex from, Vertex to, std::size_t len, Part part, auto&& decorate) {
    Vertex prev = from;
    for (std::size_t j = 1; j <= len; ++j) {
      Vertex next = j == len ? to : b.vertex();
      b.edge(prev, next, part);
      if (j < len) decorate(next);
      prev = next;
    }
  };
  for (std::size_t i = 0; i < alpha; ++i) {
    b.edge(v[i], a[i], a_part);
    b.edge(w[i], bb[i], other(a_part));
  }
  for (std::size_t i = 0; i < alpha; ++i) {
    chain(v[i], w[i], k - 1, p_part, [&](Vertex x) {
      if (equal) {
        attach_symmetric(b, k, x, q_part);
      } else {
        attach_long(b, k, l, x, Part::A);
      }
    });
    chain(w[i], v[(i + 1) % alpha], l - 1, q_part, [&](Vertex x) {
      if (equal) {
        attach_symmetric(b, k, x, p_part);
      } else {
        attach_short(b, k, l, x, Part::A);
      }
    });
  }
  return a;
}

inline Size alpha_size(std::size_t alpha, std::size_t k, std::size_t l) {
  Size p = k == l ? forcer_size(ForcerKind::symmetric, k, k) : forcer_size(ForcerKind::long_kl, k, l);
  Size q = k == l ? p : forcer_size(ForcerKind::short_kl, k, l);
  std::size_t per_v = 4 + (k - 2) * p.vertices + (l - 2) * q.vertices;
  std::size_t per_e = 2 + (k - 1) + (l - 1) + (k - 2) * p.edges + (l - 2) * q.edges;
  return {alpha * per_v, alpha * per_e};
}

inline void check_alpha_params(std::size_t alpha, std::size_t k, std::size_t l) {
  if (alpha < 2) throw std::invalid_argument("alpha gadgets need alpha >= 2");
  if (!(k >= l && l >= 2) || k == kInfinite) throw std::invalid_argument("alpha gadgets need k >= l >= 2");
}

}  // namespace detail

/// (alpha,k,l)-gadget with attachment set a_1..a_alpha. The plan covers the
/// attachment set with k-paths of part A; alpha_gadget_plan gives the other.
inline GadgetOutput build_alpha_gadget(std::size_t alpha, std::size_t k, std::size_t l) {
  detail::check_alpha_params(alpha, k, l);
  detail::Builder b;
  auto attach = detail::attach_alpha(b, alpha, k, l, true, "");
  detail::check_size(b.g, detail::alpha_size(alpha, k, l), "alpha gadget");
  return {std::move(b.g), std::move(b.marked), std::move(attach), std::move(b.plan), BoundSpec::make(k, l)};
}

inline EdgeLabeling alpha_gadget_plan(std::size_t alpha, std::size_t k, std::size_t l, bool cover_big) {
  detail::check_alpha_params(alpha, k, l);
  detail::Builder b;
  detail::attach_alpha(b, alpha, k, l, cover_big, "");
  return b.plan;
}

/// True if every attachment vertex ends a path of exactly `len` edges in part p.
inline bool covers(const MultiGraph& g, const EdgeLabeling& lab, std::span<const Vertex> attach, Part p, Length len) {
  ForestView f(g, lab, p);
  return std::all_of(attach.begin(), attach.end(), [&](Vertex a) { return detail::ends_path_of_length(f, a, len); });
}

/// Checks the gadget definition on (g, attach) by full enumeration.
inline PropertyReport check_alpha_gadget(const MultiGraph& g, std::span<const Vertex> attach, std::size_t alpha,
                                         const BoundSpec& b, const EnumerateOptions& opt = {}) {
  PropertyReport rep;
  rep.subject = "alpha gadget";
  rep.bounds = b;
  bool deg1 = std::all_of(attach.begin(), attach.end(), [&](Vertex a) { return g.degree(a) == 1; });
  rep.checks.push_back({"attachment vertices have degree 1", deg1, {}});
  rep.checks.push_back({"attachment set has alpha vertices", attach.size() == alpha, std::to_string(attach.size())});
  EnumerateResult en = enumerate(g, b, opt);
  rep.decompositions = en.labelings.size();
  rep.complete = en.complete;
  bool some_big = false, some_small = false, every = true;
  for (const auto& lab : en.labelings) {
    bool big = covers(g, lab, attach, Part::A, b.k), small = covers(g, lab, attach, Part::B, b.l);
    some_big = some_big || big;
    some_small = some_small || small;
    every = every && (big || small);
  }
  rep.checks.push_back({"some decomposition covers A with k-paths of part A", some_big, {}});
  rep.checks.push_back({"some decomposition covers A with l-paths of part B", some_small, {}});
  rep.checks.push_back({"every decomposition does one or the other", en.complete && every, {}});
  return rep;
}

inline PropertyReport check_alpha_gadget(std::size_t alpha, std::size_t k, std::size_t l, const EnumerateOptions& opt = {}) {
  GadgetOutput gad = build_alpha_gadget(alpha, k, l);
  auto rep = check_alpha_gadget(gad.g, gad.attach, alpha, gad.bounds, opt);
  rep.subject = "(" + std::to_string(alpha) + "," + std::to_string(k) + "," + std::to_string(l) + ")-gadget";
  return rep;
}

/// The gadget with one copy of a doubled edge removed: the doubled pair
/// closest to the attachment set, lowest edge id on ties.
inline GadgetOutput remove_one_doubled_edge(const GadgetOutput& gad) {
  std::vector<Length> dist(gad.g.vertex_count(), kInfinite);
  std::vector<bool> none(gad.g.edge_count(), false);
  for (Vertex a : gad.attach) {
    auto d = detail::bfs_distances(gad.g, a, none);
    for (Vertex v = 0; v < dist.size(); ++v) dist[v] = std::min(dist[v], d[v]);
  }
  std::optional<EdgeId> drop;
  Length best = kInfinite;
  for (EdgeId e = 0; e < gad.g.edge_count(); ++e) {
    const Edge& ed = gad.g.edge(e);
    auto between = gad.g.edges_between(ed.u, ed.v);
    if (between.size() < 2 || e != *std::max_element(between.begin(), between.end())) continue;
    Length d = std::min(dist[ed.u], dist[ed.v]);
    if (!drop || d < best) drop = e, best = d;
  }
  if (!drop) throw std::invalid_argument("gadget has no doubled edge");
  std::vector<EdgeId> gone{*drop};
  EdgeSubgraph sub = remove_edges(gad.g, gone);
  GadgetOutput out{std::move(sub.graph), gad.marked, gad.attach, {}, gad.bounds};
  if (!gad.plan.empty()) {
    for (EdgeId x : sub.to_parent) out.plan.push_back(gad.plan[x]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reductions

enum class Variant { k1, infk, kl };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::k1: return "k1";
    case Variant::infk: return "infk";
    case Variant::kl: return "kl";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "k1") return Variant::k1;
  if (s == "infk") return Variant::infk;
  if (s == "kl") return Variant::kl;
  throw std::invalid_argument("variant must be k1, infk or kl");
}

namespace detail {

struct VariableRoles {
  Vertex u[4], w[2], v[4];
};

// Shared skeleton of the two (3,B2) reductions. `pendants` decorates the
// w and v vertices; the plan follows phi.
template <class Pendants>
GadgetOutput build_3b2(const Cnf3B2& f, const Assignment& phi, bool strict, BoundSpec bounds, Pendants&& pendants) {
  f.validate();
  if (phi.size() != f.num_vars) throw std::invalid_argument("assignment has the wrong number of variables");
  if (strict && !f.satisfied_by(phi)) throw std::invalid_argument("assignment does not satisfy the formula");
  Builder b;
  const Part big = Part::A, small = Part::B;
  std::vector<VariableRoles> roles(f.num_vars);
  for (std::size_t x = 0; x < f.num_vars; ++x) {
    std::string p = "x" + std::to_string(x + 1) + ".";
    auto& r = roles[x];
    for (int i = 0; i < 4; ++i) r.u[i] = b.named(p + "u" + std::to_string(i + 1));
    for (int i = 0; i < 2; ++i) r.w[i] = b.named(p + "w" + std::to_string(i + 1));
    for (int i = 0; i < 4; ++i) r.v[i] = b.named(p + "v" + std::to_string(i + 1));
    const bool t = phi[x];
    // Cycle u1 u2 w1 u3 u4 w2 u1; the chord-free choice edges are u1u2 and u3u4.
    b.edge(r.u[0], r.u[1], t ? big : small);
    b.edge(r.u[1], r.w[0], big);
    b.edge(r.w[0], r.u[2], big);
    b.edge(r.u[2], r.u[3], t ? small : big);
    b.edge(r.u[3], r.w[1], big);
    b.edge(r.w[1], r.u[0], big);
    for (int i = 0; i < 4; ++i) b.edge(r.u[i], r.v[i], (i < 2) == t ? small : big);
    pendants(b, r);
  }
  // Clause cycles a1 b1 a2 b2 a3 b3. Slot j is "dead" when its literal is
  // false, i.e. its wiring edge goes to the small part.
  std::vector<std::array<Vertex, 3>> a_of(f.clauses.size());
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    std::string p = "C" + std::to_string(c + 1) + ".";
    Vertex a[3], bv[3];
    for (int i = 0; i < 3; ++i) {
      a[i] = b.named(p + "a" + std::to_string(i + 1));
      bv[i] = b.named(p + "b" + std::to_string(i + 1));
      a_of[c][i] = a[i];
    }
    bool dead[3];
    int count = 0;
    for (int i = 0; i < 3; ++i) {
      const Literal& l = f.clauses[c][i];
      dead[i] = phi[l.var] != l.positive;
      count += dead[i];
    }
    // edge a_i b_i has index 2i, edge b_i a_{i+1} index 2i+1.
    std::array<Part, 6> part;
    part.fill(big);
    if (count == 0 || count == 3) {
      for (int i = 0; i < 3; ++i) part[2 * i] = small;
    } else if (count == 1) {
      int i = dead[0] ? 0 : dead[1] ? 1 : 2;
      part[2 * i + 1] = small;
      part[2 * ((i + 2) % 3)] = small;
    } else {
      int i = !dead[2] ? 0 : !dead[0] ? 1 : 2;  // dead pair (i, i+1)
      part[2 * ((i + 1) % 3) + 1] = small;
    }
    for (int i = 0; i < 3; ++i) {
      b.edge(a[i], bv[i], part[2 * i]);
      b.edge(bv[i], a[(i + 1) % 3], part[2 * i + 1]);
    }
  }
  // Wiring: occurrences of x in clause order go to v1, v2 (positive) or
  // v3, v4 (negative); slot j of a clause is a_{j+1}.
  std::vector<std::array<int, 2>> used(f.num_vars, {0, 0});
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (int i = 0; i < 3; ++i) {
      const Literal& l = f.clauses[c][i];
      int slot = l.positive ? used[l.var][1]++ : 2 + used[l.var][0]++;
      bool dead = phi[l.var] != l.positive;
      b.edge(roles[l.var].v[slot], a_of[c][i], dead ? small : big);
    }
  }
  return {std::move(b.g), std::move(b.marked), {}, std::move(b.plan), bounds};
}

inline GadgetOutput build_k1(const Cnf3B2& f, const Assignment& phi, bool strict, std::size_t k) {
  if (k < 9) throw std::invalid_argument("the (k,1) reduction needs k >= 9");
  auto out = build_3b2(f, phi, strict, BoundSpec::make(k, 1), [](Builder& b, const VariableRoles& r) {
    for (Vertex w : r.w) attach_long1(b, w, Part::A);
    for (Vertex v : r.v) attach_short1(b, v, Part::A);
  });
  std::size_t n = f.num_vars, m = f.clauses.size();
  check_size(out.g, {44 * n + 6 * m, 56 * n + 9 * m}, "(k,1) reduction graph");
  return out;
}

inline Size infk_variable_size(std::size_t k) {
  Size li = forcer_size(ForcerKind::longinf, k, 0), sh = short_size(k + 1, k), pf = forcer_size(ForcerKind::path, k, 0);
  return {10 + 2 * (li.vertices - 1) + 4 * (sh.vertices - 1 + pf.vertices - 1), 10 + 2 * li.edges + 4 * (sh.edges + pf.edges)};
}

inline GadgetOutput build_infk(const Cnf3B2& f, const Assignment& phi, bool strict, std::size_t k) {
  if (k < 2 || k == kInfinite) throw std::invalid_argument("the (inf,k) reduction needs k >= 2");
  auto out = build_3b2(f, phi, strict, BoundSpec::make(kInfinite, k), [k](Builder& b, const VariableRoles& r) {
    for (Vertex w : r.w) attach_longinf(b, k, w, Part::A);
    for (Vertex v : r.v) {
      attach_short(b, k + 1, k, v, Part::A);
      attach_path(b, k, v, Part::A);
    }
  });
  Size per = infk_variable_size(k);
  std::size_t n = f.num_vars, m = f.clauses.size();
  check_size(out.g, {per.vertices * n + 6 * m, per.edges * n + 9 * m}, "(inf,k) reduction graph");
  return out;
}

inline GadgetOutput build_kl(const CnfMnae& f, const Assignment& phi, bool strict, std::size_t k, std::size_t l) {
  f.validate();
  if (!(k >= l && l >= 2) || k == kInfinite) throw std::invalid_argument("the (k,l) reduction needs k >= l >= 2");
  if (phi.size() != f.num_vars) throw std::invalid_argument("assignment has the wrong number of variables");
  if (strict && !f.satisfied_by(phi)) throw std::invalid_argument("assignment does not satisfy the formula");
  auto occ = f.occurrences();
  for (std::size_t x = 0; x < f.num_vars; ++x) {
    if (occ[x] < 2) {
      throw std::invalid_argument("variable " + std::to_string(x + 1) + " occurs " + std::to_string(occ[x]) +
                                  " times; the gadget needs at least 2");
    }
  }
  Builder b;
  std::vector<std::vector<Vertex>> attach(f.num_vars);
  for (std::size_t x = 0; x < f.num_vars; ++x) {
    attach[x] = attach_alpha(b, occ[x], k, l, phi[x], "x" + std::to_string(x + 1) + ".");
  }
  std::vector<std::size_t> next(f.num_vars, 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    Vertex vc = b.named("C" + std::to_string(c + 1));
    for (std::size_t x : f.clauses[c]) b.edge(vc, attach[x][next[x]++], phi[x] ? Part::B : Part::A);
  }
  std::size_t vs = f.clauses.size(), es = 3 * f.clauses.size();
  for (std::size_t x = 0; x < f.num_vars; ++x) {
    Size s = alpha_size(occ[x], k, l);
    vs += s.vertices;
    es += s.edges;
  }
  GadgetOutput out{std::move(b.g), std::move(b.marked), {}, std::move(b.plan), BoundSpec::make(k, l)};
  check_size(out.g, {vs, es}, "(k,l) reduction graph");
  return out;
}

}  // namespace detail

/// Graph of the (3,B2) reduction for (k,1), k >= 9.
inline GadgetOutput reduce_3b2_to_k1(const Cnf3B2& f, std::size_t k = 9) {
  auto out = detail::build_k1(f, Assignment(f.num_vars, true), false, k);
  out.plan.clear();
  return out;
}

/// Graph of the (3,B2) reduction for (inf,k), k >= 2.
inline GadgetOutput reduce_3b2_to_infk(const Cnf3B2& f, std::size_t k) {
  auto out = detail::build_infk(f, Assignment(f.num_vars, true), false, k);
  out.plan.clear();
  return out;
}

/// Graph of the MNAE reduction for (k,l), k >= l >= 2.
inline GadgetOutput reduce_nae_to_kl(const CnfMnae& f, std::size_t k, std::size_t l) {
  auto out = detail::build_kl(f, Assignment(f.num_vars, true), false, k, l);
  out.plan.clear();
  return out;
}

/// Decomposition of the reduction graph built from a satisfying assignment.
/// Throws std::invalid_argument if phi does not satisfy f.
inline EdgeLabeling witness_from_assignment(const Cnf3B2& f, const Assignment& phi, Variant v, std::size_t k) {
  switch (v) {
    case Variant::k1: return detail::build_k1(f, phi, true, k).plan;
    case Variant::infk: return detail::build_infk(f, phi, true, k).plan;
    case Variant::kl: break;
  }
  throw std::invalid_argument("the kl variant reduces from MNAE formulas");
}

inline EdgeLabeling witness_from_assignment(const CnfMnae& f, const Assignment& phi, std::size_t k, std::size_t l) {
  return detail::build_kl(f, phi, true, k, l).plan;
}

}  // namespace blfd
