#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blfd/decomp.hpp"
#include "blfd/factor.hpp"
#include "blfd/graph.hpp"

namespace blfd {

/// A maximal path whose inner vertices have degree 2, or a cycle with at
/// most one degree-3 vertex. z has one more entry than edges; for a cycle
/// z.front() == z.back() is the endvertex.
struct Element {
  bool cycle = false;
  std::vector<Vertex> z;
  std::vector<EdgeId> edges;

  Length length() const noexcept { return edges.size(); }
  Vertex u() const { return z.front(); }
  Vertex v() const { return z.back(); }

  void reverse() {
    std::reverse(z.begin(), z.end());
    std::reverse(edges.begin(), edges.end());
  }
};

struct PathSystem {
  std::vector<Element> elements;
  std::vector<Vertex> x3;      // degree-3 vertices in id order
  std::vector<bool> is_x3;     // indexed by vertex

  bool both_ends_x3(const Element& p) const { return is_x3[p.u()] && is_x3[p.v()]; }
};

/// Splits E(g) into maximal paths between vertices of degree 1 or 3 and
/// cycles through at most one degree-3 vertex.
inline PathSystem decompose_paths(const MultiGraph& g) {
  PathSystem ps;
  ps.is_x3.assign(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 3) throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (g.degree(v) == 3) {
      ps.is_x3[v] = true;
      ps.x3.push_back(v);
    }
  }
  std::vector<bool> used(g.edge_count(), false);
  auto walk = [&](Vertex start, EdgeId first) {
    Element el;
    el.z.push_back(start);
    Vertex x = start;
    EdgeId e = first;
    while (true) {
      used[e] = true;
      el.edges.push_back(e);
      x = g.edge(e).other(x);
      el.z.push_back(x);
      if (g.degree(x) != 2 || x == start) break;
      EdgeId next = g.incident(x)[0] == e ? g.incident(x)[1] : g.incident(x)[0];
      if (used[next]) break;
      e = next;
    }
    el.cycle = el.z.front() == el.z.back();
    return el;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1 && g.degree(v) != 3) continue;
    for (EdgeId e : g.incident(v)) {
      if (!used[e]) ps.elements.push_back(walk(v, e));
    }
  }
  // What is left are cycles of degree-2 vertices: start at the lowest
  // vertex and leave along its lower edge id.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    auto inc = g.incident(v);
    EdgeId e = std::min(inc[0], inc[1]);
    if (!used[e]) ps.elements.push_back(walk(v, e));
  }
  return ps;
}

struct HEdgeOrigin {
  std::size_t element;
  bool at_end;  // false: the H-edge stands for the element's first edge
};

struct FactorBuildOutput {
  FactorInstance inst;
  std::vector<Vertex> y_index;               // element -> vertex of H
  std::vector<HEdgeOrigin> edge_origin;      // H-edge -> element side
  std::vector<std::optional<Vertex>> x3_index;  // vertex of g -> vertex of H
};

inline DegreeSet element_degree_set(const PathSystem& ps, const Element& p) {
  if (!ps.both_ends_x3(p)) return {0, 1, 2};
  switch (p.length()) {
    case 1: return {2};
    case 2: return {1};
    case 3: return {0, 2};
    case 4: return {1, 2};
    default: return {0, 1, 2};
  }
}

/// The bipartite factor instance: degree-3 vertices need exactly one
/// selected edge, and y_P's set depends on the length of P.
inline FactorBuildOutput build_factor_instance(const MultiGraph& g, const PathSystem& ps) {
  FactorBuildOutput out;
  out.x3_index.assign(g.vertex_count(), std::nullopt);
  MultiGraph& h = out.inst.h;
  for (Vertex v : ps.x3) {
    out.x3_index[v] = h.add_vertex();
    out.inst.sets.push_back({1});
  }
  for (std::size_t i = 0; i < ps.elements.size(); ++i) {
    const Element& p = ps.elements[i];
    Vertex y = h.add_vertex();
    out.y_index.push_back(y);
    out.inst.sets.push_back(element_degree_set(ps, p));
    if (ps.is_x3[p.u()]) {
      h.add_edge(*out.x3_index[p.u()], y);
      out.edge_origin.push_back({i, false});
    }
    if (ps.is_x3[p.v()]) {
      h.add_edge(*out.x3_index[p.v()], y);
      out.edge_origin.push_back({i, true});
    }
  }
  return out;
}

namespace detail {

// Indices i of edge z_i z_{i+1} that go to the matching, given whether the
// first (su) and last (sv) edges must be matching edges.
inline std::vector<std::size_t> matching_positions(const PathSystem& ps, const Element& p, bool su, bool sv) {
  const std::size_t t = p.length();
  std::vector<std::size_t> out;
  auto every = [&](std::size_t from, std::size_t step) {
    for (std::size_t i = from; i < t; i += step) out.push_back(i);
  };
  if (!ps.is_x3[p.u()] && !ps.is_x3[p.v()]) {
    every(1, 2);  // Case 1
  } else if (!ps.both_ends_x3(p)) {
    every(su ? 0 : 1, 2);  // Case 2; the element is oriented with u in X3
  } else if (t == 1) {
    out = {0};
  } else if (t == 2) {
    out = {0};  // only su is set here
  } else if (t == 3) {
    out = su ? std::vector<std::size_t>{0, 2} : std::vector<std::size_t>{1};
  } else if (t == 4) {
    out = sv ? std::vector<std::size_t>{0, 3} : std::vector<std::size_t>{0, 2};
  } else if (su && sv) {
    if (t % 2 == 1) {
      every(0, 2);
    } else {
      out.push_back(0);
      every(3, 2);
    }
  } else if (su) {
    if (t % 2 == 1) {
      out.push_back(0);  // odd indices from 3 stop at t-2, leaving v's edge in A
      every(3, 2);
    } else {
      every(0, 2);
    }
  } else {
    if (t % 2 == 1) {
      every(1, 2);
    } else {
      out.push_back(1);
      every(4, 2);
    }
  }
  return out;
}

}  // namespace detail

/// Turns a factor certificate S into a (2,1)-labeling, element by element.
/// For every element side at a degree-3 vertex, the element's edge there is
/// a matching edge exactly when the corresponding H-edge is in S.
inline EdgeLabeling reconstruct(const MultiGraph& g, const PathSystem& ps, const FactorBuildOutput& fb,
                                const std::vector<EdgeId>& s) {
  if (!fb.inst.satisfied_by(s)) throw std::invalid_argument("S violates a degree set of the factor instance");
  std::vector<bool> su(ps.elements.size(), false), sv(ps.elements.size(), false);
  for (EdgeId e : s) {
    const auto& o = fb.edge_origin.at(e);
    (o.at_end ? sv : su)[o.element] = true;
  }
  EdgeLabeling lab(g.edge_count(), Part::A);
  for (std::size_t i = 0; i < ps.elements.size(); ++i) {
    Element p = ps.elements[i];
    bool a = su[i], b = sv[i];
    // Orient so that the X3 end (Case 2) or the S side (one flag set) comes first.
    if ((!ps.is_x3[p.u()] && ps.is_x3[p.v()]) || (!a && b)) {
      p.reverse();
      std::swap(a, b);
    }
    for (std::size_t pos : detail::matching_positions(ps, p, a, b)) lab[p.edges[pos]] = Part::B;
  }
  return lab;
}

struct Solve21Result {
  bool yes = false;
  EdgeLabeling labeling;
  std::string reason;  // filled for "no"
};

/// Decides (2,1)-BLFD in polynomial time via the factor instance.
inline Solve21Result solve21(const MultiGraph& g) {
  if (g.max_degree() >= 4) return {false, {}, "degree >= 4"};
  PathSystem ps = decompose_paths(g);
  FactorBuildOutput fb = build_factor_instance(g, ps);
  auto s = solve_factor(fb.inst);
  if (!s) return {false, {}, "factor instance has no solution"};
  EdgeLabeling lab = reconstruct(g, ps, fb, *s);
  if (auto r = verify(g, lab, BoundSpec::make(2, 1)); !r) {
    throw std::logic_error("reconstructed labeling fails verification: " + r.violation->describe());
  }
  return {true, std::move(lab), {}};
}

}  // namespace blfd
