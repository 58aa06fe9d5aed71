#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "blfd/graph.hpp"

namespace blfd {

/// A graph together with a rotation system, usually derived from a drawing.
struct Embedded {
  MultiGraph graph;
  RotationSystem rotation;
};

namespace gen {

inline MultiGraph path(std::size_t edges) {
  MultiGraph g(edges + 1);
  for (Vertex i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

inline MultiGraph cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("a cycle needs at least 2 vertices");
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// K_{1,k} with the centre at vertex 0.
inline MultiGraph star(std::size_t k) {
  MultiGraph g(k + 1);
  for (Vertex i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline MultiGraph complete(std::size_t n) {
  MultiGraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

inline MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
  MultiGraph g(a + b);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

inline MultiGraph digon() {
  MultiGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline MultiGraph petersen() {
  MultiGraph g(10);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

/// Rotation listing each vertex's edges counterclockwise by drawing angle.
inline RotationSystem rotation_from_drawing(const MultiGraph& g, const std::vector<std::pair<double, double>>& xy) {
  RotationSystem rot = RotationSystem::identity(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto angle = [&](EdgeId e) {
      Vertex w = g.edge(e).other(v);
      return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
    };
    std::stable_sort(rot.order[v].begin(), rot.order[v].end(),
                     [&](EdgeId a, EdgeId b) { return angle(a) < angle(b); });
  }
  return rot;
}

inline std::pair<double, double> polar(double r, double degrees) {
  double t = degrees * std::numbers::pi / 180.0;
  return {r * std::cos(t), r * std::sin(t)};
}

inline Embedded plane_cycle(std::size_t n) {
  MultiGraph g = cycle(n);
  std::vector<std::pair<double, double>> xy;
  for (std::size_t i = 0; i < n; ++i) xy.push_back(polar(1, 360.0 * i / n));
  return {g, rotation_from_drawing(g, xy)};
}

/// K4 drawn as a triangle 1,2,3 around the centre 0.
inline Embedded plane_k4() {
  MultiGraph g = complete(4);
  std::vector<std::pair<double, double>> xy{{0, 0}, polar(1, 90), polar(1, 210), polar(1, 330)};
  return {g, rotation_from_drawing(g, xy)};
}

/// Prism over C_n: outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i.
inline Embedded plane_prism(std::size_t n) {
  if (n < 3) throw std::invalid_argument("prism needs n >= 3");
  MultiGraph g(2 * n);
  std::vector<std::pair<double, double>> xy;
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(n + i, n + (i + 1) % n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, n + i);
  for (std::size_t i = 0; i < n; ++i) xy.push_back(polar(2, 360.0 * i / n));
  for (std::size_t i = 0; i < n; ++i) xy.push_back(polar(1, 360.0 * i / n));
  return {g, rotation_from_drawing(g, xy)};
}

inline Embedded plane_cube() { return plane_prism(4); }

/// Outer pentagon a_i, middle decagon b_j, inner pentagon c_i.
inline Embedded plane_dodecahedron() {
  MultiGraph g(20);
  auto a = [](std::size_t i) { return i % 5; };
  auto b = [](std::size_t j) { return 5 + j % 10; };
  auto c = [](std::size_t i) { return 15 + i % 5; };
  std::vector<std::pair<double, double>> xy(20);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(a(i), a(i + 1));
    g.add_edge(c(i), c(i + 1));
    xy[a(i)] = polar(3, 72.0 * i);
    xy[c(i)] = polar(1, 72.0 * i + 36);
  }
  for (std::size_t j = 0; j < 10; ++j) {
    g.add_edge(b(j), b(j + 1));
    xy[b(j)] = polar(2, 36.0 * j);
  }
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(a(i), b(2 * i));
    g.add_edge(b(2 * i + 1), c(i));
  }
  return {g, rotation_from_drawing(g, xy)};
}

/// Petersen drawn in the usual way; the rotation cannot be planar.
inline Embedded drawn_petersen() {
  MultiGraph g = petersen();
  std::vector<std::pair<double, double>> xy;
  for (std::size_t i = 0; i < 5; ++i) xy.push_back(polar(2, 90 + 72.0 * i));
  for (std::size_t i = 0; i < 5; ++i) xy.push_back(polar(1, 90 + 72.0 * i));
  return {g, rotation_from_drawing(g, xy)};
}

/// Two poles joined by three internally disjoint paths with a, b, c edges.
inline Embedded plane_theta(std::size_t a, std::size_t b, std::size_t c) {
  if (a < 1 || b < 2 || c < 2) throw std::invalid_argument("theta needs a >= 1 and b, c >= 2");
  MultiGraph g(2);
  std::vector<std::pair<double, double>> xy{{-1, 0}, {1, 0}};
  std::size_t lens[3] = {a, b, c};
  double height[3] = {1, 0, -1};
  if (a == 1) height[0] = 0, height[1] = 1;
  for (int p = 0; p < 3; ++p) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < lens[p]; ++i) {
      Vertex x = g.add_vertex();
      double t = static_cast<double>(i) / lens[p];
      xy.emplace_back(-1 + 2 * t, height[p]);
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return {g, rotation_from_drawing(g, xy)};
}

/// Random loopless multigraph with bounded degree and multiplicity. Gives up
/// adding edges after a fixed number of rejected draws.
template <class Rng>
MultiGraph random_multigraph(Rng& rng, std::size_t n, std::size_t m, std::size_t max_degree,
                             std::size_t max_multiplicity) {
  MultiGraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::size_t misses = 0;
  while (g.edge_count() < m && misses < 100 * (m + 1)) {
    Vertex u = pick(rng), v = pick(rng);
    if (u == v || g.degree(u) >= max_degree || g.degree(v) >= max_degree ||
        g.edges_between(u, v).size() >= max_multiplicity) {
      ++misses;
      continue;
    }
    g.add_edge(u, v);
  }
  return g;
}

/// Random connected plane graph: starts from a cycle and repeatedly adds a
/// chord or a pendant edge inside one face, so the rotation stays planar.
template <class Rng>
Embedded random_plane_graph(Rng& rng, std::size_t n, std::size_t extra_edges) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  std::size_t start = std::max<std::size_t>(3, n / 2);
  MultiGraph g = cycle(start);
  RotationSystem rot = RotationSystem::identity(g);
  auto insert_after = [&](Vertex v, EdgeId after, EdgeId e) {
    auto& ring = rot.order[v];
    auto it = std::find(ring.begin(), ring.end(), after);
    ring.insert(it + 1, e);
  };
  // Grow pendant vertices until n, then add chords.
  std::size_t chords = 0;
  while (g.vertex_count() < n || chords < extra_edges) {
    auto fs = faces(g, rot).faces;
    const FaceWalk& f = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    std::uniform_int_distribution<std::size_t> pos(0, f.length() - 1);
    // Corner i of the walk: arrive at vertices[i] along edges[i-1], leave along edges[i].
    std::size_t i = pos(rng);
    Vertex v = f.vertices[i];
    EdgeId in = f.edges[(i + f.length() - 1) % f.length()];
    if (g.vertex_count() < n) {
      Vertex w = g.add_vertex();
      rot.order.emplace_back();
      EdgeId e = g.add_edge(v, w);
      insert_after(v, in, e);
      rot.order[w].push_back(e);
      continue;
    }
    std::size_t j = pos(rng);
    Vertex w = f.vertices[j];
    if (w == v) continue;
    EdgeId in_w = f.edges[(j + f.length() - 1) % f.length()];
    EdgeId e = g.add_edge(v, w);
    insert_after(v, in, e);
    insert_after(w, in_w, e);
    ++chords;
  }
  return {g, rot};
}


/// Calls visit(g) for every multigraph on n vertices with maximum degree 3,
/// edge multiplicity at most max_multiplicity and non-increasing degrees
/// (vertex 0 has the largest degree). Every isomorphism class shows up at
/// least once. Edges are added pair by pair in lexicographic order.
template <class Visit>
void for_each_sorted_subcubic(std::size_t n, std::size_t max_multiplicity, bool connected_only, Visit&& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::size_t> deg(n, 0), mult(pairs.size(), 0);
  auto emit = [&] {
    for (std::size_t v = 0; v + 1 < n; ++v) {
      if (deg[v] < deg[v + 1]) return;
    }
    MultiGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t c = 0; c < mult[i]; ++c) g.add_edge(pairs[i].first, pairs[i].second);
    }
    if (connected_only && n > 0 && connected_components(g).count != 1) return;
    visit(g);
  };
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      emit();
      return;
    }
    auto [a, b] = pairs[i];
    // Once every pair at vertex a is decided its degree is final, so the
    // sorted-degree condition can be checked early.
    for (std::size_t m = 0; m <= max_multiplicity; ++m) {
      if (deg[a] + m > 3 || deg[b] + m > 3) break;
      deg[a] += m;
      deg[b] += m;
      mult[i] = m;
      bool ok = !(b == n - 1 && a > 0 && deg[a - 1] < deg[a]);
      if (ok) self(self, i + 1);
      deg[a] -= m;
      deg[b] -= m;
      mult[i] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace gen
}  // namespace blfd
