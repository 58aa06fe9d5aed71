#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blfd {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using Length = std::size_t;

/// Stands for an unbounded length, an unreachable distance or an acyclic girth.
inline constexpr Length kInfinite = std::numeric_limits<Length>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
};

/// Loopless multigraph. Edge ids are dense (0..m-1) in insertion order and
/// parallel edges keep separate ids.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n) : adjacency_(n) {}

  Vertex add_vertex() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
  }

  Vertex add_vertices(std::size_t count) {
    Vertex first = adjacency_.size();
    adjacency_.resize(adjacency_.size() + count);
    return first;
  }

  EdgeId add_edge(Vertex u, Vertex v) {
    if (u >= vertex_count() || v >= vertex_count()) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    EdgeId id = edges_.size();
    edges_.push_back({u, v});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    return id;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& a : adjacency_) best = std::max(best, a.size());
    return best;
  }

  /// Edges joining u and v, in id order.
  std::vector<EdgeId> edges_between(Vertex u, Vertex v) const {
    std::vector<EdgeId> out;
    for (EdgeId e : incident(u)) {
      if (edges_[e].other(u) == v) out.push_back(e);
    }
    return out;
  }

  bool adjacent(Vertex u, Vertex v) const { return !edges_between(u, v).empty(); }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
      if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) return false;
    }
    return true;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

inline std::size_t degree(const MultiGraph& g, Vertex v) { return g.degree(v); }

/// Component index per vertex; isolated vertices get their own component.
struct Components {
  std::vector<std::size_t> of;
  std::size_t count = 0;
};

inline Components connected_components(const MultiGraph& g) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  Components c{std::vector<std::size_t>(g.vertex_count(), unset), 0};
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (c.of[s] != unset) continue;
    c.of[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.edge(e).other(x);
        if (c.of[y] == unset) {
          c.of[y] = c.count;
          stack.push_back(y);
        }
      }
    }
    ++c.count;
  }
  return c;
}

namespace detail {

inline std::vector<Length> bfs_distances(const MultiGraph& g, Vertex source,
                                         const std::vector<bool>& removed) {
  std::vector<Length> dist(g.vertex_count(), kInfinite);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (!removed.empty() && removed[e]) continue;
      Vertex y = g.edge(e).other(x);
      if (dist[y] == kInfinite) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// BFS distance in g with the listed edges deleted; kInfinite when disconnected.
inline Length dist_excluding(const MultiGraph& g, Vertex u, Vertex v,
                             std::span<const EdgeId> excluded = {}) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeId e : excluded) removed.at(e) = true;
  return detail::bfs_distances(g, u, removed)[v];
}

/// Length of a shortest cycle (2 for a parallel pair), kInfinite for forests.
/// Each edge is deleted in turn and its endpoints re-measured.
inline Length girth(const MultiGraph& g) {
  Length best = kInfinite;
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    removed[e] = true;
    Length d = detail::bfs_distances(g, g.edge(e).u, removed)[g.edge(e).v];
    removed[e] = false;
    if (d != kInfinite) best = std::min(best, d + 1);
    if (best == 2) break;
  }
  return best;
}

/// The graph induced by keeping only some edges; vertex ids are unchanged.
struct EdgeSubgraph {
  MultiGraph graph;
  std::vector<EdgeId> to_parent;                 // subgraph edge -> parent edge
  std::vector<std::optional<EdgeId>> from_parent;  // parent edge -> subgraph edge
};

inline EdgeSubgraph remove_edges(const MultiGraph& g, std::span<const EdgeId> removed) {
  std::vector<bool> drop(g.edge_count(), false);
  for (EdgeId e : removed) drop.at(e) = true;
  EdgeSubgraph out{MultiGraph(g.vertex_count()), {}, std::vector<std::optional<EdgeId>>(g.edge_count())};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    out.from_parent[e] = out.graph.add_edge(g.edge(e).u, g.edge(e).v);
    out.to_parent.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings

/// Per-vertex cyclic order of incident edges. Since there are no loops an
/// edge-end is identified by (vertex, edge).
struct RotationSystem {
  std::vector<std::vector<EdgeId>> order;

  /// Throws GraphError unless every edge-end of g appears exactly once.
  void validate(const MultiGraph& g) const {
    if (order.size() != g.vertex_count()) {
      throw GraphError("rotation system has " + std::to_string(order.size()) + " vertices, graph has " +
                       std::to_string(g.vertex_count()));
    }
    std::vector<int> seen(2 * g.edge_count(), 0);
    for (Vertex v = 0; v < order.size(); ++v) {
      for (EdgeId e : order[v]) {
        if (e >= g.edge_count() || !g.edge(e).touches(v)) {
          throw GraphError("rotation at vertex " + std::to_string(v) + " lists non-incident edge " +
                           std::to_string(e));
        }
        int side = g.edge(e).u == v ? 0 : 1;
        if (++seen[2 * e + side] > 1) {
          throw GraphError("edge-end (" + std::to_string(v) + ", " + std::to_string(e) + ") listed twice");
        }
      }
      if (order[v].size() != g.degree(v)) {
        throw GraphError("rotation at vertex " + std::to_string(v) + " misses incident edges");
      }
    }
  }

  /// Rotation that lists incident edges in id order.
  static RotationSystem identity(const MultiGraph& g) {
    RotationSystem r;
    r.order.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      r.order[v].assign(g.incident(v).begin(), g.incident(v).end());
    }
    return r;
  }
};

/// A boundary walk: vertices[i] is left along edges[i].
struct FaceWalk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
};

struct FaceSet {
  std::vector<FaceWalk> faces;
  std::size_t components = 0;
  /// V - E + F after merging the outer faces of all components into one
  /// (an isolated vertex contributes one face). Equals 1 + components iff
  /// every component is embedded in the sphere.
  long euler_value = 0;
  bool spherical = true;
};

/// Traverses faces: after arriving at y along e, leave along the successor
/// of e in the rotation at y.
inline FaceSet faces(const MultiGraph& g, const RotationSystem& rot) {
  rot.validate(g);
  std::vector<std::size_t> position(2 * g.edge_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
      EdgeId e = rot.order[v][i];
      position[2 * e + (g.edge(e).u == v ? 0 : 1)] = i;
    }
  }
  // dart 2e leaves u, dart 2e+1 leaves v
  auto tail = [&](std::size_t dart) { return dart % 2 == 0 ? g.edge(dart / 2).u : g.edge(dart / 2).v; };
  auto head = [&](std::size_t dart) { return dart % 2 == 0 ? g.edge(dart / 2).v : g.edge(dart / 2).u; };

  FaceSet out;
  std::vector<bool> used(2 * g.edge_count(), false);
  for (std::size_t start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    FaceWalk walk;
    std::size_t dart = start;
    do {
      used[dart] = true;
      walk.vertices.push_back(tail(dart));
      walk.edges.push_back(dart / 2);
      Vertex y = head(dart);
      EdgeId e = dart / 2;
      const auto& ring = rot.order[y];
      EdgeId next = ring[(position[2 * e + (g.edge(e).u == y ? 0 : 1)] + 1) % ring.size()];
      dart = 2 * next + (g.edge(next).u == y ? 0 : 1);
    } while (dart != start);
    out.faces.push_back(std::move(walk));
  }

  Components comps = connected_components(g);
  out.components = comps.count;
  std::vector<long> v_count(comps.count, 0), e_count(comps.count, 0), f_count(comps.count, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++v_count[comps.of[v]];
  for (const Edge& e : g.edges()) ++e_count[comps.of[e.u]];
  for (const FaceWalk& f : out.faces) ++f_count[comps.of[f.vertices.front()]];
  long total_faces = 0;
  for (std::size_t c = 0; c < comps.count; ++c) {
    if (e_count[c] == 0) f_count[c] = 1;
    if (v_count[c] - e_count[c] + f_count[c] != 2) out.spherical = false;
    total_faces += f_count[c];
  }
  long merged_faces = comps.count == 0 ? 0 : total_faces - static_cast<long>(comps.count) + 1;
  out.euler_value = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + merged_faces;
  return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   n m
//   u v        (m lines, 0-indexed)
//   rotation   (optional)
//   v: e e e   (one line per vertex, cyclic order)
//
// '#' starts a comment; blank lines are ignored.

struct GraphDocument {
  MultiGraph graph;
  std::optional<RotationSystem> rotation;
};

namespace detail {

struct LineReader {
  std::istringstream in;
  std::size_t line_no = 0;

  explicit LineReader(std::string_view text) : in(std::string(text)) {}

  // Next non-empty line with comments stripped.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      return line;
    }
    return std::nullopt;
  }
};

inline std::size_t parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "integer out of range: " + token);
  }
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

/// Reads "n m" + m edge lines, leaves the reader right after them.
inline MultiGraph read_edge_block(LineReader& reader) {
  auto header = reader.next();
  if (!header) throw ParseError(reader.line_no, "missing 'n m' header");
  auto head = tokens(*header);
  if (head.size() != 2) throw ParseError(reader.line_no, "header must be 'n m'");
  std::size_t n = parse_index(head[0], reader.line_no);
  std::size_t m = parse_index(head[1], reader.line_no);
  MultiGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto t = tokens(*line);
    if (t.size() != 2) throw ParseError(reader.line_no, "edge line must be 'u v'");
    Vertex u = parse_index(t[0], reader.line_no);
    Vertex v = parse_index(t[1], reader.line_no);
    if (u >= n || v >= n) throw ParseError(reader.line_no, "vertex out of range");
    if (u == v) throw ParseError(reader.line_no, "loop edge " + t[0] + " " + t[1]);
    g.add_edge(u, v);
  }
  return g;
}

inline RotationSystem read_rotation_block(LineReader& reader, const MultiGraph& g) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_no, "rotation block is missing vertices");
    auto colon = line->find(':');
    if (colon == std::string::npos) throw ParseError(reader.line_no, "rotation line must be 'v: e e ...'");
    auto vt = tokens(line->substr(0, colon));
    if (vt.size() != 1) throw ParseError(reader.line_no, "rotation line must start with one vertex id");
    Vertex v = parse_index(vt[0], reader.line_no);
    if (v >= g.vertex_count() || seen[v]) throw ParseError(reader.line_no, "bad or repeated rotation vertex");
    seen[v] = true;
    for (const auto& t : tokens(line->substr(colon + 1))) rot.order[v].push_back(parse_index(t, reader.line_no));
  }
  try {
    rot.validate(g);
  } catch (const GraphError& e) {
    throw ParseError(reader.line_no, e.what());
  }
  return rot;
}

}  // namespace detail

inline GraphDocument parse_graph_document(std::string_view text) {
  detail::LineReader reader(text);
  GraphDocument doc{detail::read_edge_block(reader), std::nullopt};
  if (auto line = reader.next()) {
    if (detail::tokens(*line) != std::vector<std::string>{"rotation"}) {
      throw ParseError(reader.line_no, "unexpected content after edge list");
    }
    doc.rotation = detail::read_rotation_block(reader, doc.graph);
    if (reader.next()) throw ParseError(reader.line_no, "unexpected content after rotation block");
  }
  return doc;
}

inline MultiGraph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

inline std::string serialize_graph(const MultiGraph& g, const RotationSystem* rot = nullptr) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (rot != nullptr) {
    out << "rotation\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      out << v << ':';
      for (EdgeId e : rot->order[v]) out << ' ' << e;
      out << '\n';
    }
  }
  return out.str();
}

inline std::string serialize_graph(const GraphDocument& doc) {
  return serialize_graph(doc.graph, doc.rotation ? &*doc.rotation : nullptr);
}

}  // namespace blfd
