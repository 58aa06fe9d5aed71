#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "blfd/graph.hpp"

namespace blfd {

/// Part A is bounded by k, part B by l (k >= l after normalization).
enum class Part : std::uint8_t { A, B };

inline Part other(Part p) { return p == Part::A ? Part::B : Part::A; }
inline char part_char(Part p) { return p == Part::A ? 'A' : 'B'; }

inline std::string bound_to_string(Length x) { return x == kInfinite ? "inf" : std::to_string(x); }

struct BoundSpec {
  Length k = kInfinite;
  Length l = 1;
  bool swapped = false;  // true if the caller gave (l, k)

  /// Orders the pair so that k >= l. Both bounds must be at least 1.
  static BoundSpec make(Length first, Length second) {
    if (first == 0 || second == 0) throw std::invalid_argument("bounds must be positive");
    if (first >= second) return {first, second, false};
    return {second, first, true};
  }

  Length bound(Part p) const { return p == Part::A ? k : l; }

  /// Part as the caller named it: with swapped bounds the caller's first
  /// forest is our part B.
  Part caller_part(Part p) const { return swapped ? other(p) : p; }

  std::string to_string() const { return bound_to_string(k) + "," + bound_to_string(l); }
};

/// Accepts "k,l" with "inf" for an unbounded part.
inline BoundSpec parse_bounds(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("bounds must look like k,l");
  auto one = [](std::string_view s) -> Length {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s == "inf" || s == "infinity") return kInfinite;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("bad bound '" + std::string(s) + "'");
    }
    return std::stoull(std::string(s));
  };
  return BoundSpec::make(one(text.substr(0, comma)), one(text.substr(comma + 1)));
}

using EdgeLabeling = std::vector<Part>;
/// Labeling read from a file, where some edges may be missing.
using PartialLabeling = std::vector<std::optional<Part>>;

inline EdgeLabeling swap_parts(EdgeLabeling lab) {
  for (Part& p : lab) p = other(p);
  return lab;
}

inline std::vector<EdgeId> edges_in(const EdgeLabeling& lab, Part p) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < lab.size(); ++e) {
    if (lab[e] == p) out.push_back(e);
  }
  return out;
}

enum class ViolationKind { degree_exceeded, cycle, component_too_long, unlabeled_edge };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::degree_exceeded: return "degree>2";
    case ViolationKind::cycle: return "cycle";
    case ViolationKind::component_too_long: return "component-too-long";
    case ViolationKind::unlabeled_edge: return "unlabeled-edge";
  }
  return "?";
}

/// Witnesses: degree_exceeded holds one vertex and three of its edges; cycle
/// holds the cycle's vertices and edges in order; component_too_long holds
/// bound + 1 consecutive edges; unlabeled_edge holds the edge.
struct Violation {
  ViolationKind kind;
  std::optional<Part> part;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::string describe() const {
    std::ostringstream out;
    out << to_string(kind);
    if (part) out << " in part " << part_char(*part);
    if (!vertices.empty()) {
      out << " vertices";
      for (Vertex v : vertices) out << ' ' << v;
    }
    if (!edges.empty()) {
      out << " edges";
      for (EdgeId e : edges) out << ' ' << e;
    }
    return out.str();
  }
};

struct CheckResult {
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return !violation.has_value(); }
};

/// One maximal path of a linear forest; vertices.size() == edges.size() + 1.
struct PathComponent {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  Length length() const noexcept { return edges.size(); }
};

namespace detail {

struct Traced {
  std::vector<PathComponent> paths;
  std::vector<PathComponent> cycles;  // closed walks; vertices.front() repeated at the back
  std::optional<Violation> degree_violation;
};

/// Splits an edge set of max degree <= 2 into paths and cycles.
inline Traced trace(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  Traced out;
  std::vector<bool> in_set(g.edge_count(), false);
  for (EdgeId e : edge_set) {
    if (e >= g.edge_count()) throw std::out_of_range("edge id out of range");
    in_set[e] = true;
  }
  std::vector<std::vector<EdgeId>> inc(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_set[e]) continue;
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      inc[x].push_back(e);
      if (inc[x].size() == 3 && !out.degree_violation) {
        out.degree_violation = Violation{ViolationKind::degree_exceeded, std::nullopt, {x}, inc[x]};
      }
    }
  }
  if (out.degree_violation) return out;

  std::vector<bool> used(g.edge_count(), false);
  auto walk = [&](Vertex start, EdgeId first) {
    PathComponent c;
    c.vertices.push_back(start);
    Vertex x = start;
    EdgeId e = first;
    while (true) {
      used[e] = true;
      c.edges.push_back(e);
      x = g.edge(e).other(x);
      c.vertices.push_back(x);
      auto next = std::find_if(inc[x].begin(), inc[x].end(), [&](EdgeId f) { return !used[f]; });
      if (next == inc[x].end()) break;
      e = *next;
    }
    return c;
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inc[v].size() == 1 && !used[inc[v][0]]) out.paths.push_back(walk(v, inc[v][0]));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : inc[v]) {
      if (!used[e]) out.cycles.push_back(walk(v, e));
    }
  }
  return out;
}

}  // namespace detail

/// Checks that the edge set is a linear forest whose components have at most
/// `bound` edges. Repeated ids in `edges` are treated as one.
inline CheckResult is_bounded_linear_forest(const MultiGraph& g, std::span<const EdgeId> edges, Length bound) {
  auto t = detail::trace(g, edges);
  if (t.degree_violation) return {t.degree_violation};
  if (!t.cycles.empty()) {
    auto& c = t.cycles.front();
    c.vertices.pop_back();
    return {Violation{ViolationKind::cycle, std::nullopt, c.vertices, c.edges}};
  }
  if (bound != kInfinite) {
    for (const auto& p : t.paths) {
      if (p.length() > bound) {
        std::vector<Vertex> vs(p.vertices.begin(), p.vertices.begin() + static_cast<long>(bound) + 2);
        std::vector<EdgeId> es(p.edges.begin(), p.edges.begin() + static_cast<long>(bound) + 1);
        return {Violation{ViolationKind::component_too_long, std::nullopt, vs, es}};
      }
    }
  }
  return {};
}

/// The maximal paths of a linear forest, ordered by their first vertex.
inline std::vector<PathComponent> components(const MultiGraph& g, std::span<const EdgeId> edges) {
  auto t = detail::trace(g, edges);
  if (t.degree_violation || !t.cycles.empty()) throw GraphError("edge set is not a linear forest");
  return t.paths;
}

inline CheckResult verify(const MultiGraph& g, const EdgeLabeling& lab, const BoundSpec& b) {
  if (lab.size() < g.edge_count()) {
    return {Violation{ViolationKind::unlabeled_edge, std::nullopt, {}, {lab.size()}}};
  }
  if (lab.size() > g.edge_count()) throw std::invalid_argument("labeling has more entries than the graph has edges");
  for (Part p : {Part::A, Part::B}) {
    auto part_edges = edges_in(lab, p);
    if (auto r = is_bounded_linear_forest(g, part_edges, b.bound(p)); !r) {
      r.violation->part = p;
      return r;
    }
  }
  return {};
}

inline CheckResult verify(const MultiGraph& g, const PartialLabeling& lab, const BoundSpec& b) {
  EdgeLabeling full;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e >= lab.size() || !lab[e]) return {Violation{ViolationKind::unlabeled_edge, std::nullopt, {}, {e}}};
    full.push_back(*lab[e]);
  }
  if (lab.size() > g.edge_count()) throw std::invalid_argument("labeling has more entries than the graph has edges");
  return verify(g, full, b);
}

/// Per-part path structure of a valid labeling, indexed by vertex.
class ForestView {
 public:
  ForestView(const MultiGraph& g, const EdgeLabeling& lab, Part p)
      : paths_(components(g, edges_in(lab, p))), path_of_(g.vertex_count(), npos), degree_(g.vertex_count(), 0) {
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      for (Vertex v : paths_[i].vertices) path_of_[v] = i;
      for (EdgeId e : paths_[i].edges) {
        ++degree_[g.edge(e).u];
        ++degree_[g.edge(e).v];
      }
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t degree(Vertex v) const { return degree_.at(v); }
  /// Index into paths() or npos for a vertex untouched by this part.
  std::size_t path_of(Vertex v) const { return path_of_.at(v); }
  Length length_at(Vertex v) const { return path_of(v) == npos ? 0 : paths_[path_of(v)].length(); }
  bool is_end(Vertex v) const { return degree(v) == 1; }
  const std::vector<PathComponent>& paths() const noexcept { return paths_; }

 private:
  std::vector<PathComponent> paths_;
  std::vector<std::size_t> path_of_;
  std::vector<std::size_t> degree_;
};

// Labeling text: one "edge_id A|B" line per edge, '#' comments allowed.

inline PartialLabeling parse_labeling(std::string_view text, std::size_t edge_count) {
  detail::LineReader reader(text);
  PartialLabeling lab(edge_count);
  while (auto line = reader.next()) {
    auto t = detail::tokens(*line);
    if (t.size() != 2) throw ParseError(reader.line_no, "labeling line must be 'edge_id A|B'");
    EdgeId e = detail::parse_index(t[0], reader.line_no);
    if (e >= edge_count) throw ParseError(reader.line_no, "edge id " + t[0] + " out of range");
    if (lab[e]) throw ParseError(reader.line_no, "edge " + t[0] + " labeled twice");
    if (t[1] == "A") {
      lab[e] = Part::A;
    } else if (t[1] == "B") {
      lab[e] = Part::B;
    } else {
      throw ParseError(reader.line_no, "part must be A or B");
    }
  }
  return lab;
}

inline std::string serialize_labeling(const EdgeLabeling& lab) {
  std::string out;
  for (EdgeId e = 0; e < lab.size(); ++e) {
    out += std::to_string(e);
    out += ' ';
    out += part_char(lab[e]);
    out += '\n';
  }
  return out;
}

}  // namespace blfd
