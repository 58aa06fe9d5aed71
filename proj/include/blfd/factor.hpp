#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blfd/graph.hpp"
#include "blfd/matching.hpp"

namespace blfd {

/// Raised for degree sets the matching reduction does not cover.
class UnsupportedDegreeSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite set of allowed degrees, kept sorted and duplicate-free.
class DegreeSet {
 public:
  DegreeSet() = default;
  DegreeSet(std::initializer_list<std::size_t> values) : values_(values) { normalize(); }
  explicit DegreeSet(std::vector<std::size_t> values) : values_(std::move(values)) { normalize(); }

  static DegreeSet interval(std::size_t a, std::size_t b) {
    DegreeSet s;
    for (std::size_t i = a; i <= b; ++i) s.values_.push_back(i);
    return s;
  }

  bool contains(std::size_t d) const { return std::binary_search(values_.begin(), values_.end(), d); }
  bool empty() const noexcept { return values_.empty(); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  DegreeSet capped(std::size_t cap) const {
    DegreeSet s;
    for (std::size_t v : values_) {
      if (v <= cap) s.values_.push_back(v);
    }
    return s;
  }

  bool is_interval() const { return !values_.empty() && values_.back() - values_.front() + 1 == values_.size(); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(values_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  void normalize() {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  std::vector<std::size_t> values_;
};

/// Small gap test on {0..cap}: whenever i and i+1 are both missing, the set
/// has nothing at or below i+1 or nothing at or above i.
inline bool is_small_gap(const DegreeSet& s, std::size_t cap) {
  for (std::size_t i = 0; i < cap; ++i) {
    if (s.contains(i) || s.contains(i + 1)) continue;
    bool none_below = true, none_above = true;
    for (std::size_t x : s.values()) {
      if (x > cap) continue;
      if (x <= i + 1) none_below = false;
      if (x >= i) none_above = false;
    }
    if (!none_below && !none_above) return false;
  }
  return true;
}

struct FactorInstance {
  MultiGraph h;
  std::vector<DegreeSet> sets;  // one per vertex of h

  void validate() const {
    if (sets.size() != h.vertex_count()) throw std::invalid_argument("every vertex needs a degree set");
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (!is_small_gap(sets[v], h.degree(v))) {
        throw std::invalid_argument("degree set " + sets[v].to_string() + " at vertex " + std::to_string(v) +
                                    " is not a small gap set");
      }
    }
  }

  bool satisfied_by(const std::vector<EdgeId>& selected) const {
    std::vector<std::size_t> deg(h.vertex_count(), 0);
    for (EdgeId e : selected) ++deg[h.edge(e).u], ++deg[h.edge(e).v];
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (!sets[v].contains(deg[v])) return false;
    }
    return true;
  }
};

namespace detail {

// Gadget graph whose matchings covering all `required` vertices correspond
// to factors. Each H-edge e = uv gets outer vertices o(u,e) and o(v,e),
// joined by an edge; e is selected iff they are matched to each other.
// Unselected outers are absorbed by core vertices of their end.
struct FactorGadget {
  MultiGraph g;
  std::vector<bool> required;
  std::vector<std::pair<Vertex, Vertex>> outer;  // per H-edge: (o(u,e), o(v,e))
};

inline FactorGadget build_gadget(const FactorInstance& inst) {
  const MultiGraph& h = inst.h;
  FactorGadget out;
  out.outer.resize(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Vertex a = out.g.add_vertex(), b = out.g.add_vertex();
    out.g.add_edge(a, b);
    out.outer[e] = {a, b};
  }
  out.required.assign(out.g.vertex_count(), true);
  auto add = [&](bool req) {
    out.required.push_back(req);
    return out.g.add_vertex();
  };
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const std::size_t d = h.degree(v);
    DegreeSet s = inst.sets[v].capped(d);
    std::vector<Vertex> outers;
    for (EdgeId e : h.incident(v)) outers.push_back(h.edge(e).u == v ? out.outer[e].first : out.outer[e].second);
    std::vector<Vertex> core;
    if (s.is_interval()) {
      std::size_t lo = s.values().front(), hi = s.values().back();
      for (std::size_t i = 0; i < d - hi; ++i) core.push_back(add(true));
      for (std::size_t i = 0; i < hi - lo; ++i) core.push_back(add(false));
    } else if (s.values().size() == 2 && s.values()[1] == s.values()[0] + 2) {
      std::size_t c = s.values()[0];
      for (std::size_t i = 0; i + c + 2 < d; ++i) core.push_back(add(true));
      Vertex p = add(true), q = add(true);
      out.g.add_edge(p, q);
      core.push_back(p);
      core.push_back(q);
    } else {
      throw UnsupportedDegreeSet("degree set " + s.to_string() + " at vertex " + std::to_string(v) +
                                 " is neither an interval nor {c,c+2}");
    }
    for (Vertex c : core) {
      for (Vertex o : outers) out.g.add_edge(c, o);
    }
  }
  return out;
}

}  // namespace detail

/// Solves the general factor problem for interval and {c,c+2} degree sets.
/// Returns the selected H-edges, or nullopt when no factor exists.
inline std::optional<std::vector<EdgeId>> solve_factor(const FactorInstance& inst) {
  inst.validate();
  for (Vertex v = 0; v < inst.h.vertex_count(); ++v) {
    if (inst.sets[v].capped(inst.h.degree(v)).empty()) return std::nullopt;
  }
  auto gadget = detail::build_gadget(inst);
  // Two copies with each optional vertex tied to its twin: a perfect
  // matching exists iff some matching covers every required vertex.
  const std::size_t n = gadget.g.vertex_count();
  MultiGraph doubled(2 * n);
  for (const Edge& e : gadget.g.edges()) {
    doubled.add_edge(e.u, e.v);
    doubled.add_edge(n + e.u, n + e.v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!gadget.required[v]) doubled.add_edge(v, n + v);
  }
  Matching m = max_matching(doubled);
  if (m.size() * 2 != doubled.vertex_count()) return std::nullopt;

  std::vector<EdgeId> selected;
  for (EdgeId e = 0; e < inst.h.edge_count(); ++e) {
    auto [a, b] = gadget.outer[e];
    const auto& me = m.mate[a];
    if (me && doubled.edge(*me).touches(b)) selected.push_back(e);
  }
  if (!inst.satisfied_by(selected)) throw std::logic_error("factor reduction produced an invalid witness");
  return selected;
}

/// Exhaustive reference: first satisfying subset in bitmask order.
inline std::optional<std::vector<EdgeId>> brute_factor(const FactorInstance& inst) {
  const std::size_t m = inst.h.edge_count();
  if (m > 24) throw std::length_error("brute_factor is limited to 24 edges");
  std::vector<EdgeId> sel;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    sel.clear();
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1) sel.push_back(e);
    }
    if (inst.satisfied_by(sel)) return sel;
  }
  return std::nullopt;
}

// Instance text: the graph block, then one "v: {a,b,...}" line per vertex.

inline FactorInstance parse_factor_instance(std::string_view text) {
  detail::LineReader reader(text);
  FactorInstance inst{detail::read_edge_block(reader), {}};
  std::vector<std::optional<DegreeSet>> sets(inst.h.vertex_count());
  while (auto line = reader.next()) {
    auto colon = line->find(':');
    if (colon == std::string::npos) throw ParseError(reader.line_no, "degree set line must be 'v: {a,b,...}'");
    auto vt = detail::tokens(line->substr(0, colon));
    if (vt.size() != 1) throw ParseError(reader.line_no, "expected one vertex id before ':'");
    Vertex v = detail::parse_index(vt[0], reader.line_no);
    if (v >= inst.h.vertex_count()) throw ParseError(reader.line_no, "vertex out of range");
    if (sets[v]) throw ParseError(reader.line_no, "vertex " + vt[0] + " has two degree sets");
    std::string body = line->substr(colon + 1);
    auto open = body.find('{'), close = body.find('}');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError(reader.line_no, "degree set must be written in braces");
    }
    std::string inner = body.substr(open + 1, close - open - 1);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::vector<std::size_t> values;
    for (const auto& t : detail::tokens(inner)) values.push_back(detail::parse_index(t, reader.line_no));
    sets[v] = DegreeSet(std::move(values));
  }
  for (Vertex v = 0; v < sets.size(); ++v) {
    if (!sets[v]) throw ParseError(reader.line_no, "vertex " + std::to_string(v) + " has no degree set");
    inst.sets.push_back(*sets[v]);
  }
  return inst;
}

inline std::string serialize_factor_instance(const FactorInstance& inst) {
  std::string out = serialize_graph(inst.h);
  for (Vertex v = 0; v < inst.sets.size(); ++v) out += std::to_string(v) + ": " + inst.sets[v].to_string() + "\n";
  return out;
}

}  // namespace blfd
