#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "blfd/graph.hpp"

namespace blfd {

struct Matching {
  std::vector<EdgeId> edges;
  /// mate[v] is the matched edge at v, if any.
  std::vector<std::optional<EdgeId>> mate;

  std::size_t size() const noexcept { return edges.size(); }
};

namespace detail {

/// Edmonds' algorithm, O(V^3): one BFS per free vertex, blossoms contracted
/// by relabelling their vertices with a common base.
class Blossom {
 public:
  explicit Blossom(const MultiGraph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, npos), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<Vertex> run() {
    greedy();
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != npos) continue;
      Vertex end = find_path(v);
      // Flip the alternating path ending at `end`.
      while (end != npos) {
        Vertex pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

  static constexpr Vertex npos = static_cast<Vertex>(-1);

 private:
  void greedy() {
    for (const Edge& e : g_.edges()) {
      if (match_[e.u] == npos && match_[e.v] == npos) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
  }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == npos) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), npos);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> q{root};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (EdgeId e : g_.incident(v)) {
        Vertex to = g_.edge(e).other(v);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != npos && parent_[match_[to]] != npos)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push_back(i);
              }
            }
          }
        } else if (parent_[to] == npos) {
          parent_[to] = v;
          if (match_[to] == npos) return to;
          used_[match_[to]] = true;
          q.push_back(match_[to]);
        }
      }
    }
    return npos;
  }

  const MultiGraph& g_;
  std::size_t n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

inline Matching from_mates(const MultiGraph& g, const std::vector<Vertex>& mate_vertex) {
  Matching m;
  m.mate.assign(g.vertex_count(), std::nullopt);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (mate_vertex[ed.u] == ed.v && !m.mate[ed.u] && !m.mate[ed.v]) {
      m.mate[ed.u] = m.mate[ed.v] = e;
      m.edges.push_back(e);
    }
  }
  return m;
}

}  // namespace detail

/// Maximum-cardinality matching in a general multigraph.
inline Matching max_matching(const MultiGraph& g) {
  return detail::from_mates(g, detail::Blossom(g).run());
}

inline bool is_matching(const MultiGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<bool> used(g.vertex_count(), false);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = true;
  }
  return true;
}

/// Size of a maximum matching by exhaustive branching on edges.
inline std::size_t brute_max_matching(const MultiGraph& g) {
  if (g.edge_count() > 30) throw std::length_error("brute_max_matching is limited to 30 edges");
  std::vector<bool> used(g.vertex_count(), false);
  std::size_t best = 0;
  std::function<void(EdgeId, std::size_t)> go = [&](EdgeId e, std::size_t size) {
    best = std::max(best, size);
    if (e == g.edge_count() || size + (g.edge_count() - e) <= best) return;
    const Edge& ed = g.edge(e);
    if (!used[ed.u] && !used[ed.v]) {
      used[ed.u] = used[ed.v] = true;
      go(e + 1, size + 1);
      used[ed.u] = used[ed.v] = false;
    }
    go(e + 1, size);
  };
  go(0, 0);
  return best;
}

}  // namespace blfd
