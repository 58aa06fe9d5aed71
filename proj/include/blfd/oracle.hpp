#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "blfd/decomp.hpp"
#include "blfd/graph.hpp"

namespace blfd {

enum class Outcome { yes, no, timeout };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    case Outcome::timeout: return "timeout";
  }
  return "?";
}

struct OracleOptions {
  /// Maximum number of branching decisions; exceeding it yields a timeout.
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
  /// Decisions taken sequentially before subtrees go to workers. 0 picks a default.
  unsigned split_depth = 0;
  /// Turns off forcing and the capacity lookahead. Only for soundness tests.
  bool propagate = true;
};

/// Labelings use normalized parts: A holds the k-bounded forest.
struct OracleResult {
  Outcome outcome = Outcome::no;
  EdgeLabeling labeling;
  std::uint64_t nodes = 0;
};

struct EnumerateOptions {
  std::size_t limit = 1'000'000;
  std::uint64_t budget = 100'000'000;
  /// When set, the two edges of a parallel pair are not told apart: the
  /// first is fixed to A and the second to B. Otherwise every labeling counts.
  bool up_to_parallel_exchange = true;
};

struct EnumerateResult {
  std::vector<EdgeLabeling> labelings;
  bool complete = true;   // false if the limit or the budget cut the search short
  bool timed_out = false;
  std::uint64_t nodes = 0;
};

namespace detail {

constexpr std::int8_t kUnassigned = -1;

/// Partial labeling plus, per part, a rollback union-find over vertices whose
/// components are the paths built so far.
class SearchState {
 public:
  SearchState(const MultiGraph& g, BoundSpec b, bool propagate)
      : g_(&g), b_(b), propagate_(propagate), label_(g.edge_count(), kUnassigned), free_edges_(g.vertex_count()) {
    for (int p = 0; p < 2; ++p) {
      Length bound = p == 0 ? b.k : b.l;
      cap_[p] = bound >= 2 ? 2 : 1;
      bound_[p] = bound;
      auto& s = side_[p];
      s.parent.resize(g.vertex_count());
      std::iota(s.parent.begin(), s.parent.end(), Vertex{0});
      s.len.assign(g.vertex_count(), 0);
      s.size.assign(g.vertex_count(), 1);
      s.end1 = s.parent;
      s.end2 = s.parent;
      s.deg.assign(g.vertex_count(), 0);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) free_edges_[v] = g.degree(v);
  }

  const MultiGraph& graph() const { return *g_; }
  std::int8_t label(EdgeId e) const { return label_[e]; }
  std::size_t mark() const { return trail_.size(); }

  bool fits(EdgeId e, int p) const {
    if (label_[e] != kUnassigned) return false;
    const Edge& ed = g_->edge(e);
    const auto& s = side_[p];
    if (s.deg[ed.u] >= cap_[p] || s.deg[ed.v] >= cap_[p]) return false;
    Vertex ru = find(p, ed.u), rv = find(p, ed.v);
    if (ru == rv) return false;
    return bound_[p] == kInfinite || s.len[ru] + s.len[rv] + 1 <= bound_[p];
  }

  /// Assigns e to part p and runs propagation. On false the state is
  /// inconsistent and the caller must undo to an earlier mark.
  bool assign(EdgeId e, int p) {
    queue_.clear();
    queue_.emplace_back(e, p);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      auto [f, q] = queue_[qi];
      if (label_[f] != kUnassigned) {
        if (label_[f] != q) return false;
        continue;
      }
      if (!fits(f, q)) return false;
      Vertex touched[4];
      apply(f, q, touched);
      if (!propagate_) continue;
      for (Vertex x : touched) {
        if (!check_vertex(x)) return false;
      }
    }
    return true;
  }

  /// Runs the vertex checks everywhere; used once before the search starts.
  bool propagate_all() {
    if (!propagate_) return true;
    queue_.clear();
    for (Vertex v = 0; v < g_->vertex_count(); ++v) {
      if (!check_vertex(v)) return false;
    }
    auto pending = queue_;
    for (auto [f, q] : pending) {
      if (!assign(f, q)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Trail& t = trail_.back();
      auto& s = side_[t.part];
      const Edge& ed = g_->edge(t.edge);
      label_[t.edge] = kUnassigned;
      ++free_edges_[ed.u];
      ++free_edges_[ed.v];
      --s.deg[ed.u];
      --s.deg[ed.v];
      s.parent[t.child] = t.child;
      s.len[t.root] = t.old_len;
      s.size[t.root] = t.old_size;
      s.end1[t.root] = t.old_end1;
      s.end2[t.root] = t.old_end2;
      trail_.pop_back();
    }
  }

  EdgeLabeling labeling() const {
    EdgeLabeling lab(label_.size());
    for (EdgeId e = 0; e < label_.size(); ++e) lab[e] = label_[e] == 0 ? Part::A : Part::B;
    return lab;
  }

 private:
  struct Side {
    std::vector<Vertex> parent;
    std::vector<Length> len;
    std::vector<std::size_t> size;
    std::vector<Vertex> end1, end2;  // path ends, valid at roots
    std::vector<std::size_t> deg;
  };

  // One entry per assigned edge; enough to restore labels, degrees and the union.
  struct Trail {
    EdgeId edge;
    int part;
    Vertex child, root;
    Length old_len;
    std::size_t old_size;
    Vertex old_end1, old_end2;
  };

  Vertex find(int p, Vertex v) const {
    const auto& parent = side_[p].parent;
    while (parent[v] != v) v = parent[v];
    return v;
  }

  Vertex other_end(int p, Vertex root, Vertex x) const {
    const auto& s = side_[p];
    return s.end1[root] == x ? s.end2[root] : s.end1[root];
  }

  void apply(EdgeId e, int p, Vertex (&touched)[4]) {
    auto& s = side_[p];
    const Edge& ed = g_->edge(e);
    Vertex ru = find(p, ed.u), rv = find(p, ed.v);
    Vertex a = other_end(p, ru, ed.u), b = other_end(p, rv, ed.v);
    Vertex root = s.size[ru] >= s.size[rv] ? ru : rv;
    Vertex child = root == ru ? rv : ru;
    trail_.push_back({e, p, child, root, s.len[root], s.size[root], s.end1[root], s.end2[root]});
    label_[e] = static_cast<std::int8_t>(p);
    --free_edges_[ed.u];
    --free_edges_[ed.v];
    ++s.deg[ed.u];
    ++s.deg[ed.v];
    s.parent[child] = root;
    s.len[root] = s.len[ru] + s.len[rv] + 1;
    s.size[root] += s.size[child];
    s.end1[root] = a;
    s.end2[root] = b;
    touched[0] = ed.u;
    touched[1] = ed.v;
    touched[2] = a;
    touched[3] = b;
  }

  // Capacity lookahead and forcing of unassigned edges at x.
  bool check_vertex(Vertex x) {
    std::size_t slots = 0;
    for (int p = 0; p < 2; ++p) slots += cap_[p] - std::min(cap_[p], side_[p].deg[x]);
    if (free_edges_[x] > slots) return false;
    if (free_edges_[x] == 0) return true;
    for (EdgeId f : g_->incident(x)) {
      if (label_[f] != kUnassigned) continue;
      bool a = fits(f, 0), b = fits(f, 1);
      if (!a && !b) return false;
      if (a != b) queue_.emplace_back(f, a ? 0 : 1);
    }
    return true;
  }

  const MultiGraph* g_;
  BoundSpec b_;
  bool propagate_;
  std::size_t cap_[2]{};
  Length bound_[2]{};
  Side side_[2];
  std::vector<std::int8_t> label_;
  std::vector<std::size_t> free_edges_;
  std::vector<Trail> trail_;
  std::vector<std::pair<EdgeId, int>> queue_;
};

/// Static branching order: BFS from the highest-degree vertex, visiting
/// heavier neighbours first, restarted per component.
inline std::vector<EdgeId> branching_order(const MultiGraph& g) {
  std::vector<Vertex> by_degree(g.vertex_count());
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<bool> seen_v(g.vertex_count(), false), seen_e(g.edge_count(), false);
  std::vector<EdgeId> order;
  for (Vertex s : by_degree) {
    if (seen_v[s]) continue;
    std::deque<Vertex> queue{s};
    seen_v[s] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      std::vector<EdgeId> inc(g.incident(x).begin(), g.incident(x).end());
      std::stable_sort(inc.begin(), inc.end(), [&](EdgeId a, EdgeId b) {
        return g.degree(g.edge(a).other(x)) > g.degree(g.edge(b).other(x));
      });
      for (EdgeId e : inc) {
        if (seen_e[e]) continue;
        seen_e[e] = true;
        order.push_back(e);
        Vertex y = g.edge(e).other(x);
        if (!seen_v[y]) {
          seen_v[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return order;
}

/// Parallel classes as lists of edge ids, only those of size >= 2.
inline std::vector<std::vector<EdgeId>> parallel_classes(const MultiGraph& g) {
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> by_pair;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = std::minmax(g.edge(e).u, g.edge(e).v);
    by_pair[{u, v}].push_back(e);
  }
  std::vector<std::vector<EdgeId>> out;
  for (auto& [key, ids] : by_pair) {
    if (ids.size() >= 2) out.push_back(std::move(ids));
  }
  return out;
}

/// Applies symmetry breaking and initial propagation. False means no
/// labeling exists at all.
inline bool prepare(SearchState& st, bool fix_parallel) {
  if (fix_parallel) {
    for (const auto& cls : parallel_classes(st.graph())) {
      if (cls.size() > 2) return false;
      if (!st.assign(cls[0], 0) || !st.assign(cls[1], 1)) return false;
    }
  }
  return st.propagate_all();
}

enum class Step { go_on, stop, timeout };

struct Searcher {
  SearchState state;
  const std::vector<EdgeId>* order;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::pair<EdgeId, int>> path = {};

  // on_leaf(state) -> bool stop; on_cut(path, nodes) is called at cut_depth.
  template <class Leaf, class Cut>
  Step dfs(std::size_t cursor, std::size_t cut_depth, Leaf& on_leaf, Cut& on_cut) {
    while (cursor < order->size() && state.label((*order)[cursor]) != kUnassigned) ++cursor;
    if (cursor == order->size()) return on_leaf(state) ? Step::stop : Step::go_on;
    if (path.size() == cut_depth) {
      on_cut(path, nodes);
      return Step::go_on;
    }
    EdgeId e = (*order)[cursor];
    for (int p = 0; p < 2; ++p) {
      if (++nodes > budget) return Step::timeout;
      std::size_t m = state.mark();
      if (state.assign(e, p)) {
        path.emplace_back(e, p);
        Step s = dfs(cursor + 1, cut_depth, on_leaf, on_cut);
        path.pop_back();
        if (s != Step::go_on) {
          state.undo(m);
          return s;
        }
      }
      state.undo(m);
    }
    return Step::go_on;
  }
};

struct SubtreeResult {
  Step step = Step::go_on;
  std::uint64_t nodes = 0;
  EdgeLabeling labeling;
};

}  // namespace detail

/// Decides (k,l)-BLFD by backtracking. The result, including the node count,
/// does not depend on the number of workers.
inline OracleResult solve_exact(const MultiGraph& g, const BoundSpec& b, const OracleOptions& opt = {}) {
  if (opt.budget == 0) throw std::invalid_argument("budget must be positive");
  const auto order = detail::branching_order(g);
  detail::SearchState base(g, b, opt.propagate);
  if (!detail::prepare(base, true)) return {Outcome::no, {}, 0};

  constexpr std::size_t no_cut = static_cast<std::size_t>(-1);
  OracleResult result;
  auto take_leaf = [&](const detail::SearchState& st) {
    result.labeling = st.labeling();
    return true;
  };

  if (opt.workers <= 1) {
    detail::Searcher s{base, &order, opt.budget};
    auto no_cut_fn = [](const auto&, std::uint64_t) {};
    detail::Step step = s.dfs(0, no_cut, take_leaf, no_cut_fn);
    if (step == detail::Step::timeout) return {Outcome::timeout, {}, opt.budget};
    result.outcome = step == detail::Step::stop ? Outcome::yes : Outcome::no;
    result.nodes = s.nodes;
    return result;
  }

  // Prefix phase: run the top of the tree sequentially and cut subtrees.
  struct Task {
    std::vector<std::pair<EdgeId, int>> path;
    std::uint64_t prefix_nodes_before;
  };
  std::vector<Task> tasks;
  unsigned depth = opt.split_depth != 0 ? opt.split_depth : 8;
  detail::Searcher prefix{base, &order, opt.budget};
  auto cut = [&](const std::vector<std::pair<EdgeId, int>>& path, std::uint64_t n) { tasks.push_back({path, n}); };
  detail::Step prefix_step = prefix.dfs(0, depth, take_leaf, cut);

  std::vector<detail::SubtreeResult> done(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_yes{tasks.size()};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (i > first_yes.load()) continue;
      detail::Searcher s{base, &order, opt.budget};
      for (auto [e, p] : tasks[i].path) s.state.assign(e, p);
      detail::SubtreeResult r;
      auto leaf = [&](const detail::SearchState& st) {
        r.labeling = st.labeling();
        return true;
      };
      auto no_cut_fn = [](const auto&, std::uint64_t) {};
      r.step = s.dfs(0, no_cut, leaf, no_cut_fn);
      r.nodes = s.nodes;
      bool found = r.step == detail::Step::stop;
      done[i] = std::move(r);
      if (found) {
        std::size_t cur = first_yes.load();
        while (i < cur && !first_yes.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < opt.workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Replay in sequential order: the sequential counter at the start of
  // task i is its prefix count plus the nodes of all earlier tasks.
  std::uint64_t task_nodes = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::uint64_t before = tasks[i].prefix_nodes_before + task_nodes;
    const auto& r = done[i];
    if (r.step == detail::Step::timeout || before + r.nodes > opt.budget) return {Outcome::timeout, {}, opt.budget};
    if (r.step == detail::Step::stop) return {Outcome::yes, r.labeling, before + r.nodes};
    task_nodes += r.nodes;
  }
  if (prefix_step == detail::Step::timeout || prefix.nodes + task_nodes > opt.budget) {
    return {Outcome::timeout, {}, opt.budget};
  }
  result.outcome = prefix_step == detail::Step::stop ? Outcome::yes : Outcome::no;
  result.nodes = prefix.nodes + task_nodes;
  return result;
}

inline EnumerateResult enumerate(const MultiGraph& g, const BoundSpec& b, const EnumerateOptions& opt = {}) {
  if (opt.limit == 0) throw std::invalid_argument("limit must be positive");
  EnumerateResult out;
  const auto order = detail::branching_order(g);
  detail::SearchState base(g, b, true);
  if (!detail::prepare(base, opt.up_to_parallel_exchange)) return out;
  detail::Searcher s{base, &order, opt.budget};
  auto leaf = [&](const detail::SearchState& st) {
    out.labelings.push_back(st.labeling());
    return out.labelings.size() >= opt.limit;
  };
  auto no_cut_fn = [](const auto&, std::uint64_t) {};
  detail::Step step = s.dfs(0, static_cast<std::size_t>(-1), leaf, no_cut_fn);
  out.nodes = s.nodes;
  out.timed_out = step == detail::Step::timeout;
  // Hitting the limit exactly on the last labeling still counts as incomplete.
  out.complete = step == detail::Step::go_on;
  return out;
}

/// Counts valid labelings by testing all 2^m bipartitions.
inline std::uint64_t count_brute(const MultiGraph& g, const BoundSpec& b) {
  const std::size_t m = g.edge_count();
  if (m > 24) throw std::length_error("count_brute is limited to 24 edges");
  std::uint64_t count = 0;
  EdgeLabeling lab(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t e = 0; e < m; ++e) lab[e] = (mask >> e) & 1 ? Part::B : Part::A;
    if (verify(g, lab, b)) ++count;
  }
  return count;
}

}  // namespace blfd
