#ifndef ULTRA_PATHS_HPP_
#define ULTRA_PATHS_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// A path of positive length, as edge indices into its ultragraph.
struct Path {
  std::vector<std::size_t> edges;
  friend bool operator==(const Path&, const Path&) = default;
};

// A path whose source lies in its own range.
struct Loop {
  std::vector<std::size_t> edges;
  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

inline bool is_path(const Ultragraph& g, const std::vector<std::size_t>& edges) {
  if (edges.empty()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) return false;
    if (i > 0 && !g.edge(edges[i - 1]).range.contains(g.edge(edges[i]).source)) return false;
  }
  return true;
}

inline bool is_loop(const Ultragraph& g, const std::vector<std::size_t>& edges) {
  return is_path(g, edges) && g.edge(edges.back()).range.contains(g.edge(edges.front()).source);
}

inline std::vector<std::string> edge_names(const Ultragraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (std::size_t e : edges) out.push_back(g.edge(e).id);
  return out;
}

enum class LoopMode { FirstReturn, Bounded };

namespace detail {

class LoopSearch {
 public:
  LoopSearch(const Ultragraph& g, LoopMode mode, std::size_t max_length, Budget& budget,
             std::size_t max_results)
      : g_(g), mode_(mode), max_length_(max_length), budget_(budget), max_results_(max_results) {}

  std::vector<Loop> run() {
    for (VertexKey u = 0; u < g_.vertex_count() && !done(); ++u) {
      start_ = u;
      used_.assign(g_.vertex_count(), false);
      used_[u] = true;
      for (std::size_t e : g_.out_edges(u)) {
        if (done()) break;
        extend(e);
      }
    }
    return std::move(found_);
  }

 private:
  bool done() const { return max_results_ && found_.size() >= max_results_; }

  void extend(std::size_t e) {
    if (!budget_.spend()) throw Error(ErrorKind::BudgetExceeded, "loop enumeration");
    stack_.push_back(e);
    const VertexSet& r = g_.edge(e).range;
    if (r.contains(start_)) found_.push_back(Loop{stack_});
    if (stack_.size() < max_length_ && !done()) {
      std::vector<std::size_t> next;
      for (VertexKey w : r.members()) {
        if (mode_ == LoopMode::FirstReturn && used_[w]) continue;
        for (std::size_t f : g_.out_edges(w)) next.push_back(f);
      }
      std::sort(next.begin(), next.end());
      for (std::size_t f : next) {
        if (done()) break;
        VertexKey w = g_.edge(f).source;
        if (mode_ == LoopMode::FirstReturn) used_[w] = true;
        extend(f);
        if (mode_ == LoopMode::FirstReturn) used_[w] = false;
      }
    }
    stack_.pop_back();
  }

  const Ultragraph& g_;
  LoopMode mode_;
  std::size_t max_length_;
  Budget& budget_;
  std::size_t max_results_;
  VertexKey start_ = 0;
  std::vector<bool> used_;
  std::vector<std::size_t> stack_;
  std::vector<Loop> found_;
};

}  // namespace detail

// FirstReturn: every loop whose edge sources are pairwise distinct, starting
// at each vertex in turn (so rotations appear separately), in depth-first
// preorder with ascending edge index. Bounded: every loop of length <= bound.
// `max_results` = 0 means no limit.
inline std::vector<Loop> find_loops(const Ultragraph& g, LoopMode mode, std::size_t bound,
                                    Budget& budget, std::size_t max_results = 0) {
  std::size_t len = mode == LoopMode::FirstReturn ? g.vertex_count() : bound;
  return detail::LoopSearch(g, mode, len, budget, max_results).run();
}

inline std::vector<Loop> find_loops(const Ultragraph& g, Budget& budget) {
  return find_loops(g, LoopMode::FirstReturn, 0, budget);
}

struct Exit {
  enum class Kind { Edge, Sink, Frontier };
  Kind kind = Kind::Edge;
  std::size_t position = 0;  // index i of the loop edge whose range holds the exit
  std::size_t edge = 0;      // for Kind::Edge
  VertexKey vertex = 0;      // for Kind::Sink and Kind::Frontier; s(edge) otherwise
};

// First exit in order of position, then range vertex, then edge index.
inline std::optional<Exit> find_exit(const Ultragraph& g, const Loop& loop) {
  const std::size_t n = loop.edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t next = loop.edges[(i + 1) % n];
    for (VertexKey w : g.edge(loop.edges[i]).range.members()) {
      if (g.is_frontier(w)) return Exit{Exit::Kind::Frontier, i, 0, w};
      if (g.is_sink(w)) return Exit{Exit::Kind::Sink, i, 0, w};
      for (std::size_t f : g.out_edges(w)) {
        if (f != next) return Exit{Exit::Kind::Edge, i, f, w};
      }
    }
  }
  return std::nullopt;
}

inline bool is_exit(const Ultragraph& g, const Loop& loop, const Exit& x) {
  const std::size_t n = loop.edges.size();
  if (x.position >= n) return false;
  const VertexSet& r = g.edge(loop.edges[x.position]).range;
  switch (x.kind) {
    case Exit::Kind::Frontier: return g.is_frontier(x.vertex) && r.contains(x.vertex);
    case Exit::Kind::Sink: return g.is_sink(x.vertex) && r.contains(x.vertex);
    case Exit::Kind::Edge:
      return x.edge < g.edge_count() && r.contains(g.edge(x.edge).source) &&
             x.edge != loop.edges[(x.position + 1) % n];
  }
  return false;
}

// Vertices lying in the range of some positive-length path from v.
inline std::vector<bool> positive_reach(const Ultragraph& g, VertexKey v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexKey> work;
  auto push_ranges = [&](VertexKey u) {
    for (std::size_t e : g.out_edges(u)) {
      for (VertexKey w : g.edge(e).range.members()) {
        if (!seen[w]) {
          seen[w] = true;
          work.push_back(w);
        }
      }
    }
  };
  push_ranges(v);
  while (!work.empty()) {
    VertexKey u = work.front();
    work.pop_front();
    push_ranges(u);
  }
  return seen;
}

// R(v) = {w : v >= w}, reflexive.
inline VertexSet reach_set(const Ultragraph& g, VertexKey v) {
  std::vector<bool> seen = positive_reach(g, v);
  seen[v] = true;
  std::vector<VertexKey> out;
  for (VertexKey w = 0; w < seen.size(); ++w) {
    if (seen[w]) out.push_back(w);
  }
  return g.vertex_set(std::move(out));
}

// w >= v: v = w, or v lies in the range of a path from w.
inline bool reaches(const Ultragraph& g, VertexKey w, VertexKey v) {
  return w == v || positive_reach(g, w)[v];
}

inline bool reaches_strict(const Ultragraph& g, VertexKey w, VertexKey v) {
  return positive_reach(g, w)[v];
}

// v -> A: A is covered by the ranges of finitely many paths from v. Over a
// finite graph this is v >= w for each w in A.
inline bool reaches_set(const Ultragraph& g, VertexKey v, const VertexSet& a) {
  std::vector<bool> seen = positive_reach(g, v);
  seen[v] = true;
  for (VertexKey w : a.members()) {
    if (!seen[w]) return false;
  }
  return true;
}

// Vertices u with u in R+(u).
inline std::vector<bool> loop_sources(const Ultragraph& g) {
  std::vector<bool> out(g.vertex_count(), false);
  for (VertexKey u = 0; u < g.vertex_count(); ++u) out[u] = positive_reach(g, u)[u];
  return out;
}

// A positive-length path from v has some loop source in its range.
inline bool connects_to_loop(const Ultragraph& g, VertexKey v) {
  std::vector<bool> r = positive_reach(g, v);
  std::vector<bool> ls = loop_sources(g);
  for (VertexKey u = 0; u < r.size(); ++u) {
    if (r[u] && ls[u]) return true;
  }
  return false;
}

// ---- loops without enumeration ---------------------------------------------------

// Edges lying on some loop: e does iff s(e) = w or w >= s(e) for some w in r(e).
inline std::vector<bool> loop_edges(const Ultragraph& g, const std::vector<bool>& removed = {}) {
  auto live = [&](std::size_t e) { return removed.empty() || !removed[e]; };
  const std::size_t n = g.vertex_count();
  // reach[w][u]: u = w or u is in the range of a live path from w.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexKey w = 0; w < n; ++w) {
    std::deque<VertexKey> work{w};
    reach[w][w] = true;
    while (!work.empty()) {
      VertexKey u = work.front();
      work.pop_front();
      for (std::size_t e : g.out_edges(u)) {
        if (!live(e)) continue;
        for (VertexKey x : g.edge(e).range.members()) {
          if (!reach[w][x]) {
            reach[w][x] = true;
            work.push_back(x);
          }
        }
      }
    }
  }
  std::vector<bool> out(g.edge_count(), false);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!live(e)) continue;
    for (VertexKey w : g.edge(e).range.members()) {
      if (reach[w][g.edge(e).source]) {
        out[e] = true;
        break;
      }
    }
  }
  return out;
}

inline bool has_loop(const Ultragraph& g) {
  auto on = loop_edges(g);
  return std::find(on.begin(), on.end(), true) != on.end();
}

// Edges lying on every loop; empty when there are no loops.
inline std::vector<std::size_t> edges_on_every_loop(const Ultragraph& g) {
  std::vector<bool> on = loop_edges(g);
  std::vector<std::size_t> out;
  if (std::find(on.begin(), on.end(), true) == on.end()) return out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!on[e]) continue;
    std::vector<bool> removed(g.edge_count(), false);
    removed[e] = true;
    auto rest = loop_edges(g, removed);
    if (std::find(rest.begin(), rest.end(), true) == rest.end()) out.push_back(e);
  }
  return out;
}

// A shortest loop starting with e, if e lies on one; ties go to lower edge
// indices.
inline std::optional<Loop> shortest_loop_through(const Ultragraph& g, std::size_t e) {
  const VertexKey target = g.edge(e).source;
  if (g.edge(e).range.contains(target)) return Loop{{e}};
  std::vector<std::optional<std::size_t>> via(g.edge_count());
  std::vector<bool> seen(g.edge_count(), false);
  std::deque<std::size_t> work;
  auto expand = [&](std::size_t from) -> std::optional<std::size_t> {
    std::vector<std::size_t> next;
    for (VertexKey w : g.edge(from).range.members()) {
      for (std::size_t f : g.out_edges(w)) next.push_back(f);
    }
    std::sort(next.begin(), next.end());
    for (std::size_t f : next) {
      if (seen[f] || f == e) continue;
      seen[f] = true;
      via[f] = from;
      if (g.edge(f).range.contains(target)) return f;
      work.push_back(f);
    }
    return std::nullopt;
  };
  std::optional<std::size_t> hit = expand(e);
  while (!hit && !work.empty()) {
    std::size_t f = work.front();
    work.pop_front();
    hit = expand(f);
  }
  if (!hit) return std::nullopt;
  std::vector<std::size_t> edges;
  for (std::size_t f = *hit; f != e; f = *via[f]) edges.push_back(f);
  edges.push_back(e);
  std::reverse(edges.begin(), edges.end());
  return Loop{std::move(edges)};
}

// The least-indexed edge on a loop, with a shortest loop through it.
inline std::optional<Loop> some_loop(const Ultragraph& g) {
  std::vector<bool> on = loop_edges(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (on[e]) return shortest_loop_through(g, e);
  }
  return std::nullopt;
}

// Loops without an exit. At an exitless position every vertex of r(a_i) is a
// non-sink emitting only a_{i+1}, so each edge has at most one exitless
// successor; exitless loops are the cycles of that partial map, each a
// first-return loop. Rotated to start at the least edge index, sorted.
inline std::vector<Loop> exitless_loops(const Ultragraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::optional<std::size_t>> next(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::optional<std::size_t> only;
    bool ok = true;
    for (VertexKey w : g.edge(a).range.members()) {
      if (g.is_frontier(w) || g.is_sink(w) || g.out_edges(w).size() != 1 || (only && *only != g.out_edges(w)[0])) {
        ok = false;
        break;
      }
      only = g.out_edges(w)[0];
    }
    if (ok) next[a] = only;
  }
  std::vector<Loop> out;
  std::vector<int> state(m, 0);  // 0 new, 1 on the current walk, 2 finished
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<std::size_t> walk;
    std::size_t cur = a;
    while (state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      if (!next[cur]) break;
      cur = *next[cur];
    }
    if (state[cur] == 1 && next[walk.back()] && *next[walk.back()] == cur) {
      auto it = std::find(walk.begin(), walk.end(), cur);
      std::vector<std::size_t> cyc(it, walk.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      out.push_back(Loop{std::move(cyc)});
    }
    for (std::size_t x : walk) state[x] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices from which a path can reach the frontier (reflexively).
inline std::vector<VertexKey> reaching_frontier(const Ultragraph& g) {
  std::vector<VertexKey> out;
  auto f = g.frontier();
  if (!f) return out;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (v != *f && positive_reach(g, v)[*f]) out.push_back(v);
  }
  out.push_back(*f);
  return out;
}

}  // namespace ultra

#endif  // ULTRA_PATHS_HPP_
