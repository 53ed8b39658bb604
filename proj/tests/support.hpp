#ifndef ULTRA_TESTS_SUPPORT_HPP_
#define ULTRA_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ultra/ultra.hpp"

namespace ultra::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(ULTRA_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline SymbolicUltragraph load_ultragraph(const std::string& name) { return parse_ultragraph(read_fixture(name)); }

inline SymbolicZeroOneMatrix load_symbolic_matrix(const std::string& name) {
  return std::get<SymbolicZeroOneMatrix>(parse_matrix(read_fixture(name)));
}

inline ZeroOneMatrix load_dense_matrix(const std::string& name) {
  return std::get<ZeroOneMatrix>(parse_matrix(read_fixture(name)));
}

// Small helper for hand-built finite ultragraphs: ranges as name lists.
struct EdgeSpec {
  std::string id;
  std::string source;
  std::vector<std::string> range;
};

inline Ultragraph make_graph(const std::vector<std::string>& names, const std::vector<EdgeSpec>& specs) {
  Universe u = Universe::finite(names.size());
  auto key = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return static_cast<VertexKey>(i);
    }
    throw std::runtime_error("no vertex " + n);
  };
  std::vector<Edge> edges;
  for (const auto& s : specs) {
    std::vector<VertexKey> r;
    for (const auto& n : s.range) r.push_back(key(n));
    edges.push_back(Edge{s.id, key(s.source), VertexSet::of(u, r)});
  }
  return Ultragraph(names, edges);
}

// ---- seeded generators ------------------------------------------------------

// Random finite ultragraph: 1..max_v vertices, 0..max_e edges, each edge with
// a uniform source and a nonempty range drawn by independent coin flips.
inline Ultragraph random_ultragraph(std::mt19937_64& rng, std::size_t max_v = 7, std::size_t max_e = 10) {
  std::uniform_int_distribution<std::size_t> nv(1, max_v);
  std::uniform_int_distribution<std::size_t> ne(0, max_e);
  const std::size_t n = nv(rng);
  const std::size_t m = ne(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  Universe u = Universe::finite(n);
  std::uniform_int_distribution<VertexKey> pick(0, static_cast<VertexKey>(n - 1));
  // Sparse ranges are more interesting; bias towards small sets.
  std::bernoulli_distribution coin(1.0 / static_cast<double>(n + 1));
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<VertexKey> r;
    for (VertexKey w = 0; w < n; ++w) {
      if (coin(rng)) r.push_back(w);
    }
    if (r.empty()) r.push_back(pick(rng));
    edges.push_back(Edge{"e" + std::to_string(e), pick(rng), VertexSet::of(u, r)});
  }
  return Ultragraph(names, edges);
}

inline std::vector<Ultragraph> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Ultragraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ultragraph(rng));
  return out;
}

inline constexpr std::uint64_t kCorpusSeed = 20261016;
inline constexpr std::size_t kCorpusSize = 1200;

// Projection combinations over a universe of at most 12 vertices, with up
// to 6 terms.
struct ComboCase {
  ProjectionCombo combo;
  Universe universe;
  std::size_t probe = 0;  // vertices 0..probe-1 cover every distinction
};

inline ComboCase random_combo(std::mt19937_64& rng) {
  const std::size_t size = 1 + rng() % 12;
  const bool infinite = rng() % 3 == 0;
  Universe u = infinite ? Universe::infinite() : Universe::finite(size);
  const std::size_t n = 1 + rng() % 6;
  ProjectionCombo c;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<VertexKey> s;
    for (VertexKey v = 0; v < size; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    VertexSet set = (infinite && rng() % 2) ? VertexSet::all_but(u, s) : VertexSet::of(u, s);
    // Small rationals, some repeated sets and some cancellation.
    Rational coef(static_cast<int>(rng() % 9) - 4, static_cast<int>(1 + rng() % 4));
    c.add(coef, set);
    if (rng() % 5 == 0) c.add(-coef, set);
  }
  return {c, u, infinite ? size + 2 : size};
}

// ---- oracles ----------------------------------------------------------------
//
// Written straight from the definitions, sharing nothing with the library
// beyond the graph accessors.

namespace oracle {

// succ[u][w]: some edge from u has w in its range.
inline std::vector<std::vector<bool>> step_matrix(const Ultragraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> s(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    for (VertexKey w = 0; w < n; ++w) {
      if (e.range.contains(w)) s[e.source][w] = true;
    }
  }
  return s;
}

// Positive-length reachability by Floyd-Warshall closure.
inline std::vector<std::vector<bool>> reach_matrix(const Ultragraph& g) {
  auto r = step_matrix(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

inline bool is_sink(const Ultragraph& g, VertexKey v) {
  for (const Edge& e : g.edges()) {
    if (e.source == v) return false;
  }
  return true;
}

// Exit at position i of a loop: another edge leaving r(a_i), or a sink in r(a_i).
inline bool exits_at(const Ultragraph& g, std::size_t a, std::size_t next) {
  const VertexSet& r = g.edge(a).range;
  for (VertexKey w = 0; w < g.vertex_count(); ++w) {
    if (r.contains(w) && is_sink(g, w)) return true;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e != next && r.contains(g.edge(e).source)) return true;
  }
  return false;
}

// Condition (L) by enumerating edge sequences of length <= 2|G^0|, keeping
// only prefixes without an exit so far; a closed one is a loop without exit.
inline bool condition_L(const Ultragraph& g) {
  const std::size_t bound = 2 * g.vertex_count();
  std::vector<std::size_t> path;
  std::function<bool()> dfs = [&]() -> bool {
    std::size_t last = path.back();
    // Try closing the loop.
    std::size_t first = path.front();
    if (g.edge(last).range.contains(g.edge(first).source) && !exits_at(g, last, first)) return true;
    if (path.size() >= bound) return false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!g.edge(last).range.contains(g.edge(e).source)) continue;
      if (exits_at(g, last, e)) continue;
      path.push_back(e);
      bool found = dfs();
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    path = {e};
    if (dfs()) return false;
  }
  return true;
}

inline bool has_loop(const Ultragraph& g) {
  auto r = reach_matrix(g);
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (r[v][v]) return true;
  }
  return false;
}

// Cofinality by looking for a lasso (an edge path whose sources repeat) of
// length <= 3|G^0| living outside the vertices reachable from v.
inline bool cofinal(const Ultragraph& g) {
  const std::size_t n = g.vertex_count();
  auto r = reach_matrix(g);
  const std::size_t bound = 3 * n;
  for (VertexKey v = 0; v < n; ++v) {
    auto outside = [&](VertexKey u) { return u != v && !r[v][u]; };
    std::vector<VertexKey> sources;
    std::function<bool(std::size_t)> dfs = [&](std::size_t last) -> bool {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        VertexKey s = g.edge(e).source;
        if (!outside(s) || !g.edge(last).range.contains(s)) continue;
        if (std::find(sources.begin(), sources.end(), s) != sources.end()) return true;
        if (sources.size() >= bound) continue;
        sources.push_back(s);
        bool found = dfs(e);
        sources.pop_back();
        if (found) return true;
      }
      return false;
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!outside(g.edge(e).source)) continue;
      sources = {g.edge(e).source};
      if (dfs(e)) return false;
    }
  }
  return true;
}

inline bool hereditary(const Ultragraph& g, std::uint32_t mask) {
  for (const Edge& e : g.edges()) {
    if (!(mask >> e.source & 1u)) continue;
    for (VertexKey w = 0; w < g.vertex_count(); ++w) {
      if (e.range.contains(w) && !(mask >> w & 1u)) return false;
    }
  }
  return true;
}

inline bool saturated(const Ultragraph& g, std::uint32_t mask) {
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (mask >> v & 1u) continue;
    bool has_edge = false;
    bool all_inside = true;
    for (const Edge& e : g.edges()) {
      if (e.source != v) continue;
      has_edge = true;
      for (VertexKey w = 0; w < g.vertex_count(); ++w) {
        if (e.range.contains(w) && !(mask >> w & 1u)) all_inside = false;
      }
    }
    if (has_edge && all_inside) return false;
  }
  return true;
}

// Every subset of vertices, keeping the saturated hereditary ones.
inline std::vector<std::uint32_t> saturated_hereditary_masks(const Ultragraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << g.vertex_count()); ++m) {
    if (hereditary(g, m) && saturated(g, m)) out.push_back(m);
  }
  return out;
}

inline bool simple(const Ultragraph& g) {
  if (!condition_L(g)) return false;
  const std::uint32_t full = (1u << g.vertex_count()) - 1;
  for (std::uint32_t m : saturated_hereditary_masks(g)) {
    if (m != 0 && m != full) return false;
  }
  return true;
}

inline bool purely_infinite(const Ultragraph& g) {
  if (!condition_L(g)) return false;
  auto r = reach_matrix(g);
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    bool hit = false;
    for (VertexKey u = 0; u < g.vertex_count(); ++u) hit = hit || (r[v][u] && r[u][u]);
    if (!hit) return false;
  }
  return true;
}

}  // namespace oracle

}  // namespace ultra::testing

#endif  // ULTRA_TESTS_SUPPORT_HPP_
