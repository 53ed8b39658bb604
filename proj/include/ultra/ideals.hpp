#ifndef ULTRA_IDEALS_HPP_
#define ULTRA_IDEALS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "paths.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// A hereditary subcollection is stored as its vertex support K; the
// collection is {A in the set algebra : A ⊆ K}.
struct HereditaryCheck {
  bool holds = true;
  std::optional<std::string> edge;  // an edge with s(e) in K and r(e) not inside K
};

struct SaturationCheck {
  bool holds = true;
  std::optional<std::string> vertex;  // a regular vertex outside K whose ranges lie in K
};

struct SaturationTrace {
  std::vector<VertexSet> layers;  // vertices added at each stage, ascending
  VertexSet final;
};

// ---- finite ultragraphs ------------------------------------------------------

inline HereditaryCheck is_hereditary(const Ultragraph& g, const VertexSet& k) {
  for (const Edge& e : g.edges()) {
    if (k.contains(e.source) && !e.range.is_subset_of(k)) return {false, e.id};
  }
  return {};
}

namespace detail {

inline bool ranges_inside(const Ultragraph& g, VertexKey v, const VertexSet& k) {
  for (std::size_t e : g.out_edges(v)) {
    if (!g.edge(e).range.is_subset_of(k)) return false;
  }
  return true;
}

inline void require_hereditary(const Ultragraph& g, const VertexSet& k) {
  if (auto h = is_hereditary(g, k); !h.holds) {
    throw Error(ErrorKind::NotHereditary, "edge '" + *h.edge + "' leaves the set");
  }
}

}  // namespace detail

inline SaturationCheck is_saturated(const Ultragraph& g, const VertexSet& k) {
  detail::require_hereditary(g, k);
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (!k.contains(v) && g.is_regular(v) && detail::ranges_inside(g, v, k)) return {false, g.name(v)};
  }
  return {};
}

// Least hereditary support containing the seed.
inline VertexSet hereditary_closure(const Ultragraph& g, const VertexSet& seed) {
  std::vector<bool> in(g.vertex_count(), false);
  std::deque<VertexKey> work;
  for (VertexKey v : seed.members()) {
    in[v] = true;
    work.push_back(v);
  }
  while (!work.empty()) {
    VertexKey u = work.front();
    work.pop_front();
    for (std::size_t e : g.out_edges(u)) {
      for (VertexKey w : g.edge(e).range.members()) {
        if (!in[w]) {
          in[w] = true;
          work.push_back(w);
        }
      }
    }
  }
  std::vector<VertexKey> out;
  for (VertexKey v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return g.vertex_set(std::move(out));
}

// K_{n+1} = K_n ∪ {v regular : r(e) ⊆ K_n for every e in s^{-1}(v)} until stable.
inline SaturationTrace saturate(const Ultragraph& g, const VertexSet& k) {
  detail::require_hereditary(g, k);
  SaturationTrace t{{}, k};
  for (;;) {
    std::vector<VertexKey> layer;
    for (VertexKey v = 0; v < g.vertex_count(); ++v) {
      if (!t.final.contains(v) && g.is_regular(v) && detail::ranges_inside(g, v, t.final)) {
        layer.push_back(v);
      }
    }
    if (layer.empty()) return t;
    VertexSet added = g.vertex_set(std::move(layer));
    t.final = t.final.unite(added);
    t.layers.push_back(std::move(added));
  }
}

inline constexpr std::size_t kEnumerationVertexLimit = 24;

// Every saturated hereditary support, in canonical set order.
inline std::vector<VertexSet> enumerate_saturated_hereditary(const Ultragraph& g, Budget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > kEnumerationVertexLimit) {
    throw Error(ErrorKind::BudgetExceeded, "2^" + std::to_string(n) + " candidate supports");
  }
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!budget.spend()) throw Error(ErrorKind::BudgetExceeded, "saturated hereditary enumeration");
    std::vector<VertexKey> members;
    for (VertexKey v = 0; v < n; ++v) {
      if (mask & (std::uint64_t{1} << v)) members.push_back(v);
    }
    VertexSet k = g.vertex_set(std::move(members));
    if (is_hereditary(g, k).holds && is_saturated(g, k).holds) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct QuotientUltragraph {
  Ultragraph graph;
  std::vector<VertexKey> original;  // vertex of g behind each quotient vertex
  bool degenerate = false;          // K was everything
};

// The ultragraph over S = G^0 \ K keeping the edges whose range meets S, with
// ranges cut down to S.
inline QuotientUltragraph quotient_ultragraph(const Ultragraph& g, const VertexSet& k) {
  if (!is_hereditary(g, k).holds || !is_saturated(g, k).holds) {
    throw Error(ErrorKind::NotSaturatedHereditary, "quotient support");
  }
  QuotientUltragraph q;
  std::vector<std::optional<VertexKey>> to_new(g.vertex_count());
  std::vector<std::string> names;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (k.contains(v)) continue;
    to_new[v] = static_cast<VertexKey>(names.size());
    names.push_back(g.name(v));
    q.original.push_back(v);
  }
  q.degenerate = names.empty();
  Universe u = Universe::finite(names.size());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    std::vector<VertexKey> r;
    for (VertexKey w : e.range.members()) {
      if (to_new[w]) r.push_back(*to_new[w]);
    }
    if (r.empty()) continue;
    edges.push_back(Edge{e.id, *to_new[e.source], VertexSet::of(u, std::move(r))});
  }
  q.graph = Ultragraph(std::move(names), std::move(edges));
  return q;
}

// Vertices reachable from v, with every edge leaving them.
inline Ultragraph downstream_restriction(const Ultragraph& g, VertexKey v) {
  VertexSet f0 = reach_set(g, v);
  std::vector<std::optional<VertexKey>> to_new(g.vertex_count());
  std::vector<std::string> names;
  for (VertexKey w : f0.members()) {
    to_new[w] = static_cast<VertexKey>(names.size());
    names.push_back(g.name(w));
  }
  Universe u = Universe::finite(names.size());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!to_new[e.source]) continue;
    std::vector<VertexKey> r;
    for (VertexKey w : e.range.members()) r.push_back(*to_new[w]);
    edges.push_back(Edge{e.id, *to_new[e.source], VertexSet::of(u, std::move(r))});
  }
  return Ultragraph(std::move(names), std::move(edges));
}

// ---- symbolic ultragraphs ----------------------------------------------------
//
// Past the threshold the structure repeats with the period, and a
// finite-or-cofinite K is constant past its largest support index, so checking
// one further period beyond both settles every index.

namespace detail {

inline std::int64_t exact_check_bound(const SymbolicUltragraph& g, const VertexSet& k) {
  std::int64_t b = g.threshold();
  if (auto m = k.max_support()) {
    if (auto n = g.tail_index(*m)) b = std::max(b, *n);
  }
  return b + g.max_offset_span() + 2 * g.period();
}

template <class Fn>
void for_each_checked_vertex(const SymbolicUltragraph& g, std::int64_t bound, Fn&& fn) {
  for (VertexKey v = 0; v < g.exceptional_count(); ++v) {
    if (!fn(v)) return;
  }
  if (!g.has_tail()) return;
  for (std::int64_t n = g.tail()->start; n <= bound; ++n) {
    if (!fn(g.tail_key(n))) return;
  }
}

inline bool symbolic_ranges_inside(const SymbolicUltragraph& g, VertexKey v, const VertexSet& k,
                                   std::int64_t bound) {
  for (const Edge& e : g.edges_from(v, bound)) {
    if (!e.range.is_subset_of(k)) return false;
  }
  return true;
}

}  // namespace detail

inline HereditaryCheck is_hereditary(const SymbolicUltragraph& g, const VertexSet& k) {
  const std::int64_t bound = detail::exact_check_bound(g, k);
  HereditaryCheck out;
  detail::for_each_checked_vertex(g, bound, [&](VertexKey v) {
    if (!k.contains(v)) return true;
    for (const Edge& e : g.edges_from(v, bound)) {
      if (!e.range.is_subset_of(k)) {
        out = {false, e.id};
        return false;
      }
    }
    return true;
  });
  return out;
}

inline SaturationCheck is_saturated(const SymbolicUltragraph& g, const VertexSet& k) {
  if (auto h = is_hereditary(g, k); !h.holds) {
    throw Error(ErrorKind::NotHereditary, "edge '" + *h.edge + "' leaves the set");
  }
  const std::int64_t bound = detail::exact_check_bound(g, k);
  SaturationCheck out;
  detail::for_each_checked_vertex(g, bound, [&](VertexKey v) {
    if (k.contains(v) || g.is_infinite_emitter(v)) return true;
    if (g.edges_from(v, bound).empty()) return true;
    if (detail::symbolic_ranges_inside(g, v, k, bound)) {
      out = {false, g.name(v)};
      return false;
    }
    return true;
  });
  return out;
}

// Quotient by a cofinite saturated hereditary K. The complement S is finite,
// so the result has no tail; fixed-source families whose fixed range meets S
// survive as families, everything else as concrete edges.
inline SymbolicUltragraph quotient_ultragraph(const SymbolicUltragraph& g, const VertexSet& k) {
  if (!is_hereditary(g, k).holds || !is_saturated(g, k).holds) {
    throw Error(ErrorKind::NotSaturatedHereditary, "quotient support");
  }
  if (k.is_finite() && !k.empty() && g.has_tail()) {
    throw Error(ErrorKind::NotRepresentable, "quotient by a finite support of an infinite ultragraph");
  }
  if (k.empty()) return g;
  std::vector<VertexKey> s = k.is_cofinite() ? k.support() : k.complement().members();
  std::vector<std::string> names;
  std::vector<std::optional<VertexKey>> to_new;
  for (VertexKey v : s) {
    if (to_new.size() <= v) to_new.resize(v + 1);
    to_new[v] = static_cast<VertexKey>(names.size());
    names.push_back(g.name(v));
  }
  Universe u = Universe::finite(names.size());
  auto cut = [&](const VertexSet& r) {
    std::vector<VertexKey> out;
    for (VertexKey v : s) {
      if (r.contains(v)) out.push_back(*to_new[v]);
    }
    return VertexSet::of(u, std::move(out));
  };
  const std::int64_t bound = detail::exact_check_bound(g, k);
  std::vector<Edge> edges;
  std::vector<EdgeFamily> families;
  for (VertexKey v : s) {
    std::vector<Edge> out = g.edges_from(v, bound);
    for (Edge& e : out) {
      VertexSet r = cut(e.range);
      if (!r.empty()) edges.push_back(Edge{e.id, *to_new[v], std::move(r)});
    }
    for (const EdgeFamily& f : g.families()) {
      if (!f.has_fixed_source() || f.fixed_source != v) continue;
      VertexSet tail_range = cut(f.fixed_range);
      if (tail_range.empty()) continue;
      EdgeFamily q;
      q.id = f.id;
      q.param = f.param;
      q.start = f.first_member_from(std::max(bound, f.start) + 1);
      q.step = f.step;
      q.fixed_source = *to_new[v];
      q.fixed_range = std::move(tail_range);
      families.push_back(std::move(q));
    }
  }
  return SymbolicUltragraph(std::move(names), std::nullopt, std::move(edges), std::move(families));
}

}  // namespace ultra

#endif  // ULTRA_IDEALS_HPP_
