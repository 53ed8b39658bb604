#ifndef ULTRA_LATTICE_HPP_
#define ULTRA_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// An element of the generated set algebra with a normal form
//   value = (r(X_1) ∪ ... ∪ r(X_n)) ∪ F,   r(X) = ⋂_{e ∈ X} r(e),
// where F is finite and disjoint from the range part.
struct LatticeElement {
  VertexSet value;
  std::vector<std::vector<std::size_t>> intersections;  // the X_i, as edge indices
  VertexSet finite_part;                                // F
};

inline constexpr std::size_t kLatticeVertexLimit = 12;

namespace detail {

using Mask = std::uint32_t;

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (VertexKey v : s.members()) m |= Mask{1} << v;
  return m;
}

inline VertexSet from_mask(const Ultragraph& g, Mask m) {
  std::vector<VertexKey> out;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (m & (Mask{1} << v)) out.push_back(v);
  }
  return g.vertex_set(std::move(out));
}

}  // namespace detail

// r(X_1) ∪ ... ∪ r(X_n) ∪ F.
inline VertexSet evaluate(const Ultragraph& g, const LatticeElement& x) {
  VertexSet out = x.finite_part;
  for (const auto& xs : x.intersections) {
    if (xs.empty()) continue;
    VertexSet part = g.edge(xs.front()).range;
    for (std::size_t e : xs) part = part.intersect(g.edge(e).range);
    out = out.unite(part);
  }
  return out;
}

// Normal form of a subset A: for each a in A take X_a = {e : a ∈ r(e)}; keep
// r(X_a) when it lies inside A, and put the rest of A into F.
inline LatticeElement decompose(const Ultragraph& g, const VertexSet& a) {
  LatticeElement x{a, {}, g.no_vertices()};
  VertexSet covered = g.no_vertices();
  for (VertexKey v : a.members()) {
    std::vector<std::size_t> xs;
    VertexSet r = VertexSet::full(g.universe());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).range.contains(v)) {
        xs.push_back(e);
        r = r.intersect(g.edge(e).range);
      }
    }
    if (xs.empty() || !r.is_subset_of(a)) continue;
    if (std::find(x.intersections.begin(), x.intersections.end(), xs) != x.intersections.end()) continue;
    x.intersections.push_back(std::move(xs));
    covered = covered.unite(r);
  }
  x.finite_part = a.minus(covered);
  return x;
}

// The collection generated by singletons and ranges under finite unions and
// intersections, with the empty set, in canonical order.
inline std::vector<LatticeElement> generate_lattice(const Ultragraph& g,
                                                    std::size_t vertex_limit = kLatticeVertexLimit) {
  if (g.vertex_count() > std::min<std::size_t>(vertex_limit, 31)) {
    throw Error(ErrorKind::BudgetExceeded,
                "set algebra over " + std::to_string(g.vertex_count()) + " vertices");
  }
  using detail::Mask;
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> all{0};
  std::vector<Mask> work;
  auto add = [&](Mask m) {
    if (seen.insert(m).second) {
      all.push_back(m);
      work.push_back(m);
    }
  };
  for (VertexKey v = 0; v < g.vertex_count(); ++v) add(Mask{1} << v);
  for (const Edge& e : g.edges()) add(detail::to_mask(e.range));
  while (!work.empty()) {
    Mask m = work.back();
    work.pop_back();
    const std::size_t n = all.size();
    for (std::size_t i = 0; i < n; ++i) {
      add(m | all[i]);
      add(m & all[i]);
    }
  }
  std::vector<VertexSet> sets;
  sets.reserve(all.size());
  for (Mask m : all) sets.push_back(detail::from_mask(g, m));
  std::sort(sets.begin(), sets.end());
  std::vector<LatticeElement> out;
  out.reserve(sets.size());
  for (const VertexSet& s : sets) out.push_back(decompose(g, s));
  return out;
}

}  // namespace ultra

#endif  // ULTRA_LATTICE_HPP_
