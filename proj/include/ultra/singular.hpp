#ifndef ULTRA_SINGULAR_HPP_
#define ULTRA_SINGULAR_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

inline VertexSet sinks(const Ultragraph& g) {
  std::vector<VertexKey> out;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) out.push_back(v);
  }
  return g.vertex_set(std::move(out));
}

// Sinks and infinite emitters.
inline VertexSet singular_vertices(const Ultragraph& g) {
  std::vector<VertexKey> out;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (g.is_singular(v)) out.push_back(v);
  }
  return g.vertex_set(std::move(out));
}

namespace detail {

inline bool symbolic_sink(const SymbolicUltragraph& g, VertexKey v) {
  return !g.is_infinite_emitter(v) && g.edges_from(v, 0).empty();
}

}  // namespace detail

// Tail vertices past the threshold repeat with the period, so sinks there are
// either absent, all of them, or a periodic set that has no finite-or-cofinite
// form (NotRepresentable).
inline VertexSet sinks(const SymbolicUltragraph& g) {
  std::vector<VertexKey> found;
  for (VertexKey v = 0; v < g.exceptional_count(); ++v) {
    if (detail::symbolic_sink(g, v)) found.push_back(v);
  }
  if (!g.has_tail()) return VertexSet::of(g.universe(), std::move(found));
  const std::int64_t t = g.threshold();
  const std::int64_t p = g.period();
  for (std::int64_t n = g.tail()->start; n < t; ++n) {
    if (detail::symbolic_sink(g, g.tail_key(n))) found.push_back(g.tail_key(n));
  }
  std::size_t periodic = 0;
  for (std::int64_t n = t; n < t + p; ++n) {
    if (detail::symbolic_sink(g, g.tail_key(n))) ++periodic;
  }
  if (periodic == 0) return VertexSet::of(g.universe(), std::move(found));
  if (periodic < static_cast<std::size_t>(p)) {
    throw Error(ErrorKind::NotRepresentable, "sinks recur periodically along the tail");
  }
  std::vector<VertexKey> missing;
  for (VertexKey v = 0; v < g.tail_key(t); ++v) {
    if (!std::binary_search(found.begin(), found.end(), v)) missing.push_back(v);
  }
  return VertexSet::all_but(g.universe(), std::move(missing));
}

inline VertexSet infinite_emitters(const SymbolicUltragraph& g) {
  std::vector<VertexKey> out;
  for (const EdgeFamily& f : g.families()) {
    if (f.has_fixed_source()) out.push_back(f.fixed_source);
  }
  return VertexSet::of(g.universe(), std::move(out));
}

inline VertexSet singular_vertices(const SymbolicUltragraph& g) {
  return sinks(g).unite(infinite_emitters(g));
}

}  // namespace ultra

#endif  // ULTRA_SINGULAR_HPP_
