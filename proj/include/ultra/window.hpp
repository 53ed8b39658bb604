#ifndef ULTRA_WINDOW_HPP_
#define ULTRA_WINDOW_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

inline constexpr const char* kFrontierName = "<beyond>";

// Finite resolution of a symbolic ultragraph: exceptional vertices, tail
// vertices up to the horizon, and one frontier vertex standing for everything
// past it. Real vertices keep their symbolic keys; the frontier is the last key.
//
// The window refers to the symbolic ultragraph it was built from; that object
// must outlive it.
class Window {
 public:
  Window(const SymbolicUltragraph& g, std::int64_t horizon) : source_(&g) {
    if (g.has_tail()) horizon = std::max(horizon, minimum_horizon(g));
    horizon_ = horizon;
    real_ = g.exceptional_count();
    if (g.has_tail()) real_ += static_cast<std::size_t>(horizon_ - g.tail()->start + 1);
    build();
  }

  static std::int64_t minimum_horizon(const SymbolicUltragraph& g) {
    return g.threshold() + g.band_width();
  }

  const SymbolicUltragraph& source() const noexcept { return *source_; }
  const Ultragraph& graph() const noexcept { return graph_; }
  std::int64_t horizon() const noexcept { return horizon_; }
  VertexKey frontier() const noexcept { return static_cast<VertexKey>(real_); }
  std::size_t real_vertex_count() const noexcept { return real_; }

  bool in_window(VertexKey k) const noexcept { return k < real_; }

  // The symbolic set seen through the window; the frontier stands for any
  // members beyond the horizon.
  VertexSet restrict(const VertexSet& s) const {
    std::vector<VertexKey> out;
    bool beyond = false;
    if (s.is_cofinite()) {
      beyond = true;
      for (VertexKey k = 0; k < real_; ++k) {
        if (s.contains(k)) out.push_back(k);
      }
    } else {
      for (VertexKey k : s.members()) {
        if (k < real_) {
          out.push_back(k);
        } else {
          beyond = true;
        }
      }
    }
    if (beyond) out.push_back(frontier());
    return graph_.vertex_set(std::move(out));
  }

  // Symbolic reading of a window set. A set containing the whole top band
  // continues forever; a set missing the band and the frontier stops inside
  // the window; anything else has no reading.
  std::optional<VertexSet> lift(const VertexSet& x) const {
    const Universe& u = source_->universe();
    std::vector<VertexKey> inside;
    for (VertexKey k : x.members()) {
      if (k < real_) inside.push_back(k);
    }
    bool has_frontier = x.contains(frontier());
    if (!source_->has_tail()) {
      if (has_frontier) return std::nullopt;
      return VertexSet::of(u, std::move(inside));
    }
    std::int64_t band = source_->band_width();
    bool all_band = true;
    bool any_band = false;
    for (std::int64_t n = horizon_ - band + 1; n <= horizon_; ++n) {
      bool in = x.contains(source_->tail_key(n));
      all_band = all_band && in;
      any_band = any_band || in;
    }
    if (all_band) {
      std::vector<VertexKey> missing;
      for (VertexKey k = 0; k < real_; ++k) {
        if (!x.contains(k)) missing.push_back(k);
      }
      return VertexSet::all_but(u, std::move(missing));
    }
    if (!any_band && !has_frontier) return VertexSet::of(u, std::move(inside));
    return std::nullopt;
  }

 private:
  void add_edge(std::vector<Edge>& edges, std::vector<bool>& infinite, Edge e, bool inf) {
    e.range = restrict(e.range);
    edges.push_back(std::move(e));
    infinite.push_back(inf);
  }

  void build() {
    const SymbolicUltragraph& g = *source_;
    std::vector<std::string> names;
    names.reserve(real_ + 1);
    for (VertexKey k = 0; k < real_; ++k) names.push_back(g.name(k));
    names.push_back(kFrontierName);
    // Vertex-only graph so that restrict() has the window universe.
    graph_ = Ultragraph(names, {});

    std::vector<Edge> edges;
    std::vector<bool> infinite;
    std::vector<VertexKey> emitters;
    // Edges are grouped by source key so that witnesses found in a smaller
    // window reappear unchanged in a larger one.
    for (VertexKey v = 0; v < real_; ++v) {
      for (const Edge& e : g.concrete_edges()) {
        if (e.source == v) add_edge(edges, infinite, e, e.range.is_cofinite());
      }
      std::optional<std::int64_t> idx = g.vertex_index(v);
      for (const EdgeFamily& f : g.families()) {
        bool inf = f.fixed_range.is_cofinite();
        if (f.has_fixed_source()) {
          if (f.fixed_source != v) continue;
          std::int64_t cap = std::max(horizon_, f.start);
          for (std::int64_t n = f.start; n <= cap; n += f.step) {
            add_edge(edges, infinite, g.member(f, n), inf);
          }
          add_edge(edges, infinite, bundle(f, cap), inf);
          emitters.push_back(v);
        } else if (idx) {
          std::int64_t n = *idx - *f.source_offset;
          if (f.in_domain(n)) add_edge(edges, infinite, g.member(f, n), inf);
        }
      }
    }
    graph_ = Ultragraph(std::move(names), std::move(edges));
    for (std::size_t i = 0; i < infinite.size(); ++i) {
      if (infinite[i]) graph_.mark_infinite_range(i);
    }
    for (VertexKey v : emitters) graph_.mark_infinite_emitter(v);
    graph_.set_frontier(frontier(), g.tail_escapes());
    if (g.has_tail()) {
      std::vector<VertexKey> band;
      for (std::int64_t n = horizon_ - g.band_width() + 1; n <= horizon_; ++n) band.push_back(g.tail_key(n));
      graph_.set_horizon_band(std::move(band));
    }
  }

  // One edge standing for every member of `f` past `cap`.
  Edge bundle(const EdgeFamily& f, std::int64_t cap) const {
    const SymbolicUltragraph& g = *source_;
    Edge e;
    e.id = f.id + "[>" + std::to_string(cap) + "]";
    e.source = f.fixed_source;
    VertexSet r = f.fixed_range;
    if (!f.range_offsets.empty()) {
      std::int64_t reach = 0;
      for (std::int64_t d : f.range_offsets) reach = std::max(reach, std::abs(d));
      std::int64_t stop = cap + reach + g.period() + horizon_;
      std::vector<VertexKey> offs;
      for (std::int64_t n = f.first_member_from(cap + 1); n <= stop; n += f.step) {
        for (std::int64_t d : f.range_offsets) {
          if (auto k = g.resolve_index(n + d)) offs.push_back(*k);
        }
      }
      // Members run on forever, so something always lands past the horizon.
      offs.push_back(g.tail_key(stop + 1 + reach));
      r = r.unite(VertexSet::of(g.universe(), std::move(offs)));
    }
    e.range = r;
    return e;
  }

  const SymbolicUltragraph* source_;
  std::int64_t horizon_ = 0;
  std::size_t real_ = 0;
  Ultragraph graph_;
};

}  // namespace ultra

#endif  // ULTRA_WINDOW_HPP_
