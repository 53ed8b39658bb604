#ifndef ULTRA_ULTRAGRAPH_HPP_
#define ULTRA_ULTRAGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace ultra {

struct Edge {
  std::string id;
  VertexKey source = 0;
  VertexSet range;
};

// A finite ultragraph: one source vertex and a nonempty range set per edge.
//
// Finite resolutions of symbolic ultragraphs reuse this type and attach three
// pieces of metadata that a plain finite ultragraph never sets:
//  * infinite-emitter flags for vertices whose edge supply was cut off,
//  * a frontier vertex standing for every vertex outside the window,
//  * infinite-range flags for edges whose true range is infinite.
class Ultragraph {
 public:
  Ultragraph() = default;

  Ultragraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
      : names_(std::move(vertex_names)), edges_(std::move(edges)) {
    universe_ = Universe::finite(names_.size());
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (names_[v].empty()) throw Error(ErrorKind::InvalidArgument, "empty vertex name");
      if (!vertex_index_.emplace(names_[v], static_cast<VertexKey>(v)).second) {
        throw Error(ErrorKind::DuplicateId, "vertex '" + names_[v] + "'");
      }
    }
    out_.assign(names_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (!edge_index_.emplace(e.id, i).second) {
        throw Error(ErrorKind::DuplicateId, "edge '" + e.id + "'");
      }
      if (e.source >= names_.size()) {
        throw Error(ErrorKind::UndeclaredVertex, "source of edge '" + e.id + "'");
      }
      if (!e.range.universe().compatible(universe_)) {
        throw Error(ErrorKind::UniverseMismatch, "range of edge '" + e.id + "'");
      }
      if (e.range.empty()) throw Error(ErrorKind::EmptyRange, "edge '" + e.id + "'");
      out_[e.source].push_back(i);
    }
    infinite_emitter_.assign(names_.size(), false);
    infinite_range_.assign(edges_.size(), false);
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Universe& universe() const noexcept { return universe_; }

  const std::string& name(VertexKey v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<VertexKey> find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::size_t> out_edges(VertexKey v) const { return out_.at(v); }

  VertexSet vertex_set(std::vector<VertexKey> members) const {
    return VertexSet::of(universe_, std::move(members));
  }
  VertexSet no_vertices() const { return VertexSet::empty(universe_); }

  // Every vertex except the frontier.
  VertexSet all_vertices() const {
    VertexSet all = VertexSet::full(universe_);
    return frontier_ ? all.without(*frontier_) : all;
  }

  bool is_frontier(VertexKey v) const noexcept { return frontier_ && *frontier_ == v; }
  std::optional<VertexKey> frontier() const noexcept { return frontier_; }
  bool frontier_escapes() const noexcept { return frontier_escapes_; }

  bool is_infinite_emitter(VertexKey v) const { return infinite_emitter_.at(v); }
  bool is_sink(VertexKey v) const { return !is_frontier(v) && out_.at(v).empty(); }
  bool is_singular(VertexKey v) const { return is_sink(v) || is_infinite_emitter(v); }
  // 0 < |s^{-1}(v)| < infinity
  bool is_regular(VertexKey v) const {
    return !is_frontier(v) && !out_.at(v).empty() && !is_infinite_emitter(v);
  }
  bool has_infinite_range(std::size_t e) const { return infinite_range_.at(e); }

  // Metadata used by finite resolutions of symbolic ultragraphs.
  void mark_infinite_emitter(VertexKey v) { infinite_emitter_.at(v) = true; }
  void mark_infinite_range(std::size_t e) { infinite_range_.at(e) = true; }
  void set_frontier(VertexKey v, bool escapes) {
    if (v >= names_.size() || !out_[v].empty()) {
      throw Error(ErrorKind::InvalidArgument, "frontier must be an existing vertex without edges");
    }
    frontier_ = v;
    frontier_escapes_ = escapes;
  }
  // Tail vertices just below the frontier; reaching all of them stands in for
  // reaching all but finitely many vertices.
  void set_horizon_band(std::vector<VertexKey> band) { horizon_band_ = std::move(band); }
  const std::vector<VertexKey>& horizon_band() const noexcept { return horizon_band_; }

  bool has_window_metadata() const noexcept {
    if (frontier_) return true;
    for (bool b : infinite_emitter_) if (b) return true;
    for (bool b : infinite_range_) if (b) return true;
    return false;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  Universe universe_ = Universe::finite(0);
  std::unordered_map<std::string, VertexKey> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> infinite_emitter_;
  std::vector<bool> infinite_range_;
  std::optional<VertexKey> frontier_;
  bool frontier_escapes_ = false;
  std::vector<VertexKey> horizon_band_;
};

// Structural equality: same vertex names, and the same edges in the same order.
inline bool same_structure(const Ultragraph& a, const Ultragraph& b) {
  if (a.names() != b.names() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.edge_count(); ++i) {
    const Edge& x = a.edge(i);
    const Edge& y = b.edge(i);
    if (x.id != y.id || x.source != y.source || !(x.range == y.range)) return false;
  }
  return true;
}

}  // namespace ultra

#endif  // ULTRA_ULTRAGRAPH_HPP_
