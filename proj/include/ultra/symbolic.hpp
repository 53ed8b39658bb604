#ifndef ULTRA_SYMBOLIC_HPP_
#define ULTRA_SYMBOLIC_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// Tail vertices prefix[n] for n >= start.
struct TailSpec {
  std::string prefix = "v";
  std::string param = "n";
  std::int64_t start = 0;
};

// An infinite supply of edges id[n], one per n in {start, start+step, ...}.
// The source is either the tail vertex prefix[n + source_offset] or a fixed
// vertex; the range is {prefix[n + d] : d in range_offsets} united with a
// fixed finite-or-cofinite set.
struct EdgeFamily {
  std::string id;
  std::string param = "n";
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::optional<std::int64_t> source_offset;
  VertexKey fixed_source = 0;
  std::vector<std::int64_t> range_offsets;
  VertexSet fixed_range;

  bool has_fixed_source() const noexcept { return !source_offset.has_value(); }

  bool in_domain(std::int64_t n) const noexcept {
    return n >= start && (n - start) % step == 0;
  }

  // Smallest domain member >= n.
  std::int64_t first_member_from(std::int64_t n) const noexcept {
    if (n <= start) return start;
    std::int64_t k = (n - start + step - 1) / step;
    return start + k * step;
  }
};

inline std::string member_name(const std::string& family, std::int64_t n) {
  return family + "[" + std::to_string(n) + "]";
}

// Finite description of a countably infinite ultragraph: finitely many
// exceptional vertices, an optional tail of indexed vertices, concrete edges
// with finite-or-cofinite ranges, and fixed-offset edge families.
//
// Vertex keys: exceptional vertices are 0..E-1 in declaration order; the tail
// vertex prefix[n] has key E + (n - tail.start).
class SymbolicUltragraph {
 public:
  SymbolicUltragraph() = default;

  SymbolicUltragraph(std::vector<std::string> exceptional, std::optional<TailSpec> tail,
                     std::vector<Edge> edges, std::vector<EdgeFamily> families)
      : exceptional_(std::move(exceptional)),
        tail_(std::move(tail)),
        edges_(std::move(edges)),
        families_(std::move(families)) {
    index_names();
    compute_universe();
    validate();
  }

  const Universe& universe() const noexcept { return universe_; }
  std::size_t exceptional_count() const noexcept { return exceptional_.size(); }
  const std::vector<std::string>& exceptional_names() const noexcept { return exceptional_; }
  bool has_tail() const noexcept { return tail_.has_value(); }
  const std::optional<TailSpec>& tail() const noexcept { return tail_; }
  const std::vector<Edge>& concrete_edges() const noexcept { return edges_; }
  const std::vector<EdgeFamily>& families() const noexcept { return families_; }

  bool is_finite() const noexcept { return !tail_ && families_.empty(); }

  VertexKey tail_key(std::int64_t n) const {
    if (!tail_ || n < tail_->start) {
      throw Error(ErrorKind::InvalidArgument, "tail index " + std::to_string(n) + " out of range");
    }
    return static_cast<VertexKey>(exceptional_.size() + static_cast<std::size_t>(n - tail_->start));
  }

  std::optional<std::int64_t> tail_index(VertexKey k) const noexcept {
    if (!tail_ || k < exceptional_.size()) return std::nullopt;
    return tail_->start + static_cast<std::int64_t>(k - exceptional_.size());
  }

  // The vertex prefix[n]: a tail vertex, or the exceptional vertex whose name
  // spells prefix followed by n.
  std::optional<VertexKey> resolve_index(std::int64_t n) const {
    if (!tail_) return std::nullopt;
    if (n >= tail_->start) return tail_key(n);
    auto it = indexed_exceptional_.find(n);
    if (it == indexed_exceptional_.end()) return std::nullopt;
    return it->second;
  }

  // Index n such that the vertex is prefix[n], if it has one.
  std::optional<std::int64_t> vertex_index(VertexKey k) const {
    if (auto t = tail_index(k)) return t;
    for (const auto& [n, key] : indexed_exceptional_) {
      if (key == k) return n;
    }
    return std::nullopt;
  }

  std::string name(VertexKey k) const {
    if (k < exceptional_.size()) return exceptional_[k];
    if (auto t = tail_index(k)) return tail_->prefix + std::to_string(*t);
    throw Error(ErrorKind::InvalidArgument, "vertex key " + std::to_string(k));
  }

  std::optional<VertexKey> find_vertex(const std::string& name) const {
    auto it = exceptional_index_.find(name);
    if (it != exceptional_index_.end()) return it->second;
    if (auto n = parse_tail_name(name); n && *n >= tail_->start) return tail_key(*n);
    return std::nullopt;
  }

  // lcm of the family steps.
  std::int64_t period() const noexcept {
    std::int64_t p = 1;
    for (const auto& f : families_) p = lcm64(p, f.step);
    return p;
  }

  // Largest distance between the source and a range member of one family edge.
  std::int64_t max_offset_span() const noexcept {
    std::int64_t d = 0;
    for (const auto& f : families_) {
      for (std::int64_t r : f.range_offsets) {
        std::int64_t a = f.source_offset.value_or(0);
        d = std::max(d, std::abs(r - a));
        d = std::max(d, std::abs(r));
      }
      if (f.source_offset) d = std::max(d, std::abs(*f.source_offset));
    }
    return d;
  }

  // Tail index beyond which the neighbourhood of a tail vertex only depends on
  // its index modulo the period.
  std::int64_t threshold() const {
    if (!tail_) return 0;
    std::int64_t t = tail_->start;
    auto bump = [&](VertexKey k) {
      if (auto n = tail_index(k)) t = std::max(t, *n + 1);
    };
    auto bump_set = [&](const VertexSet& s) {
      if (auto m = s.max_support()) bump(*m);
    };
    for (const auto& e : edges_) {
      bump(e.source);
      bump_set(e.range);
    }
    for (const auto& f : families_) {
      if (f.has_fixed_source()) bump(f.fixed_source);
      bump_set(f.fixed_range);
      std::int64_t reach = f.source_offset.value_or(0);
      for (std::int64_t d : f.range_offsets) reach = std::max(reach, d);
      t = std::max(t, f.start + std::max<std::int64_t>(reach, 0));
    }
    return t;
  }

  // Width of the top band of a window used to decide whether a window set
  // continues past the horizon.
  std::int64_t band_width() const noexcept {
    return std::max<std::int64_t>({1, period(), max_offset_span()});
  }

  std::int64_t default_horizon() const { return threshold() + 8 * period() + band_width(); }

  bool is_infinite_emitter(VertexKey v) const noexcept {
    for (const auto& f : families_) {
      if (f.has_fixed_source() && f.fixed_source == v) return true;
    }
    return false;
  }

  // True when an offset family can carry a path forward along the tail.
  bool tail_escapes() const noexcept {
    for (const auto& f : families_) {
      if (!f.source_offset) continue;
      for (std::int64_t d : f.range_offsets) {
        if (d > *f.source_offset) return true;
      }
    }
    return false;
  }

  Edge member(const EdgeFamily& f, std::int64_t n) const {
    Edge e;
    e.id = member_name(f.id, n);
    e.source = f.source_offset ? must_resolve(n + *f.source_offset, f.id) : f.fixed_source;
    std::vector<VertexKey> offs;
    for (std::int64_t d : f.range_offsets) offs.push_back(must_resolve(n + d, f.id));
    e.range = f.fixed_range.unite(VertexSet::of(universe_, std::move(offs)));
    return e;
  }

  // Edges with source v, resolved. Members of fixed-source families are
  // listed up to member index `member_cap`.
  std::vector<Edge> edges_from(VertexKey v, std::int64_t member_cap) const {
    std::vector<Edge> out;
    for (const auto& e : edges_) {
      if (e.source == v) out.push_back(e);
    }
    std::optional<std::int64_t> idx = vertex_index(v);
    for (const auto& f : families_) {
      if (f.has_fixed_source()) {
        if (f.fixed_source != v) continue;
        for (std::int64_t n = f.start; n <= std::max(member_cap, f.start); n += f.step) {
          out.push_back(member(f, n));
        }
      } else if (idx) {
        std::int64_t n = *idx - *f.source_offset;
        if (f.in_domain(n)) out.push_back(member(f, n));
      }
    }
    return out;
  }

  std::size_t out_degree_upper(VertexKey v) const { return edges_from(v, 0).size(); }

  Ultragraph to_finite() const {
    if (!is_finite()) throw Error(ErrorKind::NotRepresentable, "ultragraph has infinitely many vertices or edges");
    return Ultragraph(exceptional_, edges_);
  }

  static SymbolicUltragraph from_finite(const Ultragraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    return SymbolicUltragraph(g.names(), std::nullopt, std::move(edges), {});
  }

 private:
  std::optional<std::int64_t> parse_tail_name(const std::string& name) const {
    if (!tail_) return std::nullopt;
    const std::string& p = tail_->prefix;
    if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) return std::nullopt;
    std::string digits = name.substr(p.size());
    if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    if (digits.size() > 17) return std::nullopt;
    return std::stoll(digits);
  }

  VertexKey must_resolve(std::int64_t n, const std::string& family) const {
    auto k = resolve_index(n);
    if (!k) {
      throw Error(ErrorKind::UndeclaredVertex,
                  "family '" + family + "' refers to " + (tail_ ? tail_->prefix : std::string("?")) +
                      "[" + std::to_string(n) + "]");
    }
    return *k;
  }

  void index_names() {
    for (std::size_t i = 0; i < exceptional_.size(); ++i) {
      const std::string& nm = exceptional_[i];
      if (nm.empty()) throw Error(ErrorKind::InvalidArgument, "empty vertex name");
      if (!exceptional_index_.emplace(nm, static_cast<VertexKey>(i)).second) {
        throw Error(ErrorKind::DuplicateId, "vertex '" + nm + "'");
      }
      if (auto n = parse_tail_name(nm)) {
        if (*n >= tail_->start) {
          throw Error(ErrorKind::DuplicateId, "vertex '" + nm + "' collides with the tail");
        }
        indexed_exceptional_.emplace(*n, static_cast<VertexKey>(i));
      }
    }
  }

  void compute_universe() {
    if (!tail_) {
      universe_ = Universe::finite(exceptional_.size());
      return;
    }
    bool unit = false;
    for (const auto& e : edges_) unit = unit || e.range.is_cofinite();
    for (const auto& f : families_) unit = unit || f.fixed_range.is_cofinite();
    universe_ = Universe::infinite(unit);
  }

  void validate() const {
    std::unordered_set<std::string> ids;
    for (const auto& e : edges_) {
      if (!ids.insert(e.id).second) throw Error(ErrorKind::DuplicateId, "edge '" + e.id + "'");
      if (!universe_.contains(e.source)) {
        throw Error(ErrorKind::UndeclaredVertex, "source of edge '" + e.id + "'");
      }
      if (!e.range.universe().compatible(universe_)) {
        throw Error(ErrorKind::UniverseMismatch, "range of edge '" + e.id + "'");
      }
      if (e.range.empty()) throw Error(ErrorKind::EmptyRange, "edge '" + e.id + "'");
    }
    for (const auto& f : families_) {
      if (!ids.insert(f.id).second) throw Error(ErrorKind::DuplicateId, "family '" + f.id + "'");
      if (f.step < 1) throw Error(ErrorKind::InvalidArgument, "family '" + f.id + "' step");
      if (!f.fixed_range.universe().compatible(universe_)) {
        throw Error(ErrorKind::UniverseMismatch, "range of family '" + f.id + "'");
      }
      if (f.range_offsets.empty() && f.fixed_range.empty()) {
        throw Error(ErrorKind::EmptyRange, "family '" + f.id + "'");
      }
      bool uses_offsets = f.source_offset || !f.range_offsets.empty();
      if (uses_offsets && !tail_) {
        throw Error(ErrorKind::UndeclaredVertex, "family '" + f.id + "' uses offsets without a tail");
      }
      if (f.has_fixed_source() && !universe_.contains(f.fixed_source)) {
        throw Error(ErrorKind::UndeclaredVertex, "source of family '" + f.id + "'");
      }
      if (!tail_) continue;
      // Every member below the tail start must resolve to a declared vertex.
      std::int64_t lowest = 0;
      if (f.source_offset) lowest = std::min(lowest, *f.source_offset);
      for (std::int64_t d : f.range_offsets) lowest = std::min(lowest, d);
      std::int64_t last = std::max(f.start, tail_->start - lowest);
      for (std::int64_t n = f.start; n <= last; n += f.step) {
        if (f.source_offset) must_resolve(n + *f.source_offset, f.id);
        for (std::int64_t d : f.range_offsets) must_resolve(n + d, f.id);
      }
    }
  }

  std::vector<std::string> exceptional_;
  std::optional<TailSpec> tail_;
  std::vector<Edge> edges_;
  std::vector<EdgeFamily> families_;
  Universe universe_ = Universe::finite(0);
  std::unordered_map<std::string, VertexKey> exceptional_index_;
  std::map<std::int64_t, VertexKey> indexed_exceptional_;
};

}  // namespace ultra

#endif  // ULTRA_SYMBOLIC_HPP_
