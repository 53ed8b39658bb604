#ifndef ULTRA_VERTEX_SET_HPP_
#define ULTRA_VERTEX_SET_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace ultra {

using VertexKey = std::uint32_t;

// The vertex universe a set lives in: either {0, ..., size-1} or all of N.
// `has_unit` records whether the full vertex set is an element of the
// generated set algebra (always true for finite universes).
struct Universe {
  std::optional<std::size_t> size;
  bool has_unit = true;

  static Universe finite(std::size_t n) { return Universe{n, true}; }
  static Universe infinite(bool has_unit = true) { return Universe{std::nullopt, has_unit}; }

  bool is_finite() const noexcept { return size.has_value(); }
  bool contains(VertexKey v) const noexcept { return !size || v < *size; }

  // Unit metadata does not participate in compatibility checks.
  bool compatible(const Universe& other) const noexcept { return size == other.size; }
};

// Exact finite-or-cofinite subset of a universe. Over a finite universe the
// polarity is always Finite; the complement is materialized.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Universe u) : universe_(u) {}

  static VertexSet of(Universe u, std::vector<VertexKey> members) {
    VertexSet s(u);
    s.support_ = normalize(std::move(members));
    s.check_support();
    return s;
  }

  static VertexSet all_but(Universe u, std::vector<VertexKey> missing) {
    VertexSet s(u);
    s.support_ = normalize(std::move(missing));
    s.check_support();
    if (u.is_finite()) {
      s.support_ = s.complement_within(*u.size);
    } else {
      s.cofinite_ = true;
    }
    return s;
  }

  static VertexSet empty(Universe u) { return VertexSet(u); }
  static VertexSet full(Universe u) { return all_but(u, {}); }
  static VertexSet singleton(Universe u, VertexKey v) { return of(u, {v}); }

  const Universe& universe() const noexcept { return universe_; }
  bool is_cofinite() const noexcept { return cofinite_; }
  bool is_finite() const noexcept { return !cofinite_; }
  bool empty() const noexcept { return !cofinite_ && support_.empty(); }

  // The members if Finite, the missing vertices if Cofinite.
  const std::vector<VertexKey>& support() const noexcept { return support_; }

  std::size_t size() const {
    if (cofinite_) throw Error(ErrorKind::InvalidArgument, "size of a cofinite set");
    return support_.size();
  }

  const std::vector<VertexKey>& members() const {
    if (cofinite_) throw Error(ErrorKind::InvalidArgument, "members of a cofinite set");
    return support_;
  }

  bool contains(VertexKey v) const noexcept {
    if (!universe_.contains(v)) return false;
    bool in_support = std::binary_search(support_.begin(), support_.end(), v);
    return cofinite_ ? !in_support : in_support;
  }

  bool is_full() const noexcept {
    if (cofinite_) return support_.empty();
    return universe_.is_finite() && support_.size() == *universe_.size;
  }

  VertexSet complement() const {
    VertexSet r(universe_);
    if (universe_.is_finite()) {
      r.support_ = complement_within(*universe_.size);
    } else {
      r.cofinite_ = !cofinite_;
      r.support_ = support_;
    }
    return r;
  }

  VertexSet unite(const VertexSet& o) const {
    check_universe(o);
    VertexSet r(universe_);
    if (!cofinite_ && !o.cofinite_) {
      r.support_ = merge_union(support_, o.support_);
    } else if (cofinite_ && o.cofinite_) {
      r.cofinite_ = true;
      r.support_ = merge_intersection(support_, o.support_);
    } else {
      const VertexSet& co = cofinite_ ? *this : o;
      const VertexSet& fi = cofinite_ ? o : *this;
      r.cofinite_ = true;
      r.support_ = merge_difference(co.support_, fi.support_);
    }
    return r;
  }

  VertexSet intersect(const VertexSet& o) const {
    check_universe(o);
    VertexSet r(universe_);
    if (!cofinite_ && !o.cofinite_) {
      r.support_ = merge_intersection(support_, o.support_);
    } else if (cofinite_ && o.cofinite_) {
      r.cofinite_ = true;
      r.support_ = merge_union(support_, o.support_);
    } else {
      const VertexSet& co = cofinite_ ? *this : o;
      const VertexSet& fi = cofinite_ ? o : *this;
      r.support_ = merge_difference(fi.support_, co.support_);
    }
    return r;
  }

  VertexSet minus(const VertexSet& o) const { return intersect(o.complement()); }

  bool is_subset_of(const VertexSet& o) const { return minus(o).empty(); }

  bool intersects(const VertexSet& o) const { return !intersect(o).empty(); }

  VertexSet with(VertexKey v) const { return unite(singleton(universe_, v)); }
  VertexSet without(VertexKey v) const { return minus(singleton(universe_, v)); }

  VertexSet operator|(const VertexSet& o) const { return unite(o); }
  VertexSet operator&(const VertexSet& o) const { return intersect(o); }
  VertexSet operator-(const VertexSet& o) const { return minus(o); }

  // Structural equality; sets over incompatible universes are never equal.
  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_.compatible(b.universe_) && a.cofinite_ == b.cofinite_ &&
           a.support_ == b.support_;
  }

  // Canonical order: finite sets first, then by support.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
    if (auto c = a.cofinite_ <=> b.cofinite_; c != 0) return c;
    if (auto c = a.support_.size() <=> b.support_.size(); c != 0) return c;
    return a.support_ <=> b.support_;
  }

  // Largest key mentioned by the support, if any.
  std::optional<VertexKey> max_support() const noexcept {
    if (support_.empty()) return std::nullopt;
    return support_.back();
  }

 private:
  static std::vector<VertexKey> normalize(std::vector<VertexKey> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  void check_support() const {
    for (VertexKey v : support_) {
      if (!universe_.contains(v)) {
        throw Error(ErrorKind::InvalidArgument,
                    "vertex " + std::to_string(v) + " outside the universe");
      }
    }
  }

  void check_universe(const VertexSet& o) const {
    if (!universe_.compatible(o.universe_)) {
      throw Error(ErrorKind::UniverseMismatch, "vertex sets over different universes");
    }
  }

  std::vector<VertexKey> complement_within(std::size_t n) const {
    std::vector<VertexKey> out;
    out.reserve(n >= support_.size() ? n - support_.size() : 0);
    std::size_t j = 0;
    for (VertexKey v = 0; v < n; ++v) {
      if (j < support_.size() && support_[j] == v) {
        ++j;
      } else {
        out.push_back(v);
      }
    }
    return out;
  }

  static std::vector<VertexKey> merge_union(const std::vector<VertexKey>& a,
                                            const std::vector<VertexKey>& b) {
    std::vector<VertexKey> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<VertexKey> merge_intersection(const std::vector<VertexKey>& a,
                                                   const std::vector<VertexKey>& b) {
    std::vector<VertexKey> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static std::vector<VertexKey> merge_difference(const std::vector<VertexKey>& a,
                                                 const std::vector<VertexKey>& b) {
    std::vector<VertexKey> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Universe universe_ = Universe::infinite();
  bool cofinite_ = false;
  std::vector<VertexKey> support_;
};

}  // namespace ultra

#endif  // ULTRA_VERTEX_SET_HPP_
