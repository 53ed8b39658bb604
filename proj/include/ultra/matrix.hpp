#ifndef ULTRA_MATRIX_HPP_
#define ULTRA_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

// Square {0,1} matrix over the index set {1, ..., n}.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    ZeroOneMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] != 0 && rows[i][j] != 1) throw Error(ErrorKind::InvalidArgument, "entry is not 0 or 1");
        m.set(i, j, rows[i][j] == 1);
      }
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  // Zero-based positions; row/column i carries the label i + 1.
  bool at(std::size_t i, std::size_t j) const { return data_.at(i * n_ + j) != 0; }
  void set(std::size_t i, std::size_t j, bool v) { data_.at(i * n_ + j) = v ? 1 : 0; }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j)) return false;
    }
    return true;
  }

  ZeroOneMatrix permuted(const std::vector<std::size_t>& perm) const {
    ZeroOneMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) m.set(perm[i], perm[j], at(i, j));
    }
    return m;
  }

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

// A finite or cofinite set of integer indices.
struct IndexSet {
  bool cofinite = false;
  std::vector<std::int64_t> items;  // sorted; the complement if cofinite

  static IndexSet of(std::vector<std::int64_t> v, bool cofinite = false) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return IndexSet{cofinite, std::move(v)};
  }
  bool contains(std::int64_t i) const {
    bool in = std::binary_search(items.begin(), items.end(), i);
    return cofinite ? !in : in;
  }
  bool empty() const noexcept { return !cofinite && items.empty(); }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// rows i >= start [step k] : { i+d ..., fixed ... }
struct RowPattern {
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::vector<std::int64_t> offsets;
  IndexSet fixed;

  bool covers(std::int64_t i) const noexcept { return i >= start && (i - start) % step == 0; }
  friend bool operator==(const RowPattern&, const RowPattern&) = default;
};

// {0,1} matrix over {base, base+1, ...}: finitely many explicit rows plus
// eventually periodic row patterns. Every index is covered exactly once.
class SymbolicZeroOneMatrix {
 public:
  SymbolicZeroOneMatrix() = default;
  SymbolicZeroOneMatrix(std::int64_t base, std::map<std::int64_t, IndexSet> rows, std::vector<RowPattern> patterns)
      : base_(base), rows_(std::move(rows)), patterns_(std::move(patterns)) {
    validate();
  }

  std::int64_t base() const noexcept { return base_; }
  const std::map<std::int64_t, IndexSet>& rows() const noexcept { return rows_; }
  const std::vector<RowPattern>& patterns() const noexcept { return patterns_; }

  std::int64_t period() const noexcept {
    std::int64_t p = 1;
    for (const auto& r : patterns_) p = lcm64(p, r.step);
    return p;
  }

  // First index past every explicit row and every pattern start.
  std::int64_t settled_from() const noexcept {
    std::int64_t t = base_;
    if (!rows_.empty()) t = std::max(t, rows_.rbegin()->first + 1);
    for (const auto& r : patterns_) t = std::max(t, r.start);
    return t;
  }

  const IndexSet* explicit_row(std::int64_t i) const {
    auto it = rows_.find(i);
    return it == rows_.end() ? nullptr : &it->second;
  }
  const RowPattern* pattern_for(std::int64_t i) const {
    for (const auto& r : patterns_) {
      if (r.covers(i)) return &r;
    }
    return nullptr;
  }

  bool entry(std::int64_t i, std::int64_t j) const {
    if (const IndexSet* r = explicit_row(i)) return r->contains(j);
    if (const RowPattern* p = pattern_for(i)) {
      if (p->fixed.contains(j)) return true;
      return std::find(p->offsets.begin(), p->offsets.end(), j - i) != p->offsets.end();
    }
    throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i) + " undefined");
  }

  // The n x n corner over {base, ..., base+n-1}.
  ZeroOneMatrix truncate(std::size_t n) const {
    ZeroOneMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, entry(base_ + static_cast<std::int64_t>(i), base_ + static_cast<std::int64_t>(j)));
      }
    }
    return m;
  }

  friend bool operator==(const SymbolicZeroOneMatrix&, const SymbolicZeroOneMatrix&) = default;

 private:
  void validate() const {
    for (const auto& [i, r] : rows_) {
      if (i < base_) throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i) + " below the base");
      if (pattern_for(i)) throw Error(ErrorKind::DuplicateId, "row " + std::to_string(i) + " defined twice");
      check_items(r);
    }
    for (const auto& p : patterns_) {
      if (p.step < 1) throw Error(ErrorKind::InvalidArgument, "pattern step");
      for (std::int64_t d : p.offsets) {
        if (p.start + d < base_) throw Error(ErrorKind::UndeclaredVertex, "offset reaches below the base");
      }
      check_items(p.fixed);
    }
    const std::int64_t last = settled_from() + period();
    for (std::int64_t i = base_; i <= last; ++i) {
      int covers = explicit_row(i) ? 1 : 0;
      for (const auto& p : patterns_) covers += p.covers(i) ? 1 : 0;
      if (covers == 0) throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i) + " undefined");
      if (covers > 1) throw Error(ErrorKind::DuplicateId, "row " + std::to_string(i) + " defined twice");
    }
  }
  void check_items(const IndexSet& s) const {
    for (std::int64_t j : s.items) {
      if (j < base_) throw Error(ErrorKind::InvalidArgument, "column " + std::to_string(j) + " below the base");
    }
  }

  std::int64_t base_ = 0;
  std::map<std::int64_t, IndexSet> rows_;
  std::vector<RowPattern> patterns_;
};

// ---- bridges -----------------------------------------------------------------

// One vertex v_i and one edge i per index, r(i) = {v_j : A(i,j) = 1}.
inline Ultragraph ultragraph_from_matrix(const ZeroOneMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  Universe u = Universe::finite(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.row_is_zero(i)) throw Error(ErrorKind::EmptyRange, "row " + std::to_string(i + 1) + " is zero");
    std::vector<VertexKey> r;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j)) r.push_back(static_cast<VertexKey>(j));
    }
    edges.push_back(Edge{std::to_string(i + 1), static_cast<VertexKey>(i), VertexSet::of(u, std::move(r))});
  }
  return Ultragraph(std::move(names), std::move(edges));
}

// The directed graph with vertex matrix A: one edge i.j per entry A(i,j) = 1.
inline Ultragraph graph_from_matrix(const ZeroOneMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  Universe u = Universe::finite(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.at(i, j)) continue;
      edges.push_back(Edge{std::to_string(i + 1) + "." + std::to_string(j + 1), static_cast<VertexKey>(i),
                           VertexSet::singleton(u, static_cast<VertexKey>(j))});
    }
  }
  return Ultragraph(std::move(names), std::move(edges));
}

// A(e, f) = 1 iff s(f) ∈ r(e), indexed by the edges in order.
inline ZeroOneMatrix edge_matrix(const Ultragraph& g) {
  if (g.has_window_metadata()) throw Error(ErrorKind::InvalidArgument, "edge matrix of a window resolution");
  const std::size_t n = g.edge_count();
  ZeroOneMatrix m(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) m.set(e, f, g.edge(e).range.contains(g.edge(f).source));
  }
  return m;
}

namespace detail {

// Vertices v<i>: exceptional below the first index without an explicit row,
// then a tail with prefix "v".
struct MatrixVertices {
  std::vector<std::string> exceptional;
  TailSpec tail;
};

inline MatrixVertices matrix_vertices(const SymbolicZeroOneMatrix& a) {
  MatrixVertices mv;
  std::int64_t t = a.base();
  if (!a.rows().empty()) t = std::max(t, a.rows().rbegin()->first + 1);
  for (std::int64_t i = a.base(); i < t; ++i) mv.exceptional.push_back("v" + std::to_string(i));
  mv.tail = TailSpec{"v", "n", t};
  return mv;
}

inline VertexKey index_vertex(const SymbolicUltragraph& g, std::int64_t i) {
  auto k = g.resolve_index(i);
  if (!k) throw Error(ErrorKind::UndeclaredVertex, "index " + std::to_string(i));
  return *k;
}

// Every index from the base on is a vertex, so complements carry over.
inline VertexSet index_set_vertices(const SymbolicUltragraph& g, const IndexSet& s) {
  std::vector<VertexKey> keys;
  for (std::int64_t j : s.items) keys.push_back(index_vertex(g, j));
  if (!s.cofinite) return VertexSet::of(g.universe(), std::move(keys));
  return VertexSet::all_but(g.universe(), std::move(keys));
}

inline std::string family_name(std::size_t k) { return k == 0 ? "e" : "e_" + std::to_string(k); }

}  // namespace detail

// Symbolic version: explicit rows become edges named by their index, each row
// pattern a family e, e_1, ... whose member e[i] is the edge of row i.
inline SymbolicUltragraph ultragraph_from_matrix(const SymbolicZeroOneMatrix& a) {
  detail::MatrixVertices mv = detail::matrix_vertices(a);
  // Vertex-only ultragraph to resolve indices to keys.
  SymbolicUltragraph shell(mv.exceptional, mv.tail, {}, {});
  std::vector<Edge> edges;
  for (const auto& [i, row] : a.rows()) {
    if (row.empty()) throw Error(ErrorKind::EmptyRange, "row " + std::to_string(i) + " is zero");
    edges.push_back(Edge{std::to_string(i), detail::index_vertex(shell, i),
                         detail::index_set_vertices(shell, row)});
  }
  std::vector<EdgeFamily> families;
  for (std::size_t k = 0; k < a.patterns().size(); ++k) {
    const RowPattern& p = a.patterns()[k];
    if (p.offsets.empty() && p.fixed.empty()) {
      throw Error(ErrorKind::EmptyRange, "rows from " + std::to_string(p.start) + " are zero");
    }
    EdgeFamily f;
    f.id = detail::family_name(k);
    f.param = "n";
    f.start = p.start;
    f.step = p.step;
    f.source_offset = 0;
    f.range_offsets = p.offsets;
    f.fixed_range = detail::index_set_vertices(shell, p.fixed);
    families.push_back(std::move(f));
  }
  return SymbolicUltragraph(mv.exceptional, mv.tail, std::move(edges), std::move(families));
}

// Symbolic Gr(A). A cofinite explicit row makes its vertex an infinite
// emitter: the columns past the row's support form a fixed-source family
// g<i>; the rest are edges i.j. Each item of a row pattern becomes a family
// e<k>x<m> with one edge per row.
inline SymbolicUltragraph graph_from_matrix(const SymbolicZeroOneMatrix& a) {
  detail::MatrixVertices mv = detail::matrix_vertices(a);
  SymbolicUltragraph shell(mv.exceptional, mv.tail, {}, {});
  auto single = [&](std::int64_t j) { return VertexSet::singleton(shell.universe(), detail::index_vertex(shell, j)); };
  std::vector<Edge> edges;
  std::vector<EdgeFamily> families;
  for (const auto& [i, row] : a.rows()) {
    VertexKey src = detail::index_vertex(shell, i);
    if (!row.cofinite) {
      for (std::int64_t j : row.items) edges.push_back(Edge{std::to_string(i) + "." + std::to_string(j), src, single(j)});
      continue;
    }
    std::int64_t from = std::max(mv.tail.start, row.items.empty() ? a.base() : row.items.back() + 1);
    for (std::int64_t j = a.base(); j < from; ++j) {
      if (row.contains(j)) edges.push_back(Edge{std::to_string(i) + "." + std::to_string(j), src, single(j)});
    }
    EdgeFamily f;
    f.id = "g" + std::to_string(i);
    f.start = from;
    f.fixed_source = src;
    f.range_offsets = {0};
    f.fixed_range = VertexSet::empty(shell.universe());
    families.push_back(std::move(f));
  }
  for (std::size_t k = 0; k < a.patterns().size(); ++k) {
    const RowPattern& p = a.patterns()[k];
    if (p.fixed.cofinite) {
      throw Error(ErrorKind::NotRepresentable, "a cofinite row pattern gives infinitely many infinite emitters");
    }
    std::size_t m = 0;
    auto base_family = [&]() {
      EdgeFamily f;
      f.id = "e" + std::to_string(k) + "x" + std::to_string(m++);
      f.start = p.start;
      f.step = p.step;
      f.source_offset = 0;
      f.fixed_range = VertexSet::empty(shell.universe());
      return f;
    };
    for (std::int64_t d : p.offsets) {
      EdgeFamily f = base_family();
      f.range_offsets = {d};
      families.push_back(std::move(f));
    }
    for (std::int64_t j : p.fixed.items) {
      EdgeFamily f = base_family();
      f.fixed_range = single(j);
      families.push_back(std::move(f));
    }
  }
  return SymbolicUltragraph(mv.exceptional, mv.tail, std::move(edges), std::move(families));
}

}  // namespace ultra

#endif  // ULTRA_MATRIX_HPP_
