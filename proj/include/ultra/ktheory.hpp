#ifndef ULTRA_KTHEORY_HPP_
#define ULTRA_KTHEORY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "numeric.hpp"

namespace ultra {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  IntMatrix columns(std::size_t from, std::size_t to) const {
    IntMatrix out(rows_, to - from);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = from; j < to; ++j) out(i, j - from) = (*this)(i, j);
    }
    return out;
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<Integer> apply(const std::vector<Integer>& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    }
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row_a += q * row_b
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += q * (*this)(b, j);
  }
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += q * (*this)(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace detail

// Pivot: smallest nonzero absolute value in the remaining block, ties to the
// lowest row and then the lowest column.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SmithForm s{m, IntMatrix::identity(r), IntMatrix::identity(c), 0};
  IntMatrix& d = s.d;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Integer best_abs;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = detail::abs_int(d(i, j));
          if (!best || a < best_abs) {
            best = {i, j};
            best_abs = a;
          }
        }
      }
      if (!best) return s;
      d.swap_rows(t, best->first);
      s.u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      s.v.swap_cols(t, best->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < r && !bad; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      d.add_row(t, *bad, 1);
      s.u.add_row(t, *bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

// Exact determinant by fraction-free elimination.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool verify_smith(const IntMatrix& m, const SmithForm& s) {
  if (!(s.u * m * s.v == s.d)) return false;
  for (std::size_t i = 0; i < s.d.rows(); ++i) {
    for (std::size_t j = 0; j < s.d.cols(); ++j) {
      if (i != j && s.d(i, j) != 0) return false;
    }
  }
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
  }
  return detail::abs_int(determinant(s.u)) == 1 && detail::abs_int(determinant(s.v)) == 1;
}

// K_0 = coker(A^t - I), K_1 = ker(A^t - I).
struct KGroups {
  std::vector<Integer> k0_invariant_factors;  // those > 1
  std::size_t k0_free_rank = 0;
  std::size_t k1_free_rank = 0;
  std::vector<std::vector<Integer>> k1_basis;

  std::string k0_string() const {
    std::string out;
    for (const auto& d : k0_invariant_factors) out += (out.empty() ? "" : " + ") + ("Z/" + d.str());
    if (k0_free_rank > 0) {
      out += (out.empty() ? "" : " + ") +
             (k0_free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(k0_free_rank));
    }
    return out.empty() ? "0" : out;
  }
  std::string k1_string() const {
    if (k1_free_rank == 0) return "0";
    return k1_free_rank == 1 ? "Z" : "Z^" + std::to_string(k1_free_rank);
  }
};

inline IntMatrix transpose_minus_identity(const ZeroOneMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (a.at(j, i) ? 1 : 0) - (i == j ? 1 : 0);
  }
  return m;
}

inline KGroups k_groups(const ZeroOneMatrix& a) {
  if (a.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  IntMatrix m = transpose_minus_identity(a);
  SmithForm s = smith_normal_form(m);
  KGroups k;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.d(i, i) > 1) k.k0_invariant_factors.push_back(s.d(i, i));
  }
  k.k0_free_rank = a.size() - s.rank;
  k.k1_free_rank = a.size() - s.rank;
  for (std::size_t j = s.rank; j < a.size(); ++j) k.k1_basis.push_back(s.v.column(j));
  return k;
}

// ---- symbolic integer matrices -------------------------------------------------

// All columns from `from_col` on carry `value`.
struct ConstantTail {
  std::int64_t from_col = 0;
  Integer value;
  friend bool operator==(const ConstantTail&, const ConstantTail&) = default;
};

struct SymbolicRow {
  std::map<std::int64_t, Integer> fixed;    // column -> value
  std::map<std::int64_t, Integer> offsets;  // column i + d -> value (pattern rows only)
  std::optional<ConstantTail> tail;

  void add_fixed(std::int64_t j, const Integer& v) {
    if ((fixed[j] += v) == 0) fixed.erase(j);
  }
  void add_offset(std::int64_t d, const Integer& v) {
    if ((offsets[d] += v) == 0) offsets.erase(d);
  }
  friend bool operator==(const SymbolicRow&, const SymbolicRow&) = default;
};

// Integer matrix over {base, base+1, ...}: explicit rows below `threshold`,
// then one row pattern per residue of (i - threshold) modulo the period.
class SymbolicIntMatrix {
 public:
  SymbolicIntMatrix() = default;
  SymbolicIntMatrix(std::int64_t base, std::int64_t threshold, std::map<std::int64_t, SymbolicRow> rows,
                    std::vector<SymbolicRow> patterns)
      : base_(base), threshold_(threshold), rows_(std::move(rows)), patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw Error(ErrorKind::InvalidArgument, "symbolic matrix needs a row pattern");
    if (threshold_ < base_) throw Error(ErrorKind::InvalidArgument, "threshold below the base");
    for (std::int64_t i = base_; i < threshold_; ++i) {
      if (!rows_.count(i)) rows_[i] = SymbolicRow{};
    }
  }

  std::int64_t base() const noexcept { return base_; }
  std::int64_t threshold() const noexcept { return threshold_; }
  std::int64_t period() const noexcept { return static_cast<std::int64_t>(patterns_.size()); }
  const std::map<std::int64_t, SymbolicRow>& explicit_rows() const noexcept { return rows_; }
  const std::vector<SymbolicRow>& patterns() const noexcept { return patterns_; }

  const SymbolicRow& row(std::int64_t i) const {
    if (i < base_) throw Error(ErrorKind::InvalidArgument, "row below the base");
    if (i < threshold_) return rows_.at(i);
    return patterns_[static_cast<std::size_t>(mod_floor(i - threshold_, period()))];
  }

  Integer entry(std::int64_t i, std::int64_t j) const {
    const SymbolicRow& r = row(i);
    Integer v = 0;
    if (auto it = r.fixed.find(j); it != r.fixed.end()) v += it->second;
    if (i >= threshold_) {
      if (auto it = r.offsets.find(j - i); it != r.offsets.end()) v += it->second;
    }
    if (r.tail && j >= r.tail->from_col) v += r.tail->value;
    return v;
  }

  // Largest |d| among pattern offsets with nonzero coefficient.
  std::int64_t offset_reach() const noexcept {
    std::int64_t k = 0;
    for (const auto& p : patterns_) {
      for (const auto& [d, v] : p.offsets) {
        if (v != 0) k = std::max(k, d < 0 ? -d : d);
      }
    }
    return k;
  }

  // The n x n corner over {base, ..., base+n-1}.
  IntMatrix truncate(std::size_t n) const {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = entry(base_ + static_cast<std::int64_t>(i), base_ + static_cast<std::int64_t>(j));
      }
    }
    return m;
  }

 private:
  std::int64_t base_ = 0;
  std::int64_t threshold_ = 0;
  std::map<std::int64_t, SymbolicRow> rows_;
  std::vector<SymbolicRow> patterns_;
};

// A^t - I for a symbolic {0,1} matrix. Row j of A^t is column j of A.
inline SymbolicIntMatrix transpose_minus_identity(const SymbolicZeroOneMatrix& a) {
  const std::int64_t base = a.base();
  const std::int64_t p = a.period();
  std::int64_t t = a.settled_from();
  for (const auto& [i, r] : a.rows()) {
    if (!r.items.empty()) t = std::max(t, r.items.back() + 1);
  }
  for (const auto& pat : a.patterns()) {
    if (!pat.fixed.items.empty()) t = std::max(t, pat.fixed.items.back() + 1);
    for (std::int64_t d : pat.offsets) t = std::max(t, pat.start + d + 1);
  }
  std::int64_t reach = 0;
  for (const auto& pat : a.patterns()) {
    for (std::int64_t d : pat.offsets) reach = std::max(reach, d < 0 ? -d : d);
  }
  t += reach;

  // Infinitely many rows i of A hold column j: they become a constant tail.
  auto infinite_column = [&](const RowPattern& pat, SymbolicRow& out) {
    if (pat.step != 1) {
      throw Error(ErrorKind::NotRepresentable, "periodic column in the transpose");
    }
    if (out.tail) {
      if (out.tail->from_col != pat.start) throw Error(ErrorKind::NotRepresentable, "two column tails");
      out.tail->value += 1;
    } else {
      out.tail = ConstantTail{pat.start, 1};
    }
  };

  std::map<std::int64_t, SymbolicRow> rows;
  for (std::int64_t j = base; j < t; ++j) {
    SymbolicRow r;
    for (const auto& [i, row] : a.rows()) {
      if (row.contains(j)) r.add_fixed(i, 1);
    }
    for (const auto& pat : a.patterns()) {
      if (pat.fixed.contains(j)) {
        infinite_column(pat, r);
        // A pattern row that also holds column j through an offset would count
        // it twice; entries are 0/1 so the fixed set wins.
        for (std::int64_t d : pat.offsets) {
          if (pat.covers(j - d)) r.add_fixed(j - d, -1);
        }
      }
      for (std::int64_t d : pat.offsets) {
        if (pat.covers(j - d) && !pat.fixed.contains(j)) r.add_fixed(j - d, 1);
      }
    }
    r.add_fixed(j, -1);
    rows[j] = std::move(r);
  }
  std::vector<SymbolicRow> patterns;
  for (std::int64_t k = 0; k < p; ++k) {
    const std::int64_t j = t + k;  // representative of the residue
    SymbolicRow r;
    for (const auto& [i, row] : a.rows()) {
      if (row.contains(j)) r.add_fixed(i, 1);
    }
    for (const auto& pat : a.patterns()) {
      if (pat.fixed.cofinite) infinite_column(pat, r);
      for (std::int64_t d : pat.offsets) {
        if (pat.covers(j - d) && !pat.fixed.contains(j)) r.add_offset(-d, 1);
      }
    }
    r.add_offset(0, -1);
    patterns.push_back(std::move(r));
  }
  return SymbolicIntMatrix(base, t, std::move(rows), std::move(patterns));
}

// Integer vector over {base, ...}: explicit prefix, then a constant.
struct EventuallyConstantVector {
  std::int64_t base = 0;
  std::vector<Integer> prefix;
  Integer tail_value = 0;

  static EventuallyConstantVector delta(std::int64_t base, std::int64_t k) {
    EventuallyConstantVector v{base, std::vector<Integer>(static_cast<std::size_t>(k - base + 1)), 0};
    v.prefix.back() = 1;
    return v;
  }

  Integer at(std::int64_t i) const {
    if (i < base) throw Error(ErrorKind::InvalidArgument, "index below the base");
    std::size_t k = static_cast<std::size_t>(i - base);
    return k < prefix.size() ? prefix[k] : tail_value;
  }

  EventuallyConstantVector normalized() const {
    EventuallyConstantVector v = *this;
    while (!v.prefix.empty() && v.prefix.back() == v.tail_value) v.prefix.pop_back();
    return v;
  }

  friend bool operator==(const EventuallyConstantVector& a, const EventuallyConstantVector& b) {
    auto x = a.normalized();
    auto y = b.normalized();
    return x.base == y.base && x.prefix == y.prefix && x.tail_value == y.tail_value;
  }

  std::string str() const {
    std::string out = "(";
    for (const auto& x : prefix) out += x.str() + ",";
    return out + tail_value.str() + ",...)";
  }
};

// M x, exactly. A row with a constant tail against a vector that does not
// vanish eventually diverges; a result that differs between residues is not
// eventually constant.
inline EventuallyConstantVector apply_symbolic(const SymbolicIntMatrix& m, const EventuallyConstantVector& x) {
  if (m.base() != x.base) throw Error(ErrorKind::InvalidArgument, "vector and matrix bases differ");
  const std::int64_t end = x.base + static_cast<std::int64_t>(x.prefix.size());  // x is constant from here
  auto row_value = [&](std::int64_t i) {
    const SymbolicRow& r = m.row(i);
    Integer y = 0;
    for (const auto& [j, v] : r.fixed) y += v * x.at(j);
    if (i >= m.threshold()) {
      for (const auto& [d, v] : r.offsets) {
        if (i + d >= x.base) y += v * x.at(i + d);
      }
    }
    if (r.tail && r.tail->value != 0) {
      if (x.tail_value != 0) throw Error(ErrorKind::NotEventuallyConstant, "row " + std::to_string(i) + " diverges");
      for (std::int64_t j = r.tail->from_col; j < end; ++j) y += r.tail->value * x.at(j);
    }
    return y;
  };
  std::int64_t stable = std::max(m.threshold(), end) + m.offset_reach() + 1;
  for (const auto& [i, r] : m.explicit_rows()) {
    for (const auto& [j, v] : r.fixed) stable = std::max(stable, j + 1);
  }
  for (const auto& r : m.patterns()) {
    for (const auto& [j, v] : r.fixed) stable = std::max(stable, j + 1);
  }
  EventuallyConstantVector y{x.base, {}, 0};
  for (std::int64_t i = x.base; i < stable; ++i) y.prefix.push_back(row_value(i));
  Integer tail = row_value(stable);
  for (std::int64_t k = 1; k < m.period(); ++k) {
    if (row_value(stable + k) != tail) {
      throw Error(ErrorKind::NotEventuallyConstant, "result differs between residues");
    }
  }
  y.tail_value = tail;
  return y.normalized();
}

// ---- truncated kernels -------------------------------------------------------

// Hermite form of a lattice basis read from the last coordinate: each row's
// last nonzero entry is a positive pivot, entries above other rows' pivots are
// reduced into [0, pivot), rows sorted by pivot position.
inline std::vector<std::vector<Integer>> canonical_basis(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> done;
  std::vector<std::size_t> pivots;
  for (std::size_t c = n; c-- > 0;) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (!best || detail::abs_int(rows[i][c]) < detail::abs_int(rows[*best][c])) best = i;
      }
      if (!best) break;
      bool alone = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == *best || rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[*best][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[*best][j];
        alone = alone && rows[i][c] == 0;
      }
      if (!alone) continue;
      std::vector<Integer> piv = rows[*best];
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(*best));
      if (piv[c] < 0) {
        for (auto& x : piv) x = -x;
      }
      for (auto& r : done) {
        Integer q = r[c] / piv[c];
        if (r[c] - q * piv[c] < 0) q -= 1;
        for (std::size_t j = 0; j < n; ++j) r[j] -= q * piv[j];
      }
      done.push_back(std::move(piv));
      pivots.push_back(c);
      break;
    }
  }
  std::reverse(done.begin(), done.end());
  return done;
}

inline std::vector<Integer> trim_zeros(std::vector<Integer> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Integer kernel basis of m.
inline std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = s.rank; j < m.cols(); ++j) out.push_back(s.v.column(j));
  return out;
}

struct TruncationStep {
  std::size_t size = 0;
  std::size_t rank = 0;
  std::vector<std::vector<Integer>> basis;  // canonical, trailing zeros trimmed
};

struct KernelStabilization {
  std::int64_t reach = 0;  // K: coordinates past N - K are excluded
  std::vector<TruncationStep> steps;
  bool stabilized = false;
};

// For each N, the kernel of the N x N corner among vectors supported on the
// first N - K coordinates.
inline KernelStabilization truncated_kernel_stabilization(const SymbolicIntMatrix& m,
                                                          const std::vector<std::size_t>& sizes) {
  KernelStabilization out;
  out.reach = m.offset_reach();
  for (std::size_t n : sizes) {
    TruncationStep step;
    step.size = n;
    const std::size_t k = static_cast<std::size_t>(out.reach);
    if (n > k) {
      IntMatrix block = m.truncate(n).columns(0, n - k);
      for (auto& v : canonical_basis(kernel_basis(block))) step.basis.push_back(trim_zeros(std::move(v)));
    }
    step.rank = step.basis.size();
    out.steps.push_back(std::move(step));
  }
  out.stabilized = !out.steps.empty();
  for (std::size_t i = 1; i < out.steps.size(); ++i) {
    if (out.steps[i].rank != out.steps[0].rank || out.steps[i].basis != out.steps[0].basis) out.stabilized = false;
  }
  return out;
}

inline KernelStabilization truncated_kernel_stabilization(const SymbolicZeroOneMatrix& a,
                                                          const std::vector<std::size_t>& sizes) {
  return truncated_kernel_stabilization(transpose_minus_identity(a), sizes);
}

// ---- extensions ----------------------------------------------------------------

// Necessary condition for a unital graph algebra: rank K_1 <= rank K_0.
inline bool graph_algebra_rank_obstruction(std::size_t k0_rank, std::size_t k1_rank) { return k1_rank <= k0_rank; }

struct RankPair {
  std::size_t k0 = 0;
  std::size_t k1 = 0;
  friend bool operator==(const RankPair&, const RankPair&) = default;
};

// Rank bookkeeping for 0 -> I -> E -> Q -> 0: exactness of the six-term
// sequence forces rank K_1(E) - rank K_0(E) = (i1 - i0) + (q1 - q0), and each
// rank of E is at most the sum of the neighbouring ranks.
struct SixTermReport {
  RankPair ideal;
  RankPair quotient;
  std::int64_t rank_difference = 0;  // rank K_1(E) - rank K_0(E)
  std::vector<RankPair> feasible;
  bool k0_less_than_k1 = false;
  bool graph_algebra_possible = false;  // some feasible pair passes the rank test
};

inline SixTermReport six_term_report(RankPair ideal, RankPair quotient) {
  SixTermReport r{ideal, quotient, 0, {}, false, false};
  r.rank_difference = (static_cast<std::int64_t>(ideal.k1) - static_cast<std::int64_t>(ideal.k0)) +
                      (static_cast<std::int64_t>(quotient.k1) - static_cast<std::int64_t>(quotient.k0));
  const std::size_t max0 = ideal.k0 + quotient.k0;
  const std::size_t max1 = ideal.k1 + quotient.k1;
  for (std::size_t k0 = 0; k0 <= max0; ++k0) {
    for (std::size_t k1 = 0; k1 <= max1; ++k1) {
      if (static_cast<std::int64_t>(k1) - static_cast<std::int64_t>(k0) != r.rank_difference) continue;
      r.feasible.push_back({k0, k1});
      if (graph_algebra_rank_obstruction(k0, k1)) r.graph_algebra_possible = true;
    }
  }
  r.k0_less_than_k1 = r.rank_difference > 0;
  return r;
}

}  // namespace ultra

#endif  // ULTRA_KTHEORY_HPP_
