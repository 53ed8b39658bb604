#ifndef ULTRA_PROJECTION_HPP_
#define ULTRA_PROJECTION_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "singular.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"

namespace ultra {

struct ProjectionTerm {
  Rational coefficient;
  VertexSet set;
};

// Formal sum of commuting projections p_A with rational coefficients.
// Canonical form: one term per set, no empty sets, no zero coefficients,
// terms in canonical set order.
class ProjectionCombo {
 public:
  ProjectionCombo() = default;
  explicit ProjectionCombo(std::vector<ProjectionTerm> terms) : terms_(std::move(terms)) {}

  void add(Rational c, VertexSet s) { terms_.push_back({std::move(c), std::move(s)}); }

  const std::vector<ProjectionTerm>& terms() const noexcept { return terms_; }

  ProjectionCombo canonical() const {
    std::vector<ProjectionTerm> sorted = terms_;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (!sorted[i].set.universe().compatible(sorted[0].set.universe())) {
        throw Error(ErrorKind::UniverseMismatch, "projection terms over different universes");
      }
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ProjectionTerm& a, const ProjectionTerm& b) { return a.set < b.set; });
    std::vector<ProjectionTerm> out;
    for (auto& t : sorted) {
      if (t.set.empty()) continue;
      if (!out.empty() && out.back().set == t.set) {
        out.back().coefficient += t.coefficient;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const ProjectionTerm& t) { return t.coefficient == 0; });
    return ProjectionCombo(std::move(out));
  }

 private:
  std::vector<ProjectionTerm> terms_;
};

// Q(B, C) = p_B - p_B p_C, the indicator of B \ C.
struct OrthoAtom {
  VertexSet b;
  VertexSet c;
  Rational coefficient;
  std::vector<std::size_t> index;  // the subset I that produced the atom

  VertexSet support() const { return b.minus(c); }
};

inline constexpr std::size_t kOrthogonalizeLimit = 16;

inline Rational evaluate(const ProjectionCombo& c, VertexKey v) {
  Rational sum = 0;
  for (const auto& t : c.terms()) {
    if (t.set.contains(v)) sum += t.coefficient;
  }
  return sum;
}

inline Rational evaluate(const std::vector<OrthoAtom>& atoms, VertexKey v) {
  Rational sum = 0;
  for (const auto& a : atoms) {
    if (a.b.contains(v) && !a.c.contains(v)) sum += a.coefficient;
  }
  return sum;
}

namespace detail {

// Nonempty subsets of {0..n-1} as sorted index lists, lexicographic.
inline void lex_subsets(std::size_t n, std::size_t from, std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    out.push_back(cur);
    lex_subsets(n, i + 1, cur, out);
    cur.pop_back();
  }
}

inline OrthoAtom make_atom(const std::vector<VertexSet>& sets, const Universe& u,
                           const std::vector<std::size_t>& index, Rational coefficient) {
  VertexSet b = VertexSet::full(u);
  VertexSet c = VertexSet::empty(u);
  std::size_t j = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (j < index.size() && index[j] == i) {
      b = b.intersect(sets[i]);
      ++j;
    } else {
      c = c.unite(sets[i]);
    }
  }
  return OrthoAtom{std::move(b), std::move(c), std::move(coefficient), index};
}

}  // namespace detail

// Rewrites Σ λ_k p_{A_k} as Σ_{I ≠ ∅} a_I Q(⋂_{i∈I} A_i, ⋃_{i∉I} A_i) with
// a_I = Σ_{i∈I} λ_i over the canonical terms. Atoms with zero coefficient or
// empty support are dropped; the rest are pairwise disjoint.
inline std::vector<OrthoAtom> orthogonalize(const ProjectionCombo& combo,
                                            std::size_t max_terms = kOrthogonalizeLimit) {
  ProjectionCombo c = combo.canonical();
  const auto& terms = c.terms();
  if (terms.size() > max_terms) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(terms.size()) + " projection terms");
  }
  if (terms.empty()) return {};
  std::vector<VertexSet> sets;
  for (const auto& t : terms) sets.push_back(t.set);
  // B ranges over intersections of the given sets, so the unit is never needed
  // for nonempty I; a full set stands in only as the start of the fold.
  Universe u = sets.front().universe();
  u.has_unit = true;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  detail::lex_subsets(sets.size(), 0, cur, subsets);
  std::vector<OrthoAtom> out;
  for (const auto& index : subsets) {
    Rational a = 0;
    for (std::size_t i : index) a += terms[i].coefficient;
    if (a == 0) continue;
    OrthoAtom atom = detail::make_atom(sets, u, index, a);
    if (atom.support().empty()) continue;
    out.push_back(std::move(atom));
  }
  return out;
}

// All 2^n atoms Q(⋂_{i∈I} A_i, ⋃_{i∉I} A_i), I ⊆ {1..n}, each with coefficient
// 1; the empty I comes first and uses the whole vertex set. Their indicators
// sum to 1.
inline std::vector<OrthoAtom> partition_identity(const Universe& u, const std::vector<VertexSet>& sets,
                                                 std::size_t max_sets = kOrthogonalizeLimit) {
  if (!u.has_unit) throw Error(ErrorKind::NoUnit, "the vertex set is not in the set algebra");
  if (sets.size() > max_sets) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(sets.size()) + " sets");
  }
  for (const auto& s : sets) {
    if (!s.universe().compatible(u)) throw Error(ErrorKind::UniverseMismatch, "partition_identity");
  }
  std::vector<std::vector<std::size_t>> subsets{{}};
  std::vector<std::size_t> cur;
  detail::lex_subsets(sets.size(), 0, cur, subsets);
  std::vector<OrthoAtom> out;
  for (const auto& index : subsets) out.push_back(detail::make_atom(sets, u, index, 1));
  return out;
}

// Support of the gauge-invariant ideal of compacts: T = {v : 0 < |s^{-1}(v)| < ∞}.
inline VertexSet regular_ideal_support(const Ultragraph& g) {
  VertexSet s = sinks(g);
  if (!s.empty()) {
    std::string names;
    for (VertexKey v : s.members()) names += (names.empty() ? "" : " ") + g.name(v);
    throw Error(ErrorKind::HasSinks, names);
  }
  return g.all_vertices().minus(singular_vertices(g));
}

inline VertexSet regular_ideal_support(const SymbolicUltragraph& g) {
  VertexSet s = sinks(g);
  if (!s.empty()) {
    std::string names;
    if (s.is_cofinite()) {
      names = "infinitely many tail vertices";
    } else {
      for (VertexKey v : s.members()) names += (names.empty() ? "" : " ") + g.name(v);
    }
    throw Error(ErrorKind::HasSinks, names);
  }
  return infinite_emitters(g).complement();
}

}  // namespace ultra

#endif  // ULTRA_PROJECTION_HPP_
