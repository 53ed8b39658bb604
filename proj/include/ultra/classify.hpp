#ifndef ULTRA_CLASSIFY_HPP_
#define ULTRA_CLASSIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "ideals.hpp"
#include "numeric.hpp"
#include "paths.hpp"
#include "singular.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"
#include "window.hpp"

namespace ultra {

namespace cite {
inline constexpr const char* kConditionL = "every loop has an exit";
inline constexpr const char* kLatticeSimplicity = "simple iff (L) and no proper saturated hereditary subcollection";
inline constexpr const char* kReachSimplicity = "simple iff (L), cofinal, singular vertices reached, infinite ranges reached";
inline constexpr const char* kCofinal = "cofinal iff no cycle avoids R(v)";
inline constexpr const char* kAF = "AF iff no loops";
inline constexpr const char* kPurelyInfinite = "purely infinite iff (L) and every vertex connects to a loop";
inline constexpr const char* kDichotomy = "simple algebras are AF or purely infinite";
}  // namespace cite

namespace flag {
inline constexpr const char* kReflexivitySensitive = "reflexivity_sensitive";
inline constexpr const char* kWitnessUnverified = "witness_unverified";
inline constexpr const char* kNotStabilized = "not_stabilized";
inline constexpr const char* kUnliftable = "unliftable";
}  // namespace flag

enum class Status { Decided, Inconclusive };

struct LoopWitness {
  std::vector<std::string> edges;
  friend bool operator==(const LoopWitness&, const LoopWitness&) = default;
};

// `from` does not reach `to` (a singular vertex).
struct UnreachableWitness {
  std::string from;
  std::string to;
  friend bool operator==(const UnreachableWitness&, const UnreachableWitness&) = default;
};

// A proper nonempty saturated hereditary support.
struct SupportWitness {
  VertexSet set;
  std::string display;
  friend bool operator==(const SupportWitness& a, const SupportWitness& b) { return a.set == b.set; }
};

// A cycle of sources that `vertex` cannot reach.
struct CofinalityWitness {
  std::string vertex;
  std::vector<std::string> cycle;
  friend bool operator==(const CofinalityWitness&, const CofinalityWitness&) = default;
};

// `edge` has an infinite range but `vertex` reaches no infinite range at all.
struct RangeCoverWitness {
  std::string edge;
  std::string vertex;
  friend bool operator==(const RangeCoverWitness&, const RangeCoverWitness&) = default;
};

// Positive trail for Condition (L): the edges lying on some loop, and those
// lying on every loop.
struct ExitTrail {
  std::vector<std::string> loop_edges;
  std::vector<std::string> common_edges;
  friend bool operator==(const ExitTrail& a, const ExitTrail& b) { return a.common_edges == b.common_edges; }
};

struct NonConnectingWitness {
  std::string vertex;
  friend bool operator==(const NonConnectingWitness&, const NonConnectingWitness&) = default;
};

using Witness = std::variant<std::monostate, LoopWitness, UnreachableWitness, SupportWitness,
                             CofinalityWitness, RangeCoverWitness, ExitTrail, NonConnectingWitness>;

struct Verdict {
  Status status = Status::Decided;
  bool value = false;
  Witness witness;
  std::optional<std::int64_t> horizon;
  std::vector<std::string> citations;
  std::vector<std::string> flags;
  int failed_condition = 0;  // simplicity via reachability: which of (1)-(4) failed

  bool decided() const noexcept { return status == Status::Decided; }
  bool holds() const noexcept { return decided() && value; }
  bool fails() const noexcept { return decided() && !value; }
  bool has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
  void add_flag(const std::string& f) {
    if (!has_flag(f)) flags.push_back(f);
  }
};

inline Verdict inconclusive(std::vector<std::string> citations, std::string why) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.citations = std::move(citations);
  v.flags.push_back(std::move(why));
  return v;
}

template <class Graph>
std::string describe_set(const Graph& g, const VertexSet& s) {
  std::string out = s.is_cofinite() ? "~{" : "{";
  bool first = true;
  for (VertexKey v : s.support()) {
    out += first ? "" : " ";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

// ---- finite ultragraphs (including window resolutions) -----------------------

namespace detail {

inline std::vector<VertexKey> real_vertices(const Ultragraph& g) {
  std::vector<VertexKey> out;
  for (VertexKey v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_frontier(v)) out.push_back(v);
  }
  return out;
}

// Cycle in the source-transition digraph restricted to `allowed`, as a vertex
// sequence; the frontier carries a self-loop when paths can run off past it.
inline std::optional<std::vector<VertexKey>> find_cycle(const Ultragraph& g, const std::vector<bool>& allowed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexKey>> succ(n);
  for (VertexKey u = 0; u < n; ++u) {
    if (!allowed[u]) continue;
    std::set<VertexKey> next;
    for (std::size_t e : g.out_edges(u)) {
      for (VertexKey w : g.edge(e).range.members()) {
        if (allowed[w] && (!g.out_edges(w).empty() || (g.is_frontier(w) && g.frontier_escapes()))) {
          next.insert(w);
        }
      }
    }
    if (g.is_frontier(u) && g.frontier_escapes()) next.insert(u);
    succ[u].assign(next.begin(), next.end());
  }
  std::vector<int> color(n, 0);
  std::vector<VertexKey> stack;
  std::optional<std::vector<VertexKey>> cycle;
  std::function<bool(VertexKey)> dfs = [&](VertexKey u) {
    color[u] = 1;
    stack.push_back(u);
    for (VertexKey w : succ[u]) {
      if (color[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle = std::vector<VertexKey>(it, stack.end());
        return true;
      }
      if (color[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    color[u] = 2;
    return false;
  };
  for (VertexKey u = 0; u < n; ++u) {
    if (allowed[u] && color[u] == 0 && dfs(u)) return cycle;
  }
  return std::nullopt;
}

inline std::vector<std::string> vertex_names(const Ultragraph& g, const std::vector<VertexKey>& vs) {
  std::vector<std::string> out;
  for (VertexKey v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace detail

inline Verdict condition_L(const Ultragraph& g, Budget& budget) {
  Verdict out;
  out.citations = {cite::kConditionL};
  if (!budget.spend(g.edge_count() + 1)) throw Error(ErrorKind::BudgetExceeded, "condition (L)");
  std::vector<Loop> bad = exitless_loops(g);
  if (!bad.empty()) {
    out.value = false;
    out.witness = LoopWitness{edge_names(g, bad.front().edges)};
    return out;
  }
  out.value = true;
  ExitTrail trail;
  std::vector<bool> on = loop_edges(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (on[e]) trail.loop_edges.push_back(g.edge(e).id);
  }
  trail.common_edges = edge_names(g, edges_on_every_loop(g));
  std::sort(trail.loop_edges.begin(), trail.loop_edges.end());
  std::sort(trail.common_edges.begin(), trail.common_edges.end());
  out.witness = trail;
  return out;
}

inline Verdict is_cofinal(const Ultragraph& g) {
  Verdict out;
  out.citations = {cite::kCofinal};
  for (VertexKey v : detail::real_vertices(g)) {
    VertexSet r = reach_set(g, v);
    std::vector<bool> allowed(g.vertex_count());
    for (VertexKey u = 0; u < g.vertex_count(); ++u) allowed[u] = !r.contains(u);
    if (auto c = detail::find_cycle(g, allowed)) {
      out.value = false;
      out.witness = CofinalityWitness{g.name(v), detail::vertex_names(g, *c)};
      return out;
    }
  }
  out.value = true;
  return out;
}

inline Verdict is_af(const Ultragraph& g, Budget& budget) {
  Verdict out;
  out.citations = {cite::kAF};
  if (!budget.spend(g.edge_count() + 1)) throw Error(ErrorKind::BudgetExceeded, "loop search");
  std::optional<Loop> loop = some_loop(g);
  out.value = !loop;
  if (loop) out.witness = LoopWitness{edge_names(g, loop->edges)};
  return out;
}

inline Verdict is_purely_infinite(const Ultragraph& g, Budget& budget) {
  Verdict out = condition_L(g, budget);
  out.citations = {cite::kPurelyInfinite};
  if (!out.value) return out;
  out.witness = std::monostate{};
  std::vector<bool> ls = loop_sources(g);
  for (VertexKey v : detail::real_vertices(g)) {
    std::vector<bool> r = positive_reach(g, v);
    bool hit = false;
    for (VertexKey u = 0; u < r.size() && !hit; ++u) hit = r[u] && ls[u];
    if (!hit) {
      out.value = false;
      out.witness = NonConnectingWitness{g.name(v)};
      return out;
    }
  }
  return out;
}

inline Verdict is_simple_lattice(const Ultragraph& g, Budget& budget) {
  Verdict out = condition_L(g, budget);
  out.citations = {cite::kLatticeSimplicity};
  if (!out.value) return out;
  // A positive answer keeps the exit trail from (L).
  const VertexSet all = g.all_vertices();
  for (VertexKey v : detail::real_vertices(g)) {
    VertexSet k = saturate(g, hereditary_closure(g, g.vertex_set({v}))).final;
    if (!all.is_subset_of(k)) {
      out.value = false;
      out.witness = SupportWitness{k, describe_set(g, k)};
      return out;
    }
  }
  out.value = true;
  return out;
}

namespace detail {

// Condition (3): every vertex reaches every singular vertex.
inline std::optional<UnreachableWitness> singular_unreached(const Ultragraph& g, bool reflexive) {
  std::vector<VertexKey> real = real_vertices(g);
  std::vector<std::vector<bool>> reach(g.vertex_count());
  for (VertexKey w : real) reach[w] = positive_reach(g, w);
  for (VertexKey s : real) {
    if (!g.is_singular(s)) continue;
    for (VertexKey w : real) {
      bool ok = reach[w][s] || (reflexive && w == s);
      if (!ok) return UnreachableWitness{g.name(w), g.name(s)};
    }
  }
  return std::nullopt;
}

// Condition (4). Infinite ranges are cofinite here, so it asks that every
// vertex reach all but finitely many vertices. In a window that means reaching
// the whole horizon band; band vertices themselves are judged by the next
// window, where they sit below the band.
inline std::optional<RangeCoverWitness> infinite_range_unreached(const Ultragraph& g) {
  std::optional<std::size_t> first;
  for (std::size_t e = 0; e < g.edge_count() && !first; ++e) {
    if (g.has_infinite_range(e)) first = e;
  }
  if (!first) return std::nullopt;
  const std::vector<VertexKey>& band = g.horizon_band();
  for (VertexKey w : real_vertices(g)) {
    if (std::find(band.begin(), band.end(), w) != band.end()) continue;
    std::vector<bool> r = positive_reach(g, w);
    bool all = std::all_of(band.begin(), band.end(), [&](VertexKey u) { return r[u]; });
    if (!all) return RangeCoverWitness{g.edge(*first).id, g.name(w)};
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict is_simple_reach(const Ultragraph& g, Budget& budget) {
  Verdict l = condition_L(g, budget);
  Verdict c = is_cofinal(g);
  auto s3 = detail::singular_unreached(g, true);
  auto s3_strict = detail::singular_unreached(g, false);
  auto s4 = detail::infinite_range_unreached(g);

  Verdict out;
  out.citations = {cite::kReachSimplicity};
  bool rest = l.value && c.value && !s4;
  out.value = rest && !s3;
  bool strict_value = rest && !s3_strict;
  if (strict_value != out.value) out.add_flag(flag::kReflexivitySensitive);
  if (!l.value) {
    out.failed_condition = 1;
    out.witness = l.witness;
  } else if (!c.value) {
    out.failed_condition = 2;
    out.witness = c.witness;
  } else if (s3) {
    out.failed_condition = 3;
    out.witness = *s3;
  } else if (s4) {
    out.failed_condition = 4;
    out.witness = *s4;
  } else {
    out.witness = l.witness;
  }
  return out;
}

namespace detail {

inline Verdict combine_simplicity(Verdict lattice, const Verdict& reach) {
  if (lattice.decided() && reach.decided() && lattice.value != reach.value) {
    throw Error(ErrorKind::InternalDisagreement,
                std::string("lattice characterization says ") + (lattice.value ? "simple" : "not simple") +
                    ", reachability characterization says " + (reach.value ? "simple" : "not simple"));
  }
  Verdict out = lattice;
  if (!reach.decided()) out.status = Status::Inconclusive;
  out.citations = {cite::kLatticeSimplicity, cite::kReachSimplicity};
  for (const auto& f : reach.flags) out.add_flag(f);
  return out;
}

}  // namespace detail

// Both characterizations; disagreement on decided answers is a bug.
inline Verdict is_simple(const Ultragraph& g, Budget& budget) {
  return detail::combine_simplicity(is_simple_lattice(g, budget), is_simple_reach(g, budget));
}

enum class Dichotomy { AF, PurelyInfinite, NotSimple };

inline const char* to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::AF: return "AF";
    case Dichotomy::PurelyInfinite: return "PurelyInfinite";
    case Dichotomy::NotSimple: return "NotSimple";
  }
  return "?";
}

struct DichotomyResult {
  Status status = Status::Decided;
  Dichotomy kind = Dichotomy::NotSimple;
  Verdict simple;
  std::optional<Verdict> af;
  std::optional<Verdict> purely_infinite;
};

namespace detail {

inline DichotomyResult finish_dichotomy(Verdict simple, std::optional<Verdict> af, std::optional<Verdict> pi) {
  DichotomyResult out;
  out.simple = std::move(simple);
  if (!out.simple.decided()) {
    out.status = Status::Inconclusive;
    return out;
  }
  if (!out.simple.value) return out;
  out.af = std::move(af);
  out.purely_infinite = std::move(pi);
  if (!out.af->decided() || !out.purely_infinite->decided()) {
    out.status = Status::Inconclusive;
    return out;
  }
  if (out.af->value == out.purely_infinite->value) {
    throw Error(ErrorKind::InternalDisagreement, "simple algebra is both or neither AF and purely infinite");
  }
  out.kind = out.af->value ? Dichotomy::AF : Dichotomy::PurelyInfinite;
  return out;
}

}  // namespace detail

inline DichotomyResult dichotomy(const Ultragraph& g, Budget& budget) {
  Verdict s = is_simple(g, budget);
  if (!s.holds()) return detail::finish_dichotomy(std::move(s), std::nullopt, std::nullopt);
  return detail::finish_dichotomy(std::move(s), is_af(g, budget), is_purely_infinite(g, budget));
}

// ---- symbolic ultragraphs ----------------------------------------------------
//
// The description is resolved on windows H and H + p. The answer is Decided
// only when both windows agree on the value, on the witness read back
// symbolically, and on which vertices can run past the horizon. Negative
// support witnesses are then re-checked exactly.

namespace detail {

inline std::int64_t pick_horizon(const SymbolicUltragraph& g, std::optional<std::int64_t> h) {
  std::int64_t hz = h.value_or(g.default_horizon());
  if (g.has_tail()) hz = std::max(hz, Window::minimum_horizon(g));
  return hz;
}

inline std::optional<VertexSet> frontier_summary(const Window& w) {
  std::vector<VertexKey> r = reaching_frontier(w.graph());
  r.erase(std::remove(r.begin(), r.end(), w.frontier()), r.end());
  return w.lift(w.graph().vertex_set(std::move(r)));
}

// Witness read back in symbolic terms; support sets are lifted.
inline std::optional<Witness> lift_witness(const Window& w, const Witness& x) {
  if (const auto* s = std::get_if<SupportWitness>(&x)) {
    auto lifted = w.lift(s->set);
    if (!lifted) return std::nullopt;
    return Witness{SupportWitness{*lifted, describe_set(w.source(), *lifted)}};
  }
  return x;
}

inline bool verify_support(const SymbolicUltragraph& g, const VertexSet& k) {
  if (k.empty() || k.is_full()) return false;
  if (!is_hereditary(g, k).holds) return false;
  return is_saturated(g, k).holds;
}

}  // namespace detail

template <class Fn>
Verdict stabilize(const SymbolicUltragraph& g, std::optional<std::int64_t> horizon, Fn&& fn) {
  if (g.is_finite()) return fn(g.to_finite());
  const std::int64_t h = detail::pick_horizon(g, horizon);
  Window w1(g, h);
  Window w2(g, h + g.period());
  Verdict a = fn(w1.graph());
  Verdict b = fn(w2.graph());
  std::vector<std::string> citations = a.citations;
  if (!a.decided() || !b.decided()) return inconclusive(citations, flag::kNotStabilized);
  auto wa = detail::lift_witness(w1, a.witness);
  auto wb = detail::lift_witness(w2, b.witness);
  auto fa = detail::frontier_summary(w1);
  auto fb = detail::frontier_summary(w2);
  if (!wa || !wb || !fa || !fb) {
    Verdict v = inconclusive(citations, flag::kUnliftable);
    v.horizon = h;
    return v;
  }
  if (a.value != b.value || !(*wa == *wb) || !(*fa == *fb) || a.failed_condition != b.failed_condition) {
    Verdict v = inconclusive(citations, flag::kNotStabilized);
    v.horizon = h;
    return v;
  }
  a.witness = *wa;
  a.horizon = h;
  for (const auto& f : b.flags) a.add_flag(f);
  if (const auto* s = std::get_if<SupportWitness>(&a.witness); s && !detail::verify_support(g, s->set)) {
    Verdict v = inconclusive(citations, flag::kWitnessUnverified);
    v.horizon = h;
    return v;
  }
  return a;
}

inline Verdict condition_L(const SymbolicUltragraph& g, Budget& budget, std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return condition_L(w, budget); });
}
inline Verdict is_cofinal(const SymbolicUltragraph& g, std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return is_cofinal(w); });
}
inline Verdict is_af(const SymbolicUltragraph& g, Budget& budget, std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return is_af(w, budget); });
}
inline Verdict is_purely_infinite(const SymbolicUltragraph& g, Budget& budget,
                                  std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return is_purely_infinite(w, budget); });
}
inline Verdict is_simple_lattice(const SymbolicUltragraph& g, Budget& budget,
                                 std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return is_simple_lattice(w, budget); });
}
inline Verdict is_simple_reach(const SymbolicUltragraph& g, Budget& budget,
                               std::optional<std::int64_t> h = {}) {
  return stabilize(g, h, [&](const Ultragraph& w) { return is_simple_reach(w, budget); });
}
inline Verdict is_simple(const SymbolicUltragraph& g, Budget& budget, std::optional<std::int64_t> h = {}) {
  return detail::combine_simplicity(is_simple_lattice(g, budget, h), is_simple_reach(g, budget, h));
}

inline DichotomyResult dichotomy(const SymbolicUltragraph& g, Budget& budget, std::optional<std::int64_t> h = {}) {
  Verdict s = is_simple(g, budget, h);
  if (!s.holds()) return detail::finish_dichotomy(std::move(s), std::nullopt, std::nullopt);
  return detail::finish_dichotomy(std::move(s), is_af(g, budget, h), is_purely_infinite(g, budget, h));
}

// Relations on a symbolic ultragraph, decided on stabilized windows. The
// horizon is raised so that both vertices lie well inside the window.
namespace detail {

inline std::int64_t horizon_covering(const SymbolicUltragraph& g, std::optional<std::int64_t> h,
                                     std::initializer_list<VertexKey> keys) {
  std::int64_t hz = pick_horizon(g, h);
  for (VertexKey k : keys) {
    if (auto n = g.tail_index(k)) hz = std::max(hz, *n + g.band_width() + g.period());
  }
  return hz;
}

inline Verdict relation_verdict(const SymbolicUltragraph& g, std::int64_t h,
                                const std::function<bool(const Window&)>& fn) {
  Window w1(g, h);
  Window w2(g, h + g.period());
  bool a = fn(w1);
  bool b = fn(w2);
  auto fa = frontier_summary(w1);
  auto fb = frontier_summary(w2);
  if (a != b || !fa || !fb || !(*fa == *fb)) {
    Verdict v = inconclusive({}, flag::kNotStabilized);
    v.horizon = h;
    return v;
  }
  Verdict v;
  v.value = a;
  v.horizon = h;
  return v;
}

}  // namespace detail

// w >= v.
inline Verdict reaches(const SymbolicUltragraph& g, VertexKey w, VertexKey v, std::optional<std::int64_t> h = {}) {
  if (g.is_finite()) return Verdict{Status::Decided, reaches(g.to_finite(), w, v), {}, {}, {}, {}, 0};
  if (w == v) return Verdict{Status::Decided, true, {}, {}, {}, {}, 0};
  return detail::relation_verdict(g, detail::horizon_covering(g, h, {w, v}),
                                  [&](const Window& win) { return reaches(win.graph(), w, v); });
}

// v -> A: finitely many paths from v cover A. A cofinite A needs an infinite
// range reachable from v, and every member outside those ranges reached.
inline Verdict reaches_set(const SymbolicUltragraph& g, VertexKey v, const VertexSet& a,
                           std::optional<std::int64_t> h = {}) {
  if (g.is_finite()) return Verdict{Status::Decided, reaches_set(g.to_finite(), v, a), {}, {}, {}, {}, 0};
  std::int64_t hz = detail::horizon_covering(g, h, {v});
  if (auto m = a.max_support()) hz = detail::horizon_covering(g, hz, {v, *m});
  return detail::relation_verdict(g, hz, [&](const Window& win) {
    const Ultragraph& wg = win.graph();
    std::vector<bool> r = positive_reach(wg, v);
    r[v] = true;
    VertexSet covered = wg.no_vertices();
    for (std::size_t e = 0; e < wg.edge_count(); ++e) {
      if (wg.has_infinite_range(e) && r[wg.edge(e).source]) covered = covered.unite(wg.edge(e).range);
    }
    VertexSet target = win.restrict(a);
    if (target.contains(win.frontier()) && !covered.contains(win.frontier())) return false;
    for (VertexKey u : target.members()) {
      if (u != win.frontier() && !covered.contains(u) && !r[u]) return false;
    }
    return true;
  });
}

inline Verdict connects_to_loop(const SymbolicUltragraph& g, VertexKey v, std::optional<std::int64_t> h = {}) {
  if (g.is_finite()) return Verdict{Status::Decided, connects_to_loop(g.to_finite(), v), {}, {}, {}, {}, 0};
  return detail::relation_verdict(g, detail::horizon_covering(g, h, {v}),
                                  [&](const Window& win) { return connects_to_loop(win.graph(), v); });
}

struct SetResult {
  Status status = Status::Decided;
  std::optional<VertexSet> value;
  std::optional<std::int64_t> horizon;
  std::vector<std::string> flags;
  bool decided() const noexcept { return status == Status::Decided; }
};

namespace detail {

inline SetResult stabilize_set(const SymbolicUltragraph& g, const VertexSet& input, std::optional<std::int64_t> h,
                               const std::function<VertexSet(const Ultragraph&, const VertexSet&)>& fn,
                               const std::function<bool(const VertexSet&)>& verify) {
  std::int64_t hz = pick_horizon(g, h);
  if (auto m = input.max_support()) hz = horizon_covering(g, hz, {*m});
  Window w1(g, hz);
  Window w2(g, hz + g.period());
  auto a = w1.lift(fn(w1.graph(), w1.restrict(input)));
  auto b = w2.lift(fn(w2.graph(), w2.restrict(input)));
  SetResult out;
  out.horizon = hz;
  if (!a || !b) {
    out.status = Status::Inconclusive;
    out.flags.push_back(flag::kUnliftable);
  } else if (!(*a == *b)) {
    out.status = Status::Inconclusive;
    out.flags.push_back(flag::kNotStabilized);
  } else if (!verify(*a)) {
    out.status = Status::Inconclusive;
    out.flags.push_back(flag::kWitnessUnverified);
  } else {
    out.value = *a;
  }
  return out;
}

}  // namespace detail

inline SetResult hereditary_closure(const SymbolicUltragraph& g, const VertexSet& seed,
                                    std::optional<std::int64_t> h = {}) {
  if (g.is_finite()) return SetResult{Status::Decided, hereditary_closure(g.to_finite(), seed), {}, {}};
  return detail::stabilize_set(
      g, seed, h, [](const Ultragraph& w, const VertexSet& s) { return hereditary_closure(w, s); },
      [&](const VertexSet& k) { return seed.is_subset_of(k) && is_hereditary(g, k).holds; });
}

// Saturation of a hereditary support.
inline SetResult saturate(const SymbolicUltragraph& g, const VertexSet& k, std::optional<std::int64_t> h = {}) {
  if (auto c = is_hereditary(g, k); !c.holds) {
    throw Error(ErrorKind::NotHereditary, "edge '" + *c.edge + "' leaves the set");
  }
  if (g.is_finite()) return SetResult{Status::Decided, saturate(g.to_finite(), k).final, {}, {}};
  return detail::stabilize_set(
      g, k, h, [](const Ultragraph& w, const VertexSet& s) { return saturate(w, s).final; },
      [&](const VertexSet& s) {
        return k.is_subset_of(s) && is_hereditary(g, s).holds && is_saturated(g, s).holds;
      });
}

}  // namespace ultra

#endif  // ULTRA_CLASSIFY_HPP_
