#ifndef ULTRA_REPORT_HPP_
#define ULTRA_REPORT_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "classify.hpp"
#include "ideals.hpp"
#include "ktheory.hpp"
#include "paths.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "window.hpp"

namespace ultra {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline std::string to_string(Status s) { return s == Status::Decided ? "decided" : "inconclusive"; }

namespace detail {

struct WitnessJson {
  Json operator()(const std::monostate&) const { return nullptr; }
  Json operator()(const LoopWitness& w) const { return {{"type", "loop"}, {"edges", w.edges}}; }
  Json operator()(const UnreachableWitness& w) const {
    return {{"type", "unreachable"}, {"from", w.from}, {"to", w.to}};
  }
  Json operator()(const SupportWitness& w) const { return {{"type", "support"}, {"set", w.display}}; }
  Json operator()(const CofinalityWitness& w) const {
    return {{"type", "cofinality"}, {"vertex", w.vertex}, {"cycle", w.cycle}};
  }
  Json operator()(const RangeCoverWitness& w) const {
    return {{"type", "range_cover"}, {"edge", w.edge}, {"vertex", w.vertex}};
  }
  Json operator()(const ExitTrail& w) const {
    return {{"type", "exit_trail"}, {"loop_edges", w.loop_edges}, {"common_edges", w.common_edges}};
  }
  Json operator()(const NonConnectingWitness& w) const { return {{"type", "non_connecting"}, {"vertex", w.vertex}}; }
};

inline Json opt_horizon(const std::optional<std::int64_t>& h) { return h ? Json(*h) : Json(nullptr); }

inline Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace detail

inline Json witness_json(const Witness& w) { return std::visit(detail::WitnessJson{}, w); }

inline Json verdict_json(const std::string& property, const Verdict& v) {
  Json j;
  j["schema"] = kReportSchema;
  j["property"] = property;
  j["status"] = to_string(v.status);
  j["holds"] = v.decided() ? Json(v.value) : Json(nullptr);
  j["witness"] = witness_json(v.witness);
  j["horizon"] = detail::opt_horizon(v.horizon);
  j["citations"] = v.citations;
  j["flags"] = v.flags;
  if (v.failed_condition != 0) j["failed_condition"] = v.failed_condition;
  return j;
}

inline Json dichotomy_json(const DichotomyResult& d) {
  Json j;
  j["schema"] = kReportSchema;
  j["property"] = "dichotomy";
  j["status"] = to_string(d.status);
  j["holds"] = d.status == Status::Decided ? Json(d.kind != Dichotomy::NotSimple) : Json(nullptr);
  j["kind"] = d.status == Status::Decided ? Json(to_string(d.kind)) : Json(nullptr);
  j["simple"] = verdict_json("simplicity", d.simple);
  if (d.af) j["af"] = verdict_json("af", *d.af);
  if (d.purely_infinite) j["purely_infinite"] = verdict_json("purely-infinite", *d.purely_infinite);
  j["horizon"] = detail::opt_horizon(d.simple.horizon);
  j["citations"] = {cite::kDichotomy};
  j["flags"] = d.simple.flags;
  return j;
}

inline Json set_result_json(const std::string& property, const SetResult& r, const std::string& display) {
  Json j;
  j["schema"] = kReportSchema;
  j["property"] = property;
  j["status"] = to_string(r.status);
  j["holds"] = r.decided() ? Json(true) : Json(nullptr);
  j["witness"] = r.value ? Json{{"type", "support"}, {"set", display}} : Json(nullptr);
  j["horizon"] = detail::opt_horizon(r.horizon);
  j["citations"] = Json::array();
  j["flags"] = r.flags;
  return j;
}

inline Json k_groups_json(const KGroups& k) {
  Json basis = Json::array();
  for (const auto& b : k.k1_basis) basis.push_back(detail::integers(b));
  return {{"k0", k.k0_string()},
          {"k0_invariant_factors", detail::integers(k.k0_invariant_factors)},
          {"k0_free_rank", k.k0_free_rank},
          {"k1", k.k1_string()},
          {"k1_free_rank", k.k1_free_rank},
          {"k1_basis", basis}};
}

inline Json kernel_json(const KernelStabilization& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    Json basis = Json::array();
    for (const auto& b : st.basis) basis.push_back(detail::integers(b));
    steps.push_back({{"size", st.size}, {"rank", st.rank}, {"basis", basis}});
  }
  return {{"reach", s.reach}, {"stabilized", s.stabilized}, {"steps", steps}};
}

inline Json six_term_json(const SixTermReport& r) {
  Json feasible = Json::array();
  for (const auto& p : r.feasible) feasible.push_back({p.k0, p.k1});
  return {{"ideal", {r.ideal.k0, r.ideal.k1}},
          {"quotient", {r.quotient.k0, r.quotient.k1}},
          {"rank_difference", r.rank_difference},
          {"feasible", feasible},
          {"k0_less_than_k1", r.k0_less_than_k1},
          {"graph_algebra_possible", r.graph_algebra_possible}};
}

// ---- witness verification ------------------------------------------------------
//
// Independent re-checks of a witness against the graph it came from. Each
// returns an explanation when the witness does not certify the verdict.

namespace detail {

inline std::optional<std::vector<std::size_t>> edge_indices(const Ultragraph& g, const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  for (const auto& id : ids) {
    auto e = g.find_edge(id);
    if (!e) return std::nullopt;
    out.push_back(*e);
  }
  return out;
}

inline std::optional<VertexKey> vertex_named(const Ultragraph& g, const std::string& n) { return g.find_vertex(n); }

struct FiniteWitnessCheck {
  const Ultragraph& g;
  const Verdict& v;

  std::optional<std::string> operator()(const std::monostate&) const { return std::nullopt; }

  std::optional<std::string> operator()(const LoopWitness& w) const {
    auto es = edge_indices(g, w.edges);
    if (!es) return "loop names an unknown edge";
    Loop l{*es};
    if (!is_loop(g, l.edges)) return "edges do not form a loop";
    // An AF counterexample only needs some loop.
    if (std::find(v.citations.begin(), v.citations.end(), std::string(cite::kAF)) != v.citations.end()) {
      return std::nullopt;
    }
    if (find_exit(g, l)) return "loop has an exit";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const UnreachableWitness& w) const {
    auto a = vertex_named(g, w.from);
    auto b = vertex_named(g, w.to);
    if (!a || !b) return "unknown vertex";
    if (!g.is_singular(*b)) return "target is not singular";
    if (*a != *b && positive_reach(g, *a)[*b]) return "target is reachable";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const SupportWitness& w) const {
    if (!is_hereditary(g, w.set).holds) return "set is not hereditary";
    if (!is_saturated(g, w.set).holds) return "set is not saturated";
    if (w.set.empty()) return "set is empty";
    if (g.all_vertices().is_subset_of(w.set)) return "set is not proper";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const CofinalityWitness& w) const {
    auto v0 = vertex_named(g, w.vertex);
    if (!v0 || w.cycle.empty()) return "malformed cofinality witness";
    VertexSet r = reach_set(g, *v0);
    std::vector<VertexKey> cyc;
    for (const auto& n : w.cycle) {
      auto k = vertex_named(g, n);
      if (!k) return "unknown vertex";
      if (r.contains(*k)) return "cycle meets the reach set";
      cyc.push_back(*k);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexKey a = cyc[i];
      VertexKey b = cyc[(i + 1) % cyc.size()];
      bool step = a == b && g.is_frontier(a) && g.frontier_escapes();
      for (std::size_t e : g.out_edges(a)) step = step || g.edge(e).range.contains(b);
      if (!step) return "cycle has a broken step";
    }
    return std::nullopt;
  }

  std::optional<std::string> operator()(const RangeCoverWitness& w) const {
    auto e = g.find_edge(w.edge);
    auto u = vertex_named(g, w.vertex);
    if (!e || !u) return "malformed range witness";
    if (!g.has_infinite_range(*e)) return "range witness edge has a finite range";
    // Some vertex of the range far out must be missed.
    std::vector<bool> r = positive_reach(g, *u);
    const VertexSet& range = g.edge(*e).range;
    for (VertexKey x : g.horizon_band()) {
      if (range.contains(x) && !r[x]) return std::nullopt;
    }
    return "every far vertex of the range is reached";
  }

  // Every loop must have an exit: recheck over all first-return loops, or
  // through the exitless-successor map when there are too many of them.
  std::optional<std::string> operator()(const ExitTrail& w) const {
    Budget b;
    std::vector<Loop> loops;
    try {
      loops = find_loops(g, b);
    } catch (const Error&) {
      if (!exitless_loops(g).empty()) return "a loop lacks an exit";
      return std::nullopt;
    }
    for (const Loop& l : loops) {
      if (!find_exit(g, l)) return "a loop lacks an exit";
      for (const auto& id : w.common_edges) {
        auto names = edge_names(g, l.edges);
        if (std::find(names.begin(), names.end(), id) == names.end()) return "a loop avoids " + id;
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> operator()(const NonConnectingWitness& w) const {
    auto u = vertex_named(g, w.vertex);
    if (!u) return "unknown vertex";
    std::vector<bool> r = positive_reach(g, *u);
    std::vector<bool> ls = loop_sources(g);
    for (VertexKey x = 0; x < r.size(); ++x) {
      if (r[x] && ls[x]) return "vertex connects to a loop";
    }
    return std::nullopt;
  }
};

}  // namespace detail

inline std::optional<std::string> verify_witness(const Ultragraph& g, const Verdict& v) {
  return std::visit(detail::FiniteWitnessCheck{g, v}, v.witness);
}

// Symbolic verdicts: supports are re-checked exactly; everything else on the
// window the verdict was decided at.
inline std::optional<std::string> verify_witness(const SymbolicUltragraph& g, const Verdict& v) {
  if (const auto* s = std::get_if<SupportWitness>(&v.witness)) {
    if (!is_hereditary(g, s->set).holds) return "set is not hereditary";
    if (!is_saturated(g, s->set).holds) return "set is not saturated";
    if (s->set.empty() || s->set.is_full()) return "set is not a proper nonempty support";
    return std::nullopt;
  }
  if (g.is_finite()) return verify_witness(g.to_finite(), v);
  Window w(g, v.horizon.value_or(g.default_horizon()));
  return verify_witness(w.graph(), v);
}

}  // namespace ultra

#endif  // ULTRA_REPORT_HPP_
