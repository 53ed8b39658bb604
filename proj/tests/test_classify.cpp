#include <gtest/gtest.h>

#include "support.hpp"

namespace ultra {
namespace {

using testing::load_ultragraph;
using testing::make_graph;

bool cites(const Verdict& v, const char* c) {
  return std::find(v.citations.begin(), v.citations.end(), std::string(c)) != v.citations.end();
}

// ---- finite graphs ------------------------------------------------------------

TEST(FiniteClassify, CuntzTwoIsSimpleAndPurelyInfinite) {
  Ultragraph g = load_ultragraph("cuntz2.ug").to_finite();
  Budget b;
  EXPECT_TRUE(is_simple(g, b).holds());
  EXPECT_TRUE(is_purely_infinite(g, b).holds());
  EXPECT_TRUE(is_af(g, b).fails());
  EXPECT_EQ(dichotomy(g, b).kind, Dichotomy::PurelyInfinite);
}

TEST(FiniteClassify, BareCycleFailsConditionL) {
  Ultragraph g = load_ultragraph("cycle.ug").to_finite();
  Budget b;
  Verdict l = condition_L(g, b);
  ASSERT_TRUE(l.fails());
  const auto* w = std::get_if<LoopWitness>(&l.witness);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->edges, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(verify_witness(g, l));
  Verdict s = is_simple(g, b);
  EXPECT_TRUE(s.fails());
  EXPECT_FALSE(verify_witness(g, s));
  EXPECT_EQ(is_simple_reach(g, b).failed_condition, 1);
}

TEST(FiniteClassify, ChainIsSimpleAndAF) {
  Ultragraph g = load_ultragraph("chain.ug").to_finite();
  Budget b;
  EXPECT_TRUE(is_simple(g, b).holds());
  EXPECT_TRUE(is_af(g, b).holds());
  EXPECT_EQ(dichotomy(g, b).kind, Dichotomy::AF);
}

TEST(FiniteClassify, TwoSinksAreNotSimple) {
  Ultragraph g = make_graph({"a", "s", "t"}, {{"x", "a", {"s", "t"}}});
  Budget b;
  Verdict lat = is_simple_lattice(g, b);
  ASSERT_TRUE(lat.fails());
  EXPECT_TRUE(std::holds_alternative<SupportWitness>(lat.witness));
  EXPECT_FALSE(verify_witness(g, lat));
  Verdict r = is_simple_reach(g, b);
  ASSERT_TRUE(r.fails());
  EXPECT_EQ(r.failed_condition, 3);
  EXPECT_FALSE(verify_witness(g, r));
}

TEST(FiniteClassify, NonCofinalWitness) {
  // u and w carry separate exit-having loops; neither reaches the other.
  Ultragraph g = make_graph({"u", "w"}, {{"a", "u", {"u"}}, {"b", "u", {"u"}}, {"c", "w", {"w"}}, {"d", "w", {"w"}}});
  Verdict c = is_cofinal(g);
  ASSERT_TRUE(c.fails());
  const auto* w = std::get_if<CofinalityWitness>(&c.witness);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->vertex, "u");
  EXPECT_EQ(w->cycle, (std::vector<std::string>{"w"}));
  EXPECT_FALSE(verify_witness(g, c));
}

TEST(FiniteClassify, SingleSinkIsSimple) {
  Ultragraph g = make_graph({"s"}, {});
  Budget b;
  Verdict s = is_simple(g, b);
  EXPECT_TRUE(s.holds());
  // Strictly, s does not reach itself; the verdict depends on the reading.
  EXPECT_TRUE(s.has_flag(flag::kReflexivitySensitive));
  EXPECT_EQ(dichotomy(g, b).kind, Dichotomy::AF);
}

TEST(FiniteClassify, PurelyInfiniteNeedsEveryVertexToConnect) {
  // a -> loop at b with exit into a sink s: (L) holds, s reaches no loop.
  Ultragraph g = make_graph({"a", "b", "s"}, {{"x", "a", {"b"}}, {"y", "b", {"b", "s"}}});
  Budget b;
  Verdict p = is_purely_infinite(g, b);
  ASSERT_TRUE(p.fails());
  EXPECT_EQ(std::get<NonConnectingWitness>(p.witness).vertex, "s");
  EXPECT_FALSE(verify_witness(g, p));
}

TEST(FiniteClassify, InfiniteRangesInWindowsMustBeReachedFarOut) {
  // A window-like graph: x has infinite range and t stands for the far band;
  // c loops on itself and never gets there.
  Ultragraph g = make_graph({"a", "c", "t"},
                            {{"x", "a", {"c", "t"}}, {"y", "c", {"c"}}, {"z", "c", {"c"}}, {"u", "t", {"c"}}});
  g.mark_infinite_range(0);
  g.set_horizon_band({2});
  Budget b;
  Verdict r = is_simple_reach(g, b);
  ASSERT_TRUE(r.fails());
  EXPECT_EQ(r.failed_condition, 4);
  const auto& w = std::get<RangeCoverWitness>(r.witness);
  EXPECT_EQ(w.edge, "x");
  EXPECT_EQ(w.vertex, "c");
  EXPECT_FALSE(verify_witness(g, r));
}

TEST(FiniteClassify, BudgetExceededOnLargeLattices) {
  std::vector<std::string> names;
  for (int i = 0; i < 14; ++i) names.push_back("v" + std::to_string(i));
  Ultragraph g = make_graph(names, {});
  EXPECT_THROW(generate_lattice(g, kLatticeVertexLimit), Error);
  Budget tiny{10};
  try {
    enumerate_saturated_hereditary(g, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

// ---- the descending-tail ultragraph -----------------------------------------

TEST(SymbolicClassify, DescendingTailIsSimpleBothWays) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  Budget b;
  Verdict lat = is_simple_lattice(g, b);
  Verdict reach = is_simple_reach(g, b);
  EXPECT_TRUE(lat.holds());
  EXPECT_TRUE(reach.holds());
  Verdict s = is_simple(g, b);
  ASSERT_TRUE(s.holds());
  EXPECT_TRUE(cites(s, cite::kLatticeSimplicity));
  EXPECT_TRUE(cites(s, cite::kReachSimplicity));
  ASSERT_TRUE(s.horizon);
}

TEST(SymbolicClassify, DescendingTailLoopsAllUseE) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  Budget b;
  Verdict l = condition_L(g, b);
  ASSERT_TRUE(l.holds());
  const auto* t = std::get_if<ExitTrail>(&l.witness);
  ASSERT_NE(t, nullptr);
  // The only way up is e, and the only way back to v1 is g[1].
  EXPECT_NE(std::find(t->common_edges.begin(), t->common_edges.end(), "e"), t->common_edges.end());
  EXPECT_EQ(t->common_edges, (std::vector<std::string>{"e", "g[1]"}));
  // f leaves v0, which nothing reaches again.
  const auto& le = t->loop_edges;
  EXPECT_NE(std::find(le.begin(), le.end(), "g[5]"), le.end());
  EXPECT_EQ(std::find(le.begin(), le.end(), "f"), le.end());
}

TEST(SymbolicClassify, AscendingTailIsSimpleWithoutReturning) {
  // Nothing on the tail gets back to a, but every tail vertex reaches all
  // later ones, which is all the infinite range asks for.
  SymbolicUltragraph g = parse_ultragraph(
      "vertices a\ntail v[n] for n >= 0\nedge c : a -> ~{ a v[2] }\nfamily f[n] for n >= 0 : v[n] -> { v[n+1] }\n");
  Budget b;
  Verdict s = is_simple(g, b);
  ASSERT_EQ(s.status, Status::Decided);
  EXPECT_TRUE(s.value);
  DichotomyResult d = dichotomy(g, b);
  EXPECT_EQ(d.kind, Dichotomy::AF);
}

TEST(SymbolicClassify, DescendingTailIsPurelyInfinite) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  Budget b;
  DichotomyResult d = dichotomy(g, b);
  ASSERT_EQ(d.status, Status::Decided);
  EXPECT_EQ(d.kind, Dichotomy::PurelyInfinite);
}

TEST(SymbolicClassify, VerdictIsStableAcrossHorizons) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  for (std::int64_t h : {3, 5, 9, 17, 40}) {
    Budget b;
    Verdict s = is_simple(g, b, h);
    EXPECT_TRUE(s.holds()) << "horizon " << h;
  }
}

TEST(SymbolicClassify, SymbolicReachability) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  VertexKey v0 = *g.find_vertex("v0");
  VertexKey v1 = *g.find_vertex("v1");
  VertexKey v9 = *g.find_vertex("v9");
  EXPECT_TRUE(reaches(g, v9, v1).holds());
  EXPECT_TRUE(reaches(g, v1, v9).holds());
  // Nothing leads back into v0.
  EXPECT_TRUE(reaches(g, v1, v0).fails());
  EXPECT_TRUE(connects_to_loop(g, v0).holds());
}

// ---- a symbolic matrix, read two ways ----------------------------------------

TEST(SymbolicClassify, BackwardShiftUltragraphIsSimple) {
  SymbolicZeroOneMatrix a = testing::load_symbolic_matrix("backward_shift.mat");
  SymbolicUltragraph ga = ultragraph_from_matrix(a);
  Budget b;
  Verdict s = is_simple(ga, b);
  EXPECT_TRUE(s.holds());
}

TEST(SymbolicClassify, BackwardShiftGraphIsNotSimple) {
  SymbolicZeroOneMatrix a = testing::load_symbolic_matrix("backward_shift.mat");
  SymbolicUltragraph gr = graph_from_matrix(a);
  Budget b;
  Verdict s = is_simple(gr, b);
  ASSERT_TRUE(s.fails());
  const auto* w = std::get_if<SupportWitness>(&s.witness);
  ASSERT_NE(w, nullptr);
  VertexKey v0 = *gr.find_vertex("v0");
  EXPECT_EQ(w->set, VertexSet::all_but(gr.universe(), {v0}));
  EXPECT_FALSE(verify_witness(gr, s));
  // The quotient by that support is a single vertex with no edges.
  SymbolicUltragraph q = quotient_ultragraph(gr, w->set);
  EXPECT_EQ(q.exceptional_names(), (std::vector<std::string>{"v0"}));
  EXPECT_TRUE(q.concrete_edges().empty());
  EXPECT_TRUE(q.families().empty());
}

TEST(SymbolicClassify, GraphOfBackwardShiftHasInfiniteEmitters) {
  SymbolicUltragraph gr = graph_from_matrix(testing::load_symbolic_matrix("backward_shift.mat"));
  EXPECT_TRUE(gr.is_infinite_emitter(*gr.find_vertex("v0")));
  EXPECT_TRUE(gr.is_infinite_emitter(*gr.find_vertex("v1")));
  EXPECT_FALSE(gr.is_infinite_emitter(*gr.find_vertex("v5")));
}

TEST(SymbolicClassify, EmitterVariantSingularSet) {
  SymbolicUltragraph g = load_ultragraph("triple_shift_emitter.ug");
  VertexKey w = *g.find_vertex("w");
  EXPECT_EQ(singular_vertices(g), VertexSet::singleton(g.universe(), w));
  EXPECT_TRUE(sinks(g).empty());
}

TEST(SymbolicClassify, RepeatingSinksAreNotRepresentable) {
  SymbolicUltragraph g = parse_ultragraph(
      "tail v[n] for n >= 0\nfamily p[n] for n >= 0 step 2 : v[n] -> { v[n+1] }\n");
  try {
    (void)sinks(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRepresentable);
  }
}

}  // namespace
}  // namespace ultra
