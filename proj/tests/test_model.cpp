#include <gtest/gtest.h>

#include "support.hpp"

namespace ultra {
namespace {

using testing::load_ultragraph;
using testing::read_fixture;

// ---- VertexSet ----------------------------------------------------------------

TEST(VertexSet, FiniteAndCofiniteAlgebra) {
  Universe u = Universe::infinite();
  VertexSet a = VertexSet::of(u, {1, 3, 5});
  VertexSet b = VertexSet::all_but(u, {3, 4});
  EXPECT_EQ((a & b), VertexSet::of(u, {1, 5}));
  EXPECT_EQ((a | b), VertexSet::all_but(u, {4}));
  EXPECT_EQ((a - b), VertexSet::of(u, {3}));
  EXPECT_EQ((b - a), VertexSet::all_but(u, {1, 3, 4, 5}));
  EXPECT_TRUE(b.complement() == VertexSet::of(u, {3, 4}));
  EXPECT_FALSE(b.contains(4));
  EXPECT_TRUE(b.contains(1000000));
  EXPECT_THROW(b.members(), Error);
}

TEST(VertexSet, FiniteUniverseNormalizesCofinite) {
  Universe u = Universe::finite(4);
  VertexSet b = VertexSet::all_but(u, {0});
  EXPECT_EQ(b, VertexSet::of(u, {1, 2, 3}));
  EXPECT_EQ(b.size(), 3u);
  EXPECT_TRUE(VertexSet::full(u).is_full());
}

TEST(VertexSet, MixedUniversesAreRejected) {
  VertexSet a = VertexSet::of(Universe::finite(3), {0});
  VertexSet b = VertexSet::of(Universe::finite(4), {0});
  try {
    (void)a.unite(b);
    FAIL() << "expected UniverseMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UniverseMismatch);
  }
}

TEST(VertexSet, BooleanLawsOnSeededSamples) {
  std::mt19937_64 rng(7);
  Universe u = Universe::infinite();
  auto draw = [&]() {
    std::vector<VertexKey> s;
    for (VertexKey v = 0; v < 8; ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    return rng() % 2 ? VertexSet::of(u, s) : VertexSet::all_but(u, s);
  };
  for (int i = 0; i < 300; ++i) {
    VertexSet a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
    EXPECT_EQ(a & (b | c), (a & b) | (a & c));
    EXPECT_EQ(a - b, a & b.complement());
    for (VertexKey v = 0; v < 12; ++v) {
      EXPECT_EQ((a | b).contains(v), a.contains(v) || b.contains(v));
      EXPECT_EQ((a & b).contains(v), a.contains(v) && b.contains(v));
    }
  }
}

// ---- Ultragraph ----------------------------------------------------------------

TEST(Ultragraph, SinksAndRegularVertices) {
  Ultragraph g = testing::make_graph({"a", "b", "c"}, {{"x", "a", {"b", "c"}}, {"y", "b", {"c"}}});
  EXPECT_TRUE(g.is_sink(2));
  EXPECT_TRUE(g.is_regular(0));
  EXPECT_EQ(sinks(g), g.vertex_set({2}));
  EXPECT_EQ(singular_vertices(g), g.vertex_set({2}));
}

TEST(Ultragraph, DuplicateIdsAreRejected) {
  try {
    testing::make_graph({"a"}, {{"x", "a", {"a"}}, {"x", "a", {"a"}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateId);
  }
}

// ---- DSL ----------------------------------------------------------------------

TEST(Dsl, TwoVerticesOneEdge) {
  UltragraphDocument d = parse("vertices v w\nedge e : v -> { w }");
  EXPECT_EQ(d.vertices.size(), 2u);
  EXPECT_EQ(d.edges.size(), 1u);
  SymbolicUltragraph g = build(d);
  EXPECT_TRUE(g.is_finite());
  Ultragraph f = g.to_finite();
  EXPECT_EQ(f.edge(0).range, f.vertex_set({1}));
}

TEST(Dsl, EmptyRangeIsReportedBeforeResolution) {
  try {
    parse("edge e : v -> { }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyRange);
    EXPECT_EQ(e.span().line, 1);
    EXPECT_EQ(e.span().column, 15);
  }
}

TEST(Dsl, Diagnostics) {
  auto kind_of = [](const std::string& text) {
    try {
      parse_ultragraph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ErrorKind::InternalDisagreement;
  };
  EXPECT_EQ(kind_of("vertices v\nedge e v -> { v }"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("vertices v\nedge e : v -> { w }"), ErrorKind::UndeclaredVertex);
  EXPECT_EQ(kind_of("vertices v v"), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of("vertices v\nedge e : v -> { v }\nedge e : v -> { v }"), ErrorKind::DuplicateId);
  EXPECT_EQ(kind_of("vertices v\nedge e : v -> { v[n] }"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("vertices v\nedge e : v -> $"), ErrorKind::SyntaxError);
}

TEST(Dsl, UndeclaredSpanPointsAtTheName) {
  try {
    parse_ultragraph("vertices v\n\nedge e : v -> { v w }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndeclaredVertex);
    EXPECT_EQ(e.span().line, 3);
    EXPECT_EQ(e.span().column, 19);
  }
}

TEST(Dsl, DescendingTailFixture) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  EXPECT_EQ(g.exceptional_count(), 2u);
  ASSERT_TRUE(g.tail());
  EXPECT_EQ(g.tail()->start, 2);
  EXPECT_EQ(g.concrete_edges().size(), 2u);
  ASSERT_EQ(g.families().size(), 1u);
  // g[1] : v2 -> {v1}
  Edge e = g.member(g.families()[0], 1);
  EXPECT_EQ(e.id, "g[1]");
  EXPECT_EQ(g.name(e.source), "v2");
  EXPECT_EQ(e.range, VertexSet::singleton(g.universe(), *g.find_vertex("v1")));
  // e : v1 -> everything but v0, v1
  const Edge& c = g.concrete_edges()[0];
  EXPECT_TRUE(c.range.is_cofinite());
  EXPECT_FALSE(c.range.contains(*g.find_vertex("v0")));
  EXPECT_TRUE(c.range.contains(*g.find_vertex("v7")));
}

TEST(Dsl, RenderRoundTripsFixtures) {
  for (const char* name : {"descending_tail.ug", "triple_shift_emitter.ug", "cuntz2.ug", "chain.ug", "cycle.ug"}) {
    UltragraphDocument d = parse(read_fixture(name));
    EXPECT_EQ(parse(render(d)), d) << name;
    SymbolicUltragraph g = build(d);
    SymbolicUltragraph h = parse_ultragraph(render(g));
    EXPECT_EQ(render(h), render(g)) << name;
  }
}

TEST(Dsl, RenderRoundTripsRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Ultragraph g = testing::random_ultragraph(rng);
    UltragraphDocument d = to_document(g);
    EXPECT_EQ(parse(render(d)), d);
    EXPECT_TRUE(same_structure(build(parse(render(g))).to_finite(), g));
  }
}

TEST(Dsl, StepFamilies) {
  SymbolicUltragraph g = parse_ultragraph(
      "vertices a\ntail v[n] for n >= 0\nedge s : a -> { v[0] }\n"
      "family p[n] for n >= 0 step 2 : v[n] -> { v[n+1] }\n"
      "family q[n] for n >= 1 step 2 : v[n] -> { v[n+1] a }\n");
  EXPECT_EQ(g.period(), 2);
  auto d = parse(render(g));
  EXPECT_EQ(d.families[0].step, 2);
}

// ---- matrices -------------------------------------------------------------------

TEST(MatrixFormat, DenseAndSymbolic) {
  ZeroOneMatrix a = testing::load_dense_matrix("cuntz2.mat");
  EXPECT_EQ(a.size(), 2u);
  SymbolicZeroOneMatrix s = testing::load_symbolic_matrix("backward_shift.mat");
  EXPECT_EQ(s.base(), 0);
  EXPECT_FALSE(s.entry(0, 0));
  EXPECT_TRUE(s.entry(0, 1));
  EXPECT_FALSE(s.entry(1, 1));
  EXPECT_TRUE(s.entry(1, 2));
  EXPECT_TRUE(s.entry(5, 4));
  EXPECT_FALSE(s.entry(5, 5));
  EXPECT_EQ(parse_matrix(render_matrix(a)), MatrixDocument(a));
}

TEST(MatrixFormat, RaggedRowsAreSyntaxErrors) {
  try {
    parse_matrix("1 0\n1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.span().line, 2);
  }
}

TEST(MatrixBridge, SymbolicUltragraphOfBackwardShift) {
  SymbolicUltragraph g = ultragraph_from_matrix(testing::load_symbolic_matrix("backward_shift.mat"));
  EXPECT_EQ(g.exceptional_names(), (std::vector<std::string>{"v0", "v1"}));
  EXPECT_EQ(g.tail()->start, 2);
  ASSERT_EQ(g.concrete_edges().size(), 2u);
  EXPECT_EQ(g.concrete_edges()[0].id, "0");
  ASSERT_EQ(g.families().size(), 1u);
  Edge e5 = g.member(g.families()[0], 5);
  EXPECT_EQ(g.name(e5.source), "v5");
  EXPECT_EQ(e5.range, VertexSet::singleton(g.universe(), *g.find_vertex("v4")));
}

TEST(MatrixBridge, EdgeMatrixRecoversA) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 6;
    ZeroOneMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, rng() % 2);
      if (a.row_is_zero(i)) a.set(i, rng() % n, true);
    }
    EXPECT_EQ(edge_matrix(ultragraph_from_matrix(a)), a);
    EXPECT_EQ(graph_from_matrix(a).edge_count(), [&] {
      std::size_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) c += a.at(i, j);
      }
      return c;
    }());
  }
}

TEST(MatrixBridge, TruncationMatchesEdgeMatrixOfWindow) {
  SymbolicZeroOneMatrix s = testing::load_symbolic_matrix("triple_shift.mat");
  ZeroOneMatrix t = s.truncate(9);
  // Row 1 is everything but 2 and 3; row 4 is {1, 4}.
  EXPECT_TRUE(t.at(0, 0));
  EXPECT_FALSE(t.at(0, 1));
  EXPECT_TRUE(t.at(0, 8));
  EXPECT_TRUE(t.at(3, 0));
  EXPECT_TRUE(t.at(3, 3));
  EXPECT_FALSE(t.at(3, 4));
}

// ---- symbolic structure and windows -------------------------------------------

TEST(Symbolic, ThresholdAndHorizon) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  EXPECT_EQ(g.period(), 1);
  EXPECT_EQ(g.max_offset_span(), 1);
  // g[n] reaches v[n+1] from n = 1: the pattern is settled from 2 on.
  EXPECT_EQ(g.threshold(), 2);
  EXPECT_GE(g.default_horizon(), g.threshold() + 8);
  EXPECT_FALSE(g.tail_escapes());
}

TEST(Window, FrontierAndLift) {
  SymbolicUltragraph g = load_ultragraph("descending_tail.ug");
  Window w(g, 10);
  const Ultragraph& f = w.graph();
  EXPECT_EQ(f.name(w.frontier()), kFrontierName);
  EXPECT_EQ(w.real_vertex_count(), 11u);  // v0 .. v10
  // e has infinite range; its window range includes the frontier.
  auto e = f.find_edge("e");
  ASSERT_TRUE(e);
  EXPECT_TRUE(f.has_infinite_range(*e));
  EXPECT_TRUE(f.edge(*e).range.contains(w.frontier()));
  VertexSet all_but_v0 = VertexSet::all_but(g.universe(), {0});
  VertexSet r = w.restrict(all_but_v0);
  EXPECT_TRUE(r.contains(w.frontier()));
  auto lifted = w.lift(r);
  ASSERT_TRUE(lifted);
  EXPECT_EQ(*lifted, all_but_v0);
  EXPECT_EQ(*w.lift(w.restrict(VertexSet::of(g.universe(), {0, 1}))), VertexSet::of(g.universe(), {0, 1}));
}

TEST(Window, FixedSourceFamiliesMakeInfiniteEmitters) {
  SymbolicUltragraph g = load_ultragraph("triple_shift_emitter.ug");
  VertexKey w = *g.find_vertex("w");
  EXPECT_TRUE(g.is_infinite_emitter(w));
  EXPECT_EQ(singular_vertices(g), VertexSet::singleton(g.universe(), w));
  Window win(g, g.default_horizon());
  EXPECT_TRUE(win.graph().is_infinite_emitter(w));
}

}  // namespace
}  // namespace ultra
