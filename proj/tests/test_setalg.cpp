#include <gtest/gtest.h>

#include "support.hpp"

namespace ultra {
namespace {

// ---- the generated lattice -------------------------------------------------------

TEST(Lattice, FiniteGraphsGenerateEverySubset) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Ultragraph g = testing::random_ultragraph(rng, 6, 6);
    auto lat = generate_lattice(g);
    EXPECT_EQ(lat.size(), std::size_t{1} << g.vertex_count());
    EXPECT_TRUE(lat.front().value.empty());
    EXPECT_TRUE(std::is_sorted(lat.begin(), lat.end(),
                               [](const LatticeElement& a, const LatticeElement& b) { return a.value < b.value; }));
    for (const auto& x : lat) EXPECT_EQ(evaluate(g, x), x.value);
  }
}

TEST(Lattice, DecomposePrefersRangeIntersections) {
  Ultragraph g = testing::make_graph({"a", "b", "c"}, {{"x", "a", {"b", "c"}}, {"y", "b", {"c"}}});
  // {b, c} = r(x) exactly; c alone is r(x) ∩ r(y).
  LatticeElement bc = decompose(g, g.vertex_set({1, 2}));
  EXPECT_TRUE(bc.finite_part.empty());
  EXPECT_EQ(evaluate(g, bc), g.vertex_set({1, 2}));
  LatticeElement ab = decompose(g, g.vertex_set({0, 1}));
  EXPECT_EQ(ab.finite_part, g.vertex_set({0, 1}));
}

// ---- projection calculus ---------------------------------------------------------

TEST(Projection, OrthogonalizePreservesValuesAndIsDisjoint) {
  std::mt19937_64 rng(20261016);
  for (int t = 0; t < 600; ++t) {
    testing::ComboCase cc = testing::random_combo(rng);
    std::vector<OrthoAtom> atoms = orthogonalize(cc.combo);
    for (VertexKey v = 0; v < cc.probe; ++v) {
      ASSERT_EQ(evaluate(atoms, v), evaluate(cc.combo, v)) << "case " << t << " vertex " << v;
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      EXPECT_NE(atoms[i].coefficient, 0);
      for (std::size_t j = i + 1; j < atoms.size(); ++j) {
        EXPECT_FALSE(atoms[i].support().intersects(atoms[j].support())) << "case " << t;
      }
    }
  }
}

TEST(Projection, PartitionOfIdentitySumsToOne) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 600; ++t) {
    testing::ComboCase cc = testing::random_combo(rng);
    std::vector<VertexSet> sets;
    for (const auto& term : cc.combo.terms()) sets.push_back(term.set);
    std::vector<OrthoAtom> atoms = partition_identity(cc.universe, sets);
    EXPECT_EQ(atoms.size(), std::size_t{1} << sets.size());
    EXPECT_TRUE(atoms.front().index.empty());
    for (VertexKey v = 0; v < cc.probe; ++v) {
      Rational sum = 0;
      for (const auto& a : atoms) sum += a.support().contains(v) ? a.coefficient : Rational(0);
      ASSERT_EQ(sum, 1) << "case " << t << " vertex " << v;
    }
  }
}

TEST(Projection, NoUnitWithoutTheWholeVertexSet) {
  Universe u = Universe::infinite(false);
  try {
    partition_identity(u, {VertexSet::of(u, {1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUnit);
  }
}

TEST(Projection, CanonicalFormMergesAndDrops) {
  Universe u = Universe::finite(4);
  ProjectionCombo c;
  c.add(Rational(1, 2), VertexSet::of(u, {1}));
  c.add(Rational(-1, 2), VertexSet::of(u, {1}));
  c.add(Rational(3), VertexSet::empty(u));
  c.add(Rational(2), VertexSet::of(u, {0, 2}));
  ProjectionCombo k = c.canonical();
  ASSERT_EQ(k.terms().size(), 1u);
  EXPECT_EQ(k.terms()[0].coefficient, 2);
  EXPECT_TRUE(orthogonalize(ProjectionCombo()).empty());
}

TEST(Projection, TwoOverlappingSets) {
  // 2 p_{01} + 3 p_{12} = 2 Q(01, 12) + 5 Q(01 ∩ 12, ∅) + 3 Q(12, 01).
  Universe u = Universe::finite(3);
  ProjectionCombo c;
  c.add(2, VertexSet::of(u, {0, 1}));
  c.add(3, VertexSet::of(u, {1, 2}));
  auto atoms = orthogonalize(c);
  ASSERT_EQ(atoms.size(), 3u);
  EXPECT_EQ(evaluate(atoms, 0), 2);
  EXPECT_EQ(evaluate(atoms, 1), 5);
  EXPECT_EQ(evaluate(atoms, 2), 3);
}

TEST(RegularIdeal, SupportExcludesEmitters) {
  SymbolicUltragraph g = testing::load_ultragraph("triple_shift_emitter.ug");
  VertexSet t = regular_ideal_support(g);
  EXPECT_FALSE(t.contains(*g.find_vertex("w")));
  EXPECT_TRUE(t.contains(*g.find_vertex("v1")));
  EXPECT_TRUE(t.is_cofinite());
  Ultragraph sinky = testing::make_graph({"a", "s"}, {{"x", "a", {"s"}}});
  try {
    regular_ideal_support(sinky);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HasSinks);
  }
}

}  // namespace
}  // namespace ultra
