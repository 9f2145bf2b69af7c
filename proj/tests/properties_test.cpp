#include <gtest/gtest.h>

#include <set>

#include "mforge/random.hpp"
#include "mforge/recognize.hpp"

using namespace mforge;

namespace {

ElementSet random_set(rnd::Rng& g, std::size_t n, double p = 0.3) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rnd::coin(g, p)) s.add(i);
  return s;
}

}  // namespace

TEST(Invariants, ResigningKeepsMatroid) {
  rnd::Rng g(901);
  for (int i = 0; i < 1000; ++i) {
    SignedGraph sg = rnd::signed_graph(g, 8, 14);
    SignedGraph t = resign(sg, rnd::uniform(g, 0, sg.graph.n_vertices - 1));
    ASSERT_TRUE(equal_labeled(even_cycle_matroid(sg), even_cycle_matroid(t))) << format_signed_graph(sg);
  }
}

TEST(Invariants, DualityInvolutionAndLambda) {
  rnd::Rng g(907);
  for (int i = 0; i < 500; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 12);
    BinaryMatroid d = dual(m);
    ASSERT_TRUE(equal_labeled(dual(d), m));
    ASSERT_EQ(d.rank() + m.rank(), m.size());
    ElementSet s = random_set(g, m.size(), 0.5);
    ASSERT_EQ(lambda_of(m, s), lambda_of(d, s));
    ASSERT_EQ(lambda_of(m, s), lambda_of(m, s.complement()));
  }
}

TEST(Invariants, MinorOperationsCommute) {
  rnd::Rng g(911);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 12);
    ElementSet c = random_set(g, m.size());
    ElementSet d(m.size());
    for (auto p : random_set(g, m.size()).positions())
      if (!c.contains(p)) d.add(p);
    auto cl = c.labels(m), dl = d.labels(m);
    BinaryMatroid a = delete_labels(contract_labels(m, cl), dl);
    BinaryMatroid b = contract_labels(delete_labels(m, dl), cl);
    ASSERT_TRUE(equal_labeled(a, b));
    // (M / C \ D)* = M* \ C / D
    ASSERT_TRUE(equal_labeled(dual(a), contract_labels(delete_labels(dual(m), cl), dl)));
  }
}

TEST(Invariants, RrefAndRank) {
  rnd::Rng g(919);
  for (int i = 0; i < 200; ++i) {
    BitMatrix m = rnd::matrix(g, rnd::uniform(g, 1, 12), rnd::uniform(g, 1, 18));
    Rref r = rref(m);
    ASSERT_EQ(r.pivots.size(), rank(m));
    ASSERT_EQ(rank(m), rank(m.transpose()));
    ASSERT_TRUE(row_space_equal(r.matrix, m));
    ASSERT_EQ(rref(r.matrix).matrix, r.matrix);
    BinaryMatroid bm(m);
    ASSERT_EQ(bm.rank(), rank(m));
    ASSERT_EQ(rank_of(bm, ElementSet::all(bm.size())), bm.rank());
  }
}

TEST(Oracles, GraphicImplementationsAgree) {
  rnd::Rng g(929);
  std::size_t members = 0;
  for (int i = 0; i < 500; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 10);
    const bool fast = is_graphic(m).member;
    ASSERT_EQ(fast, is_graphic_reference(m)) << format_matroid(m);
    members += fast;
  }
  EXPECT_GT(members, 50u);
}

TEST(Oracles, CographicIsDualGraphic) {
  rnd::Rng g(937);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 10);
    ASSERT_EQ(is_cographic(m).member, is_graphic_reference(dual(m)));
  }
}

TEST(Oracles, ClassesClosedUnderSingleMinors) {
  rnd::Rng g(941);
  for (int i = 0; i < 40; ++i) {
    BinaryMatroid m = even_cycle_matroid(rnd::signed_graph(g, 6, 10));
    ElementSet e = ElementSet::of_positions(m.size(), {rnd::uniform(g, 0, m.size() - 1)});
    EXPECT_TRUE(is_even_cycle(delete_elements(m, e)).member);
    EXPECT_TRUE(is_even_cycle(contract(m, e)).member);
  }
}

TEST(Oracles, EvenCycleDualIsEvenCut) {
  rnd::Rng g(947);
  for (int i = 0; i < 100; ++i) {
    BinaryMatroid m = even_cycle_matroid(rnd::signed_graph(g, 6, 10));
    EXPECT_EQ(is_even_cycle(m).member, is_even_cut(dual(m)).member);
  }
}

TEST(Oracles, SimplifyKeepsRankAndFlats) {
  rnd::Rng g(953);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 12);
    Simplified s = simplify(m);
    ASSERT_TRUE(is_simple(s.matroid));
    ASSERT_EQ(s.matroid.rank(), m.rank());
    std::set<std::string> cols;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m.column(c).any()) cols.insert(m.column(c).str());
    ASSERT_EQ(s.matroid.size(), cols.size());
  }
}
