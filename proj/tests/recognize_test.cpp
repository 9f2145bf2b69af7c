#include <gtest/gtest.h>

#include "mforge/figures.hpp"
#include "mforge/random.hpp"
#include "mforge/recognize.hpp"

using namespace mforge;

namespace {

// Doubled K4 with every pair split even/odd, plus an odd loop.
SignedGraph doubled_k4_with_odd_loop() {
  SignedGraph sg{MultiGraph{4, {}}, {}};
  for (auto [u, v] : complete_graph(4).edges) {
    sg.graph.edges.emplace_back(u, v);
    sg.graph.edges.emplace_back(u, v);
    sg.odd_edges.insert(sg.graph.edges.size() - 1);
  }
  sg.graph.edges.emplace_back(0, 0);
  sg.odd_edges.insert(sg.graph.edges.size() - 1);
  return sg;
}

BinaryMatroid random_restriction(rnd::Rng& g, const BinaryMatroid& host, std::size_t keep) {
  std::vector<std::size_t> pos = iota_indices(host.size());
  std::shuffle(pos.begin(), pos.end(), g);
  pos.resize(keep);
  std::sort(pos.begin(), pos.end());
  return restrict_to(host, pos);
}

void expect_graph_certificate(const BinaryMatroid& m, const Recognition& r) {
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(equal_labeled(BinaryMatroid(incidence_matrix(r.certificate->graph), m.labels()), m));
}

void expect_signed_certificate(const BinaryMatroid& m, const Recognition& r) {
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(equal_labeled(BinaryMatroid(even_cycle_matroid(r.certificate->signed_graph).rep(), m.labels()), m));
}

}  // namespace

TEST(Graphic, Examples) {
  BinaryMatroid k5 = named::mk(5);
  auto r = is_graphic(k5);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.certificate->graph.n_vertices, 5u);
  expect_graph_certificate(k5, r);
  EXPECT_FALSE(is_graphic(named::f7()).member);
  EXPECT_FALSE(is_graphic(dual(named::mk(5))).member);
  EXPECT_FALSE(is_graphic(dual(named::mk33())).member);
  EXPECT_FALSE(is_graphic_reference(dual(named::mk(5))));
}

TEST(Graphic, F7HasNoRealizationOnFourVertices) {
  // Every assignment of the seven columns to edges of a 4-vertex multigraph.
  BinaryMatroid f7 = named::f7();
  auto pairs = complete_graph(4).edges;
  std::vector<std::size_t> pick(7, 0);
  bool found = false;
  for (;;) {
    MultiGraph gr{4, {}};
    for (auto p : pick) gr.edges.push_back(pairs[p]);
    if (equal_labeled(BinaryMatroid(incidence_matrix(gr)), f7)) found = true;
    std::size_t i = 0;
    while (i < 7 && ++pick[i] == pairs.size()) pick[i++] = 0;
    if (i == 7) break;
  }
  EXPECT_FALSE(found);
}

TEST(Graphic, FastPathMatchesExcludedMinorReference) {
  rnd::Rng g(211);
  int members = 0;
  for (int i = 0; i < 500; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 10);
    auto fast = is_graphic(m);
    EXPECT_EQ(fast.member, is_graphic_reference(m)) << format_matroid(m);
    if (fast.member) {
      ++members;
      expect_graph_certificate(m, fast);
    }
  }
  EXPECT_GT(members, 50);
}

TEST(Graphic, RandomGraphsAreRecognized) {
  rnd::Rng g(223);
  for (int i = 0; i < 200; ++i) {
    MultiGraph gr = rnd::graph(g, 9, 20);
    BinaryMatroid m = cycle_matroid(gr);
    auto r = is_graphic(m);
    ASSERT_TRUE(r.member);
    expect_graph_certificate(m, r);
  }
}

TEST(Graphic, ReferenceBound) {
  EXPECT_THROW(is_graphic_reference(named::mk(8)), Error);
}

TEST(Cographic, Examples) {
  EXPECT_TRUE(is_cographic(named::l19()).member);
  EXPECT_FALSE(is_cographic(named::mk(6)).member);
  EXPECT_TRUE(is_cographic(BinaryMatroid(BitMatrix::from_strings({"111"}))).member);
  EXPECT_TRUE(is_cographic(BinaryMatroid(BitMatrix::from_strings({"1"}))).member);
}

TEST(EvenCycle, Examples) {
  BinaryMatroid f7 = named::f7();
  auto r = is_even_cycle(f7);
  ASSERT_TRUE(r.member);
  expect_signed_certificate(f7, r);
  EXPECT_FALSE(is_even_cycle(named::pg32_minus(1)).member);
  EXPECT_FALSE(is_even_cycle(named::l11()).member);
}

TEST(EvenCycle, LargestRankFour) {
  BinaryMatroid m = even_cycle_matroid(doubled_k4_with_odd_loop());
  BinaryMatroid s = simplify(m).matroid;
  EXPECT_EQ(s.rank(), 4u);
  EXPECT_EQ(s.size(), 13u);
  EXPECT_EQ(s.size(), 4u * 4u - 4u + 1u);
  auto r = is_even_cycle(s);
  ASSERT_TRUE(r.member);
  expect_signed_certificate(s, r);
  // Every 14-element simple rank-4 binary matroid is PG(3,2) minus a point.
  for (std::size_t p = 0; p < 15; ++p)
    EXPECT_FALSE(is_even_cycle(delete_elements(named::pg32(), ElementSet::of_positions(15, {p}))).member);
}

TEST(EvenCycle, SignedGraphsAreRecognized) {
  rnd::Rng g(227);
  for (int i = 0; i < 200; ++i) {
    SignedGraph sg = rnd::signed_graph(g, 7, 14);
    BinaryMatroid m = even_cycle_matroid(sg);
    auto r = is_even_cycle(m);
    ASSERT_TRUE(r.member) << format_signed_graph(sg);
    expect_signed_certificate(m, r);
  }
}

TEST(EvenCycle, RankBound) {
  EXPECT_THROW(is_even_cycle(named::mk(16)), Error);
}

TEST(EvenCut, Examples) {
  EXPECT_FALSE(is_even_cut(named::mk(6)).member);
  for (std::size_t n = 3; n <= 6; ++n) {
    BinaryMatroid co = dual(named::mk(n));
    auto r = is_even_cut(co);
    ASSERT_TRUE(r.member);
    EXPECT_FALSE(r.certificate->row.any());
    EXPECT_TRUE(check_even_cut_certificate(co, *r.certificate));
  }
  rnd::Rng g(229);
  for (int i = 0; i < 50; ++i) {
    BinaryMatroid m = graft_matroid(rnd::graft(g, 6, 10));
    auto r = is_even_cut(m);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(check_even_cut_certificate(m, *r.certificate));
  }
}

TEST(EvenCut, CertificateRejectsTampering) {
  BinaryMatroid m = graft_matroid({complete_graph(4), {0, 1, 2, 3}});
  auto r = is_even_cut(m);
  ASSERT_TRUE(r.member);
  ClassCertificate bad = *r.certificate;
  bad.graph.edges[0] = {bad.graph.edges[0].second, bad.graph.edges[0].second};
  EXPECT_FALSE(check_even_cut_certificate(m, bad));
}

TEST(BlockingPair, Examples) {
  EXPECT_TRUE(in_blocking_pair_class(named::f7()));
  EXPECT_FALSE(in_blocking_pair_class(named::pg32_minus_line()));
  EXPECT_TRUE(in_blocking_pair_class(named::x(4)));
  EXPECT_EQ(named::x(4).size(), 12u);
  EXPECT_TRUE(in_blocking_pair_class(dual(named::mk(5))));
}

TEST(BlockingPair, LoopsAndParallelsIgnored) {
  BitMatrix a = named::a_matrix(4);
  BitMatrix b = augment_cols(a, augment_cols(select_cols(a, {0, 5}), BitMatrix(4, 1)));
  EXPECT_TRUE(in_blocking_pair_class(BinaryMatroid(b)));
}

TEST(BlockingPair, ImpliesEvenCycleAndDualEvenCut) {
  rnd::Rng g(233);
  for (std::size_t r = 3; r <= 5; ++r) {
    BinaryMatroid xr = named::x(r);
    for (int i = 0; i < 15; ++i) {
      BinaryMatroid m = random_restriction(g, xr, rnd::uniform(g, r, xr.size()));
      ASSERT_TRUE(in_blocking_pair_class(m));
      EXPECT_TRUE(is_even_cycle(m).member);
      EXPECT_TRUE(is_even_cut(dual(m)).member);
    }
  }
}

TEST(BlockingPair, CosimplificationStable) {
  // Series extension: add a new row and a new column, splitting an element.
  rnd::Rng g(239);
  for (int i = 0; i < 40; ++i) {
    BinaryMatroid base = rnd::coin(g) ? random_restriction(g, named::x(4), rnd::uniform(g, 6, 12))
                                      : random_restriction(g, named::pg32(), rnd::uniform(g, 10, 15));
    const std::size_t n = base.size(), r = base.rank();
    std::size_t e = rnd::uniform(g, 0, n - 1);
    BitMatrix big(r + 1, n + 1);
    for (std::size_t row = 0; row < r; ++row)
      for (auto c : base.rep().row(row).ones()) big.set(row, c);
    big.set(r, e);
    big.set(r, n);
    BinaryMatroid ext(big);
    EXPECT_EQ(in_blocking_pair_class(ext), in_blocking_pair_class(cosimplify(ext).matroid));
    EXPECT_EQ(in_blocking_pair_class(ext), in_blocking_pair_class(base));
  }
}

TEST(MinorClosed, EvenCycleAndEvenCut) {
  rnd::Rng g(241);
  for (int i = 0; i < 100; ++i) {
    BinaryMatroid m = i % 2 ? even_cycle_matroid(rnd::signed_graph(g, 6, 9)) : graft_matroid(rnd::graft(g, 5, 8));
    bool (*in)(const BinaryMatroid&) = i % 2 ? +[](const BinaryMatroid& x) { return is_even_cycle(x).member; }
                                             : +[](const BinaryMatroid& x) { return is_even_cut(x).member; };
    ASSERT_TRUE(in(m));
    for (std::size_t p = 0; p < m.size(); ++p) {
      ElementSet s = ElementSet::of_positions(m.size(), {p});
      EXPECT_TRUE(in(delete_elements(m, s)));
      EXPECT_TRUE(in(contract(m, s)));
    }
  }
}

TEST(Embedding, Examples) {
  auto k4 = embeds_as_restriction(named::mk(4), named::mk(5));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->size(), 6u);
  EXPECT_FALSE(embeds_as_restriction(named::pg32_minus_line(), named::x(4)));
  rnd::Rng g(251);
  BinaryMatroid x5 = named::x(5);
  for (int i = 0; i < 20; ++i) {
    BinaryMatroid sub = random_restriction(g, x5, 8);
    if (sub.rank() != 5) continue;
    // Fresh labels so the map is not the identity by construction.
    std::vector<Label> fresh;
    for (std::size_t k = 0; k < sub.size(); ++k) fresh.push_back(static_cast<Label>(100 + k));
    BinaryMatroid renamed(sub.rep(), fresh);
    auto map = embeds_as_restriction(renamed, x5);
    ASSERT_TRUE(map);
    std::vector<Label> image;
    LabelMap back;
    for (auto [a, b] : *map) {
      image.push_back(b);
      back[b] = a;
    }
    BinaryMatroid r = restrict_to(x5, ElementSet::of_labels(x5, image).positions());
    EXPECT_TRUE(equal_labeled(relabel(r, back), renamed));
  }
}

TEST(Minor, Examples) {
  auto k = has_minor(named::mk(5), named::mk(4));
  ASSERT_TRUE(k);
  EXPECT_TRUE(replay_minor(named::mk(5), named::mk(4), *k));
  auto pg = has_minor(named::pg32(), named::pg32_minus(1));
  ASSERT_TRUE(pg);
  EXPECT_EQ(pg->contract_set.count(), 0u);
  EXPECT_EQ(pg->delete_set.count(), 1u);
  EXPECT_TRUE(replay_minor(named::pg32(), named::pg32_minus(1), *pg));
  auto none = find_minor(named::x(4), named::pg32_minus(1));
  EXPECT_FALSE(none.witness);
  EXPECT_TRUE(none.stats.exhausted);
  auto f7 = has_minor(named::pg32(), named::f7());
  ASSERT_TRUE(f7);
  EXPECT_TRUE(replay_minor(named::pg32(), named::f7(), *f7));
}

TEST(Minor, GraphMinorsOfRandomGraphs) {
  rnd::Rng g(257);
  for (int i = 0; i < 30; ++i) {
    BinaryMatroid m = cycle_matroid(rnd::graph(g, 7, 14));
    ElementSet c(m.size()), d(m.size());
    for (std::size_t p = 0; p < m.size(); ++p) {
      auto roll = rnd::uniform(g, 0, 3);
      if (roll == 1) c.add(p);
      if (roll == 2) d.add(p);
    }
    BinaryMatroid target = delete_labels(contract(m, c), d.labels(m));
    auto w = has_minor(m, target);
    ASSERT_TRUE(w);
    EXPECT_TRUE(replay_minor(m, target, *w));
  }
}

TEST(Minor, Bounds) {
  EXPECT_THROW(has_minor(named::mk(9), named::mk(8)), Error);
}

TEST(BigRank4Minor, Examples) {
  auto pg = has_big_rank4_minor(named::pg32(), 14);
  ASSERT_TRUE(pg);
  EXPECT_TRUE(pg->empty());
  EXPECT_FALSE(has_big_rank4_minor(named::mk(5), 14));
  EXPECT_FALSE(has_big_rank4_minor(named::x(4), 13));
  EXPECT_TRUE(has_big_rank4_minor(named::pg32_minus(2), 13));
  // A four-ones column over a K5 frame is enough.
  FrameTemplate t = p_template(4, {"1", "1", "1", "1"}, {});
  bool found = false;
  for (std::size_t n = 2; n <= 6 && !found; ++n) found = has_big_rank4_minor(largest_simple_conforming(t, n), 14).has_value();
  EXPECT_TRUE(found);
}

TEST(BigRank4Minor, CertifiesPG32MinusE) {
  rnd::Rng g(263);
  for (int i = 0; i < 10; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 22);
    auto s = has_big_rank4_minor(m, 14);
    if (!s) continue;
    BinaryMatroid q = simplify(contract(m, *s)).matroid;
    EXPECT_EQ(q.rank(), 4u);
    EXPECT_GE(q.size(), 14u);
    EXPECT_TRUE(has_minor(m, named::pg32_minus(1)));
  }
}

TEST(ExcludedMinor, Examples) {
  EXPECT_TRUE(is_excluded_minor(named::l11(), ClassKind::even_cycle));
  EXPECT_TRUE(is_excluded_minor(named::pg32_minus(1), ClassKind::even_cycle));
  EXPECT_TRUE(is_excluded_minor(dual(named::h12()), ClassKind::even_cut));
  EXPECT_TRUE(is_excluded_minor(named::mk(6), ClassKind::even_cut));
  auto pg = check_excluded_minor(named::pg32(), ClassKind::even_cycle);
  EXPECT_FALSE(pg.excluded);
  ASSERT_TRUE(pg.failing);
  EXPECT_FALSE(pg.failing_is_contraction);
  EXPECT_TRUE(is_excluded_minor(named::f7(), ClassKind::graphic));
}

TEST(Catalog, Shapes) {
  struct Want {
    const char* name;
    std::size_t size, rank;
  };
  for (auto w : {Want{"PG32", 15, 4}, Want{"PG32_minus_e", 14, 4}, Want{"PG32_minus_2", 13, 4},
                 Want{"PG32_minus_L", 12, 4}, Want{"L11", 11, 6}, Want{"L19", 19, 13}, Want{"H12", 12, 5},
                 Want{"H12_dual", 12, 7}, Want{"F7", 7, 3}, Want{"F7_dual", 7, 4}, Want{"MK(6)", 15, 5},
                 Want{"MK_dual(5)", 10, 6}, Want{"MK33_dual", 9, 4}, Want{"X(4)", 12, 4}}) {
    BinaryMatroid m = catalog(w.name);
    EXPECT_EQ(m.size(), w.size) << w.name;
    EXPECT_EQ(m.rank(), w.rank) << w.name;
  }
  for (const auto& n : catalog_names()) EXPECT_NO_THROW(catalog(n)) << n;
  EXPECT_THROW(catalog("PG33"), Error);
}

TEST(Catalog, MatricesAsWritten) {
  EXPECT_EQ(catalog_matrix("H12"), named::h12_matrix());
  EXPECT_EQ(catalog_matrix("H12").to_strings(),
            (std::vector<std::string>{"001010101011", "000111100000", "000110011000", "100000000111",
                                      "010101010101"}));
  BitMatrix pg = catalog_matrix("PG32");
  for (std::size_t c = 0; c < 15; ++c) {
    std::size_t v = 0;
    for (std::size_t r = 0; r < 4; ++r) v = 2 * v + pg.get(r, c);
    EXPECT_EQ(v, c + 1);
  }
  EXPECT_EQ(catalog_matrix("PG32_minus_e").cols(), 14u);
  EXPECT_TRUE(equal_labeled(BinaryMatroid(catalog_matrix("L11")), catalog("L11")));
}

TEST(Catalog, X4IsPG32MinusIndependentTriple) {
  // Delete three independent points {e1, e2, e3} viewed as columns 8, 4, 2.
  BinaryMatroid pg = named::pg32();
  BinaryMatroid d = delete_elements(pg, ElementSet::of_positions(15, {7, 3, 1}));
  EXPECT_EQ(rank_of(pg, ElementSet::of_positions(15, {7, 3, 1})), 3u);
  EXPECT_TRUE(isomorphic(named::x(4), d));
}

TEST(Catalog, PG32DeletionsAllIsomorphic) {
  BinaryMatroid first = named::pg32_minus(1);
  for (std::size_t p = 0; p < 14; ++p)
    EXPECT_TRUE(isomorphic(first, delete_elements(named::pg32(), ElementSet::of_positions(15, {p}))));
}
