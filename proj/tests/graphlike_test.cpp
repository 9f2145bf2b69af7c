#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "mforge/figures.hpp"
#include "mforge/random.hpp"
#include "mforge/recognize.hpp"

using namespace mforge;

namespace {

// Tries every resigning set R: blocking iff some R leaves every odd edge
// touching u or v.
std::optional<std::pair<std::size_t, std::size_t>> blocking_pair_by_resigning(const SignedGraph& sg) {
  const std::size_t n = sg.graph.n_vertices;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (uint32_t r = 0; r < (1u << n); ++r) {
        bool ok = true;
        for (std::size_t e = 0; e < sg.graph.n_edges() && ok; ++e) {
          auto [a, b] = sg.graph.edges[e];
          bool odd = sg.odd_edges.count(e) > 0;
          if (a != b) odd ^= (((r >> a) ^ (r >> b)) & 1u) != 0;
          if (odd && a != u && a != v && b != u && b != v) ok = false;
        }
        if (ok) return std::make_pair(u, v);
      }
  return std::nullopt;
}

}  // namespace

TEST(Incidence, Triangle) {
  BitMatrix t = incidence_matrix(complete_graph(3));
  ASSERT_EQ(t.rows(), 3u);
  ASSERT_EQ(t.cols(), 3u);
  BitVec sum(3);
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_EQ(t.col(c).count(), 2u);
    sum ^= t.col(c);
  }
  EXPECT_FALSE(sum.any());
}

TEST(Incidence, LoopAndK4) {
  MultiGraph loop = graph_from_edges(2, {{1, 1}});
  EXPECT_FALSE(incidence_matrix(loop).col(0).any());
  EXPECT_EQ(rank(incidence_matrix(complete_graph(4))), 3u);
  EXPECT_THROW(graph_from_edges(2, {{0, 2}}), Error);
}

TEST(CompleteGraph, EdgesAndL19Base) {
  EXPECT_EQ(complete_graph(4).n_edges(), 6u);
  MultiGraph base = named::l19_graph();
  EXPECT_EQ(base.n_vertices, 7u);
  EXPECT_EQ(base.n_edges(), 19u);
  EXPECT_EQ(complete_graph(4).edges.front(), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(complete_graph(4).edges.back(), (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(CycleMatroid, Examples) {
  BinaryMatroid k4 = cycle_matroid(complete_graph(4));
  EXPECT_EQ(k4.rank(), 3u);
  EXPECT_EQ(k4.size(), 6u);
  BinaryMatroid base = cycle_matroid(named::l19_graph());
  EXPECT_EQ(base.rank(), 6u);
  EXPECT_EQ(base.size(), 19u);
  EXPECT_TRUE(equal_labeled(dual(base), named::l19()));
  // Triangle plus a pendant edge: the pendant edge is a coloop.
  BinaryMatroid bridge = cycle_matroid(graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  EXPECT_EQ(contract(bridge, ElementSet::of_positions(4, {3})).rank(), bridge.rank() - 1);
  EXPECT_EQ(delete_elements(bridge, ElementSet::of_positions(4, {3})).rank(), bridge.rank() - 1);
}

TEST(CycleMatroid, RankIsVerticesMinusComponents) {
  rnd::Rng g(101);
  for (int i = 0; i < 100; ++i) {
    MultiGraph gr = rnd::graph(g, 8, 12);
    std::vector<std::size_t> parent(gr.n_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [a, b] : gr.edges) parent[find(a)] = find(b);
    std::size_t comps = 0;
    for (std::size_t v = 0; v < gr.n_vertices; ++v) comps += find(v) == v;
    EXPECT_EQ(cycle_matroid(gr).rank(), gr.n_vertices - comps);
  }
}

TEST(EvenCycle, NoOddEdgesIsGraphic) {
  rnd::Rng g(103);
  for (int i = 0; i < 100; ++i) {
    MultiGraph gr = rnd::graph(g, 7, 12);
    EXPECT_TRUE(equal_labeled(even_cycle_matroid({gr, {}}), cycle_matroid(gr)));
  }
}

TEST(EvenCycle, FigureOneIsPG32MinusLine) {
  SignedGraph sg = figures::load(figures::kDoubledK4);
  BinaryMatroid m = even_cycle_matroid(sg);
  EXPECT_EQ(m.size(), 12u);
  EXPECT_TRUE(isomorphic(m, named::pg32_minus_line()));
}

TEST(EvenCycle, FigureThreeDrawings) {
  BinaryMatroid a = even_cycle_matroid(figures::load(figures::kDualK5));
  EXPECT_TRUE(isomorphic(a, dual(named::mk(5))));
  BinaryMatroid b = even_cycle_matroid(figures::load(figures::kDualK6MinusEdge));
  BinaryMatroid k6e = dual(delete_elements(named::mk(6), ElementSet::of_positions(15, {0})));
  EXPECT_TRUE(isomorphic(b, k6e));
}

TEST(Resign, Involution) {
  rnd::Rng g(107);
  SignedGraph sg = rnd::signed_graph(g, 6, 10);
  SignedGraph twice = resign(resign(sg, 0), 0);
  EXPECT_EQ(twice.odd_edges, sg.odd_edges);
  SignedGraph iso{graph_from_edges(3, {{0, 1}}), {0}};
  EXPECT_EQ(resign(iso, 2).odd_edges, iso.odd_edges);
  EXPECT_THROW(resign(iso, 3), Error);
}

TEST(Resign, LeavesMatroidUnchanged) {
  rnd::Rng g(109);
  for (int i = 0; i < 1000; ++i) {
    SignedGraph sg = rnd::signed_graph(g, 8, 12);
    SignedGraph t = sg;
    const std::size_t steps = rnd::uniform(g, 1, 4);
    for (std::size_t k = 0; k < steps; ++k) t = resign(t, rnd::uniform(g, 0, sg.graph.n_vertices - 1));
    EXPECT_TRUE(equal_labeled(even_cycle_matroid(sg), even_cycle_matroid(t)));
  }
}

TEST(BlockingPair, Examples) {
  SignedGraph plain{complete_graph(4), {}};
  EXPECT_EQ(find_blocking_pair(plain), (std::make_pair<std::size_t, std::size_t>(0, 1)));
  EXPECT_TRUE(find_blocking_pair(figures::load(figures::kDualK5)));
  EXPECT_TRUE(find_blocking_pair(figures::load(figures::kDualK6MinusEdge)));
  SignedGraph fig1 = figures::load(figures::kDoubledK4);
  EXPECT_FALSE(find_blocking_pair(fig1));
  EXPECT_FALSE(blocking_pair_by_resigning(fig1));
}

TEST(BlockingPair, AgreesWithResigningEnumeration) {
  rnd::Rng g(113);
  for (int i = 0; i < 500; ++i) {
    SignedGraph sg = rnd::signed_graph(g, 6, 10);
    EXPECT_EQ(find_blocking_pair(sg), blocking_pair_by_resigning(sg));
  }
}

TEST(Graft, NoTerminalsGivesBondMatroid) {
  Graft k4{complete_graph(4), {}};
  BinaryMatroid m = graft_matroid(k4);
  EXPECT_TRUE(equal_labeled(m, dual(cycle_matroid(k4.graph))));
  EXPECT_TRUE(isomorphic(m, dual(named::mk(4))));
}

TEST(Graft, NoTerminalsRandomConnected) {
  rnd::Rng g(127);
  int tested = 0;
  while (tested < 100) {
    MultiGraph gr = rnd::graph(g, 6, 10);
    if (cycle_matroid(gr).rank() + 1 != gr.n_vertices) continue;  // connected only
    ++tested;
    EXPECT_TRUE(equal_labeled(graft_matroid({gr, {}}), dual(cycle_matroid(gr))));
  }
}

TEST(Graft, AllTerminalsOfK4) {
  Graft k4{complete_graph(4), {0, 1, 2, 3}};
  BinaryMatroid m = graft_matroid(k4);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_EQ(m.rank(), 4u);
  auto r = is_even_cut(m);
  ASSERT_TRUE(r.member);
  EXPECT_TRUE(check_even_cut_certificate(m, *r.certificate));
}

TEST(Graft, RandomGraftsAreEvenCut) {
  rnd::Rng g(131);
  for (int i = 0; i < 200; ++i) {
    Graft gr = rnd::graft(g, 6, 10);
    EXPECT_TRUE(is_even_cut(graft_matroid(gr)).member) << format_graft(gr);
  }
}

TEST(Graft, Errors) {
  EXPECT_THROW(graft_matroid({complete_graph(4), {0}}), Error);
  try {
    graft_matroid({complete_graph(17), {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

TEST(GraphText, RoundTrip) {
  SignedGraph sg = figures::load(figures::kDualK5);
  GraphFile f = parse_graph(format_signed_graph(sg));
  EXPECT_EQ(f.graph.edges, sg.graph.edges);
  EXPECT_EQ(f.odd_edges, sg.odd_edges);
  Graft gr{complete_graph(4), {1, 3}};
  GraphFile h = parse_graph(format_graft(gr));
  ASSERT_TRUE(h.terminals);
  EXPECT_EQ(*h.terminals, gr.terminals);
  try {
    parse_graph("vertices: 3\n0 1\n0 5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("0 1\n"), Error);
  EXPECT_THROW(parse_graph("vertices: 3\n0 1 even\n"), Error);
}
