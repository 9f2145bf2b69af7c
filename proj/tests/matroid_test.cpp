#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mforge/catalog.hpp"
#include "mforge/embed.hpp"
#include "mforge/random.hpp"

using namespace mforge;

namespace {

ElementSet random_subset(rnd::Rng& g, std::size_t n) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rnd::coin(g)) s.add(i);
  return s;
}

// Rank by brute force over the column vectors: largest independent subset
// found by trying every subset of at most 12 columns.
std::size_t brute_rank(const BinaryMatroid& m, const ElementSet& s) {
  auto pos = s.positions();
  std::size_t best = 0;
  for (uint32_t mask = 0; mask < (1u << pos.size()); ++mask) {
    std::size_t k = std::popcount(mask);
    if (k <= best) continue;
    // Independent iff no nonempty sub-combination sums to zero.
    bool indep = true;
    for (uint32_t sub = mask; sub && indep; sub = (sub - 1) & mask) {
      BitVec acc(m.rank());
      for (std::size_t i = 0; i < pos.size(); ++i)
        if ((sub >> i) & 1u) acc ^= m.column(pos[i]);
      if (!acc.any()) indep = false;
    }
    if (indep) best = k;
  }
  return best;
}

bool same_rank_function(const BinaryMatroid& a, const BinaryMatroid& b, rnd::Rng& g, int samples) {
  for (int i = 0; i < samples; ++i) {
    ElementSet s = random_subset(g, a.size());
    ElementSet t = ElementSet::of_labels(b, s.labels(a));
    if (rank_of(a, s) != rank_of(b, t)) return false;
  }
  return true;
}

}  // namespace

TEST(RankOf, Examples) {
  BinaryMatroid k4 = named::mk(4);
  EXPECT_EQ(rank_of(k4, ElementSet(k4.size())), 0u);
  EXPECT_EQ(rank_of(k4, ElementSet::all(k4.size())), 3u);
  BinaryMatroid l11 = named::l11();
  EXPECT_EQ(rank_of(l11, ElementSet::all(11)), 6u);
  EXPECT_EQ(rank(named::l11_matrix()), 6u);
}

TEST(RankOf, MatchesBruteForce) {
  rnd::Rng g(41);
  for (int i = 0; i < 100; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 10);
    ElementSet s = random_subset(g, m.size());
    EXPECT_EQ(rank_of(m, s), brute_rank(m, s));
  }
}

TEST(Representation, RowEquivalentRepsAgree) {
  rnd::Rng g(43);
  for (int i = 0; i < 50; ++i) {
    BitMatrix a = rnd::matrix(g, 5, 10);
    BitMatrix b = a;
    b.xor_row(0, 1);
    b.swap_rows(2, 4);
    BinaryMatroid ma(a), mb(b);
    for (int k = 0; k < 20; ++k) {
      ElementSet s = random_subset(g, 10);
      EXPECT_EQ(rank_of(ma, s), rank_of(mb, s));
    }
  }
}

TEST(Minors, EmptySetsAreIdentity) {
  BinaryMatroid m = named::l11();
  EXPECT_TRUE(equal_labeled(contract(m, ElementSet(m.size())), m));
  EXPECT_TRUE(equal_labeled(delete_elements(m, ElementSet(m.size())), m));
}

TEST(Minors, PointContractionInPG32) {
  BinaryMatroid pg = named::pg32();
  for (std::size_t p = 0; p < pg.size(); ++p)
    EXPECT_EQ(contract(pg, ElementSet::of_positions(15, {p})).rank(), 3u);
}

TEST(Minors, K6ContractEdgeSimplifiesToK5) {
  BinaryMatroid k6 = named::mk(6);
  BinaryMatroid c = contract(k6, ElementSet::of_positions(15, {0}));
  EXPECT_EQ(c.size(), 14u);
  Simplified s = simplify(c);
  EXPECT_EQ(s.matroid.size(), 10u);
  EXPECT_TRUE(isomorphic(s.matroid, named::mk(5)));
}

TEST(Minors, RankDropsByRankOfContractedSet) {
  rnd::Rng g(47);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 7, 12);
    ElementSet s = random_subset(g, m.size());
    EXPECT_EQ(contract(m, s).rank(), m.rank() - rank_of(m, s));
  }
}

TEST(Minors, ContractionAndDeletionCommute) {
  rnd::Rng g(53);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 7, 12);
    ElementSet c(m.size()), d(m.size());
    for (std::size_t p = 0; p < m.size(); ++p) {
      auto roll = rnd::uniform(g, 0, 2);
      if (roll == 1) c.add(p);
      if (roll == 2) d.add(p);
    }
    BinaryMatroid a = contract_labels(delete_labels(m, d.labels(m)), c.labels(m));
    BinaryMatroid b = delete_labels(contract_labels(m, c.labels(m)), d.labels(m));
    EXPECT_TRUE(equal_labeled(a, b));
  }
}

TEST(Minors, LabelsSurvive) {
  BinaryMatroid m(BitMatrix::from_strings({"1100", "0110"}), {10, 20, 30, 40});
  BinaryMatroid c = contract_labels(m, {20});
  EXPECT_EQ(c.labels(), (std::vector<Label>{10, 30, 40}));
  BinaryMatroid d = delete_labels(m, {10, 40});
  EXPECT_EQ(d.labels(), (std::vector<Label>{20, 30}));
}

TEST(Dual, Ranks) {
  EXPECT_EQ(dual(named::mk(6)).rank(), 10u);
  EXPECT_EQ(named::l19().size(), 19u);
  EXPECT_EQ(named::l19().rank(), 13u);
  EXPECT_EQ(dual(named::f7()).rank(), 4u);
}

TEST(Dual, Involution) {
  rnd::Rng g(59);
  BinaryMatroid k5 = named::mk(5);
  BinaryMatroid dd = dual(dual(k5));
  EXPECT_EQ(dd.labels(), k5.labels());
  EXPECT_TRUE(same_rank_function(k5, dd, g, 50));
  EXPECT_TRUE(equal_labeled(k5, dd));
}

TEST(Dual, OrthogonalRowSpaces) {
  rnd::Rng g(61);
  for (int i = 0; i < 100; ++i) {
    BinaryMatroid m = rnd::matroid(g, 8, 14);
    BinaryMatroid d = dual(m);
    EXPECT_EQ(m.rank() + d.rank(), m.size());
    for (std::size_t a = 0; a < m.rank(); ++a)
      for (std::size_t b = 0; b < d.rank(); ++b) EXPECT_FALSE(m.rep().row(a).dot(d.rep().row(b)));
  }
}

TEST(Dual, InvertsMinors) {
  rnd::Rng g(67);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 7, 12);
    ElementSet s = random_subset(g, m.size());
    EXPECT_TRUE(equal_labeled(dual(contract(m, s)), delete_labels(dual(m), s.labels(m))));
    EXPECT_TRUE(equal_labeled(dual(delete_elements(m, s)), contract_labels(dual(m), s.labels(m))));
  }
}

TEST(Simplify, Examples) {
  BinaryMatroid pg = named::pg32();
  EXPECT_EQ(simplify(pg).matroid.size(), 15u);
  EXPECT_EQ(simplify(pg).matroid.labels(), pg.labels());
  BinaryMatroid m(BitMatrix::from_strings({"01101", "00110"}), {5, 3, 4, 9, 1});
  // Column 0 is a loop; columns 1 and 4 (labels 3, 1) are parallel.
  Simplified s = simplify(m);
  EXPECT_EQ(s.kept, (std::vector<Label>{4, 9, 1}));
}

TEST(Simplify, IdempotentAndSimple) {
  rnd::Rng g(71);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 4, 14);
    BinaryMatroid s = simplify(m).matroid;
    EXPECT_TRUE(equal_labeled(simplify(s).matroid, s));
    std::set<std::string> seen;
    for (std::size_t c = 0; c < s.size(); ++c) {
      EXPECT_TRUE(s.column(c).any());
      EXPECT_TRUE(seen.insert(s.column(c).str()).second);
    }
  }
}

TEST(Cosimplify, DualK6MinusEdgeCollapsesToDualK5) {
  // Contracting an edge of K6 in the cycle matroid is deleting it in the
  // dual; its series classes collapse to M*(K5).
  BinaryMatroid d6 = dual(named::mk(6));
  BinaryMatroid del = delete_elements(d6, ElementSet::of_positions(15, {0}));
  BinaryMatroid co = cosimplify(del).matroid;
  EXPECT_EQ(co.size(), 10u);
  EXPECT_TRUE(isomorphic(co, dual(named::mk(5))));
  // The contraction in the dual is already cosimple.
  BinaryMatroid con = contract(d6, ElementSet::of_positions(15, {0}));
  EXPECT_EQ(cosimplify(con).matroid.size(), 14u);
}

TEST(Lambda, Basics) {
  rnd::Rng g(73);
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 7, 12);
    ElementSet s = random_subset(g, m.size());
    EXPECT_EQ(lambda_of(m, ElementSet(m.size())), 0u);
    EXPECT_EQ(lambda_of(m, s), lambda_of(m, s.complement()));
    BinaryMatroid d = dual(m);
    std::size_t by_brute = brute_rank(m, s) + brute_rank(m, s.complement()) - m.rank();
    EXPECT_EQ(lambda_of(m, s), by_brute);
    EXPECT_EQ(lambda_of(d, s), by_brute);
  }
}

TEST(Lambda, NeverIncreasesOnRestriction) {
  rnd::Rng g(79);
  for (int i = 0; i < 100; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 12);
    ElementSet s = random_subset(g, m.size());
    ElementSet keep = s;
    for (std::size_t p = 0; p < m.size(); ++p)
      if (rnd::coin(g)) keep.add(p);
    BinaryMatroid r = restrict_to(m, keep.positions());
    ElementSet sr = ElementSet::of_labels(r, s.labels(m));
    EXPECT_LE(lambda_of(r, sr), lambda_of(m, s));
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_k_connected(named::mk(4), 3));
  EXPECT_FALSE(is_k_connected(named::mk(4), 4));
  BinaryMatroid loop(BitMatrix::from_strings({"110", "010"}));
  // Column 2 is zero, a loop.
  EXPECT_FALSE(is_k_connected(loop, 2));
  EXPECT_TRUE(is_k_connected(named::f7(), 3));
  EXPECT_TRUE(is_k_connected(named::l11(), 3));
  EXPECT_THROW(is_k_connected(named::mk(8), 3), Error);
}

TEST(Connectivity, CyclicIsVerticalOfDual) {
  rnd::Rng g(83);
  for (int i = 0; i < 60; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 10);
    for (std::size_t k = 2; k <= 4; ++k)
      EXPECT_EQ(is_cyclically_k_connected(m, k), is_vertically_k_connected(dual(m), k));
  }
}

TEST(Connectivity, MatchesSeparationEnumeration) {
  rnd::Rng g(89);
  for (int i = 0; i < 60; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 9);
    const std::size_t n = m.size();
    bool three = true;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> pos;
      for (std::size_t p = 0; p < n; ++p)
        if ((mask >> p) & 1u) pos.push_back(p);
      ElementSet s = ElementSet::of_positions(n, pos);
      std::size_t small = std::min(s.count(), n - s.count());
      std::size_t lam = brute_rank(m, s) + brute_rank(m, s.complement()) - m.rank();
      for (std::size_t j = 1; j < 3; ++j)
        if (lam <= j - 1 && small >= j) three = false;
    }
    EXPECT_EQ(is_k_connected(m, 3), three);
  }
}

TEST(Isomorphism, PermutedLabels) {
  BinaryMatroid m = named::l11();
  std::vector<Label> ls(11);
  std::iota(ls.begin(), ls.end(), 0);
  std::reverse(ls.begin(), ls.end());
  BitMatrix rev(m.rank(), 11);
  for (std::size_t c = 0; c < 11; ++c)
    for (std::size_t r = 0; r < m.rank(); ++r)
      if (m.rep().get(r, c)) rev.set(r, 10 - c);
  BinaryMatroid p(rev);
  auto iso = isomorphic(m, p);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(equal_labeled(relabel(m, *iso), p));
}

TEST(Isomorphism, F7NotSelfDual) {
  EXPECT_FALSE(isomorphic(named::f7(), dual(named::f7())));
  EXPECT_FALSE(equal_labeled(named::f7(), dual(named::f7())));
}

TEST(Isomorphism, SmallCasesMatchPermutationSearch) {
  rnd::Rng g(97);
  for (int i = 0; i < 60; ++i) {
    BinaryMatroid a = rnd::matroid(g, 3, 6);
    BinaryMatroid b = rnd::matroid(g, 3, 6);
    if (a.size() != b.size() || a.rank() != b.rank()) continue;
    std::vector<Label> perm = b.labels();
    bool found = false;
    do {
      LabelMap back;
      for (std::size_t k = 0; k < perm.size(); ++k) back[perm[k]] = a.label(k);
      if (equal_labeled(relabel(b, back), a)) found = true;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(isomorphic(a, b).has_value(), found);
  }
}

TEST(TextFormat, MatroidRoundTrip) {
  BinaryMatroid m(BitMatrix::from_strings({"1101", "0111"}), {7, 3, 5, 1});
  BinaryMatroid back = parse_matroid(format_matroid(m));
  EXPECT_EQ(back.labels(), m.labels());
  EXPECT_TRUE(equal_labeled(back, m));
  EXPECT_EQ(parse_matroid("101\n011\n").labels(), (std::vector<Label>{0, 1, 2}));
  EXPECT_THROW(parse_matroid("labels: 1, 1\n10\n01\n"), Error);
  EXPECT_THROW(parse_matroid("labels: 1, 2, 3\n10\n01\n"), Error);
}
