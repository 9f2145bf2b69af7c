#pragma once

// Template instances for the even-cycle (A) and even-cut (B) technical
// lemmas, and the search that looks for the stated minor in the largest
// conforming matroids.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "mforge/catalog.hpp"
#include "mforge/minor.hpp"
#include "mforge/templates.hpp"

namespace mforge {

enum class LemmaTarget {
  pg_minus_e,  // rank-4 contraction with >= 14 points
  pg_minus_2,  // rank-4 contraction with >= 13 points
  pg_or_l11,   // (PG\e or L11) and PG_{-2}
  h12,         // H12 minor
};

inline const char* to_string(LemmaTarget t) {
  switch (t) {
    case LemmaTarget::pg_minus_e: return "PG32_minus_e";
    case LemmaTarget::pg_minus_2: return "PG32_minus_2";
    case LemmaTarget::pg_or_l11: return "PG32_minus_e|L11 and PG32_minus_2";
    case LemmaTarget::h12: return "H12";
  }
  return "?";
}

// Blocks are row strings. A instances: k = rows, p1 and p0. B instances use
// all four blocks.
struct LemmaInstance {
  std::size_t k = 0;
  std::vector<std::string> p1, p0;          // A suite
  std::vector<std::string> a_y1, b_y1, a_y0, b_y0;  // B suite

  FrameTemplate build(bool suite_b) const {
    return suite_b ? xbar_template(k, a_y1, b_y1, a_y0, b_y0) : p_template(k, p1, p0);
  }
};

struct LemmaSpec {
  std::string id;
  std::string anchor;
  LemmaTarget target;
  bool suite_b = false;
  std::vector<LemmaInstance> instances;
};

namespace detail {

// "ab|c" rows: left of the bar goes to the first block, right to the second.
inline LemmaInstance split_rows(const std::vector<std::string>& rows, bool first_is_p1 = true) {
  LemmaInstance in;
  in.k = rows.size();
  for (const auto& r : rows) {
    auto bar = r.find('|');
    std::string l = bar == std::string::npos ? r : r.substr(0, bar);
    std::string rt = bar == std::string::npos ? "" : r.substr(bar + 1);
    if (first_is_p1) {
      if (!l.empty()) in.p1.push_back(l);
      if (!rt.empty()) in.p0.push_back(rt);
    } else {
      in.p0.push_back(l);
    }
  }
  return in;
}

inline LemmaInstance p1_only(const std::vector<std::string>& rows) { return split_rows(rows, true); }
inline LemmaInstance p0_only(const std::vector<std::string>& rows) { return split_rows(rows, false); }
inline LemmaInstance p1_p0(const std::vector<std::string>& rows) { return split_rows(rows, true); }

// B blocks: `which` names the block of each side of the bar.
enum class BBlock { a_y1, b_y1, a_y0, b_y0 };

inline LemmaInstance b_instance(std::size_t k, BBlock left, const std::optional<BBlock>& right,
                                const std::vector<std::string>& rows) {
  LemmaInstance in;
  in.k = k;
  auto slot = [&](BBlock b) -> std::vector<std::string>& {
    switch (b) {
      case BBlock::a_y1: return in.a_y1;
      case BBlock::b_y1: return in.b_y1;
      case BBlock::a_y0: return in.a_y0;
      case BBlock::b_y0: return in.b_y0;
    }
    return in.a_y1;
  };
  for (const auto& r : rows) {
    auto bar = r.find('|');
    slot(left).push_back(bar == std::string::npos ? r : r.substr(0, bar));
    if (right) slot(*right).push_back(r.substr(bar + 1));
  }
  return in;
}

inline std::vector<LemmaInstance> with_x(const std::vector<std::vector<std::string>>& mats) {
  std::vector<LemmaInstance> out;
  for (const auto& m : mats)
    for (char x : {'0', '1'}) {
      std::vector<std::string> rows = m;
      for (auto& r : rows)
        for (auto& ch : r)
          if (ch == 'x') ch = x;
      out.push_back(p1_p0(rows));
    }
  return out;
}

}  // namespace detail

inline const std::vector<LemmaSpec>& lemma_specs() {
  using namespace detail;
  using T = LemmaTarget;
  static const std::vector<LemmaSpec> specs = [] {
    std::vector<LemmaSpec> s;
    auto a = [&](std::string id, std::string anchor, T t, std::vector<LemmaInstance> in) {
      s.push_back({std::move(id), std::move(anchor), t, false, std::move(in)});
    };
    a("lemma-A.3", "Lemma 5.1: P1 column with four or more nonzero entries", T::pg_minus_e,
      {p1_only({"1", "1", "1", "1"})});
    a("lemma-A.4", "Lemma 5.2: 4x2 submatrix of P1", T::pg_minus_e, {p1_only({"10", "10", "01", "01"})});
    a("lemma-A.5", "Lemma 5.3: 3x3 submatrix of P1", T::pg_minus_e, {p1_only({"101", "110", "011"})});
    a("lemma-A.6", "Lemma 5.4: 3x3 submatrix of P1", T::pg_minus_e, {p1_only({"111", "101", "011"})});
    a("lemma-A.7", "Lemma 5.5: 4x2 submatrix of P1", T::pg_minus_e, {p1_only({"10", "10", "11", "01"})});
    a("lemma-A.8", "Lemma 5.6: P0 column of weight five or a 6x2 submatrix", T::pg_minus_e,
      {p0_only({"1", "1", "1", "1", "1"}), p0_only({"10", "10", "10", "01", "01", "01"}),
       p0_only({"10", "10", "10", "11", "01", "01"})});
    a("lemma-A.9", "Lemma 5.7: forbidden 3-column submatrices of P0", T::pg_or_l11,
      {p0_only({"111", "101", "100", "011", "010", "001"}), p0_only({"110", "101", "100", "011", "010", "001"}),
       p0_only({"110", "101", "101", "011", "010"}), p0_only({"111", "101", "101", "011", "010"}),
       p0_only({"110", "101", "101", "011", "011"})});
    a("lemma-A.10", "Lemma 5.8: forbidden 3-column submatrices of P0", T::pg_or_l11,
      {p0_only({"110", "110", "101", "101", "011"}), p0_only({"111", "110", "101", "101", "011"}),
       p0_only({"111", "110", "101", "101", "010"}), p0_only({"111", "110", "101", "100", "011"}),
       p0_only({"111", "110", "101", "100", "010", "001"})});
    a("lemma-A.11", "Lemma 5.9: forbidden 4x4 submatrices of P0", T::pg_or_l11,
      {p0_only({"1110", "1101", "1011", "0111"}), p0_only({"1111", "1101", "1011", "0111"})});
    a("lemma-A.12", "Lemma 5.10: forbidden 4x4 submatrix of P0", T::pg_or_l11,
      {p0_only({"1110", "1111", "1101", "1011"})});
    a("lemma-A.13", "Lemma 5.11: forbidden 6x3 submatrices of P0", T::pg_or_l11,
      {p0_only({"110", "110", "101", "101", "011", "011"}), p0_only({"111", "110", "101", "101", "011", "010"}),
       p0_only({"111", "110", "101", "100", "011", "010"})});
    a("lemma-A.14", "Lemma 5.12: forbidden 5x4 submatrices of P0", T::pg_or_l11,
      {p0_only({"1110", "1101", "1111", "1011", "0111"}), p0_only({"1111", "1110", "1101", "1011", "0111"})});
    a("lemma-A.15", "Lemma 5.13: [P1|P0] submatrices with x in {0,1}", T::pg_minus_e,
      with_x({{"11|x", "10|1", "01|1", "00|1"},
              {"11|x", "10|0", "01|1", "00|1", "00|1"},
              {"11|x", "10|0", "01|0", "00|1", "00|1", "00|1"}}));
    a("lemma-A.16", "Lemma 5.14: [P1|P0] submatrices", T::pg_minus_e,
      {p1_p0({"11|1", "11|0", "10|1", "01|1"}), p1_p0({"11|1", "11|0", "10|0", "01|1", "00|1"}),
       p1_p0({"11|1", "11|0", "10|0", "01|0", "00|1", "00|1"})});
    a("lemma-A.17", "Lemma 5.15: [P1|P0] submatrices with two P0 columns", T::pg_minus_e,
      {p1_p0({"1|10", "1|01", "0|11", "0|11"}), p1_p0({"1|10", "1|01", "0|11", "0|10", "0|01"}),
       p1_p0({"1|11", "1|10", "0|11", "0|11"}), p1_p0({"1|11", "1|10", "0|10", "0|11", "0|01"})});
    a("lemma-A.18", "Lemma 5.16: [P1|P0] submatrices with two P0 columns", T::pg_minus_e,
      {p1_p0({"1|11", "1|10", "1|01", "0|11"}), p1_p0({"1|11", "1|10", "1|01", "0|10", "0|01"})});
    a("lemma-A.19", "Lemma 5.17: P1 submatrices", T::pg_minus_2,
      {p1_only({"11", "10", "01"}), p1_only({"11", "11", "10", "01"})});
    a("lemma-A.20", "Lemma 5.18: [P1|P0] submatrices", T::pg_minus_2,
      {p1_p0({"1|1", "1|1", "0|1", "0|1"}), p1_p0({"1|1", "1|0", "0|1", "0|1"})});
    a("lemma-A.21", "Lemma 5.19: [P1|P0] submatrix", T::pg_minus_2, {p1_p0({"1|1", "1|1", "1|0", "0|1"})});
    a("lemma-A.22", "Lemma 5.20: P0 submatrix", T::pg_minus_2, {p0_only({"111", "101", "110", "011"})});

    auto b = [&](std::string id, std::string anchor, std::vector<LemmaInstance> in) {
      s.push_back({std::move(id), std::move(anchor), T::h12, true, std::move(in)});
    };
    using B = BBlock;
    auto rows_of = [](const std::vector<std::string>& r) { return r.size(); };
    auto bi = [&](B l, std::optional<B> r, std::vector<std::string> rows) {
      return b_instance(rows_of(rows), l, r, rows);
    };
    b("lemma-B.3", "Lemma 6.1: B_Y1 contains [1,0]", {bi(B::b_y1, std::nullopt, {"10"})});
    b("lemma-B.4", "Lemma 6.2: [A_Y1|B_Y1] submatrices",
      {bi(B::a_y1, B::b_y1, {"1|1", "1|1"}), bi(B::a_y1, B::b_y1, {"1|0", "1|0"}),
       bi(B::a_y1, B::b_y1, {"1|1", "1|0"})});
    b("lemma-B.5", "Lemma 6.3: A_Y1 submatrices",
      {bi(B::a_y1, std::nullopt, {"11", "11", "01"}), bi(B::a_y1, std::nullopt, {"10", "11", "01"}),
       bi(B::a_y1, std::nullopt, {"10", "10", "01", "01"})});
    b("lemma-old4.6.1", "Lemma 6.4: [A_Y1|A_Y0] submatrices",
      {bi(B::a_y1, B::a_y0, {"1|1", "1|1", "0|1", "0|1"}), bi(B::a_y1, B::a_y0, {"1|0", "1|1", "0|1", "0|1"}),
       bi(B::a_y1, B::a_y0, {"1|0", "1|0", "0|1", "0|1", "0|1"}),
       bi(B::a_y1, B::a_y0, {"1|1", "1|1", "1|0", "0|1"}),
       bi(B::a_y1, B::a_y0, {"1|0", "1|0", "1|1", "1|1", "1|1"})});
    b("lemma-B.6", "Lemma 6.5: [A_Y1|B_Y0] submatrices",
      {bi(B::a_y1, B::b_y0, {"1|0", "1|0"}), bi(B::a_y1, B::b_y0, {"1|1", "1|0"}),
       bi(B::a_y1, B::b_y0, {"1|1", "1|1"})});
    b("lemma-B.7", "Lemma 6.6: [B_Y1|A_Y0] submatrices",
      {bi(B::b_y1, B::a_y0, {"0|1", "0|1", "0|1"}), bi(B::b_y1, B::a_y0, {"1|1", "0|1", "0|1"}),
       bi(B::b_y1, B::a_y0, {"1|1", "1|1", "0|1"}), bi(B::b_y1, B::a_y0, {"1|1", "1|1", "1|1"})});
    b("lemma-B.8", "Lemma 6.7: [B_Y1|B_Y0] submatrices",
      {bi(B::b_y1, B::b_y0, {"0|1", "0|1"}), bi(B::b_y1, B::b_y0, {"1|0", "0|1"}),
       bi(B::b_y1, B::b_y0, {"1|0", "1|0"})});
    b("lemma-B.9", "Lemma 6.9: 6x4 submatrix of A_Y0",
      {bi(B::a_y0, std::nullopt, {"1010", "1100", "1111", "1111", "1111", "0110"})});
    b("lemma-B.10", "Lemma 6.8: 2x4 submatrix of B_Y0", {bi(B::b_y0, std::nullopt, {"1100", "1010"})});
    b("lemma-new", "Lemma 6.11: 5x4 submatrix of A_Y0",
      {bi(B::a_y0, std::nullopt, {"1111", "1111", "1100", "1010", "1001"})});
    return s;
  }();
  return specs;
}

inline const LemmaSpec* find_lemma(const std::string& id) {
  for (const auto& s : lemma_specs())
    if (s.id == id) return &s;
  return nullptr;
}

inline constexpr std::size_t kLemmaFrameStart = 2;
inline constexpr std::size_t kLemmaFrameCapA = 9;
inline constexpr std::size_t kLemmaFrameCapB = 7;

// Where a certificate was found for one instance.
struct LemmaHit {
  std::size_t n = 0;
  std::size_t delta_rows = 0;
  std::string kind;                      // "rank4-points" or "minor"
  std::size_t threshold = 0;             // rank4-points
  std::vector<Label> contract;           // contracted labels
  std::optional<MinorWitness> minor;     // minor
  std::string minor_name;
};

struct InstanceResult {
  std::vector<LemmaHit> hits;  // one per required certificate
  bool found = false;
  bool exhausted = true;       // every failed search ran to completion
  uint64_t nodes = 0;
};

inline BinaryMatroid lemma_matroid(const LemmaSpec& spec, const LemmaInstance& in, std::size_t n,
                                   std::size_t delta_rows) {
  FrameTemplate t = in.build(spec.suite_b);
  return spec.suite_b ? largest_simple_conforming_delta(t, n, delta_rows) : largest_simple_conforming(t, n);
}

// Checks one recorded certificate against the regenerated matroid.
inline bool replay_hit(const LemmaSpec& spec, const LemmaInstance& in, const LemmaHit& h) {
  BinaryMatroid m = lemma_matroid(spec, in, h.n, h.delta_rows);
  if (h.kind == "rank4-points") {
    BinaryMatroid q = contract_labels(m, h.contract);
    return q.rank() == 4 && simplify(q).matroid.size() >= h.threshold;
  }
  if (h.kind == "minor" && h.minor) return replay_minor(m, catalog(h.minor_name), *h.minor);
  return false;
}

namespace detail {

inline std::optional<LemmaHit> try_rank4(const BinaryMatroid& m, std::size_t threshold, InstanceResult& r,
                                         uint64_t budget) {
  auto res = find_big_rank4_minor(m, threshold, budget);
  r.nodes += res.stats.nodes;
  if (!res.contract_set) {
    if (!res.stats.exhausted) r.exhausted = false;
    return std::nullopt;
  }
  LemmaHit h;
  h.kind = "rank4-points";
  h.threshold = threshold;
  h.contract = res.contract_set->labels(m);
  return h;
}

inline std::optional<LemmaHit> try_minor(const BinaryMatroid& m, const std::string& name, InstanceResult& r,
                                         uint64_t budget) {
  auto res = find_minor(m, catalog(name), budget);
  r.nodes += res.stats.nodes;
  if (!res.witness) {
    if (!res.stats.exhausted) r.exhausted = false;
    return std::nullopt;
  }
  LemmaHit h;
  h.kind = "minor";
  h.minor = res.witness;
  h.minor_name = name;
  return h;
}

}  // namespace detail

// Walks the frame-size ladder (and, for the B suite, the Delta-row count)
// and stops at the first matroid that carries every required certificate.
inline InstanceResult search_instance(const LemmaSpec& spec, const LemmaInstance& in, uint64_t budget = 0) {
  InstanceResult r;
  const std::size_t cap = spec.suite_b ? kLemmaFrameCapB : kLemmaFrameCapA;
  std::optional<LemmaHit> pg2, l11;
  for (std::size_t n = kLemmaFrameStart; n <= cap; ++n) {
    const bool rows_matter = spec.suite_b && !in.build(true).delta.is_trivial();
    const std::size_t max_rows = rows_matter ? n - 1 : 0;
    for (std::size_t j = 0; j <= max_rows; ++j) {
      BinaryMatroid m = lemma_matroid(spec, in, n, j);
      auto stamp = [&](std::optional<LemmaHit> h) {
        if (h) {
          h->n = n;
          h->delta_rows = j;
        }
        return h;
      };
      switch (spec.target) {
        case LemmaTarget::pg_minus_e:
        case LemmaTarget::pg_minus_2: {
          auto h = stamp(detail::try_rank4(m, spec.target == LemmaTarget::pg_minus_e ? 14 : 13, r, budget));
          if (h) {
            r.hits = {*h};
            r.found = true;
            return r;
          }
          break;
        }
        case LemmaTarget::pg_or_l11: {
          if (auto h = stamp(detail::try_rank4(m, 14, r, budget))) {
            r.hits = {*h};
            r.found = true;
            return r;
          }
          if (!pg2) pg2 = stamp(detail::try_rank4(m, 13, r, budget));
          if (pg2 && !l11) l11 = stamp(detail::try_minor(m, "L11", r, budget));
          if (pg2 && l11) {
            r.hits = {*l11, *pg2};
            r.found = true;
            return r;
          }
          break;
        }
        case LemmaTarget::h12: {
          if (auto h = stamp(detail::try_minor(m, "H12", r, budget))) {
            r.hits = {*h};
            r.found = true;
            return r;
          }
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace mforge
