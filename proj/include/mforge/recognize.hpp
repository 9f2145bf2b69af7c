#pragma once

// Membership tests for graphic, cographic, even-cycle, even-cut and
// blocking-pair matroids, with certificates that replay to the input.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mforge/catalog.hpp"
#include "mforge/embed.hpp"
#include "mforge/graph.hpp"
#include "mforge/graphic.hpp"
#include "mforge/minor.hpp"

namespace mforge {

enum class CertificateKind { graph, signed_graph, graft, extension_column, coextension_row };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::graph: return "graph";
    case CertificateKind::signed_graph: return "signed-graph";
    case CertificateKind::graft: return "graft";
    case CertificateKind::extension_column: return "extension-column";
    case CertificateKind::coextension_row: return "coextension-row";
  }
  return "?";
}

// graph: cycle_matroid(graph) = m (or m* for cographic).
// signed_graph: even_cycle_matroid(signed) = m.
// coextension_row: with R a representation of m*, the matrix [R; row] is the
// cycle matroid of graph, so [[R, 0], [row, 1]] is a coextension of m* that
// gives M(graph) on deleting the new element.
struct ClassCertificate {
  CertificateKind kind = CertificateKind::graph;
  MultiGraph graph;
  SignedGraph signed_graph;
  BitVec row;
};

struct Recognition {
  bool member = false;
  std::optional<ClassCertificate> certificate;
  uint64_t candidates = 0;  // extension columns or rows tried
};

inline Recognition is_graphic(const BinaryMatroid& m) {
  Recognition out;
  auto g = realize_graph(m);
  if (!g) return out;
  out.member = true;
  out.certificate = ClassCertificate{CertificateKind::graph, *g, {}, BitVec(0)};
  return out;
}

inline constexpr std::size_t kGraphicReferenceBound = 25;

// No minor in {F7, F7*, M*(K5), M*(K3,3)}.
inline bool is_graphic_reference(const BinaryMatroid& m) {
  if (m.size() > kGraphicReferenceBound)
    throw Error(ErrorKind::too_large, "reference graphicness test above 25 elements");
  static const std::vector<BinaryMatroid> excluded = {named::f7(), dual(named::f7()), dual(named::mk(5)),
                                                      dual(named::mk33())};
  const std::size_t corank = m.size() - m.rank();
  for (const auto& t : excluded) {
    if (t.rank() > m.rank() || t.size() - t.rank() > corank) continue;
    if (has_minor(m, t)) return false;
  }
  return true;
}

inline Recognition is_cographic(const BinaryMatroid& m) { return is_graphic(dual(m)); }

inline constexpr std::size_t kEvenCycleRankBound = 14;

// Extension columns c in lexicographic order (row 0 most significant), zero
// first. For c != 0, contracting c pivots on its first nonzero row i; that
// row becomes the sign row and the others must be graphic.
inline Recognition is_even_cycle(const BinaryMatroid& m) {
  const std::size_t r = m.rank();
  if (r > kEvenCycleRankBound) throw Error(ErrorKind::too_large, "even-cycle sweep above rank 14");
  Recognition out;
  const std::size_t n = m.size();
  const BitMatrix& rep = m.rep();
  const uint64_t total = uint64_t{1} << r;
  for (uint64_t k = 0; k < total; ++k) {
    ++out.candidates;
    BitVec w(n);
    BitMatrix d = rep;
    if (k != 0) {
      auto bit = [&](std::size_t i) { return (k >> (r - 1 - i)) & 1u; };
      std::size_t piv = 0;
      while (!bit(piv)) ++piv;
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == piv) continue;
        if (bit(j)) d.xor_row(j, piv);
        others.push_back(j);
      }
      w = rep.row(piv);
      d = submatrix(d, others, iota_indices(n));
      if (others.empty()) d = BitMatrix(0, n);
    }
    auto g = realize_graph(BinaryMatroid(d, m.labels()));
    if (!g) continue;
    SignedGraph sg{*g, {}};
    for (auto e : w.ones()) sg.odd_edges.insert(e);
    if (!equal_labeled(BinaryMatroid(even_cycle_matroid(sg).rep(), m.labels()), m))
      throw Error(ErrorKind::contract, "even-cycle certificate failed replay");
    out.member = true;
    out.certificate = ClassCertificate{CertificateKind::signed_graph, *g, sg, w};
    return out;
  }
  return out;
}

inline constexpr std::size_t kEvenCutRankBound = 16;

// Replays an even-cut certificate against m.
inline bool check_even_cut_certificate(const BinaryMatroid& m, const ClassCertificate& c) {
  if (c.kind != CertificateKind::coextension_row) return false;
  BinaryMatroid d = dual(m);
  if (c.row.size() != m.size()) return false;
  BitMatrix top(1, m.size());
  top.set_row(0, c.row);
  BinaryMatroid deletion(stack_rows(d.rep(), top), m.labels());
  BinaryMatroid graphic(incidence_matrix(c.graph), m.labels());
  if (!equal_labeled(deletion, graphic)) return false;
  // The coextension itself: contracting the new element must give m*.
  const std::size_t n = m.size();
  BitMatrix big(d.rank() + 1, n + 1);
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (auto j : d.rep().row(i).ones()) big.set(i, j);
  for (auto j : c.row.ones()) big.set(d.rank(), j);
  big.set(d.rank(), n);
  std::vector<Label> labels = m.labels();
  Label fresh = 0;
  for (auto l : labels) fresh = std::max(fresh, l + 1);
  labels.push_back(fresh);
  BinaryMatroid coext(big, labels);
  return equal_labeled(contract_labels(coext, {fresh}), d) && equal_labeled(delete_labels(coext, {fresh}), deletion);
}

// Coextension rows of m* in lexicographic order over the non-pivot columns
// of m*'s reduced representation (2^rank(m) candidates), zero first.
inline Recognition is_even_cut(const BinaryMatroid& m) {
  if (m.rank() > kEvenCutRankBound) throw Error(ErrorKind::too_large, "even-cut sweep above rank 16");
  Recognition out;
  const std::size_t n = m.size();
  BinaryMatroid d = dual(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : d.basis()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const std::size_t f = free.size();
  const uint64_t total = uint64_t{1} << f;
  for (uint64_t k = 0; k < total; ++k) {
    ++out.candidates;
    BitVec u(n);
    for (std::size_t i = 0; i < f; ++i)
      if ((k >> (f - 1 - i)) & 1u) u.set(free[i]);
    BitMatrix top(1, n);
    top.set_row(0, u);
    auto g = realize_graph(BinaryMatroid(stack_rows(d.rep(), top), m.labels()));
    if (!g) continue;
    ClassCertificate cert{CertificateKind::coextension_row, *g, {}, u};
    if (!check_even_cut_certificate(m, cert)) throw Error(ErrorKind::contract, "even-cut certificate failed replay");
    out.member = true;
    out.certificate = cert;
    return out;
  }
  return out;
}

inline constexpr std::size_t kBlockingPairRankBound = 10;

struct BlockingPairResult {
  bool member = false;
  std::optional<LabelMap> embedding;  // si(m) label -> X_r label
  EmbedStats stats;
};

// si(m) is a restriction of X_r, r = rank(m).
inline BlockingPairResult blocking_pair_membership(const BinaryMatroid& m, uint64_t budget = 0) {
  BlockingPairResult out;
  Simplified s = simplify(m);
  const std::size_t r = s.matroid.rank();
  if (r <= 1) {
    out.member = true;
    return out;
  }
  if (r > kBlockingPairRankBound) throw Error(ErrorKind::too_large, "blocking-pair test above rank 10");
  if (s.matroid.size() > named::x_size_formula(r)) return out;
  auto emb = embeds_as_restriction(s.matroid, named::x(r), &out.stats, budget);
  if (!out.stats.exhausted) throw Error(ErrorKind::too_large, "blocking-pair embedding search hit its budget");
  out.member = emb.has_value();
  out.embedding = emb;
  return out;
}

inline bool in_blocking_pair_class(const BinaryMatroid& m) { return blocking_pair_membership(m).member; }

enum class ClassKind { graphic, cographic, even_cycle, even_cut, blocking_pair };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::graphic: return "graphic";
    case ClassKind::cographic: return "cographic";
    case ClassKind::even_cycle: return "even-cycle";
    case ClassKind::even_cut: return "even-cut";
    case ClassKind::blocking_pair: return "blocking-pair";
  }
  return "?";
}

inline std::optional<ClassKind> class_kind_from_string(const std::string& s) {
  for (auto k : {ClassKind::graphic, ClassKind::cographic, ClassKind::even_cycle, ClassKind::even_cut,
                 ClassKind::blocking_pair})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

inline bool in_class(const BinaryMatroid& m, ClassKind k) {
  switch (k) {
    case ClassKind::graphic: return is_graphic(m).member;
    case ClassKind::cographic: return is_cographic(m).member;
    case ClassKind::even_cycle: return is_even_cycle(m).member;
    case ClassKind::even_cut: return is_even_cut(m).member;
    case ClassKind::blocking_pair: return in_blocking_pair_class(m);
  }
  return false;
}

struct ExcludedMinorCheck {
  bool excluded = false;
  bool member = false;                 // m itself is in the class
  std::optional<Label> failing;        // element whose deletion or contraction leaves the class
  bool failing_is_contraction = false;
};

// Single-element minors are checked first; m itself is tested only when all
// of them are members.
inline ExcludedMinorCheck check_excluded_minor(const BinaryMatroid& m, ClassKind k) {
  ExcludedMinorCheck out;
  for (std::size_t p = 0; p < m.size(); ++p) {
    ElementSet s = ElementSet::of_positions(m.size(), {p});
    if (!in_class(delete_elements(m, s), k)) {
      out.failing = m.label(p);
      return out;
    }
    if (!in_class(contract(m, s), k)) {
      out.failing = m.label(p);
      out.failing_is_contraction = true;
      return out;
    }
  }
  out.member = in_class(m, k);
  out.excluded = !out.member;
  return out;
}

inline bool is_excluded_minor(const BinaryMatroid& m, ClassKind k) { return check_excluded_minor(m, k).excluded; }

}  // namespace mforge
