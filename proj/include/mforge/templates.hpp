#pragma once

// Binary frame templates: standard form, assembly of conforming matrices,
// the largest simple conforming matroids used by the lemma checks, and the
// template-minor operations.
//
// Conventions. A1 and every element of Delta are indexed by the columns
// Y0, Y1, C in that order. Lambda lives on X in the order of the X list.
// Assembled matrices have rows X then the frame rows, and columns
// [frame | Z | Y0 | Y1 | C].

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mforge/catalog.hpp"
#include "mforge/gf2.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

inline constexpr std::size_t kGroupGeneratorBound = 8;
inline constexpr std::size_t kLargestFrameBound = 9;

struct GroupSpec {
  std::size_t width = 0;
  BitMatrix generators;  // rows generate the group

  static GroupSpec trivial(std::size_t width) { return {width, BitMatrix(0, width)}; }
  static GroupSpec full(std::size_t width) { return {width, BitMatrix::identity(width)}; }
  static GroupSpec from_rows(std::size_t width, const std::vector<std::string>& rows) {
    if (rows.empty()) return trivial(width);
    BitMatrix g = BitMatrix::from_strings(rows);
    if (g.cols() != width) throw Error(ErrorKind::contract, "group generator width mismatch");
    return {width, g};
  }

  // Independent generators (rref rows).
  BitMatrix basis() const {
    if (generators.rows() == 0) return BitMatrix(0, width);
    Rref r = rref(generators);
    if (r.matrix.rows() == 0) return BitMatrix(0, width);
    return r.matrix;
  }
  std::size_t dimension() const { return generators.rows() == 0 ? 0 : rank(generators); }
  bool is_trivial() const { return dimension() == 0; }

  bool contains(const BitVec& v) const {
    if (v.size() != width) throw Error(ErrorKind::contract, "group element width mismatch");
    if (!v.any()) return true;
    if (generators.rows() == 0) return false;
    return in_row_space(generators, v);
  }

  // All 2^dim elements; zero first, then by the binary counter over the basis.
  std::vector<BitVec> elements() const {
    BitMatrix b = basis();
    if (b.rows() > kGroupGeneratorBound) throw Error(ErrorKind::too_large, "group above 2^8 elements");
    std::vector<BitVec> out;
    for (uint32_t k = 0; k < (1u << b.rows()); ++k) {
      BitVec v(width);
      for (std::size_t i = 0; i < b.rows(); ++i)
        if ((k >> i) & 1u) v ^= b.row(i);
      out.push_back(v);
    }
    return out;
  }

  bool same_group(const GroupSpec& o) const {
    if (width != o.width) return false;
    return row_space_equal(basis(), o.basis());
  }

  GroupSpec project(const std::vector<std::size_t>& keep) const {
    GroupSpec g{keep.size(), BitMatrix(generators.rows(), keep.size())};
    if (generators.rows() > 0) g.generators = submatrix(generators, iota_indices(generators.rows()), keep);
    g.generators = g.basis();
    return g;
  }
};

struct FrameTemplate {
  std::vector<Label> C, X, Y0, Y1;
  BitMatrix a1;  // |X| x (|Y0| + |Y1| + |C|)
  GroupSpec delta;
  GroupSpec lambda;
  // Set by standard_form: X0 = first x0 rows, C0 = first c0 columns of C.
  bool standard = false;
  std::size_t x0 = 0, c0 = 0;

  std::size_t n_cols() const { return Y0.size() + Y1.size() + C.size(); }
  std::size_t y1_offset() const { return Y0.size(); }
  std::size_t c_offset() const { return Y0.size() + Y1.size(); }
  std::vector<Label> column_labels() const {
    std::vector<Label> out = Y0;
    out.insert(out.end(), Y1.begin(), Y1.end());
    out.insert(out.end(), C.begin(), C.end());
    return out;
  }
  std::optional<std::size_t> column_of(Label l) const {
    auto cols = column_labels();
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i] == l) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> row_of(Label l) const {
    for (std::size_t i = 0; i < X.size(); ++i)
      if (X[i] == l) return i;
    return std::nullopt;
  }
  Label fresh_label() const {
    Label f = 0;
    for (const auto* s : {&C, &X, &Y0, &Y1})
      for (auto l : *s) f = std::max(f, l + 1);
    return f;
  }

  void validate() const {
    std::set<Label> seen;
    for (const auto* s : {&C, &X, &Y0, &Y1})
      for (auto l : *s)
        if (!seen.insert(l).second) throw Error(ErrorKind::contract, "template label sets overlap");
    if (a1.rows() != X.size() || a1.cols() != n_cols())
      throw Error(ErrorKind::contract, "A1 shape does not match the label sets");
    if (delta.width != n_cols() || delta.generators.cols() != n_cols())
      throw Error(ErrorKind::contract, "Delta width does not match Y0, Y1, C");
    if (lambda.width != X.size() || lambda.generators.cols() != X.size())
      throw Error(ErrorKind::contract, "Lambda width does not match X");
    if (delta.dimension() > kGroupGeneratorBound || lambda.dimension() > kGroupGeneratorBound)
      throw Error(ErrorKind::too_large, "group above 2^8 elements");
  }

  bool operator==(const FrameTemplate& o) const {
    return C == o.C && X == o.X && Y0 == o.Y0 && Y1 == o.Y1 && a1 == o.a1 && delta.same_group(o.delta) &&
           lambda.same_group(o.lambda);
  }
};

// Adds row src of A1 into row dst, with the matching change of basis on Lambda.
inline void template_row_op(FrameTemplate& t, std::size_t dst, std::size_t src) {
  if (dst >= t.X.size() || src >= t.X.size() || dst == src)
    throw Error(ErrorKind::contract, "row operation needs two distinct X rows");
  t.a1.xor_row(dst, src);
  for (std::size_t g = 0; g < t.lambda.generators.rows(); ++g)
    if (t.lambda.generators.get(g, src)) t.lambda.generators.set(g, dst, !t.lambda.generators.get(g, dst));
  t.standard = false;
}

// Reduces A1[X, C] by row operations; pivot rows become X0 (in pivot order)
// and pivot columns C0. Row and column order is otherwise preserved.
inline FrameTemplate standard_form(const FrameTemplate& in) {
  in.validate();
  FrameTemplate t = in;
  const std::size_t nx = t.X.size(), off = t.c_offset();
  std::vector<bool> used(nx, false);
  std::vector<std::size_t> pivot_rows, pivot_cols;
  for (std::size_t k = 0; k < t.C.size(); ++k) {
    const std::size_t col = off + k;
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < nx; ++i)
      if (!used[i] && t.a1.get(i, col)) {
        p = i;
        break;
      }
    if (!p) continue;
    for (std::size_t i = 0; i < nx; ++i)
      if (i != *p && t.a1.get(i, col)) template_row_op(t, i, *p);
    used[*p] = true;
    pivot_rows.push_back(*p);
    pivot_cols.push_back(k);
  }
  std::vector<std::size_t> row_order = pivot_rows;
  for (std::size_t i = 0; i < nx; ++i)
    if (!used[i]) row_order.push_back(i);
  std::vector<std::size_t> c_order = pivot_cols;
  for (std::size_t k = 0; k < t.C.size(); ++k)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), k) == pivot_cols.end()) c_order.push_back(k);

  std::vector<std::size_t> col_order = iota_indices(off);
  for (auto k : c_order) col_order.push_back(off + k);
  FrameTemplate out = t;
  out.a1 = submatrix(t.a1, row_order, col_order);
  if (nx == 0) out.a1 = BitMatrix(0, t.n_cols());
  out.X.clear();
  for (auto i : row_order) out.X.push_back(t.X[i]);
  out.C.clear();
  for (auto k : c_order) out.C.push_back(t.C[k]);
  out.delta = {t.delta.width, t.delta.generators.rows() ? select_cols(t.delta.generators, col_order)
                                                         : BitMatrix(0, t.delta.width)};
  out.lambda = {nx, t.lambda.generators.rows() ? select_cols(t.lambda.generators, row_order) : BitMatrix(0, nx)};
  out.standard = true;
  out.x0 = out.c0 = pivot_rows.size();
  return out;
}

inline bool is_standard_form(const FrameTemplate& t) {
  const std::size_t off = t.c_offset();
  std::size_t k = 0;
  while (k < t.C.size() && k < t.X.size()) {
    bool unit = true;
    for (std::size_t i = 0; i < t.X.size(); ++i) unit = unit && t.a1.get(i, off + k) == (i == k);
    if (!unit) break;
    ++k;
  }
  for (std::size_t i = k; i < t.X.size(); ++i)
    for (std::size_t c = 0; c < t.C.size(); ++c)
      if (t.a1.get(i, off + c)) return false;
  return true;
}

// ---- conforming matrices ---------------------------------------------------

struct ZColumn {
  std::optional<std::size_t> unit;  // frame row of the 1 below X; none = zero column
  std::optional<Label> y1;          // Y1 column of A' added in; none = nothing added
};

struct ConformSpec {
  BitMatrix frame;                     // frame rows x frame columns, <= 2 ones per column
  std::vector<ZColumn> z_columns;
  std::vector<BitVec> lambda_choices;  // per frame column, width |X|; missing = 0
  std::vector<BitVec> delta_choices;   // per frame row, width |Y0|+|Y1|+|C|; missing = 0
  bool strict = false;                 // Z columns must be units

  std::size_t frame_rows() const { return frame.rows(); }
  std::size_t delta_row_count() const {
    std::size_t n = 0;
    for (const auto& d : delta_choices) n += d.any();
    return n;
  }
};

// A' of the Figure-2 layout, before the Z columns pick up their Y1 columns.
inline BitMatrix assemble_respecting(const FrameTemplate& t, const ConformSpec& s) {
  t.validate();
  const std::size_t nx = t.X.size(), nb = s.frame.rows(), nf = s.frame.cols();
  const std::size_t nz = s.z_columns.size(), ny = t.n_cols();
  if (s.lambda_choices.size() > nf) throw Error(ErrorKind::contract, "more Lambda choices than frame columns");
  if (s.delta_choices.size() > nb) throw Error(ErrorKind::contract, "more Delta choices than frame rows");
  BitMatrix a(nx + nb, nf + nz + ny);
  for (std::size_t j = 0; j < nf; ++j) {
    if (s.frame.col(j).count() > 2) throw Error(ErrorKind::contract, "frame column with more than two ones");
    for (std::size_t i = 0; i < nb; ++i)
      if (s.frame.get(i, j)) a.set(nx + i, j);
    if (j < s.lambda_choices.size()) {
      const BitVec& l = s.lambda_choices[j];
      if (l.size() != nx) throw Error(ErrorKind::contract, "Lambda choice width mismatch");
      if (!t.lambda.contains(l)) throw Error(ErrorKind::precondition, "Lambda choice not in Lambda");
      for (auto i : l.ones()) a.set(i, j);
    }
  }
  for (std::size_t z = 0; z < nz; ++z) {
    const auto& zc = s.z_columns[z];
    if (zc.unit) {
      if (*zc.unit >= nb) throw Error(ErrorKind::contract, "Z unit row outside the frame rows");
      a.set(nx + *zc.unit, nf + z);
    } else if (s.strict) {
      throw Error(ErrorKind::precondition, "zero Z column in strict mode");
    }
  }
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t c = 0; c < ny; ++c)
      if (t.a1.get(i, c)) a.set(i, nf + nz + c);
  for (std::size_t b = 0; b < s.delta_choices.size(); ++b) {
    const BitVec& d = s.delta_choices[b];
    if (d.size() != ny) throw Error(ErrorKind::contract, "Delta choice width mismatch");
    if (!t.delta.contains(d)) throw Error(ErrorKind::precondition, "Delta choice not in Delta");
    for (auto c : d.ones()) a.set(nx + b, nf + nz + c);
  }
  return a;
}

inline BitMatrix assemble(const FrameTemplate& t, const ConformSpec& s) {
  BitMatrix a = assemble_respecting(t, s);
  const std::size_t nf = s.frame.cols(), nz = s.z_columns.size();
  for (std::size_t z = 0; z < nz; ++z) {
    const auto& zc = s.z_columns[z];
    if (!zc.y1) continue;
    auto pos = std::find(t.Y1.begin(), t.Y1.end(), *zc.y1);
    if (pos == t.Y1.end()) throw Error(ErrorKind::contract, "Z column names a label outside Y1");
    const std::size_t src = nf + nz + t.y1_offset() + static_cast<std::size_t>(pos - t.Y1.begin());
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a.get(r, src)) a.set(r, nf + z, !a.get(r, nf + z));
  }
  return a;
}

// Labels of the assembled columns: fresh labels for frame and Z columns, then
// the template's Y0, Y1, C labels.
inline std::vector<Label> assembly_labels(const FrameTemplate& t, const ConformSpec& s) {
  std::vector<Label> labels;
  Label f = t.fresh_label();
  for (std::size_t j = 0; j < s.frame.cols() + s.z_columns.size(); ++j) labels.push_back(f++);
  for (auto l : t.column_labels()) labels.push_back(l);
  return labels;
}

// M(A)/C\Y1.
inline BinaryMatroid conform_matroid(const FrameTemplate& t, const ConformSpec& s) {
  BinaryMatroid m(assemble(t, s), assembly_labels(t, s));
  return delete_labels(contract_labels(m, t.C), t.Y1);
}

namespace detail {

inline void require_trivial_c(const FrameTemplate& t) {
  if (!t.C.empty()) throw Error(ErrorKind::precondition, "largest conforming matroid needs C empty");
  if (!t.lambda.is_trivial()) throw Error(ErrorKind::precondition, "largest conforming matroid needs Lambda trivial");
}

// Frame K_n, every Z column (unit or zero) + (each Y1 column), Delta rows as
// given; columns Y0 first, then frame, then Z, simplified keeping the first.
inline BinaryMatroid largest_from(const FrameTemplate& t, std::size_t n, const std::vector<BitVec>& deltas,
                                  bool virtual_mode) {
  if (n < 1 || n > kLargestFrameBound) throw Error(ErrorKind::precondition, "frame size must be 1..9");
  ConformSpec s;
  s.frame = n >= 2 ? named::clique_frame(n) : BitMatrix(0, 0);
  s.delta_choices = deltas;
  s.strict = !virtual_mode;
  for (auto y : t.Y1) {
    if (virtual_mode) s.z_columns.push_back({std::nullopt, y});
    for (std::size_t b = 0; b + 1 < n; ++b) s.z_columns.push_back({b, y});
  }
  BitMatrix a = assemble(t, s);
  const std::size_t nf = s.frame.cols(), nz = s.z_columns.size();
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < t.Y0.size(); ++c) order.push_back(nf + nz + c);
  for (std::size_t c = 0; c < nf + nz; ++c) order.push_back(c);
  std::vector<Label> labels = t.Y0;
  Label f = t.fresh_label();
  while (labels.size() < order.size()) labels.push_back(f++);
  return simplify(BinaryMatroid(select_cols(a, order), labels)).matroid;
}

}  // namespace detail

// Rank r(M(A1)) + n - 1 when A1 has full row rank.
inline BinaryMatroid largest_simple_conforming(const FrameTemplate& t, std::size_t n, bool virtual_mode = true) {
  t.validate();
  detail::require_trivial_c(t);
  if (!t.delta.is_trivial()) throw Error(ErrorKind::precondition, "largest conforming matroid needs Delta trivial");
  return detail::largest_from(t, n, {}, virtual_mode);
}

// Delta = {0, xbar}: the first delta_row_count frame rows carry xbar, the
// others 0. Frame rows are interchangeable under the symmetry of K_n, so the
// count is the only free parameter.
inline BinaryMatroid largest_simple_conforming_delta(const FrameTemplate& t, std::size_t n,
                                                     std::size_t delta_row_count, bool virtual_mode = true) {
  t.validate();
  detail::require_trivial_c(t);
  if (t.delta.dimension() > 1) throw Error(ErrorKind::precondition, "delta generation needs Delta = {0, xbar}");
  if (delta_row_count + 1 > std::max<std::size_t>(n, 1))
    throw Error(ErrorKind::precondition, "more Delta rows than frame rows");
  // xbar = 0 (Delta trivial) is allowed; the rows then carry nothing.
  BitVec xbar = t.delta.is_trivial() ? BitVec(t.n_cols()) : t.delta.basis().row(0);
  return detail::largest_from(t, n, std::vector<BitVec>(delta_row_count, xbar), virtual_mode);
}

// ---- template-minor operations ---------------------------------------------

enum class TemplateOp {
  shrink_lambda = 1,
  shrink_delta = 2,
  remove_y1 = 3,
  row_operation = 4,
  remove_x = 5,
  contract_c = 6,
  delete_c = 7,
  delete_y0 = 9,
  contract_y0 = 10,
  contract_y0_free = 11,
  y_shift = 12,
};

struct OpParams {
  std::optional<Label> element;  // y or c
  std::optional<Label> row;      // x; for op 4 the destination row
  std::optional<Label> source;   // op 4 source row
  std::optional<GroupSpec> subgroup;
};

namespace detail {

inline std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

inline FrameTemplate drop(const FrameTemplate& t, std::optional<std::size_t> row, std::optional<std::size_t> col) {
  FrameTemplate out = t;
  std::vector<std::size_t> rows = row ? all_but(t.X.size(), *row) : iota_indices(t.X.size());
  std::vector<std::size_t> cols = col ? all_but(t.n_cols(), *col) : iota_indices(t.n_cols());
  out.a1 = submatrix(t.a1, rows, cols);
  if (rows.empty()) out.a1 = BitMatrix(0, cols.size());
  out.delta = t.delta.project(cols);
  out.lambda = t.lambda.project(rows);
  if (row) out.X.erase(out.X.begin() + static_cast<long>(*row));
  if (col) {
    Label l = t.column_labels()[*col];
    for (auto* s : {&out.Y0, &out.Y1, &out.C}) s->erase(std::remove(s->begin(), s->end(), l), s->end());
  }
  out.standard = false;
  return out;
}

inline std::size_t need_row(const FrameTemplate& t, const OpParams& p) {
  if (!p.row) throw Error(ErrorKind::precondition, "operation needs a row x");
  auto r = t.row_of(*p.row);
  if (!r) throw Error(ErrorKind::precondition, "x is not in X");
  return *r;
}

inline std::size_t need_col(const FrameTemplate& t, const OpParams& p, const std::vector<Label>& within,
                            const char* set_name) {
  if (!p.element) throw Error(ErrorKind::precondition, "operation needs an element");
  if (std::find(within.begin(), within.end(), *p.element) == within.end())
    throw Error(ErrorKind::precondition, std::string("element is not in ") + set_name);
  return *t.column_of(*p.element);
}

inline bool all_zero_at(const GroupSpec& g, std::size_t idx) {
  for (std::size_t r = 0; r < g.generators.rows(); ++r)
    if (g.generators.get(r, idx)) return false;
  return true;
}

// delta -> delta + delta_c * A1[x, .], applied to the generators.
inline GroupSpec translate_delta(const GroupSpec& d, std::size_t c, const BitVec& a1_row) {
  GroupSpec out = d;
  for (std::size_t r = 0; r < out.generators.rows(); ++r) {
    if (!out.generators.get(r, c)) continue;
    BitVec v = out.generators.row(r);
    v ^= a1_row;
    out.generators.set_row(r, v);
  }
  return out;
}

// Row operations making column `col` of A1 the unit at row x.
inline void clear_column(FrameTemplate& t, std::size_t x, std::size_t col) {
  for (std::size_t i = 0; i < t.X.size(); ++i)
    if (i != x && t.a1.get(i, col)) template_row_op(t, i, x);
}

inline void require_subgroup(const GroupSpec& sub, const GroupSpec& g, const char* name) {
  if (sub.width != g.width) throw Error(ErrorKind::precondition, std::string(name) + " subgroup width mismatch");
  BitMatrix b = sub.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    if (!g.contains(b.row(r))) throw Error(ErrorKind::precondition, std::string(name) + " subgroup not contained");
  if (sub.dimension() >= g.dimension())
    throw Error(ErrorKind::precondition, std::string(name) + " subgroup is not proper");
}

}  // namespace detail

inline FrameTemplate reduce(const FrameTemplate& in, TemplateOp op, const OpParams& p = {}) {
  in.validate();
  FrameTemplate t = in;
  t.standard = false;
  switch (op) {
    case TemplateOp::shrink_lambda: {
      if (!p.subgroup) throw Error(ErrorKind::precondition, "operation 1 needs a subgroup");
      detail::require_subgroup(*p.subgroup, t.lambda, "Lambda");
      t.lambda = *p.subgroup;
      return t;
    }
    case TemplateOp::shrink_delta: {
      if (!p.subgroup) throw Error(ErrorKind::precondition, "operation 2 needs a subgroup");
      detail::require_subgroup(*p.subgroup, t.delta, "Delta");
      t.delta = *p.subgroup;
      return t;
    }
    case TemplateOp::remove_y1:
      return detail::drop(t, std::nullopt, detail::need_col(t, p, t.Y1, "Y1"));
    case TemplateOp::row_operation: {
      std::size_t dst = detail::need_row(t, p);
      if (!p.source || !t.row_of(*p.source)) throw Error(ErrorKind::precondition, "operation 4 needs a source row");
      template_row_op(t, dst, *t.row_of(*p.source));
      return t;
    }
    case TemplateOp::remove_x: {
      std::size_t x = detail::need_row(t, p);
      if (t.a1.row(x).any()) throw Error(ErrorKind::precondition, "operation 5: row x of A1 is not zero");
      if (!detail::all_zero_at(t.lambda, x)) throw Error(ErrorKind::precondition, "operation 5: lambda_x != 0");
      return detail::drop(t, x, std::nullopt);
    }
    case TemplateOp::contract_c: {
      std::size_t c = detail::need_col(t, p, t.C, "C");
      BitVec col = t.a1.col(c);
      if (col.count() != 1) throw Error(ErrorKind::precondition, "operation 6: A1[X,c] is not a unit column");
      std::size_t x = *col.first_set();
      if (!detail::all_zero_at(t.lambda, x) && !detail::all_zero_at(t.delta, c))
        throw Error(ErrorKind::precondition, "operation 6: neither lambda_x = 0 nor delta_c = 0 on the groups");
      t.delta = detail::translate_delta(t.delta, c, t.a1.row(x));
      return detail::drop(t, x, c);
    }
    case TemplateOp::delete_c: {
      std::size_t c = detail::need_col(t, p, t.C, "C");
      if (t.a1.col(c).any()) throw Error(ErrorKind::precondition, "operation 7: A1[X,c] is not zero");
      if (!detail::all_zero_at(t.delta, c)) throw Error(ErrorKind::precondition, "operation 7: delta_c != 0");
      return detail::drop(t, std::nullopt, c);
    }
    case TemplateOp::delete_y0:
      return detail::drop(t, std::nullopt, detail::need_col(t, p, t.Y0, "Y0"));
    case TemplateOp::contract_y0: {
      std::size_t y = detail::need_col(t, p, t.Y0, "Y0");
      std::size_t x = detail::need_row(t, p);
      if (!detail::all_zero_at(t.lambda, x)) throw Error(ErrorKind::precondition, "operation 10: lambda_x != 0");
      if (!t.a1.get(x, y)) throw Error(ErrorKind::precondition, "operation 10: (A1)_{x,y} = 0");
      detail::clear_column(t, x, y);
      t.delta = detail::translate_delta(t.delta, y, t.a1.row(x));
      return detail::drop(t, x, y);
    }
    case TemplateOp::contract_y0_free: {
      std::size_t y = detail::need_col(t, p, t.Y0, "Y0");
      if (!detail::all_zero_at(t.delta, y)) throw Error(ErrorKind::precondition, "operation 11: delta_y != 0");
      BitVec col = t.a1.col(y);
      if (!col.any()) return detail::drop(t, std::nullopt, y);
      std::size_t x = p.row ? detail::need_row(t, p) : *col.first_set();
      if (!t.a1.get(x, y)) throw Error(ErrorKind::precondition, "operation 11: (A1)_{x,y} = 0");
      detail::clear_column(t, x, y);
      return detail::drop(t, x, y);
    }
    case TemplateOp::y_shift: {
      std::size_t y = detail::need_col(t, p, t.Y1, "Y1");
      // Y1 element moves to the end of Y0; columns are permuted to match.
      const std::size_t dst = t.Y0.size();
      std::vector<std::size_t> order = iota_indices(dst);
      order.push_back(y);
      for (std::size_t c = dst; c < t.n_cols(); ++c)
        if (c != y) order.push_back(c);
      t.a1 = t.X.empty() ? BitMatrix(0, t.n_cols()) : select_cols(t.a1, order);
      t.delta = {t.delta.width,
                 t.delta.generators.rows() ? select_cols(t.delta.generators, order) : BitMatrix(0, t.delta.width)};
      t.Y0.push_back(*p.element);
      t.Y1.erase(std::find(t.Y1.begin(), t.Y1.end(), *p.element));
      return t;
    }
  }
  throw Error(ErrorKind::contract, "unknown template operation");
}

inline const char* to_string(TemplateOp op) {
  switch (op) {
    case TemplateOp::shrink_lambda: return "1";
    case TemplateOp::shrink_delta: return "2";
    case TemplateOp::remove_y1: return "3";
    case TemplateOp::row_operation: return "4";
    case TemplateOp::remove_x: return "5";
    case TemplateOp::contract_c: return "6";
    case TemplateOp::delete_c: return "7";
    case TemplateOp::delete_y0: return "9";
    case TemplateOp::contract_y0: return "10";
    case TemplateOp::contract_y0_free: return "11";
    case TemplateOp::y_shift: return "y-shift";
  }
  return "?";
}

// ---- named templates ---------------------------------------------------------

// Element labels come first (Y0, Y1, C from 0), then X.
inline FrameTemplate template_catalog(const std::string& name) {
  FrameTemplate t;
  auto finish = [&](std::vector<std::string> a1, std::vector<std::string> delta, std::vector<std::string> lambda) {
    const std::size_t cols = t.n_cols();
    t.a1 = BitMatrix(t.X.size(), cols);
    if (!a1.empty()) t.a1 = BitMatrix::from_strings(a1);
    t.delta = GroupSpec::from_rows(cols, delta);
    t.lambda = GroupSpec::from_rows(t.X.size(), lambda);
    return standard_form(t);
  };
  if (name == "Phi0") return finish({}, {}, {});
  if (name == "PhiC") {
    t.C = {0};
    return finish({}, {"1"}, {});
  }
  if (name == "PhiX") {
    t.X = {0};
    return finish({}, {}, {"1"});
  }
  if (name == "PhiY0") {
    t.Y0 = {0};
    return finish({}, {"1"}, {});
  }
  if (name == "PhiCX") {
    t.C = {0};
    t.X = {1};
    return finish({"1"}, {"1"}, {"1"});
  }
  if (name == "PhiY1") {
    t.Y1 = {0, 1, 2};
    t.X = {3, 4};
    return finish({"101", "011"}, {}, {});
  }
  if (name == "PhiC2") {
    t.C = {0, 1};
    return finish({}, {"10", "01"}, {});
  }
  throw Error(ErrorKind::unknown_name, "unknown template '" + name + "'");
}

inline std::vector<std::string> template_names() { return {"Phi0", "PhiC", "PhiX", "PhiY0", "PhiCX", "PhiY1", "PhiC2"}; }

// Trivial groups, C = {}, A1 = [I_k | P1 | P0] with Y1 = identity columns then
// P1 columns, Y0 = P0 columns. Rows of P1 and P0 are given as strings.
inline FrameTemplate p_template(std::size_t k, const std::vector<std::string>& p1, const std::vector<std::string>& p0) {
  auto width = [&](const std::vector<std::string>& p) -> std::size_t {
    if (p.empty()) return 0;
    if (p.size() != k) throw Error(ErrorKind::contract, "block row count differs from k");
    return p[0].size();
  };
  const std::size_t w1 = width(p1), w0 = width(p0);
  FrameTemplate t;
  Label next = 0;
  for (std::size_t i = 0; i < w0; ++i) t.Y0.push_back(next++);
  for (std::size_t i = 0; i < k + w1; ++i) t.Y1.push_back(next++);
  for (std::size_t i = 0; i < k; ++i) t.X.push_back(next++);
  t.a1 = BitMatrix(k, w0 + k + w1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < w0; ++j)
      if (p0[i][j] == '1') t.a1.set(i, j);
    t.a1.set(i, w0 + i);
    for (std::size_t j = 0; j < w1; ++j)
      if (p1[i][j] == '1') t.a1.set(i, w0 + k + j);
  }
  t.delta = GroupSpec::trivial(t.n_cols());
  t.lambda = GroupSpec::trivial(k);
  return standard_form(t);
}

// Lambda trivial, C = {}, Delta = {0, xbar}. A1 = [I_k | A_Y1 | B_Y1 | A_Y0 | B_Y0]
// with xbar = 1 exactly on the B columns. Y1 = identity, A_Y1, B_Y1 columns;
// Y0 = A_Y0, B_Y0 columns.
inline FrameTemplate xbar_template(std::size_t k, const std::vector<std::string>& a_y1,
                                   const std::vector<std::string>& b_y1, const std::vector<std::string>& a_y0,
                                   const std::vector<std::string>& b_y0) {
  auto width = [&](const std::vector<std::string>& p) -> std::size_t {
    if (p.empty()) return 0;
    if (p.size() != k) throw Error(ErrorKind::contract, "block row count differs from k");
    return p[0].size();
  };
  const std::size_t wa1 = width(a_y1), wb1 = width(b_y1), wa0 = width(a_y0), wb0 = width(b_y0);
  FrameTemplate t;
  Label next = 0;
  for (std::size_t i = 0; i < wa0 + wb0; ++i) t.Y0.push_back(next++);
  for (std::size_t i = 0; i < k + wa1 + wb1; ++i) t.Y1.push_back(next++);
  for (std::size_t i = 0; i < k; ++i) t.X.push_back(next++);
  const std::size_t cols = t.n_cols();
  t.a1 = BitMatrix(k, cols);
  BitVec xbar(cols);
  auto put = [&](const std::vector<std::string>& p, std::size_t w, std::size_t off, bool flagged) {
    for (std::size_t j = 0; j < w; ++j) {
      if (flagged) xbar.set(off + j);
      for (std::size_t i = 0; i < k; ++i)
        if (p[i][j] == '1') t.a1.set(i, off + j);
    }
  };
  put(a_y0, wa0, 0, false);
  put(b_y0, wb0, wa0, true);
  const std::size_t y1 = wa0 + wb0;
  for (std::size_t i = 0; i < k; ++i) t.a1.set(i, y1 + i);
  put(a_y1, wa1, y1 + k, false);
  put(b_y1, wb1, y1 + k + wa1, true);
  t.delta = {cols, BitMatrix::from_rows({xbar}, cols)};
  t.lambda = GroupSpec::trivial(k);
  return standard_form(t);
}

// ---- text format -------------------------------------------------------------
//   C: labels          (one line per set, possibly empty)
//   X: labels
//   Y0: labels
//   Y1: labels
//   A1:                followed by |X| rows over Y0 Y1 C; '-' is an empty row
//   Delta:             followed by generator rows over Y0 Y1 C
//   Lambda:            followed by generator rows over X

namespace detail {

inline BitMatrix block_from(const std::vector<std::pair<int, std::string>>& rows, std::size_t width) {
  BitMatrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [no, s] = rows[r];
    std::string bits;
    for (char ch : s) {
      if (ch == ' ' || ch == '\t') continue;
      if (ch == '-' && s.find_first_not_of(" \t-") == std::string::npos) break;
      if (ch != '0' && ch != '1') throw parse_error(no, std::string("unexpected character '") + ch + "' in matrix row");
      bits.push_back(ch);
    }
    if (bits.size() != width)
      throw parse_error(no, "row has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(width));
    for (std::size_t c = 0; c < width; ++c)
      if (bits[c] == '1') m.set(r, c);
  }
  return m;
}

}  // namespace detail

inline FrameTemplate parse_template(const std::string& text) {
  TextLines t = TextLines::from_string(text);
  std::map<std::string, std::vector<Label>> sets;
  std::map<std::string, std::vector<std::pair<int, std::string>>> blocks;
  std::map<std::string, int> header_line;
  std::string current;
  const std::set<std::string> set_names = {"C", "X", "Y0", "Y1"}, block_names = {"A1", "Delta", "Lambda"};
  for (const auto& [no, raw] : t.lines) {
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      std::string head = strip(s.substr(0, colon));
      std::string rest = strip(s.substr(colon + 1));
      if (set_names.count(head)) {
        if (sets.count(head)) throw parse_error(no, "duplicate section '" + head + "'");
        sets[head] = parse_label_list(rest, no);
        current.clear();
        continue;
      }
      if (block_names.count(head)) {
        if (header_line.count(head)) throw parse_error(no, "duplicate section '" + head + "'");
        if (!rest.empty()) throw parse_error(no, "matrix rows start on the line after '" + head + ":'");
        header_line[head] = no;
        blocks[head];
        current = head;
        continue;
      }
      throw parse_error(no, "unknown section '" + head + "'");
    }
    if (current.empty()) throw parse_error(no, "matrix row outside a matrix section");
    blocks[current].emplace_back(no, s);
  }
  for (const auto& n : set_names)
    if (!sets.count(n)) throw parse_error(t.line_no(), "missing section '" + n + ":'");
  FrameTemplate out;
  out.C = sets["C"];
  out.X = sets["X"];
  out.Y0 = sets["Y0"];
  out.Y1 = sets["Y1"];
  const std::size_t cols = out.n_cols();
  using Rows = std::vector<std::pair<int, std::string>>;
  auto rows_of = [&](const std::string& name) -> Rows { return blocks.count(name) ? blocks[name] : Rows{}; };
  auto a1_rows = rows_of("A1");
  if (a1_rows.size() != out.X.size())
    throw parse_error(header_line.count("A1") ? header_line["A1"] : t.line_no(),
                      "A1 has " + std::to_string(a1_rows.size()) + " rows, expected " + std::to_string(out.X.size()));
  out.a1 = detail::block_from(a1_rows, cols);
  out.delta = {cols, detail::block_from(rows_of("Delta"), cols)};
  out.lambda = {out.X.size(), detail::block_from(rows_of("Lambda"), out.X.size())};
  try {
    out.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, std::string("template: ") + e.what());
  }
  return out;
}

inline std::string format_template(const FrameTemplate& t) {
  std::ostringstream out;
  auto labels = [&](const char* name, const std::vector<Label>& ls) {
    out << name << ':';
    for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? ", " : " ") << ls[i];
    out << '\n';
  };
  auto block = [&](const char* name, const BitMatrix& m) {
    out << name << ":\n";
    for (std::size_t r = 0; r < m.rows(); ++r) out << (m.cols() ? m.row(r).str() : std::string("-")) << '\n';
  };
  labels("C", t.C);
  labels("X", t.X);
  labels("Y0", t.Y0);
  labels("Y1", t.Y1);
  block("A1", t.a1);
  block("Delta", t.delta.basis());
  block("Lambda", t.lambda.basis());
  return out.str();
}

}  // namespace mforge
