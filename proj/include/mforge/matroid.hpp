#pragma once

// Binary matroids as labeled, row-reduced representations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mforge/gf2.hpp"

namespace mforge {

using Label = int;

class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  explicit BinaryMatroid(const BitMatrix& rep) : BinaryMatroid(rep, default_labels(rep.cols())) {}
  BinaryMatroid(const BitMatrix& rep, std::vector<Label> labels) : labels_(std::move(labels)) {
    if (labels_.size() != rep.cols())
      throw Error(ErrorKind::contract, "label count does not match column count");
    std::set<Label> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorKind::contract, "duplicate labels");
    Rref r = mforge::rref(rep);
    rep_ = std::move(r.matrix);
    if (rep_.rows() == 0) rep_ = BitMatrix(0, labels_.size());
    basis_ = std::move(r.pivots);
  }

  static std::vector<Label> default_labels(std::size_t n) {
    std::vector<Label> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<Label>(i);
    return l;
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rep_.rows(); }
  const std::vector<Label>& labels() const { return labels_; }
  // Reduced representation: rank() rows, no zero rows.
  const BitMatrix& rep() const { return rep_; }
  // Positions of the rref pivot columns.
  const std::vector<std::size_t>& basis() const { return basis_; }
  Label label(std::size_t pos) const { return labels_[pos]; }
  std::optional<std::size_t> position(Label l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    return std::nullopt;
  }
  std::size_t position_or_throw(Label l) const {
    auto p = position(l);
    if (!p) throw Error(ErrorKind::contract, "unknown label " + std::to_string(l));
    return *p;
  }
  BitVec column(std::size_t pos) const { return rep_.col(pos); }

 private:
  std::vector<Label> labels_;
  BitMatrix rep_;
  std::vector<std::size_t> basis_;
};

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : bits_(n) {}

  static ElementSet all(std::size_t n) {
    ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.add(i);
    return s;
  }
  static ElementSet of_positions(std::size_t n, const std::vector<std::size_t>& pos) {
    ElementSet s(n);
    for (auto p : pos) {
      if (p >= n) throw Error(ErrorKind::contract, "element position out of range");
      s.add(p);
    }
    return s;
  }
  static ElementSet of_labels(const BinaryMatroid& m, const std::vector<Label>& ls) {
    ElementSet s(m.size());
    for (auto l : ls) s.add(m.position_or_throw(l));
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t p) const { return bits_.get(p); }
  void add(std::size_t p) { bits_.set(p); }
  void remove(std::size_t p) { bits_.set(p, false); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return !bits_.any(); }
  std::vector<std::size_t> positions() const { return bits_.ones(); }
  std::vector<Label> labels(const BinaryMatroid& m) const {
    std::vector<Label> out;
    for (auto p : positions()) out.push_back(m.label(p));
    return out;
  }
  ElementSet complement() const {
    ElementSet c(universe());
    for (std::size_t i = 0; i < universe(); ++i)
      if (!contains(i)) c.add(i);
    return c;
  }
  const BitVec& bits() const { return bits_; }
  bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }

 private:
  BitVec bits_;
};

inline void check_set(const BinaryMatroid& m, const ElementSet& s) {
  if (s.universe() != m.size()) throw Error(ErrorKind::contract, "element set built for another matroid");
}

inline std::size_t rank_of(const BinaryMatroid& m, const ElementSet& s) {
  check_set(m, s);
  return rank(select_cols(m.rep(), s.positions()));
}

inline BinaryMatroid restrict_to(const BinaryMatroid& m, const std::vector<std::size_t>& keep) {
  std::vector<Label> labels;
  for (auto p : keep) labels.push_back(m.label(p));
  return BinaryMatroid(select_cols(m.rep(), keep), labels);
}

inline BinaryMatroid delete_elements(const BinaryMatroid& m, const ElementSet& s) {
  check_set(m, s);
  return restrict_to(m, s.complement().positions());
}

inline BinaryMatroid contract(const BinaryMatroid& m, const ElementSet& s) {
  check_set(m, s);
  BitMatrix w = m.rep();
  std::vector<bool> used(w.rows(), false);
  for (std::size_t p : s.positions()) {
    std::size_t r = 0;
    while (r < w.rows() && (used[r] || !w.get(r, p))) ++r;
    if (r == w.rows()) continue;
    for (std::size_t o = 0; o < w.rows(); ++o)
      if (o != r && w.get(o, p)) w.xor_row(o, r);
    used[r] = true;
  }
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < w.rows(); ++r)
    if (!used[r]) rows.push_back(r);
  std::vector<std::size_t> cols = s.complement().positions();
  std::vector<Label> labels;
  for (auto c : cols) labels.push_back(m.label(c));
  BitMatrix sub = submatrix(w, rows, cols);
  if (rows.empty()) sub = BitMatrix(0, cols.size());
  return BinaryMatroid(sub, labels);
}

inline BinaryMatroid delete_labels(const BinaryMatroid& m, const std::vector<Label>& ls) {
  return delete_elements(m, ElementSet::of_labels(m, ls));
}
inline BinaryMatroid contract_labels(const BinaryMatroid& m, const std::vector<Label>& ls) {
  return contract(m, ElementSet::of_labels(m, ls));
}

inline BinaryMatroid dual(const BinaryMatroid& m) {
  const std::size_t n = m.size(), r = m.rank();
  const auto& piv = m.basis();
  std::vector<int> pivot_row(n, -1);
  for (std::size_t i = 0; i < r; ++i) pivot_row[piv[i]] = static_cast<int>(i);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free_cols.push_back(c);
  BitMatrix d(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t j = free_cols[k];
    d.set(k, j);
    for (std::size_t i = 0; i < r; ++i)
      if (m.rep().get(i, j)) d.set(k, piv[i]);
  }
  return BinaryMatroid(d, m.labels());
}

struct Simplified {
  BinaryMatroid matroid;
  std::vector<Label> kept;
};

// Drops loops and keeps the lowest label of each parallel class; survivors stay
// in their original order.
inline Simplified simplify(const BinaryMatroid& m) {
  std::map<std::string, std::size_t> best;
  for (std::size_t c = 0; c < m.size(); ++c) {
    BitVec v = m.column(c);
    if (!v.any()) continue;
    auto key = v.str();
    auto it = best.find(key);
    if (it == best.end() || m.label(c) < m.label(it->second)) best[key] = c;
  }
  std::vector<std::size_t> keep;
  for (auto& [k, c] : best) keep.push_back(c);
  std::sort(keep.begin(), keep.end());
  Simplified s{restrict_to(m, keep), {}};
  for (auto c : keep) s.kept.push_back(m.label(c));
  return s;
}

inline Simplified cosimplify(const BinaryMatroid& m) {
  Simplified s = simplify(dual(m));
  return {dual(s.matroid), s.kept};
}

inline bool is_simple(const BinaryMatroid& m) { return simplify(m).matroid.size() == m.size(); }

inline std::size_t lambda_of(const BinaryMatroid& m, const ElementSet& s) {
  return rank_of(m, s) + rank_of(m, s.complement()) - m.rank();
}

inline bool equal_labeled(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<std::size_t> order;
  for (auto l : a.labels()) {
    auto p = b.position(l);
    if (!p) return false;
    order.push_back(*p);
  }
  return row_space_equal(a.rep(), select_cols(b.rep(), order));
}

// Columns packed as words (bit i = row i); requires rank <= 64.
inline std::vector<uint64_t> column_words(const BinaryMatroid& m) {
  if (m.rank() > 64) throw Error(ErrorKind::too_large, "rank above 64 for packed columns");
  std::vector<uint64_t> cols(m.size(), 0);
  for (std::size_t r = 0; r < m.rank(); ++r)
    for (std::size_t c : m.rep().row(r).ones()) cols[c] |= uint64_t{1} << r;
  return cols;
}

// Rank of every subset (bit i = position i), n <= 24.
inline std::vector<uint8_t> subset_ranks(const BinaryMatroid& m) {
  const std::size_t n = m.size();
  if (n > 24) throw Error(ErrorKind::too_large, "ground set above the enumeration bound of 24");
  auto cols = column_words(m);
  std::vector<uint8_t> rk(std::size_t{1} << n, 0);
  // Depth-first over subsets ordered by their largest element, carrying a
  // reduced basis keyed by pivot bit.
  struct Frame {
    uint64_t basis[64];
  };
  std::vector<Frame> stack(n + 1);
  std::fill(std::begin(stack[0].basis), std::end(stack[0].basis), 0);
  auto rec = [&](auto&& self, uint32_t mask, std::size_t next, std::size_t depth, uint8_t r) -> void {
    rk[mask] = r;
    for (std::size_t e = next; e < n; ++e) {
      Frame& f = stack[depth + 1];
      std::copy(std::begin(stack[depth].basis), std::end(stack[depth].basis), f.basis);
      uint64_t v = cols[e];
      while (v) {
        int p = 63 - std::countl_zero(v);
        if (!f.basis[p]) break;
        v ^= f.basis[p];
      }
      uint8_t nr = r;
      if (v) {
        f.basis[63 - std::countl_zero(v)] = v;
        ++nr;
      }
      self(self, mask | (uint32_t{1} << e), e + 1, depth + 1, nr);
    }
  };
  rec(rec, 0u, 0, 0, 0);
  return rk;
}

inline bool is_k_connected(const BinaryMatroid& m, std::size_t k) {
  const std::size_t n = m.size();
  auto rk = subset_ranks(m);
  const uint32_t full = n == 0 ? 0 : static_cast<uint32_t>((uint64_t{1} << n) - 1);
  for (uint32_t s = 0; s <= full; ++s) {
    std::size_t a = std::popcount(s), b = n - a;
    std::size_t need = std::min({a, b, k - 1});
    if (need == 0) continue;
    std::size_t lam = rk[s] + rk[full ^ s] - m.rank();
    if (lam < need) return false;
    if (s == full) break;
  }
  return true;
}

inline bool is_vertically_k_connected(const BinaryMatroid& m, std::size_t k) {
  const std::size_t n = m.size();
  auto rk = subset_ranks(m);
  const uint32_t full = n == 0 ? 0 : static_cast<uint32_t>((uint64_t{1} << n) - 1);
  for (uint32_t s = 0; s <= full; ++s) {
    std::size_t lam = rk[s] + rk[full ^ s] - m.rank();
    if (lam + 1 < k && rk[s] != m.rank() && rk[full ^ s] != m.rank()) return false;
    if (s == full) break;
  }
  return true;
}

inline bool is_cyclically_k_connected(const BinaryMatroid& m, std::size_t k) {
  return is_vertically_k_connected(dual(m), k);
}

// ---- text format ----------------------------------------------------------

inline std::vector<Label> parse_label_list(const std::string& s, int line_no) {
  std::vector<Label> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<Label>(v));
    } catch (const std::exception&) {
      throw parse_error(line_no, "bad label '" + tok + "'");
    }
    tok.clear();
  };
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') flush();
    else tok.push_back(ch);
  }
  flush();
  return out;
}

inline BinaryMatroid read_matroid(TextLines& t) {
  while (!t.done() && is_comment_or_blank(t.lines[t.pos].second)) ++t.pos;
  std::optional<std::vector<Label>> labels;
  int label_line = 0;
  if (!t.done()) {
    std::string s = strip(t.lines[t.pos].second);
    if (s.rfind("labels:", 0) == 0) {
      label_line = t.lines[t.pos].first;
      labels = parse_label_list(s.substr(7), label_line);
      ++t.pos;
    }
  }
  int first = t.line_no();
  BitMatrix rep = read_matrix(t);
  if (labels) {
    if (rep.rows() == 0 && labels->empty()) return BinaryMatroid(BitMatrix(0, 0), {});
    if (labels->size() != rep.cols())
      throw parse_error(label_line, std::to_string(labels->size()) + " labels for " +
                                        std::to_string(rep.cols()) + " columns");
    std::set<Label> seen(labels->begin(), labels->end());
    if (seen.size() != labels->size()) throw parse_error(label_line, "duplicate labels");
    return BinaryMatroid(rep, *labels);
  }
  if (rep.rows() == 0 && rep.cols() == 0 && t.done() && first == 0) return BinaryMatroid();
  return BinaryMatroid(rep);
}

inline BinaryMatroid parse_matroid(const std::string& text) {
  TextLines t = TextLines::from_string(text);
  return read_matroid(t);
}

inline std::string format_matroid(const BinaryMatroid& m) {
  std::ostringstream out;
  out << "labels:";
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? ", " : " ") << m.label(i);
  out << '\n';
  if (m.rank() == 0) {
    if (m.size() > 0) out << std::string(m.size(), '0') << '\n';
  } else {
    write_matrix(out, m.rep());
  }
  return out.str();
}

}  // namespace mforge
