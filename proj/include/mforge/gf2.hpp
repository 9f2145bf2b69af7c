#pragma once

// Dense GF(2) vectors and matrices with rows packed into 64-bit words.
// Column c of a row lives in word c / 64, bit c % 64.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mforge/error.hpp"

namespace mforge {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

  static BitVec from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') v.set(i);
      else if (s[i] != '0') throw Error(ErrorKind::parse, "bad bit character in '" + s + "'");
    }
    return v;
  }

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v) w_[i >> 6] |= (uint64_t{1} << (i & 63));
    else w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= (uint64_t{1} << (i & 63)); }

  BitVec& operator^=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_same(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  std::optional<std::size_t> first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return std::nullopt;
  }
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        out.push_back(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }
  // Parity of the inner product.
  bool dot(const BitVec& o) const {
    check_same(o);
    uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  uint64_t* words() { return w_.data(); }
  const uint64_t* words() const { return w_.data(); }
  std::size_t n_words() const { return w_.size(); }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  // Reading order: bit 0 is the most significant position.
  bool lex_less(const BitVec& o) const {
    std::size_t m = std::min(n_, o.n_);
    for (std::size_t i = 0; i < m; ++i)
      if (get(i) != o.get(i)) return !get(i);
    return n_ < o.n_;
  }

 private:
  void check_same(const BitVec& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::contract, "bit-vector length mismatch");
  }
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }
  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error(ErrorKind::contract, "ragged matrix rows");
      m.set_row(r, BitVec::from_string(rows[r]));
    }
    return m;
  }
  static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v = true) {
    uint64_t bit = uint64_t{1} << (c & 63);
    if (v) row_ptr(r)[c >> 6] |= bit;
    else row_ptr(r)[c >> 6] &= ~bit;
  }
  void flip(std::size_t r, std::size_t c) { row_ptr(r)[c >> 6] ^= uint64_t{1} << (c & 63); }

  uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }
  const uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

  BitVec row(std::size_t r) const {
    BitVec v(cols_);
    std::copy(row_ptr(r), row_ptr(r) + wpr_, v.words());
    return v;
  }
  void set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw Error(ErrorKind::contract, "row length mismatch");
    std::copy(v.words(), v.words() + wpr_, row_ptr(r));
  }
  BitVec col(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, c)) v.set(r);
    return v;
  }
  void xor_row(std::size_t dst, std::size_t src) {
    uint64_t* d = row_ptr(dst);
    const uint64_t* s = row_ptr(src);
    for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
  }
  bool row_is_zero(std::size_t r) const {
    const uint64_t* p = row_ptr(r);
    for (std::size_t k = 0; k < wpr_; ++k)
      if (p[k]) return false;
    return true;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const BitMatrix& o) const { return !(*this == o); }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).str());
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> data_;
};

struct Rref {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
};

// In-place elimination; returns pivot columns. Rows [0, pivots.size()) hold the
// reduced basis afterwards, the rest are zero.
inline std::vector<std::size_t> eliminate(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < m.cols() && cur < m.rows(); ++c) {
    std::size_t p = cur;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, cur);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != cur && m.get(r, c)) m.xor_row(r, cur);
    pivots.push_back(c);
    ++cur;
  }
  return pivots;
}

inline Rref rref(const BitMatrix& m) {
  BitMatrix w = m;
  auto pivots = eliminate(w);
  BitMatrix out(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(w.row_ptr(r), w.row_ptr(r) + w.words_per_row(), out.row_ptr(r));
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) {
  BitMatrix w = m;
  return eliminate(w).size();
}

inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols())
    throw Error(ErrorKind::contract, "row_space_equal: column counts differ");
  return rref(a).matrix == rref(b).matrix;
}

// Coefficients x with x * m = v, if any.
inline std::optional<BitVec> solve_row_combination(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw Error(ErrorKind::contract, "solve_row_combination: length mismatch");
  // Augment each row with its identity tag so the combination is tracked.
  const std::size_t n = m.rows(), c = m.cols();
  BitMatrix w(n, c + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j : m.row(r).ones()) w.set(r, j);
    w.set(r, c + r);
  }
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < c && cur < n; ++col) {
    std::size_t p = cur;
    while (p < n && !w.get(p, col)) ++p;
    if (p == n) continue;
    w.swap_rows(p, cur);
    for (std::size_t r = 0; r < n; ++r)
      if (r != cur && w.get(r, col)) w.xor_row(r, cur);
    pivots.push_back(col);
    ++cur;
  }
  BitVec rest = v;
  BitVec coeff(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (!rest.get(pivots[i])) continue;
    for (std::size_t j = 0; j < c; ++j)
      if (w.get(i, j)) rest.flip(j);
    for (std::size_t j = 0; j < n; ++j)
      if (w.get(i, c + j)) coeff.flip(j);
  }
  if (rest.any()) return std::nullopt;
  return coeff;
}

inline bool in_row_space(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw Error(ErrorKind::contract, "in_row_space: length mismatch");
  return solve_row_combination(m, v).has_value();
}

inline BitVec multiply_row(const BitVec& x, const BitMatrix& m) {
  if (x.size() != m.rows()) throw Error(ErrorKind::contract, "multiply_row: length mismatch");
  BitVec out(m.cols());
  for (std::size_t r : x.ones()) {
    const uint64_t* p = m.row_ptr(r);
    for (std::size_t k = 0; k < m.words_per_row(); ++k) out.words()[k] ^= p[k];
  }
  return out;
}

inline BitMatrix submatrix(const BitMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  for (auto r : rows)
    if (r >= m.rows()) throw Error(ErrorKind::contract, "submatrix: row index out of range");
  for (auto c : cols)
    if (c >= m.cols()) throw Error(ErrorKind::contract, "submatrix: column index out of range");
  BitMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (m.get(rows[i], cols[j])) out.set(i, j);
  return out;
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

inline BitMatrix select_cols(const BitMatrix& m, const std::vector<std::size_t>& cols) {
  return submatrix(m, iota_indices(m.rows()), cols);
}

inline BitMatrix augment_cols(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::contract, "augment_cols: row counts differ");
  BitMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(r, a.cols() + c);
  }
  return out;
}

inline BitMatrix stack_rows(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::contract, "stack_rows: column counts differ");
  BitMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.set_row(a.rows() + r, b.row(r));
  return out;
}

// Source lines with their 1-based line numbers; composite formats (matroid,
// graph, template files) walk a cursor over these.
struct TextLines {
  std::vector<std::pair<int, std::string>> lines;
  std::size_t pos = 0;

  static TextLines from_stream(std::istream& in) {
    TextLines t;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      t.lines.emplace_back(n, line);
    }
    return t;
  }
  static TextLines from_string(const std::string& s) {
    std::istringstream in(s);
    return from_stream(in);
  }
  bool done() const { return pos >= lines.size(); }
  int line_no() const { return done() ? (lines.empty() ? 0 : lines.back().first) : lines[pos].first; }
};

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline bool is_comment_or_blank(const std::string& s) {
  std::string t = strip(s);
  return t.empty() || t[0] == '#';
}

inline Error parse_error(int line_no, const std::string& msg) {
  return Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
}

// Text format: rows of '0'/'1', spaces ignored, '#' comment lines, blank line or
// end of input ends the block. Leading blank and comment lines are skipped.
inline BitMatrix read_matrix(TextLines& t) {
  while (!t.done() && strip(t.lines[t.pos].second).empty()) ++t.pos;
  std::vector<std::string> rows;
  while (!t.done()) {
    const auto& [no, line] = t.lines[t.pos];
    std::string s = strip(line);
    if (s.empty()) break;
    ++t.pos;
    if (s[0] == '#') continue;
    std::string bits;
    for (char ch : s) {
      if (ch == ' ' || ch == '\t') continue;
      if (ch != '0' && ch != '1')
        throw parse_error(no, std::string("unexpected character '") + ch + "' in matrix row");
      bits.push_back(ch);
    }
    if (!rows.empty() && bits.size() != rows[0].size())
      throw parse_error(no, "row has " + std::to_string(bits.size()) + " entries, expected " +
                                std::to_string(rows[0].size()));
    rows.push_back(bits);
  }
  return BitMatrix::from_strings(rows);
}

inline BitMatrix parse_matrix(const std::string& text) {
  TextLines t = TextLines::from_string(text);
  return read_matrix(t);
}

inline void write_matrix(std::ostream& out, const BitMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).str() << '\n';
}

inline std::string format_matrix(const BitMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace mforge
