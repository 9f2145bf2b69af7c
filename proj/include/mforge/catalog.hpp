#pragma once

// Named matroids and signed graphs.

#include <regex>
#include <string>
#include <vector>

#include "mforge/graph.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

namespace named {

// Columns are 1 .. 2^dim - 1 in binary, most significant bit in the top row.
inline BitMatrix projective_matrix(std::size_t dim) {
  std::vector<std::string> rows(dim);
  for (uint32_t v = 1; v < (1u << dim); ++v)
    for (std::size_t i = 0; i < dim; ++i) rows[i] += ((v >> (dim - 1 - i)) & 1u) ? '1' : '0';
  return BitMatrix::from_strings(rows);
}

inline BinaryMatroid projective(std::size_t dim) { return BinaryMatroid(projective_matrix(dim)); }

inline BinaryMatroid pg32() { return projective(4); }

inline BinaryMatroid pg32_minus(std::size_t k) {
  BinaryMatroid p = pg32();
  std::vector<std::size_t> keep = iota_indices(15 - k);
  return restrict_to(p, keep);
}

inline BitMatrix pg32_minus_line_matrix() {
  return BitMatrix::from_strings({
      "000000111111",
      "100110100110",
      "010101010101",
      "001011001011",
  });
}

inline BinaryMatroid pg32_minus_line() { return BinaryMatroid(pg32_minus_line_matrix()); }

inline BitMatrix l11_matrix() {
  return BitMatrix::from_strings({
      "10000010101",
      "01000010011",
      "00100001110",
      "00010001101",
      "00001001011",
      "00000100111",
  });
}

inline BinaryMatroid l11() { return BinaryMatroid(l11_matrix()); }

// The C-contracted two-element template matrix; adding rows 0 and 2 to row 4
// gives a frame matrix under row 0.
inline BitMatrix h12_matrix() {
  return BitMatrix::from_strings({
      "001010101011",
      "000111100000",
      "000110011000",
      "100000000111",
      "010101010101",
  });
}

inline BinaryMatroid h12() { return BinaryMatroid(h12_matrix()); }

inline BinaryMatroid f7() { return projective(3); }

inline BinaryMatroid mk(std::size_t n) {
  if (n < 2 || n > 9) throw Error(ErrorKind::unknown_name, "MK(n) needs 2 <= n <= 9");
  return cycle_matroid(complete_graph(n));
}

inline BinaryMatroid mk33() { return cycle_matroid(complete_bipartite(3, 3)); }

// K7 with the two edges {0,1} and {0,2} removed; L19 is the dual of its cycle matroid.
inline MultiGraph l19_graph() { return remove_edges(complete_graph(7), {{0, 1}, {0, 2}}); }

inline BinaryMatroid l19() { return dual(cycle_matroid(l19_graph())); }

// Frame rows of M(K_n): incidence of K_n without the last vertex row.
inline BitMatrix clique_frame(std::size_t n) {
  MultiGraph k = complete_graph(n);
  BitMatrix inc = incidence_matrix(k);
  return submatrix(inc, iota_indices(n - 1), iota_indices(k.n_edges()));
}

// Columns: [K_{r-1} frame | three Y columns | I | I | I]; the top two rows are
// the X rows. X_1 is U_{1,1}.
inline BitMatrix a_matrix(std::size_t r) {
  if (r < 2) throw Error(ErrorKind::contract, "A_r needs r >= 2");
  const std::size_t k = r - 2;
  const std::size_t nf = (r - 1) * (r - 2) / 2;
  BitMatrix a(r, nf + 3 + 3 * k);
  if (r >= 3) {
    BitMatrix f = clique_frame(r - 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < nf; ++j)
        if (f.get(i, j)) a.set(2 + i, j);
  }
  a.set(0, nf);
  a.set(1, nf + 1);
  a.set(0, nf + 2);
  a.set(1, nf + 2);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c0 = nf + 3 + i, c1 = c0 + k, c2 = c1 + k;
    a.set(2 + i, c0);
    a.set(2 + i, c1);
    a.set(2 + i, c2);
    a.set(0, c0);
    a.set(1, c1);
    a.set(0, c2);
    a.set(1, c2);
  }
  return a;
}

inline BinaryMatroid x(std::size_t r) {
  if (r < 1 || r > 10) throw Error(ErrorKind::unknown_name, "X(r) needs 1 <= r <= 10");
  if (r == 1) return BinaryMatroid(BitMatrix::from_strings({"1"}));
  return BinaryMatroid(a_matrix(r));
}

inline std::size_t x_size_formula(std::size_t r) { return 3 + 3 * (r - 2) + (r - 1) * (r - 2) / 2; }

}  // namespace named

// Names: PG32, PG32_minus_e, PG32_minus_2, PG32_minus_L, L11, L19, H12,
// H12_dual, F7, F7_dual, MK(n), MK_dual(n), MK33, MK33_dual, X(r).
inline BinaryMatroid catalog(const std::string& name) {
  using namespace named;
  if (name == "PG32") return pg32();
  if (name == "PG32_minus_e") return pg32_minus(1);
  if (name == "PG32_minus_2") return pg32_minus(2);
  if (name == "PG32_minus_L") return pg32_minus_line();
  if (name == "L11") return l11();
  if (name == "L19") return l19();
  if (name == "H12") return h12();
  if (name == "H12_dual") return dual(h12());
  if (name == "F7") return f7();
  if (name == "F7_dual") return dual(f7());
  if (name == "MK33") return mk33();
  if (name == "MK33_dual") return dual(mk33());
  static const std::regex indexed(R"((MK|MK_dual|X)\(?([0-9]+)\)?)");
  std::smatch mt;
  if (std::regex_match(name, mt, indexed)) {
    std::size_t n = std::stoul(mt[2].str());
    if (mt[1] == "MK") return mk(n);
    if (mt[1] == "MK_dual") return dual(mk(n));
    return x(n);
  }
  throw Error(ErrorKind::unknown_name, "unknown catalog name '" + name + "'");
}

// The matrix as written down for the name, before row reduction; names with
// no displayed form fall back to the reduced representation.
inline BitMatrix catalog_matrix(const std::string& name) {
  using namespace named;
  if (name == "PG32") return projective_matrix(4);
  if (name == "PG32_minus_e" || name == "PG32_minus_2")
    return select_cols(projective_matrix(4), iota_indices(name == "PG32_minus_e" ? 14 : 13));
  if (name == "PG32_minus_L") return pg32_minus_line_matrix();
  if (name == "L11") return l11_matrix();
  if (name == "H12") return h12_matrix();
  if (name == "F7") return projective_matrix(3);
  static const std::regex indexed(R"(X\(?([0-9]+)\)?)");
  std::smatch mt;
  if (std::regex_match(name, mt, indexed)) {
    std::size_t r = std::stoul(mt[1].str());
    if (r >= 2 && r <= 10) return a_matrix(r);
  }
  return catalog(name).rep();
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out = {"PG32", "PG32_minus_e", "PG32_minus_2", "PG32_minus_L", "L11", "L19",
                                  "H12", "H12_dual", "F7", "F7_dual", "MK33", "MK33_dual"};
  for (int n = 2; n <= 9; ++n) {
    out.push_back("MK(" + std::to_string(n) + ")");
    out.push_back("MK_dual(" + std::to_string(n) + ")");
  }
  for (int r = 1; r <= 10; ++r) out.push_back("X(" + std::to_string(r) + ")");
  return out;
}

}  // namespace mforge
