#pragma once

// Multigraphs, signed graphs and grafts, and the binary matroids they define.
// Edge index = matroid label.

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mforge/matroid.hpp"

namespace mforge {

struct MultiGraph {
  std::size_t n_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t n_edges() const { return edges.size(); }
  bool operator==(const MultiGraph& o) const = default;
};

struct SignedGraph {
  MultiGraph graph;
  std::set<std::size_t> odd_edges;
  bool operator==(const SignedGraph& o) const = default;
};

struct Graft {
  MultiGraph graph;
  std::set<std::size_t> terminals;
};

inline MultiGraph graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  for (auto [u, v] : edges)
    if (u >= n || v >= n) throw Error(ErrorKind::contract, "edge endpoint out of range");
  return MultiGraph{n, edges};
}

inline MultiGraph complete_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::contract, "complete_graph needs n >= 1");
  MultiGraph g{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

inline MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
  MultiGraph g{a + b, {}};
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
  return g;
}

inline MultiGraph remove_edges(const MultiGraph& g, const std::set<std::pair<std::size_t, std::size_t>>& drop) {
  MultiGraph h{g.n_vertices, {}};
  for (auto e : g.edges) {
    auto key = e.first < e.second ? e : std::make_pair(e.second, e.first);
    if (!drop.count(key)) h.edges.push_back(e);
  }
  return h;
}

inline BitMatrix incidence_matrix(const MultiGraph& g) {
  BitMatrix m(g.n_vertices, g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    m.set(u, e);
    m.set(v, e);
  }
  return m;
}

inline BinaryMatroid cycle_matroid(const MultiGraph& g) { return BinaryMatroid(incidence_matrix(g)); }

inline BitVec sign_row(const SignedGraph& sg) {
  BitVec w(sg.graph.n_edges());
  for (auto e : sg.odd_edges) {
    if (e >= sg.graph.n_edges()) throw Error(ErrorKind::contract, "odd edge index out of range");
    w.set(e);
  }
  return w;
}

inline BinaryMatroid even_cycle_matroid(const SignedGraph& sg) {
  BitMatrix w(1, sg.graph.n_edges());
  w.set_row(0, sign_row(sg));
  return BinaryMatroid(stack_rows(w, incidence_matrix(sg.graph)));
}

inline SignedGraph resign(const SignedGraph& sg, std::size_t vertex) {
  if (vertex >= sg.graph.n_vertices) throw Error(ErrorKind::contract, "resign: vertex out of range");
  SignedGraph out = sg;
  for (std::size_t e = 0; e < sg.graph.n_edges(); ++e) {
    auto [u, v] = sg.graph.edges[e];
    if (u == v || (u != vertex && v != vertex)) continue;
    if (out.odd_edges.count(e)) out.odd_edges.erase(e);
    else out.odd_edges.insert(e);
  }
  return out;
}

// Lexicographically first pair {u, v} (u < v) such that, after some resigning,
// every odd edge meets u or v. Checked as cut-space membership of the sign
// vector restricted to the edges of G - u - v.
inline std::optional<std::pair<std::size_t, std::size_t>> find_blocking_pair(const SignedGraph& sg) {
  const auto& g = sg.graph;
  const std::size_t n = g.n_vertices;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::vector<std::size_t> kept;
      for (std::size_t e = 0; e < g.n_edges(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == u || a == v || b == u || b == v) continue;
        kept.push_back(e);
      }
      BitVec w(kept.size());
      bool any = false;
      for (std::size_t i = 0; i < kept.size(); ++i)
        if (sg.odd_edges.count(kept[i])) {
          w.set(i);
          any = true;
        }
      if (!any) return std::make_pair(u, v);
      BitMatrix inc(n, kept.size());
      for (std::size_t i = 0; i < kept.size(); ++i) {
        auto [a, b] = g.edges[kept[i]];
        if (a == b) continue;
        inc.set(a, i);
        inc.set(b, i);
      }
      if (in_row_space(inc, w)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

inline constexpr std::size_t kGraftVertexBound = 16;

// Cut vector of U (bit u of `mask`).
inline BitVec cut_vector(const MultiGraph& g, uint32_t mask) {
  BitVec c(g.n_edges());
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    auto [a, b] = g.edges[e];
    if (((mask >> a) & 1u) != ((mask >> b) & 1u)) c.set(e);
  }
  return c;
}

// Orthogonal complement of the row space of m (as a basis, one row per vector).
inline BitMatrix orthogonal_complement(const BitMatrix& m, std::size_t n_cols) {
  if (m.rows() == 0) return BitMatrix::identity(n_cols);
  BinaryMatroid tmp(m);
  return dual(tmp).rep();
}

inline BinaryMatroid graft_matroid(const Graft& gr) {
  const auto& g = gr.graph;
  if (g.n_vertices > kGraftVertexBound)
    throw Error(ErrorKind::too_large, "graft_matroid: more than 16 vertices");
  if (gr.terminals.size() % 2) throw Error(ErrorKind::contract, "graft: odd number of terminals");
  uint32_t tmask = 0;
  for (auto t : gr.terminals) {
    if (t >= g.n_vertices) throw Error(ErrorKind::contract, "graft: terminal out of range");
    tmask |= uint32_t{1} << t;
  }
  std::vector<BitVec> cuts;
  std::set<std::string> seen;
  const uint32_t limit = uint32_t{1} << g.n_vertices;
  for (uint32_t u = 0; u < limit; ++u) {
    if (std::popcount(u & tmask) % 2) continue;
    BitVec c = cut_vector(g, u);
    if (!c.any()) continue;
    if (seen.insert(c.str()).second) cuts.push_back(c);
  }
  // Even cuts are closed under symmetric difference, so a cut is minimal iff it
  // contains no smaller minimal one.
  std::vector<const BitVec*> by_size;
  for (const auto& c : cuts) by_size.push_back(&c);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const BitVec* a, const BitVec* b) { return a->count() < b->count(); });
  std::vector<BitVec> minimal;
  for (const BitVec* c : by_size) {
    bool is_min = true;
    for (const auto& d : minimal)
      if ((d & *c) == d) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(*c);
  }
  const std::size_t ne = g.n_edges();
  BitMatrix all = BitMatrix::from_rows(cuts, ne);
  BitMatrix mins = BitMatrix::from_rows(minimal, ne);
  if (cuts.empty()) {
    all = BitMatrix(0, ne);
    mins = BitMatrix(0, ne);
  }
  if (!row_space_equal(all, mins))
    throw Error(ErrorKind::contract, "graft_matroid: minimal even cuts do not span the even-cut space");
  BitMatrix rep = orthogonal_complement(rref(all).matrix, ne);
  return BinaryMatroid(rep);
}

// ---- text format ----------------------------------------------------------
//   vertices: n
//   u v [odd]
//   terminals: a b ...

struct GraphFile {
  MultiGraph graph;
  std::set<std::size_t> odd_edges;
  std::optional<std::set<std::size_t>> terminals;
};

inline GraphFile read_graph(TextLines& t) {
  GraphFile f;
  bool have_header = false;
  for (; !t.done(); ++t.pos) {
    const auto& [no, raw] = t.lines[t.pos];
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = strip(s.substr(0, hash));
    std::istringstream in(s);
    std::string head;
    in >> head;
    if (head == "vertices:") {
      long n;
      if (!(in >> n) || n < 0) throw parse_error(no, "expected a vertex count");
      f.graph.n_vertices = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(no, "expected 'vertices: n' before edges");
    if (head == "terminals:") {
      std::set<std::size_t> ts;
      long v;
      while (in >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= f.graph.n_vertices)
          throw parse_error(no, "terminal out of range");
        ts.insert(static_cast<std::size_t>(v));
      }
      if (!in.eof()) throw parse_error(no, "bad terminal list");
      f.terminals = ts;
      continue;
    }
    long u, v;
    std::istringstream ein(s);
    if (!(ein >> u >> v)) throw parse_error(no, "expected an edge 'u v [odd]'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= f.graph.n_vertices ||
        static_cast<std::size_t>(v) >= f.graph.n_vertices)
      throw parse_error(no, "edge endpoint out of range");
    std::string mark;
    if (ein >> mark) {
      if (mark != "odd") throw parse_error(no, "unknown edge marker '" + mark + "'");
      f.odd_edges.insert(f.graph.edges.size());
    }
    std::string extra;
    if (ein >> extra) throw parse_error(no, "trailing text on edge line");
    f.graph.edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!have_header) throw parse_error(t.line_no(), "missing 'vertices: n' header");
  return f;
}

inline GraphFile parse_graph(const std::string& text) {
  TextLines t = TextLines::from_string(text);
  return read_graph(t);
}

inline std::string format_signed_graph(const SignedGraph& sg) {
  std::ostringstream out;
  out << "vertices: " << sg.graph.n_vertices << '\n';
  for (std::size_t e = 0; e < sg.graph.n_edges(); ++e) {
    out << sg.graph.edges[e].first << ' ' << sg.graph.edges[e].second;
    if (sg.odd_edges.count(e)) out << " odd";
    out << '\n';
  }
  return out.str();
}

inline std::string format_graph(const MultiGraph& g) { return format_signed_graph(SignedGraph{g, {}}); }

inline std::string format_graft(const Graft& gr) {
  std::string s = format_graph(gr.graph);
  s += "terminals:";
  for (auto t : gr.terminals) s += " " + std::to_string(t);
  s += '\n';
  return s;
}

}  // namespace mforge
