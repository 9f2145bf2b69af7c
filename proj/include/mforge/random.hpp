#pragma once

// Seeded random instances for cross-checks and property tests.

#include <random>

#include "mforge/graph.hpp"
#include "mforge/matroid.hpp"
#include "mforge/templates.hpp"

namespace mforge::rnd {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& g, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

inline bool coin(Rng& g, double p = 0.5) { return std::bernoulli_distribution(p)(g); }

inline BitMatrix matrix(Rng& g, std::size_t rows, std::size_t cols, double density = 0.5) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(g, density)) m.set(r, c);
  return m;
}

inline BinaryMatroid matroid(Rng& g, std::size_t max_rows, std::size_t max_cols) {
  const std::size_t r = uniform(g, 1, max_rows), n = uniform(g, 1, max_cols);
  return BinaryMatroid(matrix(g, r, n, 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(g)));
}

// Loops allowed; parallel edges allowed.
inline MultiGraph graph(Rng& g, std::size_t max_vertices, std::size_t max_edges) {
  MultiGraph out;
  out.n_vertices = uniform(g, 1, max_vertices);
  const std::size_t m = uniform(g, 1, max_edges);
  for (std::size_t e = 0; e < m; ++e)
    out.edges.emplace_back(uniform(g, 0, out.n_vertices - 1), uniform(g, 0, out.n_vertices - 1));
  return out;
}

inline SignedGraph signed_graph(Rng& g, std::size_t max_vertices, std::size_t max_edges) {
  SignedGraph sg{graph(g, max_vertices, max_edges), {}};
  for (std::size_t e = 0; e < sg.graph.n_edges(); ++e)
    if (coin(g)) sg.odd_edges.insert(e);
  return sg;
}

inline Graft graft(Rng& g, std::size_t max_vertices, std::size_t max_edges) {
  Graft gr{graph(g, max_vertices, max_edges), {}};
  for (std::size_t v = 0; v < gr.graph.n_vertices; ++v)
    if (coin(g)) gr.terminals.insert(v);
  if (gr.terminals.size() % 2) gr.terminals.erase(gr.terminals.begin());
  return gr;
}

// Incidence of a random loopless multigraph on rows + 1 vertices with the
// last vertex row dropped: a frame block of the given row count.
inline BitMatrix frame(Rng& g, std::size_t rows, std::size_t cols) {
  BitMatrix f(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t u = uniform(g, 0, rows), v = uniform(g, 0, rows);
    while (v == u) v = uniform(g, 0, rows);
    if (u < rows) f.set(u, c);
    if (v < rows) f.set(v, c);
  }
  return f;
}

// Random assembly for any template: random frame, Lambda and Delta choices
// drawn from the groups, Z columns virtual or strict.
inline ConformSpec conform_spec(Rng& g, const FrameTemplate& t, std::size_t rows, std::size_t frame_cols,
                                std::size_t z_cols, bool virtual_mode = true) {
  ConformSpec s;
  s.frame = frame(g, rows, frame_cols);
  s.strict = !virtual_mode;
  auto lam = t.lambda.elements();
  auto del = t.delta.elements();
  for (std::size_t c = 0; c < frame_cols; ++c) s.lambda_choices.push_back(lam[uniform(g, 0, lam.size() - 1)]);
  for (std::size_t r = 0; r < rows; ++r) s.delta_choices.push_back(del[uniform(g, 0, del.size() - 1)]);
  if (!t.Y1.empty() && rows > 0) {
    for (std::size_t z = 0; z < z_cols; ++z) {
      ZColumn zc;
      if (!virtual_mode || coin(g, 0.8)) zc.unit = uniform(g, 0, rows - 1);
      zc.y1 = t.Y1[uniform(g, 0, t.Y1.size() - 1)];
      s.z_columns.push_back(zc);
    }
  }
  return s;
}

}  // namespace mforge::rnd
