#pragma once

// Graph realization of binary matroids.
//
// A simple connected binary matroid of rank r >= 2 is graphic iff r+1 of its
// cocircuits cover every element exactly twice and span the cocycle space:
// those cocircuits are the vertex stars of a 2-connected graph. The search
// below looks for such a cover; loops, parallel classes and 1-sums are
// handled around it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mforge/graph.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

inline constexpr std::size_t kRealizeRankBound = 24;

namespace detail {

inline int rank_of_words(const uint64_t* v, std::size_t n) {
  uint64_t basis[64] = {};
  int r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    uint64_t x = v[i];
    while (x) {
      int p = 63 - std::countl_zero(x);
      if (!basis[p]) {
        basis[p] = x;
        ++r;
        break;
      }
      x ^= basis[p];
    }
  }
  return r;
}

class StarCover {
 public:
  StarCover(std::vector<uint64_t> cocircuits, std::size_t n, int r)
      : cc_(std::move(cocircuits)), n_(n), r_(r), cover_(n, 0), by_elem_(n) {
    for (std::size_t i = 0; i < cc_.size(); ++i)
      for (std::size_t e = 0; e < n; ++e)
        if ((cc_[i] >> e) & 1u) by_elem_[e].push_back(i);
    sorted_ = cc_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  std::optional<std::vector<uint64_t>> run() {
    if (rec()) return chosen_;
    return std::nullopt;
  }

 private:
  uint64_t reduce(uint64_t x) const {
    while (x) {
      int p = 63 - std::countl_zero(x);
      if (!lead_[p]) return x;
      x ^= lead_[p];
    }
    return 0;
  }

  bool compatible(uint64_t d) const {
    if (d & full_) return false;
    for (uint64_t c : chosen_)
      if (std::popcount(c & d) > 1) return false;
    // Any r stars of a connected graph are independent.
    return reduce(d) != 0;
  }

  void push(uint64_t d) {
    uint64_t x = reduce(d);
    int p = x ? 63 - std::countl_zero(x) : -1;
    if (p >= 0) lead_[p] = x;
    lead_stack_.push_back(p);
    chosen_.push_back(d);
    for (std::size_t e = 0; e < n_; ++e)
      if ((d >> e) & 1u && ++cover_[e] == 2) full_ |= uint64_t{1} << e;
  }
  void pop() {
    if (lead_stack_.back() >= 0) lead_[lead_stack_.back()] = 0;
    lead_stack_.pop_back();
    uint64_t d = chosen_.back();
    chosen_.pop_back();
    for (std::size_t e = 0; e < n_; ++e)
      if ((d >> e) & 1u && cover_[e]-- == 2) full_ &= ~(uint64_t{1} << e);
  }

  bool rec() {
    const uint64_t all = n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    const std::size_t r = static_cast<std::size_t>(r_);
    if (chosen_.size() == r) {
      // The last star is the sum of the others: it must meet every element
      // not yet covered twice and be a cocircuit.
      uint64_t last = 0;
      for (auto c : chosen_) last ^= c;
      if ((last | full_) != all || (last & full_)) return false;
      if (!std::binary_search(sorted_.begin(), sorted_.end(), last)) return false;
      for (auto c : chosen_)
        if (std::popcount(c & last) > 1) return false;
      chosen_.push_back(last);
      return true;
    }
    if (full_ == all) return false;

    std::size_t best = SIZE_MAX, best_need = 0;
    std::vector<std::size_t> best_cand;
    for (std::size_t e = 0; e < n_; ++e) {
      if (cover_[e] == 2) continue;
      std::vector<std::size_t> cand;
      for (auto i : by_elem_[e])
        if (compatible(cc_[i])) cand.push_back(i);
      const std::size_t need = 2 - cover_[e];
      if (cand.size() < need) return false;
      if (best == SIZE_MAX || cand.size() < best_cand.size() ||
          (cand.size() == best_cand.size() && need > best_need)) {
        best = e;
        best_need = need;
        best_cand = std::move(cand);
      }
    }
    if (best_need == 1) {
      for (auto i : best_cand) {
        push(cc_[i]);
        if (rec()) return true;
        pop();
      }
      return false;
    }
    if (chosen_.size() + 2 > r + 1) return false;
    for (std::size_t a = 0; a < best_cand.size(); ++a) {
      push(cc_[best_cand[a]]);
      for (std::size_t b = a + 1; b < best_cand.size(); ++b) {
        if (!compatible(cc_[best_cand[b]])) continue;
        push(cc_[best_cand[b]]);
        if (rec()) return true;
        pop();
      }
      pop();
    }
    return false;
  }

  std::vector<uint64_t> cc_;
  std::vector<uint64_t> sorted_;
  std::size_t n_;
  int r_;
  std::vector<uint8_t> cover_;
  std::vector<std::vector<std::size_t>> by_elem_;
  std::vector<uint64_t> chosen_;
  uint64_t lead_[64] = {};  // chosen stars in reduced form, by leading bit
  std::vector<int> lead_stack_;
  uint64_t full_ = 0;
};

// All cocircuits of the matroid whose columns are `cols` (rank r), as element masks.
inline std::vector<uint64_t> cocircuits(const std::vector<uint64_t>& cols, int r) {
  const std::size_t n = cols.size();
  std::vector<uint64_t> rowmask(r, 0);
  for (std::size_t e = 0; e < n; ++e)
    for (int i = 0; i < r; ++i)
      if ((cols[e] >> i) & 1u) rowmask[i] |= uint64_t{1} << e;
  std::vector<uint64_t> out;
  std::vector<uint64_t> rest(n);
  uint64_t d = 0;
  const uint64_t total = uint64_t{1} << r;
  for (uint64_t k = 1; k < total; ++k) {
    d ^= rowmask[std::countr_zero(k)];
    std::size_t m = 0;
    for (std::size_t e = 0; e < n; ++e)
      if (!((d >> e) & 1u)) rest[m++] = cols[e];
    if (rank_of_words(rest.data(), m) == r - 1) out.push_back(d);
  }
  return out;
}

inline constexpr std::size_t kThreeConnectedCheckBound = 20;

inline bool connected_words(const std::vector<uint64_t>& cols) {
  // Union-find over elements joined through a shared fundamental circuit.
  const std::size_t n = cols.size();
  if (n <= 1) return true;
  uint64_t basis[64] = {}, comb[64] = {};  // comb: basis slots summing to basis[p]
  std::vector<std::size_t> slot_elem;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < n; ++e) {
    uint64_t x = cols[e], c = 0;
    while (x) {
      int p = 63 - std::countl_zero(x);
      if (!basis[p]) break;
      x ^= basis[p];
      c ^= comb[p];
    }
    if (x) {
      const int p = 63 - std::countl_zero(x);
      basis[p] = x;
      comb[p] = c ^ (uint64_t{1} << slot_elem.size());
      slot_elem.push_back(e);
      continue;
    }
    if (!cols[e]) return false;  // a loop is its own component
    for (uint64_t t = c; t; t &= t - 1) parent[find(slot_elem[std::countr_zero(t)])] = find(e);
  }
  const std::size_t root = find(0);
  for (std::size_t e = 1; e < n; ++e)
    if (find(e) != root) return false;
  return true;
}

// Stars read off the non-separating cocircuits, when they form a star cover.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> from_nonseparating(
    const BinaryMatroid& m, const std::vector<uint64_t>& cols, const std::vector<uint64_t>& cc) {
  const std::size_t n = cols.size(), r = m.rank();
  std::vector<uint64_t> stars;
  std::vector<uint64_t> rest;
  for (uint64_t d : cc) {
    rest.clear();
    for (std::size_t e = 0; e < n; ++e)
      if (!((d >> e) & 1u)) rest.push_back(cols[e]);
    if (!connected_words(rest)) continue;
    stars.push_back(d);
    if (stars.size() > r + 1) return std::nullopt;
  }
  if (stars.size() != r + 1) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> ends(n, {SIZE_MAX, SIZE_MAX});
  for (std::size_t v = 0; v < stars.size(); ++v)
    for (std::size_t e = 0; e < n; ++e)
      if ((stars[v] >> e) & 1u) {
        if (ends[e].first == SIZE_MAX) ends[e].first = v;
        else if (ends[e].second == SIZE_MAX) ends[e].second = v;
        else return std::nullopt;
      }
  MultiGraph g{r + 1, {}};
  for (auto [a, b] : ends) {
    if (b == SIZE_MAX) return std::nullopt;
    g.edges.emplace_back(a, b);
  }
  if (!equal_labeled(BinaryMatroid(incidence_matrix(g), m.labels()), m)) return std::nullopt;
  return ends;
}

// Endpoints for a simple connected matroid of rank >= 2, vertices 0..r.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> realize_connected(const BinaryMatroid& m) {
  const int r = static_cast<int>(m.rank());
  const std::size_t n = m.size();
  if (n > static_cast<std::size_t>(r) * (r + 1) / 2) return std::nullopt;
  if (n > 64) throw Error(ErrorKind::too_large, "graph realization: component with more than 64 elements");
  auto cols = column_words(m);
  auto cc = cocircuits(cols, r);
  if (auto ends = from_nonseparating(m, cols, cc)) return ends;
  // Tutte: a 3-connected binary matroid is graphic iff no element lies in
  // three non-separating cocircuits, and then those cocircuits are the stars.
  // The construction above failing on a 3-connected matroid is a refusal.
  if (n <= kThreeConnectedCheckBound && is_k_connected(m, 3)) return std::nullopt;
  StarCover search(std::move(cc), n, r);
  auto stars = search.run();
  if (!stars) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> ends(n, {SIZE_MAX, SIZE_MAX});
  for (std::size_t v = 0; v < stars->size(); ++v)
    for (std::size_t e = 0; e < n; ++e)
      if (((*stars)[v] >> e) & 1u) {
        if (ends[e].first == SIZE_MAX) ends[e].first = v;
        else ends[e].second = v;
      }
  return ends;
}

}  // namespace detail

// Connected components of the matroid as position lists (loops are singletons).
inline std::vector<std::vector<std::size_t>> components(const BinaryMatroid& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& basis = m.basis();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < m.rank(); ++i)
      if (m.rep().get(i, c)) parent[find(c)] = find(basis[i]);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t root = find(c);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(c);
  }
  return out;
}

namespace detail {

// Positions grouped by equal columns; zero columns get group SIZE_MAX.
inline std::vector<std::size_t> column_groups(const BinaryMatroid& m) {
  std::vector<std::size_t> group(m.size(), SIZE_MAX);
  std::unordered_map<std::string, std::size_t> first;
  BitMatrix t = m.rep().transpose();
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (t.row_is_zero(c)) continue;
    group[c] = first.emplace(t.row(c).str(), c).first->second;
  }
  return group;
}

struct ReductionStep {
  enum Kind { loop, coloop, parallel, series } kind;
  std::size_t e;  // removed element
  std::size_t f;  // parallel or series partner that stays
};

// Graph for a simple matroid: components are realized separately and share
// vertex 0. Edge i joins ends[i].
inline std::optional<MultiGraph> realize_simple(const BinaryMatroid& m) {
  MultiGraph g{1, std::vector<std::pair<std::size_t, std::size_t>>(m.size(), {0, 0})};
  for (const auto& comp : components(m)) {
    BinaryMatroid part = restrict_to(m, comp);
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    if (part.rank() == 1) {
      ends.assign(1, {0, 1});
    } else {
      // Simple and cosimple: every vertex of a realization has degree >= 3.
      if (2 * part.size() < 3 * (part.rank() + 1)) return std::nullopt;
      auto got = realize_connected(part);
      if (!got) return std::nullopt;
      ends = std::move(*got);
    }
    const std::size_t base = g.n_vertices - 1;
    auto place = [&](std::size_t v) { return v == 0 ? std::size_t{0} : base + v; };
    std::size_t local_max = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.edges[comp[i]] = {place(ends[i].first), place(ends[i].second)};
      local_max = std::max({local_max, ends[i].first, ends[i].second});
    }
    g.n_vertices += local_max;
  }
  return g;
}

}  // namespace detail

// A graph whose cycle matroid equals m (edge i = element at position i), or
// absent if m is not graphic. Loops, coloops, parallel and series elements are
// peeled off first and put back by subdividing or doubling edges.
inline std::optional<MultiGraph> realize_graph(const BinaryMatroid& m) {
  if (m.rank() > kRealizeRankBound) throw Error(ErrorKind::too_large, "graph realization: rank above 24");
  const std::size_t n = m.size();
  std::vector<Label> pos_labels(n);
  std::iota(pos_labels.begin(), pos_labels.end(), 0);
  BinaryMatroid cur(m.rep(), pos_labels);
  std::vector<detail::ReductionStep> steps;
  for (bool changed = true; changed;) {
    changed = false;
    for (int side = 0; side < 2; ++side) {
      BinaryMatroid view = side == 0 ? cur : dual(cur);
      auto group = detail::column_groups(view);
      std::vector<std::size_t> keep;
      ElementSet gone(cur.size());
      for (std::size_t c = 0; c < cur.size(); ++c) {
        const auto e = static_cast<std::size_t>(cur.label(c));
        if (group[c] == c) {
          keep.push_back(c);
          continue;
        }
        gone.add(c);
        if (group[c] == SIZE_MAX)
          steps.push_back({side == 0 ? detail::ReductionStep::loop : detail::ReductionStep::coloop, e, e});
        else
          steps.push_back({side == 0 ? detail::ReductionStep::parallel : detail::ReductionStep::series, e,
                           static_cast<std::size_t>(cur.label(group[c]))});
      }
      if (gone.empty()) continue;
      changed = true;
      cur = side == 0 ? delete_elements(cur, gone) : contract(cur, gone);
    }
  }

  auto core = detail::realize_simple(cur);
  if (!core) return std::nullopt;
  MultiGraph g{core->n_vertices, std::vector<std::pair<std::size_t, std::size_t>>(n, {0, 0})};
  for (std::size_t i = 0; i < cur.size(); ++i) g.edges[static_cast<std::size_t>(cur.label(i))] = core->edges[i];
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->kind) {
      case detail::ReductionStep::loop: g.edges[it->e] = {0, 0}; break;
      case detail::ReductionStep::coloop: g.edges[it->e] = {0, g.n_vertices++}; break;
      case detail::ReductionStep::parallel: g.edges[it->e] = g.edges[it->f]; break;
      case detail::ReductionStep::series: {
        auto [u, v] = g.edges[it->f];
        const std::size_t w = g.n_vertices++;
        g.edges[it->f] = {u, w};
        g.edges[it->e] = {w, v};
        break;
      }
    }
  }
  if (!equal_labeled(BinaryMatroid(incidence_matrix(g), m.labels()), m))
    throw Error(ErrorKind::contract, "graph realization failed verification");
  return g;
}

}  // namespace mforge
