#pragma once

// Minor search. Every minor N of M can be written as a restriction of M/S
// with S independent and r(M/S) = r(N), so the search walks the flats spanned
// by contracted elements (memoized by a reduced basis of their span), prunes
// on the number of points left, and at the target rank tries to embed N as a
// restriction.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mforge/embed.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

inline constexpr std::size_t kMinorHostBound = 256;
inline constexpr std::size_t kMinorTargetBound = 21;

struct MinorWitness {
  ElementSet contract_set;
  ElementSet delete_set;
  LabelMap mapping;  // host label -> target label
};

struct SearchStats {
  uint64_t flats = 0;  // contraction flats visited
  uint64_t nodes = 0;  // flats plus embedding nodes
  bool exhausted = true;
};

// Contract, delete, rename; true iff the result is the target exactly.
inline bool replay_minor(const BinaryMatroid& m, const BinaryMatroid& target, const MinorWitness& w) {
  check_set(m, w.contract_set);
  check_set(m, w.delete_set);
  if ((w.contract_set.bits() & w.delete_set.bits()).any()) return false;
  BinaryMatroid c = contract(m, w.contract_set);
  std::vector<Label> dl = w.delete_set.labels(m);
  BinaryMatroid d = delete_labels(c, dl);
  if (d.size() != w.mapping.size()) return false;
  return equal_labeled(relabel(d, w.mapping), target);
}

namespace detail {

struct BasisHash {
  std::size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Depth-first walk over flats of M spanned by contracted elements.
class FlatWalk {
 public:
  FlatWalk(const BinaryMatroid& m, uint64_t budget) : m_(m), budget_(budget) {
    if (m.size() > kMinorHostBound) throw Error(ErrorKind::too_large, "minor search host above 256 elements");
    cols_ = column_words(m);
    r_ = static_cast<int>(m.rank());
  }

  // `min_points`: prune when fewer distinct points remain. `leaf` is called at
  // depth `depth` and returns true to stop.
  template <class Leaf>
  bool run(int depth, std::size_t min_points, Leaf&& leaf, SearchStats& stats) {
    depth_ = depth;
    min_points_ = min_points;
    basis_.clear();
    contracted_.clear();
    seen_.clear();
    bool found = rec(cols_, leaf, stats);
    return found;
  }

  const std::vector<std::size_t>& contracted() const { return contracted_; }
  int rank() const { return r_; }

  // M/S as a labeled matroid on the surviving positions.
  BinaryMatroid quotient(const std::vector<uint64_t>& cols, std::vector<std::size_t>* positions) const {
    std::vector<bool> in_s(cols.size(), false);
    for (auto p : contracted_) in_s[p] = true;
    positions->clear();
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!in_s[c]) positions->push_back(c);
    BitMatrix rep(r_, positions->size());
    std::vector<Label> labels;
    for (std::size_t k = 0; k < positions->size(); ++k) {
      uint64_t v = cols[(*positions)[k]];
      for (int i = 0; i < r_; ++i)
        if ((v >> i) & 1u) rep.set(i, k);
      labels.push_back(m_.label((*positions)[k]));
    }
    return BinaryMatroid(rep, labels);
  }

  static std::size_t count_points(const std::vector<uint64_t>& cols) {
    std::vector<uint64_t> v;
    v.reserve(cols.size());
    for (auto c : cols)
      if (c) v.push_back(c);
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }

 private:
  template <class Leaf>
  bool rec(const std::vector<uint64_t>& cols, Leaf& leaf, SearchStats& stats) {
    if (budget_ && stats.nodes >= budget_) {
      stats.exhausted = false;
      return false;
    }
    ++stats.flats;
    ++stats.nodes;
    if (static_cast<int>(contracted_.size()) == depth_) return leaf(cols, *this, stats);

    // Children: one per point, lowest position first within a point.
    std::unordered_map<uint64_t, std::size_t> first;
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (cols[c] && first.emplace(cols[c], c).second) reps.push_back(c);

    struct Child {
      std::size_t pos;
      std::size_t points;
    };
    std::vector<Child> children;
    std::vector<uint64_t> tmp(cols.size());
    for (auto p : reps) {
      const uint64_t v = cols[p];
      const uint64_t piv = uint64_t{1} << (63 - std::countl_zero(v));
      for (std::size_t c = 0; c < cols.size(); ++c) tmp[c] = (cols[c] & piv) ? cols[c] ^ v : cols[c];
      std::size_t pts = count_points(tmp);
      if (pts >= min_points_) children.push_back({p, pts});
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) { return a.points > b.points; });

    for (const auto& ch : children) {
      const uint64_t v = cols[ch.pos];
      const uint64_t piv = uint64_t{1} << (63 - std::countl_zero(v));
      std::vector<uint64_t> key = basis_;
      for (auto& b : key)
        if (b & piv) b ^= v;
      key.push_back(v);
      std::sort(key.begin(), key.end());
      if (!seen_.insert(key).second) continue;

      std::vector<uint64_t> next(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) next[c] = (cols[c] & piv) ? cols[c] ^ v : cols[c];
      std::vector<uint64_t> saved = basis_;
      basis_ = std::move(key);
      contracted_.push_back(ch.pos);
      bool stop = rec(next, leaf, stats);
      contracted_.pop_back();
      basis_ = std::move(saved);
      if (stop) return true;
      if (!stats.exhausted) return false;
    }
    return false;
  }

  const BinaryMatroid& m_;
  uint64_t budget_;
  std::vector<uint64_t> cols_;
  int r_ = 0;
  int depth_ = 0;
  std::size_t min_points_ = 0;
  std::vector<uint64_t> basis_;
  std::vector<std::size_t> contracted_;
  std::unordered_set<std::vector<uint64_t>, BasisHash> seen_;
};

inline std::size_t point_count(const BinaryMatroid& m) { return FlatWalk::count_points(column_words(m)); }

}  // namespace detail

struct MinorResult {
  std::optional<MinorWitness> witness;
  SearchStats stats;
};

// First witness in the search order; `budget` = 0 means unlimited. When the
// budget runs out the result has no witness and stats.exhausted = false.
inline MinorResult find_minor(const BinaryMatroid& m, const BinaryMatroid& target, uint64_t budget = 0) {
  if (target.size() > kMinorTargetBound) throw Error(ErrorKind::too_large, "minor target above 21 elements");
  MinorResult out;
  if (target.rank() > m.rank() || target.size() > m.size()) return out;
  if (target.size() - target.rank() > m.size() - m.rank()) return out;
  const int depth = static_cast<int>(m.rank() - target.rank());
  const std::size_t need = detail::point_count(target);

  detail::FlatWalk walk(m, budget);
  auto leaf = [&](const std::vector<uint64_t>& cols, detail::FlatWalk& w, SearchStats& stats) {
    std::vector<std::size_t> positions;
    BinaryMatroid host = w.quotient(cols, &positions);
    EmbedStats es;
    uint64_t left = budget ? (budget > stats.nodes ? budget - stats.nodes : 1) : 0;
    auto emb = find_embedding(target, host, false, &es, left);
    stats.nodes += es.nodes;
    if (!es.exhausted) stats.exhausted = false;
    if (!emb) return false;
    MinorWitness wit{ElementSet(m.size()), ElementSet(m.size()), {}};
    for (auto p : w.contracted()) wit.contract_set.add(p);
    std::vector<bool> used(m.size(), false);
    for (std::size_t i = 0; i < target.size(); ++i) {
      std::size_t hp = positions[(*emb)[i]];
      used[hp] = true;
      wit.mapping[m.label(hp)] = target.label(i);
    }
    for (auto p : positions)
      if (!used[p]) wit.delete_set.add(p);
    if (!replay_minor(m, target, wit)) throw Error(ErrorKind::contract, "minor witness failed replay");
    out.witness = std::move(wit);
    return true;
  };
  walk.run(depth, need, leaf, out.stats);
  return out;
}

inline std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& target) {
  return find_minor(m, target).witness;
}

struct BigMinorResult {
  std::optional<ElementSet> contract_set;
  SearchStats stats;
};

// A set S with r(M/S) = 4 and |si(M/S)| >= threshold.
inline BigMinorResult find_big_rank4_minor(const BinaryMatroid& m, std::size_t threshold, uint64_t budget = 0) {
  BigMinorResult out;
  if (m.rank() < 4) return out;
  detail::FlatWalk walk(m, budget);
  auto leaf = [&](const std::vector<uint64_t>& cols, detail::FlatWalk& w, SearchStats&) {
    if (detail::FlatWalk::count_points(cols) < threshold) return false;
    ElementSet s(m.size());
    for (auto p : w.contracted()) s.add(p);
    out.contract_set = s;
    return true;
  };
  walk.run(static_cast<int>(m.rank()) - 4, threshold, leaf, out.stats);
  return out;
}

inline std::optional<ElementSet> has_big_rank4_minor(const BinaryMatroid& m, std::size_t threshold) {
  return find_big_rank4_minor(m, threshold).contract_set;
}

}  // namespace mforge
