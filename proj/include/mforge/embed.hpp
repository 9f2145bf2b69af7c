#pragma once

// Linear embeddings of one binary matroid into another: find an injective
// linear map sending every column of the source onto a column of the host.
//
// The search picks the host coordinates one at a time. Each coordinate is a
// vector of the source's row space; after k coordinates every source column
// has a k-bit prefix which must be a prefix of some host column. Candidates
// for the next coordinate satisfy a small linear system and are enumerated
// directly. Host coordinates that can be swapped without changing the host
// column multiset are forced into increasing order.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mforge/matroid.hpp"

namespace mforge {

struct EmbedStats {
  uint64_t nodes = 0;
  bool exhausted = true;  // false if the node budget stopped the search
};

namespace detail {

// Solutions x (over `nvars` bits) of <a_i, x> = t_i, in increasing order of
// the free-variable assignment.
class AffineSolver {
 public:
  explicit AffineSolver(int nvars) : nvars_(nvars) {}

  void reset() {
    rows_.clear();
    consistent_ = true;
  }
  void add(uint64_t a, bool t) {
    if (!consistent_) return;
    for (auto& [r, rt, p] : rows_)
      if ((a >> p) & 1u) {
        a ^= r;
        t ^= rt;
      }
    if (!a) {
      if (t) consistent_ = false;
      return;
    }
    int p = std::countr_zero(a);
    for (auto& [r, rt, q] : rows_)
      if ((r >> p) & 1u) {
        r ^= a;
        rt ^= t;
      }
    rows_.push_back({a, t, p});
  }
  bool consistent() const { return consistent_; }

  template <class F>
  bool for_each(F&& f) const {
    if (!consistent_) return true;
    uint64_t pivots = 0;
    for (auto& row : rows_) pivots |= uint64_t{1} << row.p;
    std::vector<int> free;
    for (int i = 0; i < nvars_; ++i)
      if (!((pivots >> i) & 1u)) free.push_back(i);
    const uint64_t total = uint64_t{1} << free.size();
    for (uint64_t k = 0; k < total; ++k) {
      uint64_t x = 0;
      for (std::size_t b = 0; b < free.size(); ++b)
        if ((k >> b) & 1u) x |= uint64_t{1} << free[b];
      for (auto& row : rows_) {
        bool v = row.t ^ (std::popcount(row.a & x & ~(uint64_t{1} << row.p)) & 1);
        if (v) x |= uint64_t{1} << row.p;
      }
      if (!f(x)) return false;
    }
    return true;
  }

 private:
  struct Row {
    uint64_t a;
    bool t;
    int p;
  };
  int nvars_;
  std::vector<Row> rows_;
  bool consistent_ = true;
};

class Embedder {
 public:
  Embedder(const BinaryMatroid& src, const BinaryMatroid& host, bool bijective, uint64_t budget)
      : src_(src), host_(host), bijective_(bijective), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run(EmbedStats* stats) {
    auto result = search();
    if (stats) {
      stats->nodes += nodes_;
      if (aborted_) stats->exhausted = false;
    }
    return result;
  }

 private:
  std::optional<std::vector<std::size_t>> search() {
    rs_ = static_cast<int>(src_.rank());
    rh_ = static_cast<int>(host_.rank());
    if (rs_ > rh_) return std::nullopt;
    if (rs_ > 24) throw Error(ErrorKind::too_large, "embedding source rank above 24");
    if (bijective_ && (src_.size() != host_.size() || rs_ != rh_)) return std::nullopt;

    auto scols = column_words(src_);
    auto hcols = column_words(host_);

    std::map<uint64_t, std::vector<std::size_t>> sclass;
    for (std::size_t i = 0; i < scols.size(); ++i)
      if (scols[i]) sclass[scols[i]].push_back(i);
      else src_loops_.push_back(i);
    for (std::size_t i = 0; i < hcols.size(); ++i)
      if (hcols[i]) host_class_[hcols[i]].push_back(i);
      else host_loops_.push_back(i);
    if (src_loops_.size() > host_loops_.size()) return std::nullopt;
    if (bijective_ && src_loops_.size() != host_loops_.size()) return std::nullopt;
    if (sclass.size() > host_class_.size()) return std::nullopt;
    if (bijective_ && sclass.size() != host_class_.size()) return std::nullopt;
    if (sclass.size() > 64) throw Error(ErrorKind::too_large, "embedding source with more than 64 points");
    for (auto& [v, ps] : sclass) {
      class_vec_.push_back(v);
      class_pos_.push_back(ps);
    }
    nc_ = class_vec_.size();

    // Row-space element for coefficient vector x: bit c set iff <x, a_c> = 1.
    row_mask_.assign(std::size_t{1} << rs_, 0);
    std::vector<uint64_t> unit(rs_, 0);
    for (int i = 0; i < rs_; ++i)
      for (std::size_t c = 0; c < nc_; ++c)
        if ((class_vec_[c] >> i) & 1u) unit[i] |= uint64_t{1} << c;
    for (uint64_t x = 1; x < row_mask_.size(); ++x) {
      int low = std::countr_zero(x);
      row_mask_[x] = row_mask_[x & (x - 1)] ^ unit[low];
    }

    // Coordinate order: sparse host coordinates first.
    std::vector<std::pair<std::size_t, int>> weight;
    for (int i = 0; i < rh_; ++i) {
      std::size_t w = 0;
      for (auto& [v, ps] : host_class_) w += (v >> i) & 1u;
      weight.emplace_back(w, i);
    }
    std::sort(weight.begin(), weight.end());
    for (auto& [w, i] : weight) order_.push_back(i);

    allow_.assign(rh_, {});
    count_.assign(rh_, {});
    for (auto& [v, ps] : host_class_) {
      uint64_t p = 0;
      for (int k = 0; k < rh_; ++k) {
        uint64_t bit = (v >> order_[k]) & 1u;
        allow_[k][p] |= static_cast<uint8_t>(1u << bit);
        p = (p << 1) | bit;
        ++count_[k][p];
      }
    }

    // Interchangeable coordinates.
    std::map<uint64_t, std::size_t> mult;
    for (auto& [v, ps] : host_class_) mult[v] = ps.size();
    prev_same_.assign(rh_, -1);
    for (int k = 0; k < rh_; ++k)
      for (int j = k - 1; j >= 0; --j)
        if (swappable(order_[j], order_[k], mult)) {
          prev_same_[k] = j;
          break;
        }

    prefix_.assign(nc_, 0);
    chosen_.assign(rh_, 0);
    basis_.assign(64, 0);
    rank_ = 0;
    if (!rec(0)) return result_;
    return std::nullopt;
  }

  bool swappable(int i, int j, const std::map<uint64_t, std::size_t>& mult) const {
    for (auto& [v, m] : mult) {
      uint64_t bi = (v >> i) & 1u, bj = (v >> j) & 1u;
      uint64_t w = v;
      if (bi != bj) w ^= (uint64_t{1} << i) | (uint64_t{1} << j);
      auto it = mult.find(w);
      if (it == mult.end() || it->second != m) return false;
    }
    return true;
  }

  // Returns false to stop the search (solution found or budget exhausted).
  bool rec(int k) {
    if (budget_ && nodes_ >= budget_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    if (k == rh_) return !leaf();

    uint64_t must0 = 0, must1 = 0;
    for (std::size_t c = 0; c < nc_; ++c) {
      auto it = allow_[k].find(prefix_[c]);
      uint8_t a = it == allow_[k].end() ? 0 : it->second;
      if (a == 0) return true;
      if (a == 1) must0 |= uint64_t{1} << c;
      else if (a == 2) must1 |= uint64_t{1} << c;
    }
    AffineSolver solver(rs_);
    for (std::size_t c = 0; c < nc_; ++c) {
      uint64_t bit = uint64_t{1} << c;
      if (must0 & bit) solver.add(class_vec_[c], false);
      else if (must1 & bit) solver.add(class_vec_[c], true);
    }
    const bool need_indep = (rh_ - k - 1) < (rs_ - rank_);
    const int prev = prev_same_[k];
    const uint64_t floor = prev >= 0 ? chosen_[prev] : 0;
    const bool strict = rs_ == rh_;

    return solver.for_each([&](uint64_t x) {
      if (prev >= 0 && (strict ? x <= floor : x < floor)) return true;
      uint64_t r = reduce(x);
      if (need_indep && !r) return true;
      if (!x && rs_ == rh_) return true;
      const uint64_t mask = row_mask_[x];
      std::vector<uint64_t> saved = prefix_;
      for (std::size_t c = 0; c < nc_; ++c) prefix_[c] = (prefix_[c] << 1) | ((mask >> c) & 1u);
      if (!fits(k)) {
        prefix_ = std::move(saved);
        return true;
      }
      chosen_[k] = x;
      int saved_rank = rank_;
      uint64_t saved_slot = 0;
      int slot = -1;
      if (r) {
        slot = 63 - std::countl_zero(r);
        saved_slot = basis_[slot];
        basis_[slot] = r;
        ++rank_;
      }
      bool go_on = rec(k + 1);
      if (slot >= 0) basis_[slot] = saved_slot;
      rank_ = saved_rank;
      prefix_ = std::move(saved);
      return go_on;
    });
  }

  // Distinct source points need distinct host points below each prefix.
  bool fits(int k) {
    scratch_.assign(prefix_.begin(), prefix_.end());
    std::sort(scratch_.begin(), scratch_.end());
    const auto& cnt = count_[k];
    for (std::size_t i = 0; i < scratch_.size();) {
      std::size_t j = i;
      while (j < scratch_.size() && scratch_[j] == scratch_[i]) ++j;
      auto it = cnt.find(scratch_[i]);
      if (it == cnt.end() || it->second < j - i) return false;
      i = j;
    }
    return true;
  }

  uint64_t reduce(uint64_t x) const {
    while (x) {
      int p = 63 - std::countl_zero(x);
      if (!basis_[p]) return x;
      x ^= basis_[p];
    }
    return 0;
  }

  // Returns true when a full solution was recorded.
  bool leaf() {
    if (rank_ != rs_) return false;
    std::vector<std::size_t> mapping(src_.size(), SIZE_MAX);
    for (std::size_t c = 0; c < nc_; ++c) {
      uint64_t h = 0;
      for (int k = 0; k < rh_; ++k)
        if ((prefix_[c] >> (rh_ - 1 - k)) & 1u) h |= uint64_t{1} << order_[k];
      auto it = host_class_.find(h);
      if (it == host_class_.end()) return false;
      const auto& hp = it->second;
      const auto& sp = class_pos_[c];
      if (hp.size() < sp.size() || (bijective_ && hp.size() != sp.size())) return false;
      for (std::size_t i = 0; i < sp.size(); ++i) mapping[sp[i]] = hp[i];
    }
    for (std::size_t i = 0; i < src_loops_.size(); ++i) mapping[src_loops_[i]] = host_loops_[i];
    result_ = std::move(mapping);
    return true;
  }

  const BinaryMatroid& src_;
  const BinaryMatroid& host_;
  bool bijective_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  bool aborted_ = false;

  int rs_ = 0, rh_ = 0;
  std::size_t nc_ = 0;
  std::vector<uint64_t> class_vec_;
  std::vector<std::vector<std::size_t>> class_pos_;
  std::map<uint64_t, std::vector<std::size_t>> host_class_;
  std::vector<std::size_t> src_loops_, host_loops_;
  std::vector<uint64_t> row_mask_;
  std::vector<int> order_;
  std::vector<std::unordered_map<uint64_t, uint8_t>> allow_;
  std::vector<std::unordered_map<uint64_t, std::size_t>> count_;  // host points per prefix
  std::vector<uint64_t> scratch_;
  std::vector<int> prev_same_;
  std::vector<uint64_t> prefix_;
  std::vector<uint64_t> chosen_;
  std::vector<uint64_t> basis_;
  int rank_ = 0;
  std::optional<std::vector<std::size_t>> result_;
};

}  // namespace detail

// Position mapping source -> host, or absent. `budget` = 0 means unlimited.
inline std::optional<std::vector<std::size_t>> find_embedding(const BinaryMatroid& src, const BinaryMatroid& host,
                                                              bool bijective, EmbedStats* stats = nullptr,
                                                              uint64_t budget = 0) {
  detail::Embedder e(src, host, bijective, budget);
  return e.run(stats);
}

using LabelMap = std::map<Label, Label>;

inline BinaryMatroid relabel(const BinaryMatroid& m, const LabelMap& to) {
  std::vector<Label> labels;
  for (auto l : m.labels()) {
    auto it = to.find(l);
    labels.push_back(it == to.end() ? l : it->second);
  }
  return BinaryMatroid(m.rep(), labels);
}

// m's label -> host label. The returned map is checked: restricting host to
// the image and renaming gives m exactly.
inline std::optional<LabelMap> embeds_as_restriction(const BinaryMatroid& m, const BinaryMatroid& host,
                                                     EmbedStats* stats = nullptr, uint64_t budget = 0) {
  auto pos = find_embedding(m, host, false, stats, budget);
  if (!pos) return std::nullopt;
  LabelMap fwd, back;
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < m.size(); ++i) {
    fwd[m.label(i)] = host.label((*pos)[i]);
    back[host.label((*pos)[i])] = m.label(i);
    image.push_back((*pos)[i]);
  }
  std::sort(image.begin(), image.end());
  if (!equal_labeled(relabel(restrict_to(host, image), back), m))
    throw Error(ErrorKind::contract, "embedding failed verification");
  return fwd;
}

// a's label -> b's label.
inline std::optional<LabelMap> isomorphic(const BinaryMatroid& a, const BinaryMatroid& b, EmbedStats* stats = nullptr,
                                          uint64_t budget = 0) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  auto pos = find_embedding(a, b, true, stats, budget);
  if (!pos) return std::nullopt;
  LabelMap fwd, back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    fwd[a.label(i)] = b.label((*pos)[i]);
    back[b.label((*pos)[i])] = a.label(i);
  }
  if (!equal_labeled(relabel(b, back), a)) throw Error(ErrorKind::contract, "isomorphism failed verification");
  return fwd;
}

}  // namespace mforge
