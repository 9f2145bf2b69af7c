#pragma once

// Verification jobs: one named, runnable check per computational claim, and
// the runner that turns them into JSON reports.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mforge/catalog.hpp"
#include "mforge/figures.hpp"
#include "mforge/lemmas.hpp"
#include "mforge/random.hpp"
#include "mforge/recognize.hpp"
#include "mforge/templates.hpp"

namespace mforge {

using json = nlohmann::json;

enum class JobStatus { verified, refuted, error, skipped };
enum class Budget { fast, standard, heavy };

inline const char* to_string(JobStatus s) {
  switch (s) {
    case JobStatus::verified: return "verified";
    case JobStatus::refuted: return "refuted";
    case JobStatus::error: return "error";
    case JobStatus::skipped: return "skipped";
  }
  return "?";
}

inline std::optional<JobStatus> job_status_from_string(const std::string& s) {
  for (auto k : {JobStatus::verified, JobStatus::refuted, JobStatus::error, JobStatus::skipped})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

inline const char* to_string(Budget b) {
  switch (b) {
    case Budget::fast: return "fast";
    case Budget::standard: return "standard";
    case Budget::heavy: return "heavy";
  }
  return "?";
}

struct JobResult {
  JobStatus status = JobStatus::error;
  json witness;  // null when the claim has no existential part
  json params = json::object();
};

struct VerificationJob {
  std::string id;
  std::string anchor;  // theorem, lemma or figure the job checks
  std::string description;
  Budget budget = Budget::fast;
  std::vector<std::string> groups;
  bool inferred = false;  // lemma-to-computation pairing read off the proof text
  std::function<JobResult()> run;
  std::function<bool(const json&)> replay;  // empty: nothing existential to replay
};

struct VerificationReport {
  std::string id;
  JobStatus status = JobStatus::error;
  json witness;
  int64_t elapsed_ms = 0;
  json params = json::object();
};

inline json to_json(const VerificationReport& r) {
  return json{{"id", r.id},
              {"status", to_string(r.status)},
              {"witness", r.witness},
              {"elapsed_ms", r.elapsed_ms},
              {"params", r.params}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  auto st = job_status_from_string(j.at("status").get<std::string>());
  if (!st) throw Error(ErrorKind::parse, "unknown report status");
  r.status = *st;
  r.witness = j.at("witness");
  r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
  r.params = j.at("params");
  return r;
}

namespace jobs {

inline JobResult verdict(bool ok, json params = json::object(), json witness = nullptr) {
  return {ok ? JobStatus::verified : JobStatus::refuted, std::move(witness), std::move(params)};
}

inline json label_map_json(const LabelMap& m) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back({a, b});
  return out;
}

inline LabelMap label_map_from(const json& j) {
  LabelMap m;
  for (const auto& p : j) m[p.at(0).get<Label>()] = p.at(1).get<Label>();
  return m;
}

inline bool replay_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b, const json& map) {
  LabelMap m = label_map_from(map);
  if (m.size() != a.size()) return false;
  return equal_labeled(relabel(a, m), b);
}

// ---- lemma jobs ----------------------------------------------------------------

inline json hit_json(const LemmaHit& h, const BinaryMatroid& host) {
  json j{{"kind", h.kind}, {"n", h.n}, {"delta_rows", h.delta_rows}, {"contract", h.contract}};
  if (h.kind == "rank4-points") j["threshold"] = h.threshold;
  if (h.minor) {
    j["target"] = h.minor_name;
    j["contract"] = h.minor->contract_set.labels(host);
    j["delete"] = h.minor->delete_set.labels(host);
    j["mapping"] = label_map_json(h.minor->mapping);
  }
  return j;
}

inline JobResult run_lemma(const LemmaSpec& spec) {
  json witness = json::array(), sizes = json::array(), rows = json::array();
  bool all_found = true, exhausted = true;
  uint64_t nodes = 0;
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    InstanceResult r = search_instance(spec, spec.instances[i]);
    nodes += r.nodes;
    if (!r.found) {
      all_found = false;
      exhausted = exhausted && r.exhausted;
      sizes.push_back(nullptr);
      rows.push_back(nullptr);
      continue;
    }
    json certs = json::array();
    for (const auto& h : r.hits) certs.push_back(hit_json(h, lemma_matroid(spec, spec.instances[i], h.n, h.delta_rows)));
    witness.push_back({{"instance", i}, {"certificates", certs}});
    sizes.push_back(r.hits.front().n);
    rows.push_back(r.hits.front().delta_rows);
  }
  json params{{"target", to_string(spec.target)},
              {"instances", spec.instances.size()},
              {"frame_sizes", sizes},
              {"search_nodes", nodes}};
  if (spec.suite_b) params["delta_rows"] = rows;
  if (all_found) return {JobStatus::verified, witness, params};
  // Not finding a certificate is only a refutation when every search ran to
  // completion; the lemma itself is never claimed false by a budget.
  return {exhausted ? JobStatus::refuted : JobStatus::error, witness, params};
}

// Rebuilds each generated matroid and reapplies the recorded minor.
inline bool replay_lemma(const LemmaSpec& spec, const json& witness) {
  if (!witness.is_array() || witness.size() != spec.instances.size()) return false;
  for (const auto& entry : witness) {
    const auto& in = spec.instances.at(entry.at("instance").get<std::size_t>());
    for (const auto& c : entry.at("certificates")) {
      const std::size_t n = c.at("n"), j = c.at("delta_rows");
      BinaryMatroid m = lemma_matroid(spec, in, n, j);
      std::vector<Label> contract = c.at("contract").get<std::vector<Label>>();
      if (c.at("kind") == "rank4-points") {
        BinaryMatroid q = contract_labels(m, contract);
        if (q.rank() != 4 || simplify(q).matroid.size() < c.at("threshold").get<std::size_t>()) return false;
      } else if (c.at("kind") == "minor") {
        LabelMap map = label_map_from(c.at("mapping"));
        BinaryMatroid q = delete_labels(contract_labels(m, contract), c.at("delete").get<std::vector<Label>>());
        if (q.size() != map.size() || !equal_labeled(relabel(q, map), catalog(c.at("target")))) return false;
      } else {
        return false;
      }
    }
  }
  return true;
}

// ---- theorem jobs --------------------------------------------------------------

inline json excluded_json(const ExcludedMinorCheck& c) {
  json j{{"excluded", c.excluded}, {"member", c.member}};
  if (c.failing) j["failing"] = {{"label", *c.failing}, {"contraction", c.failing_is_contraction}};
  return j;
}

inline JobResult excluded_minors(const std::vector<std::string>& names, ClassKind k) {
  json params{{"class", to_string(k)}};
  bool ok = true;
  for (const auto& name : names) {
    auto c = check_excluded_minor(catalog(name), k);
    params[name] = excluded_json(c);
    ok = ok && c.excluded;
  }
  return verdict(ok, params);
}

inline JobResult theorem_blocking_pair() {
  json params;
  bool ok = true;
  BinaryMatroid pgl = named::pg32_minus_line();
  params["PG32_minus_L_member"] = in_blocking_pair_class(pgl);
  ok = ok && !params["PG32_minus_L_member"].get<bool>();
  std::size_t minors_in = 0;
  for (std::size_t p = 0; p < pgl.size(); ++p) {
    ElementSet s = ElementSet::of_positions(pgl.size(), {p});
    minors_in += in_blocking_pair_class(delete_elements(pgl, s));
    minors_in += in_blocking_pair_class(contract(pgl, s));
  }
  params["PG32_minus_L_single_minors_in_class"] = minors_in;
  ok = ok && minors_in == 2 * pgl.size();

  BinaryMatroid k6d = dual(named::mk(6));
  auto full = blocking_pair_membership(k6d);
  params["MK_dual6_member"] = full.member;
  params["MK_dual6_embedding_nodes"] = full.stats.nodes;
  ok = ok && !full.member;
  // All edges of K6 are equivalent, so one edge covers the single-element
  // minors. Deleting e from M*(K6) gives M*(K6/e), whose cosimplification is
  // M*(K5); contracting e gives M*(K6\e).
  const ElementSet e = ElementSet::of_positions(k6d.size(), {0});
  BinaryMatroid k6_con = delete_elements(k6d, e);
  BinaryMatroid cs = cosimplify(k6_con).matroid;
  bool cs_iso = isomorphic(cs, dual(named::mk(5))).has_value();
  bool cs_in = in_blocking_pair_class(cs), con_in = in_blocking_pair_class(k6_con);
  bool del_in = in_blocking_pair_class(contract(k6d, e));
  params["MK_dual6_delete_cosimplified_iso_MK_dual5"] = cs_iso;
  params["MK_dual5_in_class"] = cs_in;
  params["MK_dual6_delete_in_class"] = con_in;
  params["MK_dual6_contract_in_class"] = del_in;
  ok = ok && cs_iso && cs_in && con_in && del_in;
  return verdict(ok, params);
}

// Series coextension of X_r through the odd-loop column, checked together
// with its cosimplification; M*(K6/e) against M*(K5) as a second pair.
inline JobResult lemma_cosimplify() {
  json params = json::object();
  bool ok = true;
  for (std::size_t r = 3; r <= 6; ++r) {
    BitMatrix a = named::a_matrix(r);
    const std::size_t f = (r - 1) * (r - 2) / 2;  // first Y column: (1, 0, 0, ...)
    BitMatrix big(a.rows() + 1, a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.get(i, j)) big.set(i, j + 1);
    big.set(a.rows(), 0);
    big.set(a.rows(), f + 1);
    BinaryMatroid n(big);
    BinaryMatroid cs = cosimplify(n).matroid;
    bool in_n = in_blocking_pair_class(n), in_cs = in_blocking_pair_class(cs);
    params["X" + std::to_string(r) + "_series"] = {{"member", in_n}, {"cosimplified_member", in_cs}};
    ok = ok && in_n && in_cs;
  }
  BinaryMatroid k6c = delete_elements(dual(named::mk(6)), ElementSet::of_positions(15, {0}));
  bool a = in_blocking_pair_class(k6c), b = in_blocking_pair_class(cosimplify(k6c).matroid);
  params["MK_dual6_delete"] = {{"member", a}, {"cosimplified_member", b}};
  ok = ok && a == b && a;
  return verdict(ok, params);
}

// ---- identities and figures ----------------------------------------------------

inline const std::vector<std::string>& phi_c2_rows() {
  static const std::vector<std::string> rows = {"00011000000010", "00000000000101", "00101010101001",
                                                "00000110000010", "00000001100010", "10000000011001",
                                                "01010101010001"};
  return rows;
}

// The displayed matrix as an assembly of the two-element C template: the
// frame is the first twelve columns, each row's C entries are its Delta choice.
inline ConformSpec phi_c2_spec() {
  BitMatrix full = BitMatrix::from_strings(phi_c2_rows());
  ConformSpec s;
  s.frame = submatrix(full, iota_indices(7), iota_indices(12));
  for (std::size_t r = 0; r < 7; ++r) {
    BitVec d(2);
    d.set(0, full.get(r, 12));
    d.set(1, full.get(r, 13));
    s.delta_choices.push_back(d);
  }
  return s;
}

inline JobResult identity_phi_c2() {
  FrameTemplate t = template_catalog("PhiC2");
  ConformSpec s = phi_c2_spec();
  BitMatrix a = assemble(t, s);
  bool exact = a == BitMatrix::from_strings(phi_c2_rows());
  BinaryMatroid m = conform_matroid(t, s);
  auto iso = isomorphic(m, named::h12());
  bool same = equal_labeled(BinaryMatroid(m.rep()), named::h12());
  json params{{"assembly_matches_matrix", exact},
              {"contraction_equals_catalog", same},
              {"elements", m.size()},
              {"rank", m.rank()}};
  return verdict(exact && same && iso.has_value(), params, iso ? json{{"isomorphism", label_map_json(*iso)}} : json(nullptr));
}

inline bool replay_phi_c2(const json& w) {
  return replay_isomorphism(conform_matroid(template_catalog("PhiC2"), phi_c2_spec()), named::h12(),
                            w.at("isomorphism"));
}

inline JobResult identity_h12_figure() {
  BinaryMatroid fig = even_cycle_matroid(figures::load(figures::kH12));
  auto iso = isomorphic(fig, named::h12());
  json params{{"elements", fig.size()}, {"rank", fig.rank()}};
  return verdict(iso.has_value(), params, iso ? json{{"isomorphism", label_map_json(*iso)}} : json(nullptr));
}

inline bool replay_h12_figure(const json& w) {
  return replay_isomorphism(even_cycle_matroid(figures::load(figures::kH12)), named::h12(), w.at("isomorphism"));
}

inline JobResult figure_doubled_k4() {
  BinaryMatroid fig = even_cycle_matroid(figures::load(figures::kDoubledK4));
  bool eq = equal_labeled(fig, named::pg32_minus_line());
  return verdict(eq, {{"equal_labeled", eq}});
}

inline JobResult figure_blocking_pairs() {
  json witness, params;
  bool ok = true;
  auto one = [&](const char* key, const char* text, const BinaryMatroid& target) {
    SignedGraph sg = figures::load(text);
    auto iso = isomorphic(even_cycle_matroid(sg), target);
    auto bp = find_blocking_pair(sg);
    params[key] = {{"isomorphic", iso.has_value()}, {"blocking_pair", bp.has_value()}};
    if (iso && bp) witness[key] = {{"isomorphism", label_map_json(*iso)}, {"pair", {bp->first, bp->second}}};
    ok = ok && iso && bp;
  };
  one("MK_dual5", figures::kDualK5, dual(named::mk(5)));
  one("MK_dual6_minus_e", figures::kDualK6MinusEdge,
      dual(cycle_matroid(remove_edges(complete_graph(6), {{0, 1}}))));
  return verdict(ok, params, ok ? witness : json(nullptr));
}

// A blocking pair {u, v}: some resigning leaves every odd edge meeting u or v.
inline bool blocking_pair_holds(const SignedGraph& sg, std::size_t u, std::size_t v) {
  auto bp = find_blocking_pair(sg);
  if (!bp) return false;
  // The finder returns the first pair; any pair it accepts must be rechecked
  // under brute-force resigning of the other vertices.
  const std::size_t n = sg.graph.n_vertices;
  if (n > 20) return false;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    SignedGraph s = sg;
    for (std::size_t x = 0; x < n; ++x)
      if ((mask >> x) & 1u) s = resign(s, x);
    bool good = true;
    for (auto e : s.odd_edges) {
      auto [a, b] = s.graph.edges[e];
      if (a != u && a != v && b != u && b != v) good = false;
    }
    if (good) return true;
  }
  return false;
}

inline bool replay_figures(const json& w) {
  auto one = [&](const char* key, const char* text, const BinaryMatroid& target) {
    SignedGraph sg = figures::load(text);
    const auto& e = w.at(key);
    return replay_isomorphism(even_cycle_matroid(sg), target, e.at("isomorphism")) &&
           blocking_pair_holds(sg, e.at("pair").at(0), e.at("pair").at(1));
  };
  return one("MK_dual5", figures::kDualK5, dual(named::mk(5))) &&
         one("MK_dual6_minus_e", figures::kDualK6MinusEdge,
             dual(cycle_matroid(remove_edges(complete_graph(6), {{0, 1}}))));
}

// ---- formulas and cross-checks -------------------------------------------------

inline JobResult formula_xr() {
  json sizes = json::object();
  bool ok = true;
  FrameTemplate t = template_catalog("PhiY1");
  for (std::size_t r = 3; r <= 8; ++r) {
    BinaryMatroid m = largest_simple_conforming(t, r - 1);
    BinaryMatroid x = named::x(r);
    const std::size_t f = named::x_size_formula(r);
    bool iso = isomorphic(m, x).has_value();
    sizes[std::to_string(r)] = {{"generated", m.size()}, {"X_r", x.size()}, {"formula", f}, {"isomorphic", iso}};
    ok = ok && m.size() == f && x.size() == f && m.rank() == r && iso && is_simple(m);
  }
  return verdict(ok, {{"sizes", sizes}});
}

// Doubled K_r plus an odd loop, as a matrix: sign row over K_r's reduced
// incidence, each edge plain and odd, then the loop.
inline BinaryMatroid doubled_clique(std::size_t r) {
  BitMatrix f = named::clique_frame(r);
  const std::size_t e = f.cols();
  BitMatrix m(r, 2 * e + 1);
  for (std::size_t j = 0; j < e; ++j) {
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (f.get(i, j)) {
        m.set(i + 1, j);
        m.set(i + 1, e + j);
      }
    m.set(0, e + j);
  }
  m.set(0, 2 * e);
  return BinaryMatroid(m);
}

inline JobResult formula_maxsize() {
  json params = json::object();
  bool ok = true;
  for (std::size_t r = 3; r <= 5; ++r) {
    BinaryMatroid m = doubled_clique(r);
    const std::size_t want = r * r - r + 1;
    bool simple = is_simple(m), ec = is_even_cycle(m).member;
    // Every one-point extension inside PG(r-1, 2) must leave the class.
    BinaryMatroid pg = named::projective(r);
    std::set<std::string> have;
    for (std::size_t c = 0; c < m.size(); ++c) have.insert(m.column(c).str());
    std::size_t extensions = 0, extensions_in = 0;
    for (std::size_t c = 0; c < pg.size(); ++c) {
      BitVec v = pg.column(c);
      if (have.count(v.str())) continue;
      BitMatrix ext(r, m.size() + 1);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
          if (m.rep().get(i, j)) ext.set(i, j);
        if (v.get(i)) ext.set(i, m.size());
      }
      ++extensions;
      extensions_in += is_even_cycle(BinaryMatroid(ext)).member;
    }
    params[std::to_string(r)] = {{"size", m.size()},     {"formula", want},          {"simple", simple},
                                 {"even_cycle", ec},     {"extensions", extensions}, {"extensions_even_cycle", extensions_in}};
    ok = ok && m.size() == want && m.rank() == r && simple && ec && extensions_in == 0 &&
         extensions == pg.size() - m.size();
  }
  // The rank-4 negative case by name: PG(3,2)\e has 14 elements.
  bool pge = is_even_cycle(named::pg32_minus(1)).member;
  params["PG32_minus_e_even_cycle"] = pge;
  return verdict(ok && !pge, params);
}

inline JobResult graft_crosscheck() {
  rnd::Rng g(20241);
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    Graft gr = rnd::graft(g, 6, 10);
    if (!is_even_cut(graft_matroid(gr)).member) ++bad;
  }
  return verdict(bad == 0, {{"instances", 200}, {"failures", bad}, {"seed", 20241}});
}

inline JobResult duality_crosscheck() {
  rnd::Rng g(7331);
  FrameTemplate t = template_catalog("PhiY1");
  std::size_t bad_bp = 0, bad_cut = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = rnd::uniform(g, 1, 5);
    ConformSpec s = rnd::conform_spec(g, t, rows, rnd::uniform(g, 0, 8), rnd::uniform(g, 0, 6));
    BinaryMatroid m = conform_matroid(t, s);
    if (!in_blocking_pair_class(m)) ++bad_bp;
    if (!is_even_cut(dual(m)).member) ++bad_cut;
  }
  std::size_t bad_x = 0;
  for (std::size_t r = 2; r <= 5; ++r) bad_x += !is_even_cut(dual(named::x(r))).member;
  return verdict(bad_bp == 0 && bad_cut == 0 && bad_x == 0,
                 {{"instances", 100},
                  {"seed", 7331},
                  {"not_blocking_pair", bad_bp},
                  {"dual_not_even_cut", bad_cut},
                  {"X_r_duals_not_even_cut", bad_x}});
}

}  // namespace jobs

inline const std::vector<VerificationJob>& job_table() {
  static const std::vector<VerificationJob> table = [] {
    using namespace jobs;
    std::vector<VerificationJob> t;
    auto add = [&](VerificationJob j) { t.push_back(std::move(j)); };
    add({"thm-4.1", "Theorem 4.1", "PG(3,2)\\e and L11 are excluded minors for even-cycle matroids", Budget::fast,
         {"theorems"}, false, [] { return excluded_minors({"PG32_minus_e", "L11"}, ClassKind::even_cycle); }, {}});
    add({"thm-4.1-L19", "Theorem 4.1", "L19 is an excluded minor for even-cycle matroids", Budget::heavy,
         {"theorems"}, false, [] { return excluded_minors({"L19"}, ClassKind::even_cycle); }, {}});
    add({"thm-4.2", "Theorem 4.2", "M(K6) and H12* are excluded minors for even-cut matroids", Budget::fast,
         {"theorems"}, false, [] { return excluded_minors({"MK(6)", "H12_dual"}, ClassKind::even_cut); }, {}});
    add({"lemma-4.3", "Lemma 4.3", "blocking-pair membership agrees with the cosimplification", Budget::fast,
         {"theorems"}, false, lemma_cosimplify, {}});
    add({"thm-4.4", "Theorem 4.4", "PG(3,2)\\L and M*(K6) are excluded minors for the blocking-pair class",
         Budget::standard, {"theorems"}, false, theorem_blocking_pair, {}});
    for (const auto& spec : lemma_specs()) {
      const LemmaSpec* sp = &spec;
      add({spec.id, spec.anchor, std::string("stated minor in the largest conforming matroids: ") + to_string(spec.target),
           Budget::fast, {spec.suite_b ? "lemmas-B" : "lemmas-A"}, true, [sp] { return run_lemma(*sp); },
           [sp](const json& w) { return replay_lemma(*sp, w); }});
    }
    add({"phiC2-H12", "Section 8 example", "the displayed two-element C assembly contracts to H12", Budget::fast,
         {"lemmas-B"}, false, identity_phi_c2, replay_phi_c2});
    add({"h12-matrix", "Figure 2", "the drawn signed graph and the sign-row matrix give isomorphic H12",
         Budget::fast, {"lemmas-B"}, false, identity_h12_figure, replay_h12_figure});
    add({"fig-1", "Figure 1", "doubled K4 equals the PG(3,2)\\L matrix as a labeled matroid", Budget::fast,
         {"figures"}, false, figure_doubled_k4, {}});
    add({"fig-3", "Figure 3", "drawn representations of M*(K5), M*(K6\\e) have blocking pairs", Budget::fast,
         {"figures"}, false, figure_blocking_pairs, replay_figures});
    add({"formula-Xr", "Definition of X_r", "|X_r| = 3 + 3(r-2) + C(r-1,2) for r = 3..8", Budget::fast,
         {"formulas"}, false, formula_xr, {}});
    add({"formula-maxsize", "Theorem 4.1 proof", "largest simple even-cycle matroid of rank r has r^2-r+1 elements",
         Budget::fast, {"formulas"}, false, formula_maxsize, {}});
    add({"graft-crosscheck", "Graft matroids", "200 random grafts are even-cut", Budget::fast, {"formulas"}, false,
         graft_crosscheck, {}});
    add({"cor-duality", "Duals of blocking-pair matroids", "random blocking-pair assemblies have even-cut duals",
         Budget::fast, {"formulas"}, false, duality_crosscheck, {}});
    return t;
  }();
  return table;
}

inline const VerificationJob* find_job(const std::string& id) {
  for (const auto& j : job_table())
    if (j.id == id) return &j;
  return nullptr;
}

inline const std::vector<std::string>& suite_filters() {
  static const std::vector<std::string> f = {"all",      "fast",     "standard", "lemmas-A",
                                             "lemmas-B", "theorems", "formulas", "figures"};
  return f;
}

inline bool is_filter(const std::string& s) {
  const auto& f = suite_filters();
  return std::find(f.begin(), f.end(), s) != f.end();
}

inline bool job_matches(const VerificationJob& j, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "fast") return j.budget == Budget::fast;
  if (filter == "standard") return j.budget != Budget::heavy;
  return std::find(j.groups.begin(), j.groups.end(), filter) != j.groups.end();
}

struct RunOptions {
  bool heavy = false;   // run heavy jobs instead of skipping them
  bool timing = true;   // false: elapsed_ms = 0, for byte-identical reports
  std::size_t threads = 0;  // 0: MFORGE_THREADS or hardware concurrency
};

inline std::size_t worker_count(const RunOptions& o) {
  std::size_t n = o.threads;
  if (n == 0) {
    if (const char* env = std::getenv("MFORGE_THREADS")) {
      try {
        n = std::stoul(env);
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

inline VerificationReport run_job(const VerificationJob& j, const RunOptions& o = {}) {
  VerificationReport r;
  r.id = j.id;
  if (j.budget == Budget::heavy && !o.heavy) {
    r.status = JobStatus::skipped;
    r.params = {{"reason", "heavy job; rerun with the heavy budget"}};
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    JobResult res = j.run();
    r.status = res.status;
    r.witness = std::move(res.witness);
    r.params = std::move(res.params);
    if (r.status == JobStatus::verified && !r.witness.is_null() && j.replay && !j.replay(r.witness)) {
      r.status = JobStatus::error;
      r.params["replay"] = "witness failed replay";
    }
  } catch (const std::exception& e) {
    r.status = JobStatus::error;
    r.params = {{"error", e.what()}};
  }
  if (o.timing)
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline VerificationReport run_job(const std::string& id, const RunOptions& o = {}) {
  const VerificationJob* j = find_job(id);
  if (!j) throw Error(ErrorKind::unknown_name, "unknown job '" + id + "'");
  return run_job(*j, o);
}

// Reports come back in job-table order whatever order the workers finish in.
inline std::vector<VerificationReport> run_suite(const std::string& filter, const RunOptions& o = {}) {
  if (!is_filter(filter)) throw Error(ErrorKind::unknown_name, "unknown suite filter '" + filter + "'");
  std::vector<const VerificationJob*> selected;
  for (const auto& j : job_table())
    if (job_matches(j, filter)) selected.push_back(&j);
  std::vector<VerificationReport> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) out[i] = run_job(*selected[i], o);
  };
  const std::size_t n = std::min(worker_count(o), std::max<std::size_t>(selected.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

inline bool all_verified(const std::vector<VerificationReport>& rs) {
  for (const auto& r : rs)
    if (r.status != JobStatus::verified && r.status != JobStatus::skipped) return false;
  return true;
}

// Re-runs the existential witnesses of verified reports through the core modules.
inline bool replay_report(const VerificationReport& r) {
  if (r.status != JobStatus::verified) return true;
  const VerificationJob* j = find_job(r.id);
  if (!j) return false;
  if (!j->replay || r.witness.is_null()) return true;
  try {
    return j->replay(r.witness);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace mforge
