// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mforge/jobs.hpp"

namespace {

using namespace mforge;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
};

// Runs jobs one at a time so each gets its own wall time.
bool run_jobs(const std::vector<std::string>& ids, double per_job_limit, Outcome& out, bool heavy = false) {
  bool ok = true;
  RunOptions o;
  o.heavy = heavy;
  for (const auto& id : ids) {
    VerificationReport r = run_job(id, o);
    const double s = r.elapsed_ms / 1000.0;
    const bool good = r.status == JobStatus::verified && s < per_job_limit && replay_report(r);
    out.note << ' ' << id << '=' << to_string(r.status) << '(' << s << "s)";
    if (!good && r.status != JobStatus::verified) out.note << ' ' << r.params.dump();
    ok = ok && good;
  }
  return ok;
}

std::vector<std::string> group_ids(const std::string& g) {
  std::vector<std::string> ids;
  for (const auto& j : job_table())
    if (job_matches(j, g)) ids.push_back(j.id);
  return ids;
}

Outcome excluded_even_cycle() {
  Outcome o;
  o.pass = run_jobs({"thm-4.1"}, 300, o);
  o.pass = run_jobs({"thm-4.1-L19"}, 3600, o, true) && o.pass;
  return o;
}

Outcome excluded_even_cut() {
  Outcome o;
  o.pass = run_jobs({"thm-4.2"}, 600, o);
  return o;
}

Outcome blocking_pair_class() {
  Outcome o;
  auto t0 = Clock::now();
  o.pass = run_jobs({"thm-4.4", "fig-3"}, 900, o) && seconds_since(t0) < 900;
  return o;
}

Outcome size_formulas() {
  Outcome o;
  auto t0 = Clock::now();
  o.pass = run_jobs({"formula-maxsize", "formula-Xr"}, 60, o) && seconds_since(t0) < 60;
  return o;
}

Outcome lemma_suite(const std::string& group, std::size_t cap) {
  Outcome o;
  auto t0 = Clock::now();
  bool ok = true;
  std::size_t n = 0;
  for (const auto& id : group_ids(group)) {
    VerificationReport r = run_job(id);
    ++n;
    bool good = r.status == JobStatus::verified && r.elapsed_ms < 300000 && replay_report(r);
    if (r.params.contains("frame_sizes"))
      for (const auto& s : r.params["frame_sizes"]) good = good && !s.is_null() && s.get<std::size_t>() <= cap;
    if (!good) o.note << ' ' << id << '=' << to_string(r.status) << ' ' << r.params.dump();
    ok = ok && good;
  }
  const double total = seconds_since(t0);
  o.note << ' ' << n << " jobs in " << total << 's';
  o.pass = ok && total < 2700;
  return o;
}

Outcome identities() {
  Outcome o;
  o.pass = run_jobs({"phiC2-H12", "fig-1"}, 10, o);
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  auto t0 = Clock::now();
  rnd::Rng g(8001);
  std::size_t disagree = 0;
  for (int i = 0; i < 500; ++i) {
    BinaryMatroid m = rnd::matroid(g, 5, 10);
    disagree += is_graphic(m).member != is_graphic_reference(m);
  }
  o.note << " graphic disagreements=" << disagree << ';';
  o.pass = disagree == 0 && run_jobs({"graft-crosscheck", "cor-duality"}, 600, o) && seconds_since(t0) < 600;
  return o;
}

Outcome invariants() {
  Outcome o;
  auto t0 = Clock::now();
  rnd::Rng g(8011);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    SignedGraph sg = rnd::signed_graph(g, 8, 14);
    SignedGraph t = resign(sg, rnd::uniform(g, 0, sg.graph.n_vertices - 1));
    bad += !equal_labeled(even_cycle_matroid(sg), even_cycle_matroid(t));
  }
  o.note << " resign=" << bad;
  std::size_t bad_dual = 0;
  for (int i = 0; i < 500; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 12);
    BinaryMatroid d = dual(m);
    ElementSet s(m.size());
    for (std::size_t p = 0; p < m.size(); ++p)
      if (rnd::coin(g)) s.add(p);
    bad_dual += !equal_labeled(dual(d), m) || lambda_of(m, s) != lambda_of(d, s);
  }
  o.note << " duality=" << bad_dual;
  std::size_t bad_minor = 0;
  for (int i = 0; i < 200; ++i) {
    BinaryMatroid m = rnd::matroid(g, 6, 12);
    std::vector<Label> c, d;
    for (auto l : m.labels()) {
      const auto roll = rnd::uniform(g, 0, 3);
      if (roll == 0) c.push_back(l);
      if (roll == 1) d.push_back(l);
    }
    bad_minor += !equal_labeled(delete_labels(contract_labels(m, c), d), contract_labels(delete_labels(m, d), c));
  }
  o.note << " minors=" << bad_minor;
  std::size_t bad_rref = 0;
  for (int i = 0; i < 200; ++i) {
    BitMatrix m = rnd::matrix(g, rnd::uniform(g, 1, 12), rnd::uniform(g, 1, 18));
    Rref r = rref(m);
    bad_rref += r.pivots.size() != rank(m) || rank(m) != rank(m.transpose()) || !row_space_equal(r.matrix, m);
  }
  o.note << " rref=" << bad_rref;
  const double s = seconds_since(t0);
  o.note << " (" << s << "s)";
  o.pass = bad + bad_dual + bad_minor + bad_rref == 0 && s < 300;
  return o;
}

Outcome determinism() {
  Outcome o;
  RunOptions opts;
  opts.timing = false;
  auto dump = [&] {
    json a = json::array();
    for (const auto& r : run_suite("standard", opts)) a.push_back(to_json(r));
    return a.dump();
  };
  const std::string first = dump(), second = dump();
  o.note << ' ' << first.size() << " bytes";
  o.pass = first == second;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"excluded minors for even-cycle (PG32\\e, L11, L19 heavy)", excluded_even_cycle},
      {"excluded minors for even-cut (M(K6), H12*)", excluded_even_cut},
      {"blocking-pair class (PG32\\L, M*(K6), drawn signed graphs)", blocking_pair_class},
      {"size formulas r^2-r+1 and |X_r|", size_formulas},
      {"lemma suite A", [] { return lemma_suite("lemmas-A", kLemmaFrameCapA); }},
      {"lemma suite B", [] { return lemma_suite("lemmas-B", kLemmaFrameCapB); }},
      {"identity checks (two-element C assembly, doubled K4)", identities},
      {"oracle equivalences", oracle_equivalences},
      {"invariant suites", invariants},
      {"determinism of the standard suite", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " exception: " << e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << ';'
              << o.note.str() << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
