// Acceptance runner: `acceptance [criterion...]`, all nine when no argument.
// Prints detail lines, then one "criterion N: PASS|FAIL" line per criterion.
// Exit status is nonzero when any requested criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "qseries/claims.hpp"
#include "qseries/kernels.hpp"
#include "qseries/mocktheta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/qproducts.hpp"

using namespace qseries;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  bool ok = true;
  void line(bool pass, const std::string& what) {
    std::printf("  [%s] %s\n", pass ? "ok" : "FAIL", what.c_str());
    ok = ok && pass;
  }
  void info(const std::string& what) { std::printf("  [info] %s\n", what.c_str()); }
};

std::string describe(const VerificationReport& r) {
  std::string s = r.id + " " + std::string(status_name(r.status)) + " order=" + std::to_string(r.order);
  if (r.first_failure) {
    s += " first failure n=" + std::to_string(r.first_failure->n) + " (" + r.first_failure->lhs + " vs " +
         r.first_failure->rhs + ")";
  }
  if (!r.message.empty()) s += " [" + r.message + "]";
  char t[32];
  std::snprintf(t, sizeof t, " %.2fs", r.elapsed_ms / 1000.0);
  return s + t;
}

const Claim& claim(const char* id) {
  const Claim* c = find_claim(id);
  if (!c) {
    std::fprintf(stderr, "registry lacks %s\n", id);
    std::exit(3);
  }
  return *c;
}

// Runs a claim; passes only on PASS within the time limit.
void run_claim(Criterion& cr, const char* id, Overrides ov, double limit_s) {
  const auto rep = verify(claim(id), ov);
  const bool fast = rep.elapsed_ms / 1000.0 < limit_s;
  cr.line(rep.status == Status::PASS && fast, describe(rep) + (fast ? "" : " (over time limit)"));
}

bool c1() {
  Criterion cr;
  struct Item {
    const char* id;
    std::int64_t order;
  };
  const Item items[] = {
      {"thm3.1", 500},          {"eq3.2", 400},          {"eq3.3", 300},          {"thm4.1", 500},
      {"eq4.s14", 400},         {"eq5.b6", 500},         {"thm5.1", 500},         {"eq5.b2", 400},
      {"eq5.b5", 300},          {"eq6.l2", 400},         {"eq6.l3", 400},         {"eq6.l4", 400},
      {"lemma2.4a", 500},       {"lemma2.4b", 500},      {"lemma2.4c", 500},      {"eq2.phi", 400},
      {"eq2.psi", 400},         {"eq2.f", 400},          {"eq2.phineg", 400},     {"eq2.jacobi", 400},
      {"eq2.triple-phi", 400},  {"eq2.triple-psi", 400}, {"eq2.triple-f", 400},   {"eq2.triple-f15", 400},
  };
  for (const auto& it : items) run_claim(cr, it.id, {it.order, std::nullopt}, 10.0);
  // not part of the verdict: the repaired statements
  for (const char* id : {"thm5.1-corrected", "eq5.b5-corrected", "eq6.l4-corrected"}) {
    cr.info(describe(verify(claim(id))));
  }
  return cr.ok;
}

bool c2() {
  Criterion cr;
  for (const char* id : {"lemma2.1-p3", "lemma2.1-p5", "lemma2.1-p7", "lemma2.2-p5", "lemma2.2-p7", "lemma2.2-p11",
                         "lemma2.3-p3", "lemma2.3-p5", "lemma2.3-p7"}) {
    run_claim(cr, id, {300, std::nullopt}, 10.0);
  }
  const std::int64_t N = 300;
  struct L {
    DissectionLemma lemma;
    const char* name;
    std::vector<long> primes;
  };
  for (const auto& l : {L{DissectionLemma::kPsi, "psi", {3, 5, 7}}, L{DissectionLemma::kEta, "l1", {5, 7, 11}},
                        L{DissectionLemma::kEtaCubed, "l1^3", {3, 5, 7}}}) {
    for (long p : l.primes) {
      const std::int64_t r = dissection_residue(l.lemma, p);
      const bool same = extract_ap(dissection_lhs(l.lemma, N), p, r) == extract_ap(dissection_tail(l.lemma, p, N), p, r);
      const bool excl = dissection_exclusion_holds(l.lemma, p);
      cr.line(same && excl, std::string(l.name) + " p=" + std::to_string(p) + ": residue " + std::to_string(r) +
                                " class is the last term alone" + (excl ? "" : " (other prefactors hit it)"));
    }
  }
  return cr.ok;
}

bool c3() {
  Criterion cr;
  run_claim(cr, "thm3.3i", {std::nullopt, 150}, 10.0);
  run_claim(cr, "thm5.3", {std::nullopt, 100}, 10.0);
  for (const char* id : {"ramanujan.p5", "ramanujan.p7", "ramanujan.p11"}) run_claim(cr, id, {std::nullopt, 150}, 10.0);
  run_claim(cr, "remark3.6", {std::nullopt, 300}, 10.0);
  for (const char* id : {"binom.lm1-1-1-2", "binom.lm1-1-1-3", "binom.lm1-1-2-3", "binom.lm1-2-1-5", "binom.lm1-3-1-7",
                         "binom.lm2-1", "binom.lm2-2", "binom.lm2-3"}) {
    run_claim(cr, id, {}, 10.0);
  }
  return cr.ok;
}

bool c4() {
  Criterion cr;
  run_claim(cr, "thm3.3ii-p5", {std::nullopt, 10}, 10.0);
  run_claim(cr, "thm3.3ii-p7", {std::nullopt, 10}, 10.0);
  run_claim(cr, "thm3.3iii-p5", {std::nullopt, 5}, 10.0);
  run_claim(cr, "thm4.3-p5", {std::nullopt, 10}, 10.0);
  run_claim(cr, "thm3.3ii-p5-a1", {std::nullopt, 1}, 60.0);
  return cr.ok;
}

bool c5() {
  Criterion cr;
  for (const char* id : {"thm3.2", "thm4.2", "thm5.2", "thm6.1"}) run_claim(cr, id, {201, 26}, 10.0);
  return cr.ok;
}

bool c6() {
  Criterion cr;
  for (const char* id : {"thm3.4", "thm3.5", "thm4.4", "thm5.4", "thm5.5", "thm5.6", "thm6.2", "thm6.3", "thm6.4"}) {
    const Claim& c = claim(id);
    run_claim(cr, id, {300, std::nullopt}, 10.0);
    if (!c.direct) {
      cr.line(false, std::string(id) + " has no direct route");
      continue;
    }
    // the two routes side by side, whatever the verdict
    const std::int64_t bound = c.direct_bound;
    const auto sums = c.direct(bound);
    const auto l = eval_expr(*c.lhs, bound + 1), r = eval_expr(*c.rhs, bound + 1);
    std::int64_t series_bad = -1, direct_bad = -1, cross_bad = -1;
    for (std::int64_t n = 0; n <= bound; ++n) {
      const auto& [dl, dr] = sums[static_cast<std::size_t>(n)];
      if (series_bad < 0 && l.coeff(n) != r.coeff(n)) series_bad = n;
      if (direct_bad < 0 && dl != dr) direct_bad = n;
      if (cross_bad < 0 && (dl != l.coeff(n) || dr != r.coeff(n))) cross_bad = n;
    }
    auto at = [](std::int64_t n) { return n < 0 ? std::string("agree") : "differ at n=" + std::to_string(n); };
    cr.info(std::string(id) + " n<=" + std::to_string(bound) + ": series sides " + at(series_bad) + ", direct sides " +
            at(direct_bad) + ", routes " + at(cross_bad));
  }
  return cr.ok;
}

bool c7() {
  Criterion cr;
  {
    const auto rec = partition_numbers(301);
    const auto ser = invert(eta(1, 301));
    bool ok = true;
    for (std::int64_t n = 0; n <= 300; ++n) ok = ok && rec[static_cast<std::size_t>(n)] == ser.coeff(n);
    for (std::int64_t n = 0; n <= 40; ++n) ok = ok && oracle::p(n) == ser.coeff(n);
    cr.line(ok, "p(n): recurrence = series for n<=300, = enumeration for n<=40");
  }
  {
    const auto o = overpartition_r(1, 26), d = p_rd(2, 26), a4 = regular4(26);
    bool oo = true, dd = true, aa = true;
    for (std::int64_t n = 0; n <= 25; ++n) {
      oo = oo && o.coeff(n) == oracle::overpartitions(n);
      dd = dd && d.coeff(n) == oracle::distinct_r(2, n);
      aa = aa && a4.coeff(n) == oracle::regular4(n);
    }
    cr.line(oo, "overpartitions: series = enumeration for n<=25");
    cr.line(dd, "2-colour distinct partitions: series = enumeration for n<=25");
    cr.line(aa, "4-regular partitions: series = enumeration for n<=25");
  }
  for (auto id : kAllMockThetaIds) {
    const auto s = mock_series(id, 100);
    const auto o = oracle::mock_direct(id, 100);
    bool ok = true;
    for (std::int64_t n = 0; n < 100; ++n) ok = ok && s.coeff(n) == o[static_cast<std::size_t>(n)];
    cr.line(ok, std::string(mock_name(id)) + ": incremental = term-by-term oracle to order 100");
  }
  return cr.ok;
}

bool c8() {
  Criterion cr;
  int total = 0;
  for (const auto& r : {props::ring_laws(1, 150), props::extract_roundtrip(2, 250), props::truncation_stability(3, 250),
                        props::parser_roundtrip(4, 400)}) {
    total += r.cases;
    cr.line(r.failures == 0, r.name + ": " + std::to_string(r.cases) + " cases" +
                                 (r.failures ? ", " + std::to_string(r.failures) + " failed, first " + r.first : ""));
  }
  cr.line(total >= 1000, std::to_string(total) + " cases in total");
  return cr.ok;
}

bool c9() {
  Criterion cr;
  auto t0 = Clock::now();
  const auto reps = verify_all(registry());
  const double all_s = seconds_since(t0);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : reps) (r.status == Status::PASS ? pass : r.status == Status::FAIL ? fail : skip)++;
  char buf[160];
  std::snprintf(buf, sizeof buf, "verify all: %zu claims in %.2fs (%d pass, %d fail, %d skipped), limit 300s", reps.size(),
                all_s, pass, fail, skip);
  cr.line(all_s < 300.0, buf);

  t0 = Clock::now();
  const auto q = eta_quotient({{1, -3}, {2, 5}, {3, 2}, {4, -2}, {6, 1}, {12, 3}}, 1000);
  const double eq_s = seconds_since(t0);
  std::snprintf(buf, sizeof buf, "eta quotient with six factors to order 1000: %.3fs, limit 2s", eq_s);
  cr.line(eq_s < 2.0 && q.order() == 1000, buf);
  return cr.ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9};
  std::vector<int> want;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > 9) {
      std::fprintf(stderr, "usage: %s [1-9...]\n", argv[0]);
      return 2;
    }
    want.push_back(k);
  }
  if (want.empty()) want = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  bool ok = true;
  for (int k : want) {
    std::printf("criterion %d\n", k);
    std::fflush(stdout);
    const bool pass = all[static_cast<std::size_t>(k - 1)]();
    std::printf("criterion %d: %s\n", k, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
