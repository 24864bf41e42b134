#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmaj/bijections.hpp"
#include "qmaj/text_io.hpp"
#include "qmaj/verify.hpp"

/* Acceptance suite: one pass/fail line per criterion, nonzero exit if
 * any fails.  Every bound (sizes, counts, wall-clock limits, expected
 * sequences) is pinned here, not configurable. */

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

int g_failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, passed ? "PASS" : "FAIL", detail.c_str());
  if (!passed) ++g_failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

qmaj::VerifyOptions with_threads(int t) {
  qmaj::VerifyOptions opt;
  opt.threads = t;
  return opt;
}

/* Independent inclusion-exclusion oracle for |D_n|. */
long long derangements_ie(int n) {
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  long long total = 0, term = fact;
  for (int k = 0; k <= n; ++k) {
    total += (k % 2 == 0) ? term : -term;
    if (k < n) term /= (k + 1);
  }
  return total;
}

void criterion1() {
  const auto t_serial = Clock::now();
  const auto serial = qmaj::verify_eq1(9, with_threads(1));
  const double serial_ms = ms_since(t_serial);

  const auto t_par = Clock::now();
  const auto parallel = qmaj::verify_eq1(9, with_threads(8));
  const double par_ms = ms_since(t_par);

  const bool ok = serial.passed && parallel.passed && serial_ms < 60000.0 && par_ms < 10000.0;
  std::ostringstream d;
  d << "eq1 n=9 over 362880 permutations: serial " << serial_ms << " ms (limit 60000), 8 threads "
    << par_ms << " ms (limit 10000)";
  report(1, ok, d.str());
}

void criterion2() {
  const std::vector<long long> expected{1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496};
  bool ok = true;
  std::string why;
  for (int n = 0; n <= 9 && ok; ++n) {
    const qmaj::QPoly brute = qmaj::q_derangement_bruteforce(n);
    const qmaj::QPoly formula = qmaj::q_derangement_formula(n);
    const qmaj::QPoly recurrence = qmaj::q_derangement_recurrence(n);
    if (!(brute == formula && formula == recurrence)) {
      ok = false;
      why = "coefficient arrays differ at n=" + std::to_string(n);
      break;
    }
    if (formula.eval_at_one() != expected[static_cast<std::size_t>(n)] ||
        formula.eval_at_one() != derangements_ie(n)) {
      ok = false;
      why = "value at q=1 differs at n=" + std::to_string(n);
    }
  }
  report(2, ok,
         ok ? "d_n(q) by brute force, formula, and recurrence identical for n <= 9; q=1 matches "
              "1,0,1,2,9,44,265,1854,14833,133496"
            : why);
}

void criterion3() {
  const auto t0 = Clock::now();
  const auto r = qmaj::verify_thm1(7, with_threads(0));
  const double ms = ms_since(t0);
  const bool ok = r.passed && r.params.at("permutations") == 5040 && ms < 5000.0;
  std::ostringstream d;
  d << "thm1 n=7: " << r.params.at("buckets") << " dp-buckets, sizes sum "
    << r.params.at("permutations") << " (= 5040), " << ms << " ms (limit 5000)";
  report(3, ok, d.str());
}

void criterion4() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 0; n <= 10; ++n) ok = ok && qmaj::verify_eq5(n).passed;
  const double ms = ms_since(t0);
  ok = ok && ms < 1000.0;
  std::ostringstream d;
  d << "eq5 ([n]! = sum_k [n k] d_k) exact for all n <= 10 in " << ms << " ms (limit 1000)";
  report(4, ok, d.str());
}

void criterion5() {
  bool ok = true;
  for (int n = 0; n <= 5; ++n) ok = ok && qmaj::verify_eq2(n, 12).passed;
  report(5, ok, "eq2 coefficient counts equal C(m+n-1, n-1) both ways for n <= 5, m <= 12");
}

void criterion6() {
  using qmaj::Partition;
  using qmaj::Permutation;
  bool ok = true;

  // sequence example: column sorting, then psi^{-1}
  const std::vector<int> a{3, 6, 8, 3, 1, 3, 6, 4, 8};
  const qmaj::LabeledPartition sorted = qmaj::sort_columns(a);
  ok = ok && sorted.mu == Partition({8, 8, 6, 6, 4, 3, 3, 3, 1});
  ok = ok && sorted.pi == Permutation::from_one_line({3, 9, 2, 7, 8, 1, 4, 6, 5});
  ok = ok && qmaj::psi_inv(sorted) == Partition({5, 5, 4, 4, 2, 2, 2, 2, 1});
  ok = ok && qmaj::sort_columns_inv(sorted) == a;

  // decomposition example: psi, phi, psi^{-1} chain
  const Partition lambda({5, 4, 4, 4, 4, 3, 2});
  const Permutation pi = Permutation::from_one_line({5, 2, 1, 4, 7, 3, 6});
  const qmaj::LabeledPartition m = qmaj::psi(lambda, pi);
  ok = ok && m.mu == Partition({8, 6, 5, 5, 5, 3, 2});
  const qmaj::Decomposition dec = qmaj::phi_decompose(m);
  ok = ok && dec.beta == Partition({8, 5, 5, 3, 2}) && dec.gamma == Partition({6, 5}) &&
       dec.sigma == Permutation::from_one_line({3, 1, 5, 2, 4});
  const Partition alpha = qmaj::psi_inv(qmaj::LabeledPartition(dec.beta, dec.sigma));
  ok = ok && alpha == Partition({6, 4, 4, 3, 2});

  // two-step insertion with the printed intermediate state
  qmaj::PhiInsertTrace trace;
  const qmaj::LabeledPartition back = qmaj::phi_insert(dec, &trace);
  ok = ok && back == m && trace.steps.size() == 2;
  ok = ok &&
       trace.steps[0] == qmaj::LabeledPartition(Partition({8, 6, 5, 5, 3, 2}),
                                                Permutation::from_one_line({4, 2, 1, 6, 3, 5}));
  report(6, ok, "worked-example chains reproduced bit-exactly, including the intermediate state");
}

long long g_roundtrip_insertions = 0;

void criterion7() {
  bool ok = true;
  long long instances = 0;
  qmaj::VerifyOptions opt;  // seed 42
  for (int n = 0; n <= 6; ++n) {
    const auto r = qmaj::verify_roundtrips(n, 200, opt);
    ok = ok && r.all_passed();
    instances += r.psi.params.at("instances");
    g_roundtrip_insertions += r.psi.params.at("insertions");
  }
  std::ostringstream d;
  d << "psi and phi round trips plus the weight chain, n <= 6 with 200 seeded partitions each: "
    << instances << " instances, zero failures";
  report(7, ok, d.str());
}

void criterion8() {
  // phi_insert asserts a unique step-(3) position on every insertion and
  // throws otherwise, which criterion 7 would have reported as a failure;
  // here we confirm the suites actually exercised it.
  const bool ok = g_roundtrip_insertions > 0;
  std::ostringstream d;
  d << g_roundtrip_insertions
    << " insertions performed across the suites, each with exactly one admissible position";
  report(8, ok, d.str());
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion9() {
  const std::string base = std::string(QMAJ_CLI_PATH) + " --json verify thm1 --n 7";
  const int rc1 =
      std::system((base + " --threads 1 >acc_t1.tmp 2>/dev/null").c_str());
  const int rc8 =
      std::system((base + " --threads 8 >acc_t8.tmp 2>/dev/null").c_str());
  bool ok = rc1 != -1 && rc8 != -1 && WIFEXITED(rc1) && WEXITSTATUS(rc1) == 0 && WIFEXITED(rc8) &&
            WEXITSTATUS(rc8) == 0;
  std::string detail = "CLI runs failed";
  if (ok) {
    json a = json::parse(slurp("acc_t1.tmp"));
    json b = json::parse(slurp("acc_t8.tmp"));
    ok = a.contains("elapsed_ms") && b.contains("elapsed_ms");
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    ok = ok && a.dump() == b.dump();
    detail = ok ? "thm1 n=7 reports byte-identical for --threads 1 and --threads 8 (elapsed_ms, "
                  "the wall-clock field, excluded)"
                : "reports differ between thread counts";
  }
  std::remove("acc_t1.tmp");
  std::remove("acc_t8.tmp");
  report(9, ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
