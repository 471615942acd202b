// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Heavier than the unit tests by design; budget a few
// minutes on a small machine.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "forge/audit.hpp"
#include "forge/beiter.hpp"
#include "forge/constants.hpp"
#include "forge/cyclotomic.hpp"
#include "forge/report.hpp"
#include "forge/ternary.hpp"

using namespace forge;

namespace {

constexpr double kRefC1 = 0.249029016616718;
constexpr double kRefC2 = 0.597771234896174;
constexpr double kRefPrimeSum = 0.77315666904975;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& fn) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %2d (%s, %.1fs): %s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(),
              secs, out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

Outcome from_check(const CheckResult& r) { return {r.ok, r.detail}; }

}  // namespace

int main() {
  const unsigned threads = default_thread_count();
  AuditConfig cfg;  // spec defaults: exhaustive 2e5, 1e4 samples <= 1e8, 500 Kaplan
  cfg.threads = threads;

  criterion(1, "constants", [] {
    auto start = std::chrono::steady_clock::now();
    CertifiedValue c1 = compute_c1(1e-12);
    CertifiedValue s = prime_reciprocal_sum_zeta(1e-12);
    CertifiedValue c2 = compute_c2(1e-12);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double d1 = std::abs(c1.value - kRefC1);
    double ds = std::abs(s.value - kRefPrimeSum);
    double d2 = std::abs(c2.value - kRefC2);
    bool ok = d1 <= 1e-12 && ds <= 1e-12 && d2 <= 1e-12 && secs < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "|dC1|=%.2g |dS|=%.2g |dC2|=%.2g in %.2fs", d1, ds, d2, secs);
    return Outcome{ok, buf};
  });

  criterion(2, "golden coefficients", [&] {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = check_golden_coefficients(threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) return Outcome{false, "scan exceeded one minute"};
    return from_check(r);
  });

  criterion(3, "identity suite n <= 1e4",
            [&] { return from_check(check_identity_suite(10'000, threads)); });

  criterion(4, "optimality criterion == direct height",
            [&] { return from_check(check_optimality_agreement(cfg)); });

  criterion(5, "Bachman/Bzdega bound soundness",
            [&] { return from_check(check_bound_soundness(cfg)); });

  criterion(6, "GB/BB closed-form cardinalities",
            [&] { return from_check(check_pair_cardinalities(200, threads)); });

  criterion(7, "Kaplan flatness on 500 samples", [&] {
    CheckResult r = check_kaplan_flatness(500, cfg.kaplan_n_cap, cfg.seed, threads);
    if (r.ok && r.detail.substr(0, 4) != "500 ")
      return Outcome{false, "sample pool smaller than 500: " + r.detail};
    return from_check(r);
  });

  criterion(8, "counting oracles + ternary identity", [&] {
    CheckResult a = check_counting_oracles({1'000, 10'000, 100'000}, threads);
    CheckResult b = check_ternary_identity({1'000, 10'000, 100'000});
    if (!a.ok) return from_check(a);
    if (!b.ok) return from_check(b);
    return Outcome{true, a.detail + "; " + b.detail};
  });

  criterion(9, "asymptotic trend report", [&] {
    const std::vector<u64> xs = {1'000'000, 10'000'000, 100'000'000, 1'000'000'000};
    std::printf("    %-12s %-12s %-10s %-12s %-10s %-12s %-10s %s\n", "x", "N_T", "ratio_NT",
                "|T|", "ratio_T", "|T_1|", "ratio_T1", "|T|/N_T");
    double prev_frac = 1.0;
    bool decreasing = true;
    for (u64 x : xs) {
      CountReport nt = count_ternary(x, ConstraintSpec::unconstrained(), threads);
      CountReport t = count_ternary(x, ConstraintSpec::coefficient_optimal(), threads);
      CountReport ta = count_ternary(x, ConstraintSpec::residue_mod_pq(1), threads);
      double frac = static_cast<double>(t.count) / static_cast<double>(nt.count);
      std::printf("    %-12llu %-12llu %-10.4f %-12llu %-10.4f %-12llu %-10.4f %.6f\n",
                  static_cast<unsigned long long>(x),
                  static_cast<unsigned long long>(nt.count), nt.ratio,
                  static_cast<unsigned long long>(t.count), t.ratio,
                  static_cast<unsigned long long>(ta.count), ta.ratio, frac);
      if (frac >= prev_frac) decreasing = false;
      prev_frac = frac;
    }
    CountReport nt7 = count_ternary(10'000'000, ConstraintSpec::unconstrained(), threads);
    CountReport bb =
        count_ternary(10'000'000, ConstraintSpec::pair_set_mod_p(beiter_pair_predicate()), threads);
    double bb_frac = static_cast<double>(bb.count) / static_cast<double>(nt7.count);
    std::printf("    BB-certified fraction at 1e7: %.6f (asymptotic target 25/27 = %.6f)\n",
                bb_frac, 25.0 / 27.0);
    char buf[120];
    std::snprintf(buf, sizeof(buf), "|T|/N_T decreasing: %s; densities reported above",
                  decreasing ? "yes" : "NO");
    return Outcome{decreasing, buf};
  });

  criterion(10, "1e9 performance and thread determinism", [&] {
    auto start = std::chrono::steady_clock::now();
    u64 multi = count_ternary(1'000'000'000, ConstraintSpec::unconstrained(), threads).count;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    u64 single = count_ternary(1'000'000'000, ConstraintSpec::unconstrained(), 1).count;
    u64 dual = count_ternary(1'000'000'000, ConstraintSpec::unconstrained(), 2).count;
    bool ok = multi == single && multi == dual && secs < 300.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "N_T(1e9) = %llu in %.1fs with %u threads; single/dual-thread runs agree: %s",
                  static_cast<unsigned long long>(multi), secs, threads,
                  (multi == single && multi == dual) ? "yes" : "NO");
    return Outcome{ok, buf};
  });

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criterion/criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
