#include "forge/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "forge/beiter.hpp"
#include "forge/cyclotomic.hpp"
#include "forge/primes.hpp"
#include "forge/ternary.hpp"

namespace forge {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

CheckResult make_result(const std::string& name, const Timer& timer, u64 violations,
                        const std::string& ok_detail,
                        const std::string& first_failure = "") {
  CheckResult r;
  r.name = name;
  r.ok = violations == 0;
  r.seconds = timer.seconds();
  r.detail = r.ok ? ok_detail
                  : std::to_string(violations) + " violation(s); first: " + first_failure;
  return r;
}

// Failure collector usable from parallel sections.
struct Failures {
  std::atomic<u64> count{0};
  std::mutex mu;
  std::string first;
  void add(const std::string& what) {
    if (count.fetch_add(1) == 0) {
      std::lock_guard lock(mu);
      first = what;
    }
  }
};

std::string tstr(const TernaryTriple& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

}  // namespace

CheckResult check_identity_suite(u64 n_max, unsigned threads) {
  Timer timer;
  std::vector<u64> phi_table = euler_phi_table(n_max);
  Failures fail;
  parallel_for(1, n_max + 1, threads, [&](u64 n) {
    IntegerPolynomial phi = cyclotomic_coeffs(n);
    IntegerPolynomial psi = inverse_cyclotomic_coeffs(n);
    if (phi.degree() != static_cast<i64>(phi_table[n]))
      fail.add("deg Phi_" + std::to_string(n));
    if (psi.degree() != static_cast<i64>(n - phi_table[n]))
      fail.add("deg Psi_" + std::to_string(n));
    if (n > 1 && !phi.palindromic()) fail.add("palindromy at n=" + std::to_string(n));
    if (!product_is_x_pow_n_minus_1(phi, psi, n))
      fail.add("Phi*Psi != x^n-1 at n=" + std::to_string(n));
  });
  return make_result("identity-suite", timer, fail.count,
                     "Phi*Psi, degrees, palindromy for n <= " + std::to_string(n_max), fail.first);
}

CheckResult check_golden_coefficients(unsigned threads) {
  Timer timer;
  Failures fail;
  if (cyclotomic_coeffs(105).coeff(7) != -2) fail.add("a_105(7) != -2");
  parallel_for(2, 105, threads, [&](u64 n) {
    if (cyclotomic_coeffs(n).height() != 1)
      fail.add("h(Phi_" + std::to_string(n) + ") != 1");
  });
  parallel_for(1, 561, threads, [&](u64 n) {
    if (inverse_cyclotomic_coeffs(n).height() > 1)
      fail.add("h(Psi_" + std::to_string(n) + ") > 1");
  });
  if (inverse_cyclotomic_coeffs(561).height() != 2) fail.add("h(Psi_561) != 2");
  return make_result("golden-coefficients", timer, fail.count,
                     "a_105(7) = -2, h(Phi_n) = 1 for n <= 104, h(Psi_n) <= 1 for n <= 560, "
                     "h(Psi_561) = 2",
                     fail.first);
}

CheckResult check_optimality_agreement(const AuditConfig& cfg) {
  Timer timer;
  Failures fail;
  std::vector<TernaryTriple> triples =
      collect_ternary(cfg.exhaustive_cap, ConstraintSpec::unconstrained());
  u64 exhaustive = triples.size();
  parallel_for(0, triples.size(), cfg.threads, [&](u64 i) {
    const TernaryTriple& t = triples[i];
    u64 fast_h = ternary_inverse_height(t.p, t.q, t.r);
    bool criterion = is_coefficient_optimal_criterion(t);
    if (criterion != (fast_h == t.p - 1)) fail.add("criterion/direct split at " + tstr(t));
    // dense-kernel cross-check of the windowed height on the cheap range
    if (t.n <= 20'000 && fast_h != inverse_cyclotomic_coeffs(t.n).height())
      fail.add("windowed height != dense height at " + tstr(t));
  });
  std::vector<TernaryTriple> samples =
      sample_ternary_triples(cfg.optimality_sample_cap, cfg.optimality_samples, cfg.seed);
  parallel_for(0, samples.size(), cfg.threads, [&](u64 i) {
    const TernaryTriple& t = samples[i];
    if (is_coefficient_optimal_criterion(t) != is_coefficient_optimal_direct(t))
      fail.add("criterion/direct split at sampled " + tstr(t));
  });
  return make_result("optimality-agreement", timer, fail.count,
                     std::to_string(exhaustive) + " exhaustive + " +
                         std::to_string(samples.size()) + " sampled triples agree",
                     fail.first);
}

CheckResult check_bound_soundness(const AuditConfig& cfg) {
  Timer timer;
  Failures fail;
  std::vector<TernaryTriple> triples =
      collect_ternary(cfg.exhaustive_cap, ConstraintSpec::unconstrained());
  PairSetPredicate bb = beiter_pair_predicate();
  auto scan_one = [&](const TernaryTriple& t) {
    IntegerPolynomial phi = cyclotomic_coeffs(t.n);
    try {
      check_bounds_on_poly(t, phi);
    } catch (const TheoremViolation& e) {
      fail.add(e.what());
      return;
    }
    // range and neighbor-difference from the same coefficient pass
    i64 lo = phi.min_coeff(), hi = phi.max_coeff();
    std::vector<char> seen(static_cast<size_t>(hi - lo + 1), 0);
    i64 prev = 0;
    bool neighbor_ok = true;
    for (i64 v : phi.coeffs()) {
      seen[static_cast<size_t>(v - lo)] = 1;
      if (std::abs(v - prev) > 1) neighbor_ok = false;
      prev = v;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
      fail.add("range check at " + tstr(t));
    if (!neighbor_ok) fail.add("neighbor diff at " + tstr(t));
    // certified-set soundness: BB membership of the inverse-residue pair
    // must force the corrected Beiter bound
    if (bb.member(t.p, t.q % t.p, t.r % t.p) &&
        !corrected_beiter_holds_height(t.p, phi.height()))
      fail.add("BB-certified triple breaks 2p/3 at " + tstr(t));
  };
  parallel_for(0, triples.size(), cfg.threads, [&](u64 i) { scan_one(triples[i]); });
  std::vector<TernaryTriple> samples =
      sample_ternary_triples(cfg.bound_sample_cap, cfg.bound_samples, cfg.seed + 1);
  parallel_for(0, samples.size(), cfg.threads, [&](u64 i) { scan_one(samples[i]); });
  return make_result("bound-soundness", timer, fail.count,
                     "GBmain bounds, range, neighbor-diff, BB soundness on " +
                         std::to_string(triples.size()) + " + " +
                         std::to_string(samples.size()) + " triples",
                     fail.first);
}

CheckResult check_pair_cardinalities(u64 p_max, unsigned threads) {
  Timer timer;
  Failures fail;
  std::vector<u64> ps;
  for_each_prime(p_max, [&](u64 p) {
    if (p >= 5) ps.push_back(p);
  });
  parallel_for(0, ps.size(), threads, [&](u64 i) {
    u64 p = ps[i];
    if (gb_set_size(p) != n_gb_closed(p)) fail.add("N_GB mismatch at p=" + std::to_string(p));
    if (bb_set_size(p) != n_bb_closed(p)) fail.add("N_BB mismatch at p=" + std::to_string(p));
    if (beiter_pair_set(p).size != n_bb_closed(p))
      fail.add("inverse-pair cardinality mismatch at p=" + std::to_string(p));
  });
  const u64 big_p = 10'007;
  u64 brute = bb_set_size(big_p);
  if (brute != n_bb_closed(big_p)) fail.add("N_BB mismatch at p=10007");
  double density = static_cast<double>(brute) / (static_cast<double>(big_p) * big_p);
  double target = 25.0 / 27.0;
  if (std::abs(density - target) > 0.01 * target) fail.add("N_BB(10007)/p^2 off 25/27 by >1%");
  std::ostringstream ok;
  ok << "closed forms match for 5 <= p <= " << p_max << "; N_BB(10007)/p^2 = " << density;
  return make_result("pair-cardinalities", timer, fail.count, ok.str(), fail.first);
}

CheckResult check_kaplan_flatness(u64 samples, u64 n_cap, u64 seed, unsigned threads) {
  Timer timer;
  Failures fail;
  // candidate pool: p < q odd primes, r = k*pq +- 1 prime, pqr <= n_cap
  std::vector<TernaryTriple> pool;
  PrimeTable small = sieve_primes(isqrt(n_cap) + 1);
  for (size_t i = 0; i < small.primes.size(); ++i) {
    u64 p = small.primes[i];
    if (p < 3) continue;
    for (size_t j = i + 1; j < small.primes.size(); ++j) {
      u64 q = small.primes[j];
      u64 pq = p * q;
      if (pq * (pq - 1) > n_cap) break;
      for (u64 k = 1; k * pq + 1 <= n_cap / pq; ++k) {
        for (i64 sign : {-1, 1}) {
          u64 r = k * pq + sign;
          if (r <= q || r > n_cap / pq) continue;
          if (is_prime(r)) pool.push_back(TernaryTriple{p, q, r, pq * r});
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > samples) pool.resize(samples);
  parallel_for(0, pool.size(), threads, [&](u64 i) {
    if (!is_flat_cyclotomic(pool[i].n)) fail.add("Phi not flat at " + tstr(pool[i]));
  });
  return make_result("kaplan-flatness", timer, fail.count,
                     std::to_string(pool.size()) + " triples with r = +-1 mod pq all flat",
                     fail.first);
}

namespace {

// Brute-force counting oracle: factor every n <= x via a least-prime-factor
// sieve and test each constraint family straight from its definition. This
// deliberately re-derives the BB membership rule instead of calling into
// beiter.*.
struct OracleCounts {
  u64 unconstrained = 0;
  u64 coeff_optimal = 0;
  u64 mod_pq_1 = 0;
  u64 mod_pq_m1 = 0;
  u64 mod_pq_7 = 0;
  u64 pair_set_bb = 0;
  u64 crypto_gap = 0;
};

bool oracle_bb_member(u64 p, u64 q, u64 r) {
  if (p == 3) return true;
  auto inv = [&](u64 v) { return mod_inverse(v, p); };  // mod_inverse is pure Euclid
  u64 j = inv(q % p), k = inv(r % p);
  u64 alpha = std::min({j, k, p - j, p - k});
  u64 delta = std::min(std::max(j, k), std::max(p - j, p - k));
  u64 d1 = std::min(delta, p - delta);
  u64 bb = std::min(2 * alpha + d1, p - d1);
  return 3 * bb <= 2 * p;
}

OracleCounts oracle_counts(u64 x, const std::vector<u32>& lpf) {
  OracleCounts c;
  for (u64 n = 105; n <= x; ++n) {
    // unpack the factorization; want three distinct odd primes, exponent 1
    u64 m = n;
    u64 pr[3];
    int w = 0;
    bool ok = true;
    while (m > 1 && ok) {
      u64 p = lpf[m];
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e != 1 || w == 3) {
        ok = false;
        break;
      }
      pr[w++] = p;
    }
    if (!ok || w != 3 || pr[0] == 2) continue;
    u64 p = pr[0], q = pr[1], r = pr[2];
    ++c.unconstrained;
    u64 qm = q % p;
    if ((qm == 1 || qm == p - 1) && r % p == qm && r * (p - 2) < (p - 1) * (q - 1))
      ++c.coeff_optimal;
    u64 pq = p * q;
    if (r % pq == 1) ++c.mod_pq_1;
    if (r % pq == pq - 1) ++c.mod_pq_m1;
    if (r % pq == 7 % pq) ++c.mod_pq_7;
    if (oracle_bb_member(p, q, r)) ++c.pair_set_bb;
    if (4 * (p - 1) > q && p * p > r) ++c.crypto_gap;
  }
  return c;
}

}  // namespace

CheckResult check_counting_oracles(const std::vector<u64>& xs, unsigned threads) {
  Timer timer;
  Failures fail;
  u64 x_max = *std::max_element(xs.begin(), xs.end());
  std::vector<u32> lpf(x_max + 1, 0);
  for (u64 i = 2; i <= x_max; ++i)
    if (lpf[i] == 0)
      for (u64 m = i; m <= x_max; m += i)
        if (lpf[m] == 0) lpf[m] = static_cast<u32>(i);

  for (u64 x : xs) {
    OracleCounts oracle = oracle_counts(x, lpf);
    auto expect = [&](const ConstraintSpec& spec, u64 want, const char* what) {
      u64 got = count_ternary(x, spec, threads).count;
      if (got != want)
        fail.add(std::string(what) + " at x=" + std::to_string(x) + ": count " +
                 std::to_string(got) + " != oracle " + std::to_string(want));
    };
    expect(ConstraintSpec::unconstrained(), oracle.unconstrained, "ternary");
    expect(ConstraintSpec::coefficient_optimal(), oracle.coeff_optimal, "coefficient-optimal");
    expect(ConstraintSpec::residue_mod_pq(1), oracle.mod_pq_1, "mod-pq(1)");
    expect(ConstraintSpec::residue_mod_pq(-1), oracle.mod_pq_m1, "mod-pq(-1)");
    expect(ConstraintSpec::residue_mod_pq(7), oracle.mod_pq_7, "mod-pq(7)");
    expect(ConstraintSpec::pair_set_mod_p(beiter_pair_predicate()), oracle.pair_set_bb,
           "pair-set-bb");
    expect(ConstraintSpec::crypto_gap(), oracle.crypto_gap, "crypto-gap");
  }
  // enumeration/counting agreement on the smallest cutoff
  u64 x0 = *std::min_element(xs.begin(), xs.end());
  for (auto spec : {ConstraintSpec::unconstrained(), ConstraintSpec::coefficient_optimal()}) {
    if (collect_ternary(x0, spec).size() != count_ternary(x0, spec).count)
      fail.add("enumerate/count length split for " + spec.label());
  }
  return make_result("counting-oracles", timer, fail.count,
                     "all families match factor-all brute force at " + std::to_string(xs.size()) +
                         " cutoffs",
                     fail.first);
}

CheckResult check_ternary_identity(const std::vector<u64>& xs) {
  Timer timer;
  Failures fail;
  i64 disc = ternary_identity_report(105).discrepancy;
  for (u64 x : xs) {
    IdentityReport rep = ternary_identity_report(x);
    if (rep.discrepancy != disc)
      fail.add("discrepancy drifted at x=" + std::to_string(x) + ": " +
               std::to_string(rep.discrepancy) + " != " + std::to_string(disc));
    if (!ternary_identity_check(x)) fail.add("identity check false at x=" + std::to_string(x));
  }
  if (count_ternary(104, ConstraintSpec::unconstrained()).count != 0)
    fail.add("N_T(104) != 0");
  if (count_ternary(105, ConstraintSpec::unconstrained()).count != 1)
    fail.add("N_T(105) != 1");
  if (count_ternary(560, ConstraintSpec::coefficient_optimal()).count != 0)
    fail.add("smallest member of T below 561");
  if (count_ternary(561, ConstraintSpec::coefficient_optimal()).count != 1)
    fail.add("561 not in T");
  return make_result("ternary-identity", timer, fail.count,
                     "N_T = M(x,3) - M(x/2,2) + pi(x/4) + (" + std::to_string(disc) +
                         ") across tested x; smallest members 105 and 561",
                     fail.first);
}

CheckResult check_d_definition(u64 p_max) {
  Timer timer;
  Failures fail;
  for_each_prime(p_max, [&](u64 p) {
    if (p < 3) return;
    for (u64 j = 1; j < p; ++j)
      for (u64 k = 1; k < p; ++k) {
        // treat (j, k) as (q*, r*); then q ≡ j*, r ≡ k* (mod p)
        u64 a = std::min({j, k, p - j, p - k});
        u64 qr = (mod_inverse(j, p) * mod_inverse(k, p)) % p;
        u64 d_cong = mod_inverse((a * qr) % p, p);
        u64 d_closed = std::min(std::max(j, k), std::max(p - j, p - k));
        if (d_cong != d_closed)
          fail.add("d definitions split at p=" + std::to_string(p) + " (j,k)=(" +
                   std::to_string(j) + "," + std::to_string(k) + ")");
      }
  });
  return make_result("d-definition", timer, fail.count,
                     "congruence d == closed-form d for all residue pairs, p <= " +
                         std::to_string(p_max),
                     fail.first);
}

std::vector<CheckResult> run_full_audit(const AuditConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(check_identity_suite(cfg.identity_n_max, cfg.threads));
  out.push_back(check_golden_coefficients(cfg.threads));
  out.push_back(check_optimality_agreement(cfg));
  out.push_back(check_bound_soundness(cfg));
  out.push_back(check_pair_cardinalities(cfg.p_max, cfg.threads));
  out.push_back(check_kaplan_flatness(cfg.kaplan_samples, cfg.kaplan_n_cap, cfg.seed, cfg.threads));
  out.push_back(check_counting_oracles(cfg.oracle_xs, cfg.threads));
  out.push_back(check_ternary_identity(cfg.oracle_xs));
  out.push_back(check_d_definition(100));
  return out;
}

}  // namespace forge
