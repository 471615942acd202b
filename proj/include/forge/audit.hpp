#pragma once

#include <string>
#include <vector>

#include "forge/common.hpp"

namespace forge {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0.0;
};

struct AuditConfig {
  u64 exhaustive_cap = 200'000;        // every ternary n up to here gets scanned
  u64 optimality_samples = 10'000;     // random triples for criterion/direct
  u64 optimality_sample_cap = 100'000'000;
  u64 bound_samples = 200;             // random triples for dense bound checks
  u64 bound_sample_cap = 10'000'000;
  u64 kaplan_samples = 500;
  u64 kaplan_n_cap = 3'000'000;
  u64 identity_n_max = 10'000;         // Phi*Psi == x^n - 1 range
  u64 p_max = 200;                     // closed-form cardinality range
  std::vector<u64> oracle_xs = {1'000, 10'000, 100'000};
  u64 seed = 0x7465726e61727933ULL;
  unsigned threads = default_thread_count();
};

/// Phi_n * Psi_n == x^n - 1 coefficientwise, deg Phi_n == phi(n), and
/// palindromicity, for all n <= n_max.
CheckResult check_identity_suite(u64 n_max, unsigned threads);

/// a_105(7) == -2; h(Phi_n) == 1 for 2 <= n <= 104; h(Psi_n) <= 1 for
/// n <= 560 and h(Psi_561) == 2.
CheckResult check_golden_coefficients(unsigned threads);

/// Criterion-based and direct-height coefficient-optimality agree on every
/// ternary n <= exhaustive_cap and on sampled larger triples; the direct
/// height route is itself cross-checked against the dense kernel on the
/// small range.
CheckResult check_optimality_agreement(const AuditConfig& cfg);

/// One dense pass over every ternary n <= exhaustive_cap plus samples:
/// Bachman/Bzdega two-sided bounds and |a| corollaries, consecutive-range,
/// neighbor-difference, and BB-certified corrected-Beiter soundness.
CheckResult check_bound_soundness(const AuditConfig& cfg);

/// Brute-force |GB(p)|, |BB(p)| equal the closed forms for 5 <= p <= p_max;
/// at p = 10007 the brute-force count matches and N_BB/p^2 is within 1% of
/// 25/27. Also beiter_pair_set inversion preserves cardinality.
CheckResult check_pair_cardinalities(u64 p_max, unsigned threads);

/// Sampled triples with r ≡ ±1 (mod pq) all give flat Phi_pqr.
CheckResult check_kaplan_flatness(u64 samples, u64 n_cap, u64 seed, unsigned threads);

/// Every constrained count at each x equals an independent brute-force count
/// obtained by factoring each n <= x; enumeration length equals the count.
CheckResult check_counting_oracles(const std::vector<u64>& xs, unsigned threads);

/// N_T(x) = M(x,3) - M(x/2,2) + pi(x/4) + constant, with the constant
/// stable across all tested x; smallest members 105 and 561.
CheckResult check_ternary_identity(const std::vector<u64>& xs);

/// Congruence and closed-form definitions of d agree for every residue pair,
/// every odd prime p <= p_max.
CheckResult check_d_definition(u64 p_max);

std::vector<CheckResult> run_full_audit(const AuditConfig& cfg);

}  // namespace forge
