#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/common.hpp"
#include "forge/primes.hpp"

namespace forge {

/// n = p*q*r with 3 <= p < q < r odd primes.
struct TernaryTriple {
  u64 p, q, r, n;
};

/// Membership predicate on (p, q mod p, r mod p) together with the density
/// the predicate family is expected to cut out of the (p-1)^2 residue pairs.
struct PairSetPredicate {
  std::string name;
  std::function<bool(u64 p, u64 q_mod_p, u64 r_mod_p)> member;
  u64 alpha_num = 1;
  u64 alpha_den = 1;
};

/// Which constrained family to enumerate.
class ConstraintSpec {
 public:
  enum class Kind {
    Unconstrained,       // all ternary n
    CoefficientOptimal,  // q ≡ ±1 (mod p), r ≡ q (mod p), r(p-2) < (p-1)(q-1)
    ResidueModPQ,        // r ≡ a (mod pq), a ≢ 0
    PairSetModP,         // (q mod p, r mod p) in a per-p pair set
    CryptoGap,           // 4(p-1) > q and p^2 > r
  };

  static ConstraintSpec unconstrained();
  static ConstraintSpec coefficient_optimal();
  static ConstraintSpec residue_mod_pq(i64 a);  // a != 0
  static ConstraintSpec pair_set_mod_p(PairSetPredicate pred);
  static ConstraintSpec crypto_gap();

  Kind kind() const { return kind_; }
  i64 residue() const { return residue_a_; }
  const PairSetPredicate& pair_set() const { return pair_; }

  /// Canonical text form, used in reports and cache keys.
  std::string label() const;

  /// Definitional membership test for a valid ternary triple.
  bool matches(u64 p, u64 q, u64 r) const;

 private:
  Kind kind_ = Kind::Unconstrained;
  i64 residue_a_ = 0;
  PairSetPredicate pair_;
};

/// Exact count at cutoff x next to the theorem-predicted main term.
struct CountReport {
  u64 x = 0;
  u64 count = 0;
  bool predicted_available = false;
  double predicted = 0.0;  // meaningful only if predicted_available
  double ratio = 0.0;      // count / predicted, ditto
  std::string constraint;
  std::chrono::duration<double> elapsed{0};
};

/// Streams every triple with pqr <= x satisfying c, each exactly once, in
/// lexicographic (p, q, r) order. x < 105 yields an empty stream. The loop
/// structure is outer p < x^(1/3), middle q < sqrt(x/p), inner r; products
/// are bounded before any multiply so pqr cannot overflow.
void enumerate_ternary(u64 x, const ConstraintSpec& c,
                       const std::function<void(const TernaryTriple&)>& emit);

std::vector<TernaryTriple> collect_ternary(u64 x, const ConstraintSpec& c);

/// Exact count plus the matching theorem main term:
///   CoefficientOptimal: C1 x / log^2 x
///   ResidueModPQ:       C2 x / log x
///   PairSetModP:        alpha x (log log x)^2 / (2 log x)
///   Unconstrained:      x (log log x)^2 / (2 log x) (1 - 1/log log x)
///   CryptoGap:          no prediction
/// Parallel over p; the merged count is identical for every thread count.
CountReport count_ternary(u64 x, const ConstraintSpec& c, unsigned threads = 1);

/// N(x,k): integers n <= x with Omega(n) = k. k in {1,2,3}.
u64 count_omega_exact(u64 x, int k);
/// M(x,k): squarefree n <= x with Omega(n) = k.
u64 count_squarefree_omega(u64 x, int k);

struct IdentityReport {
  u64 x = 0;
  u64 direct = 0;    // N_T(x) by enumeration-order counting
  i64 combined = 0;  // M(x,3) - M(x/2,2) + pi(x/4)
  i64 discrepancy = 0;
};

IdentityReport ternary_identity_report(u64 x);

/// True iff direct and combined counts differ by the same constant observed
/// on small anchor cutoffs (the constant is -1 for all x >= 105).
bool ternary_identity_check(u64 x);

/// Seeded rejection sampler: p uniform over odd primes with p^3 < x, then q,
/// r uniform over the admissible prime ranges. Deterministic per seed.
std::vector<TernaryTriple> sample_ternary_triples(u64 x, u64 count, u64 seed);

}  // namespace forge
