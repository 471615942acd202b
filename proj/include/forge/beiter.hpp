#pragma once

#include <utility>
#include <vector>

#include "forge/common.hpp"
#include "forge/cyclotomic.hpp"
#include "forge/ternary.hpp"

namespace forge {

/// Inverse-residue data entering the Bachman/Bzdega bounds for a triple
/// p < q < r: q* and r* are the inverses of q, r mod p in [1, p-1],
/// a = min(q*, r*, p-q*, p-r*), d in [1, p-1] satisfies a d q r ≡ 1 (mod p)
/// and equals min(max(q*, r*), max(p-q*, p-r*)) -- both routes are computed
/// and must match.
struct BoundParams {
  u64 p = 0, q_star = 0, r_star = 0, a = 0, d = 0, d1 = 0;
};

/// Inverse of a modulo the odd prime p, in [1, p-1]. Throws if p | a.
u64 mod_inverse(u64 a, u64 p);

BoundParams bound_params(u64 p, u64 q, u64 r);

/// GB(j,k) = min((p-1)/2 + alpha, p - delta1),
/// BB(j,k) = min(2 alpha + delta1, p - delta1), with
/// alpha = min(j,k,p-j,p-k), delta = min(max(j,k), max(p-j,p-k)),
/// delta1 = min(delta, p-delta). j, k in [1, p-1].
u64 gb_value(u64 p, u64 j, u64 k);
u64 bb_value(u64 p, u64 j, u64 k);

/// Dense tables of both bound functions over [1,p-1]^2.
struct PairBoundTable {
  u64 p = 0;
  std::vector<u64> gb, bb;  // row-major, (j-1)*(p-1) + (k-1)
  u64 gb_at(u64 j, u64 k) const { return gb[(j - 1) * (p - 1) + (k - 1)]; }
  u64 bb_at(u64 j, u64 k) const { return bb[(j - 1) * (p - 1) + (k - 1)]; }
};
PairBoundTable make_pair_bound_table(u64 p);

/// The pair sets {(j,k) : *(j,k) <= 2p/3}, compared in integers as
/// 3 value <= 2p. p = 3 returns all pairs (Beiter holds classically there);
/// the closed forms below require p > 3.
std::vector<std::pair<u64, u64>> gb_set(u64 p);
std::vector<std::pair<u64, u64>> bb_set(u64 p);
u64 gb_set_size(u64 p);  // brute-force count, no materialization
u64 bb_set_size(u64 p);

/// Closed-form cardinalities; (p/3) is read as the Legendre symbol of p
/// mod 3 (the only reading making the forms integral -- checked at p = 5, 7,
/// 11 against brute force). Non-integrality raises InterpretationError;
/// p <= 3 is a domain error.
u64 n_gb_closed(u64 p);
u64 n_bb_closed(u64 p);

/// Per-p membership structure on inverse residues: (q mod p, r mod p) is a
/// member iff (inverse(q mod p), inverse(r mod p)) lies in bb_set(p).
struct BeiterPairSet {
  u64 p = 0;
  u64 size = 0;
  std::vector<char> member_jk;  // indexed like PairBoundTable
  std::vector<u64> inverse;     // inverse[i], i in [1, p-1]
  bool member_residues(u64 q_mod_p, u64 r_mod_p) const {
    if (q_mod_p == 0 || r_mod_p == 0) return false;  // p | q or p | r cannot happen
    u64 j = inverse[q_mod_p], k = inverse[r_mod_p];
    return member_jk[(j - 1) * (p - 1) + (k - 1)] != 0;
  }
};
BeiterPairSet beiter_pair_set(u64 p);

/// p-generic predicate over (p, q mod p, r mod p) with alpha hint 25/27,
/// caching per-p sets internally; safe for concurrent use.
PairSetPredicate beiter_pair_predicate();

/// One triple's worth of Theorem-level bound data.
struct TripleBoundReport {
  TernaryTriple t;
  BoundParams params;
  i64 min_coeff = 0, max_coeff = 0;
  i64 bachman_lo = 0, bachman_hi = 0;
  i64 bzdega_lo = 0, bzdega_hi = 0;
  u64 corollary_bachman = 0, corollary_bzdega = 0;  // |a_n(k)| bounds via d1
};

/// Computes Phi_n exactly and asserts both two-sided bounds plus the
/// corollary |a| forms. A violation throws TheoremViolation: the theorems
/// are proven, so it would falsify the build, not the mathematics.
TripleBoundReport check_bounds_on_triple(const TernaryTriple& t);
TripleBoundReport check_bounds_on_poly(const TernaryTriple& t, const IntegerPolynomial& phi);

/// 3 h(Phi_n) <= 2p, exact integers.
bool corrected_beiter_holds(const TernaryTriple& t);
bool corrected_beiter_holds_height(u64 p, u64 height);

}  // namespace forge
