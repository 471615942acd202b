#pragma once

#include <span>
#include <vector>

#include "forge/common.hpp"
#include "forge/ternary.hpp"

namespace forge {

/// Dense exact-integer coefficient sequence, index k -> coefficient of x^k.
/// Normalized: the last stored entry is nonzero unless the polynomial is
/// zero (empty storage). All arithmetic is exact; overflow raises, never
/// wraps.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<i64> coeffs);

  /// Index of the last nonzero entry; -1 for the zero polynomial.
  i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }
  i64 coeff(u64 k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::span<const i64> coeffs() const { return coeffs_; }

  /// max_k |coeff(k)|; 0 for the zero polynomial.
  u64 height() const;
  i64 min_coeff() const;
  i64 max_coeff() const;
  bool palindromic() const;  // coeff(k) == coeff(deg - k)

  bool operator==(const IntegerPolynomial&) const = default;

 private:
  std::vector<i64> coeffs_;
};

/// Exact coefficients of Phi_n via the Moebius product
///   Phi_n(x) = prod_{d | rad(n)} (1 - x^d)^{mu(rad(n)/d)}
/// evaluated as a truncated power series with sparse multiply/divide by
/// (1 - x^e) (prefix-sum passes), then re-spaced by n/rad(n). Degree phi(n),
/// leading coefficient 1. No generic polynomial division anywhere.
IntegerPolynomial cyclotomic_coeffs(u64 n);

/// Exact coefficients of Psi_n = (x^n - 1)/Phi_n, degree n - phi(n), computed
/// by the same sparse kernel with complementary Moebius exponents -- not by
/// dividing x^n - 1 by the computed Phi_n, so the product identity below is a
/// genuine cross-check.
IntegerPolynomial inverse_cyclotomic_coeffs(u64 n);

/// Coefficientwise check Phi * Psi == x^n - 1 by exact convolution.
bool product_is_x_pow_n_minus_1(const IntegerPolynomial& phi,
                                const IntegerPolynomial& psi, u64 n);

/// h(Phi_n) == 1.
bool is_flat_cyclotomic(u64 n);

/// h(Psi_pqr) without materializing the full coefficient array. Uses
/// Psi_pqr(x) = Phi_pq(x) * Psi_pq(x^r) and the 2p-block structure of
/// Psi_pq, so only O(pq) memory is touched even when r is huge.
u64 ternary_inverse_height(u64 p, u64 q, u64 r);

/// Congruence-and-inequality test for h(Psi_n) = p - 1: q ≡ r ≡ ±1 (mod p)
/// and r(p-2) < (p-1)(q-1), all in exact integer arithmetic.
bool is_coefficient_optimal_criterion(const TernaryTriple& t);

/// Same decision taken from the computed height of Psi_n. Must agree with
/// the criterion on every input.
bool is_coefficient_optimal_direct(const TernaryTriple& t);

/// The coefficient set {a_n(k)} of Phi_pqr is a full integer interval
/// [min, max].
bool coefficient_range_check(const TernaryTriple& t);

/// Neighboring coefficients of Phi_pqr differ by at most one, with
/// a_n(-1) treated as 0.
bool neighbor_diff_check(const TernaryTriple& t);

}  // namespace forge
