#pragma once

#include "forge/common.hpp"

namespace forge {

/// A computed real together with a rigorous bound on the truncation error of
/// the series that produced it. tail_bound <= the requested tolerance on
/// success.
struct CertifiedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  u64 terms_used = 0;
};

inline constexpr double kTolFloor = 1e-13;  // double-precision floor

/// C1 = 4 sum_{p>=3} log((p-1)/(p-2)) / (p (p-1)^2) = 0.249029016616718...
/// Terms are O(p^-4); the cutoff P is chosen so that the tail bound
/// sum_{m>P} 4/m^4 <= 4/(3 P^3) is below tol. Compensated summation.
CertifiedValue compute_c1(double tol);

/// zeta(k) for integer k >= 2. Even k <= 20 use the closed forms in powers
/// of pi; everything else uses Euler-Maclaurin with N = 64 direct terms and
/// Bernoulli corrections through B16, tail-bounded by the first omitted term.
CertifiedValue zeta(int k, double tol);

/// sum_p 1/(p(p-1)) = sum_{k>=2} ((phi(k)-mu(k))/k) log zeta(k)
///                  = 0.77315666904975...
/// The k = 1 term vanishes since phi(1) = mu(1). Tail: log zeta(k) <=
/// zeta(k) - 1 <= 2^-k (1 + 2/(k-1)), so the terms beyond K sum to at most
/// 2^(1-K).
CertifiedValue prime_reciprocal_sum_zeta(double tol);

/// C2 = (sum_p 1/(p(p-1)))^2 = 0.597771234896174..., with the squared error
/// propagated as |s^2 - sh^2| <= 2|sh| eps + eps^2.
CertifiedValue compute_c2(double tol);

/// Cached defaults at tol = 1e-12, for callers that just need the numbers.
const CertifiedValue& constant_c1();
const CertifiedValue& constant_c2();
const CertifiedValue& constant_prime_sum();

}  // namespace forge
