#include "forge/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "forge/primes.hpp"

namespace forge {

namespace {

// Neumaier-compensated accumulator; keeps rounding error below the series
// tail bounds.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

void check_tol(double tol) {
  if (!(tol >= kTolFloor))
    throw std::domain_error("tolerance below double-precision floor 1e-13");
}

// B_2, B_4, ..., B_18 as num/den.
constexpr double kBernoulliNum[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867};
constexpr double kBernoulliDen[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798};

// zeta(2m) = |B_2m| (2 pi)^(2m) / (2 (2m)!) for 2m <= 20.
double zeta_even_closed(int k) {
  const double pi = std::numbers::pi;
  int m = k / 2;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  double b = std::abs(kBernoulliNum[m - 1] / kBernoulliDen[m - 1]);
  return b * std::pow(2.0 * pi, k) / (2.0 * fact);
}

// Euler-Maclaurin for zeta(s) - 1, s >= 2 real. Returns value-1 so callers
// can take log1p without cancellation, plus the remainder bound.
struct ZetaEM {
  double value_minus_1;
  double remainder;
  u64 terms;
};

ZetaEM zeta_euler_maclaurin(double s) {
  constexpr int N = 64;
  constexpr int M = 8;  // corrections through B16, bound from the B18 term
  Accumulator acc;
  for (int n = 2; n < N; ++n) acc.add(std::pow(static_cast<double>(n), -s));
  double Npow = std::pow(static_cast<double>(N), -s);
  acc.add(Npow * N / (s - 1.0));  // N^(1-s)/(s-1)
  acc.add(Npow / 2.0);
  // T_i = B_2i/(2i)! * s(s+1)...(s+2i-2) * N^(-s-2i+1)
  double rising = s;        // s(s+1)...(s+2i-2), built incrementally
  double shift = Npow / N;  // N^(-s-2i+1), starts at N^(-s-1)
  double fact = 2.0;        // (2i)!
  double next_term = 0.0;
  for (int i = 1; i <= M + 1; ++i) {
    double term = (kBernoulliNum[i - 1] / kBernoulliDen[i - 1]) / fact * rising * shift;
    if (i <= M)
      acc.add(term);
    else
      next_term = term;
    rising *= (s + 2 * i - 1) * (s + 2 * i);
    shift /= static_cast<double>(N) * N;
    fact *= (2 * i + 1) * (2 * i + 2);
  }
  // For real s > 0 the remainder is bounded by the first omitted term.
  return {acc.total(), std::abs(next_term), static_cast<u64>(N + M)};
}

}  // namespace

CertifiedValue compute_c1(double tol) {
  check_tol(tol);
  // Tail past P: log(1+y) <= y gives term(p) <= 4/(p(p-1)^2(p-2)) <= 4/(p-2)^4,
  // and summing 4/m^4 over m >= P-1 stays below 4/(3(P-2)^3). The default
  // cutoff 2e5 puts this near 1.7e-16.
  u64 cutoff = 200'000;
  auto tail_at = [](u64 P) { return 4.0 / (3.0 * std::pow(static_cast<double>(P - 2), 3)); };
  while (tail_at(cutoff) > tol * 0.5) cutoff *= 2;
  Accumulator acc;
  u64 terms = 0;
  for_each_prime(cutoff, [&](u64 p) {
    if (p < 3) return;
    double pd = static_cast<double>(p);
    acc.add(4.0 / (pd * (pd - 1.0) * (pd - 1.0)) * std::log1p(1.0 / (pd - 2.0)));
    ++terms;
  });
  return {acc.total(), tail_at(cutoff), terms};
}

CertifiedValue zeta(int k, double tol) {
  if (k < 2) throw std::domain_error("zeta: k must be >= 2");
  check_tol(tol);
  if (k % 2 == 0 && k <= 20) return {zeta_even_closed(k), 0.0, 0};
  ZetaEM em = zeta_euler_maclaurin(static_cast<double>(k));
  if (em.remainder > tol)
    throw std::domain_error("zeta: Euler-Maclaurin remainder above tolerance");
  return {1.0 + em.value_minus_1, em.remainder, em.terms};
}

CertifiedValue prime_reciprocal_sum_zeta(double tol) {
  check_tol(tol);
  // Terms beyond K contribute at most sum_{k>K} 2^-k (1 + 2/(k-1)) <= 2^(1-K).
  int K = 2;
  while (std::ldexp(1.0, 1 - K) > tol * 0.25) ++K;
  Accumulator acc;
  double tail = std::ldexp(1.0, 1 - K);
  for (int k = 2; k <= K; ++k) {
    ZetaEM em = zeta_euler_maclaurin(static_cast<double>(k));
    tail += em.remainder;  // propagate per-term certification
    double weight = (static_cast<double>(euler_phi(k)) - mobius(k)) / k;
    acc.add(weight * std::log1p(em.value_minus_1));
  }
  return {acc.total(), tail, static_cast<u64>(K - 1)};
}

CertifiedValue compute_c2(double tol) {
  check_tol(tol);
  CertifiedValue s = prime_reciprocal_sum_zeta(tol * 0.5);
  double eps = s.tail_bound;
  return {s.value * s.value, 2.0 * std::abs(s.value) * eps + eps * eps, s.terms_used};
}

const CertifiedValue& constant_c1() {
  static const CertifiedValue v = compute_c1(1e-12);
  return v;
}

const CertifiedValue& constant_c2() {
  static const CertifiedValue v = compute_c2(1e-12);
  return v;
}

const CertifiedValue& constant_prime_sum() {
  static const CertifiedValue v = prime_reciprocal_sum_zeta(1e-12);
  return v;
}

}  // namespace forge
