#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "forge/constants.hpp"
#include "forge/primes.hpp"

using namespace forge;

namespace {

constexpr double kRefC1 = 0.249029016616718;
constexpr double kRefC2 = 0.597771234896174;
constexpr double kRefPrimeSum = 0.77315666904975;

// Direct p-series sum with a two-sided integral bracket on the tail.
double zeta_direct(int k, u64 terms) {
  double sum = 0.0;
  for (u64 n = terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -k);
  return sum;
}

}  // namespace

TEST_CASE("C1 reproduces the reference digits") {
  CertifiedValue c1 = compute_c1(1e-12);
  CHECK(std::abs(c1.value - kRefC1) <= 1e-12);
  CHECK(c1.tail_bound <= 1e-12);
  CHECK(c1.terms_used > 1000);
  // single-term lower bound: p = 3 alone gives (1/3) log 2
  double first = (1.0 / 3.0) * std::log(2.0);
  CHECK(first == doctest::Approx(0.231049).epsilon(1e-5));
  CHECK(c1.value > first);
  CHECK_THROWS_AS(compute_c1(1e-14), std::domain_error);
}

TEST_CASE("C1 partial sums increase monotonically") {
  double partial_1e3 = 0, partial_1e4 = 0;
  for_each_prime(10'000, [&](u64 p) {
    if (p < 3) return;
    double pd = static_cast<double>(p);
    double term = 4.0 / (pd * (pd - 1) * (pd - 1)) * std::log((pd - 1) / (pd - 2));
    if (p <= 1000) partial_1e3 += term;
    partial_1e4 += term;
  });
  CertifiedValue c1 = compute_c1(1e-12);
  CHECK(partial_1e3 < partial_1e4);
  CHECK(partial_1e4 < c1.value);
}

TEST_CASE("zeta closed forms and Euler-Maclaurin agree") {
  const double pi = std::numbers::pi;
  CHECK(zeta(2, 1e-12).value == doctest::Approx(pi * pi / 6.0).epsilon(1e-15));
  CHECK(zeta(4, 1e-12).value == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-15));
  CHECK_THROWS_AS(zeta(1, 1e-12), std::domain_error);

  // zeta(3) against direct summation plus integral tail bracket
  CertifiedValue z3 = zeta(3, 1e-12);
  CHECK(std::abs(z3.value - 1.202056903159594) <= 1e-12);
  const u64 N = 10'000'000;
  double direct = zeta_direct(3, N);
  double tail_lo = 1.0 / (2.0 * std::pow(static_cast<double>(N + 1), 2));
  double tail_hi = 1.0 / (2.0 * std::pow(static_cast<double>(N), 2));
  CHECK(z3.value >= direct + tail_lo - 1e-12);
  CHECK(z3.value <= direct + tail_hi + 1e-12);

  // odd/even values beyond the closed-form table against direct sums
  for (int k : {5, 7, 21, 22, 25}) {
    CAPTURE(k);
    double d = zeta_direct(k, 100'000);
    CHECK(std::abs(zeta(k, 1e-12).value - d) <= 1e-11);
  }
}

TEST_CASE("prime reciprocal sum via zeta acceleration") {
  CertifiedValue s = prime_reciprocal_sum_zeta(1e-12);
  CHECK(std::abs(s.value - kRefPrimeSum) <= 1e-12);
  CHECK(s.tail_bound <= 1e-12);

  // bracket against the direct prime sum to 1e7: the truncation lies below
  // the true value by at most sum_{m > 1e7} 1/(m(m-1)) = 1e-7
  double direct = 0.0;
  std::vector<double> terms;
  for_each_prime(10'000'000, [&](u64 p) {
    terms.push_back(1.0 / (static_cast<double>(p) * (static_cast<double>(p) - 1.0)));
  });
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) direct += *it;
  CHECK(s.value >= direct);
  CHECK(s.value <= direct + 1e-7);
}

TEST_CASE("C2 is the certified square") {
  CertifiedValue s = prime_reciprocal_sum_zeta(5e-13);
  CertifiedValue c2 = compute_c2(1e-12);
  CHECK(std::abs(c2.value - kRefC2) <= 1e-12);
  CHECK(c2.value == s.value * s.value);  // same arithmetic, definitional
  CHECK(c2.tail_bound <= 1e-12);
  // squaring the 14-digit prime sum reproduces the reference C2
  CHECK(std::abs(kRefPrimeSum * kRefPrimeSum - kRefC2) < 1e-13);
}

TEST_CASE("cached default constants") {
  CHECK(constant_c1().value == compute_c1(1e-12).value);
  CHECK(constant_c2().value == compute_c2(1e-12).value);
  CHECK(constant_prime_sum().value == prime_reciprocal_sum_zeta(1e-12).value);
}
