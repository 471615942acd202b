#include "forge/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "forge/primes.hpp"

namespace forge {

namespace {

constexpr i64 kCoeffGuard = i64{1} << 60;  // loud failure well before wraparound
constexpr u64 kDenseLengthCap = u64{1} << 28;

void guard(i64 running_max, u64 n) {
  if (running_max >= kCoeffGuard)
    throw std::overflow_error("cyclotomic kernel: coefficient exceeded 64-bit budget at n=" +
                              std::to_string(n));
}

// c *= (1 - x^e), truncated to the existing length.
i64 multiply_pass(std::vector<i64>& c, u64 e) {
  i64 running_max = 0;
  for (u64 k = c.size(); k-- > e;) {
    c[k] -= c[k - e];
    i64 a = std::abs(c[k]);
    if (a > running_max) running_max = a;
  }
  return running_max;
}

// c /= (1 - x^e): prefix sums with stride e.
i64 divide_pass(std::vector<i64>& c, u64 e) {
  i64 running_max = 0;
  for (u64 k = e; k < c.size(); ++k) {
    c[k] += c[k - e];
    i64 a = std::abs(c[k]);
    if (a > running_max) running_max = a;
  }
  return running_max;
}

struct Radical {
  std::vector<u64> primes;  // distinct prime factors of n
  u64 rad = 1;
};

Radical radical_of(u64 n) {
  Radical r;
  for (auto& [p, e] : factorize(n)) {
    r.primes.push_back(p);
    r.rad *= p;
  }
  return r;
}

// All divisors of the squarefree m = prod(primes), ascending, with mu(m/d).
std::vector<std::pair<u64, int>> divisors_with_comu(const std::vector<u64>& primes) {
  size_t w = primes.size();
  std::vector<std::pair<u64, int>> out;
  out.reserve(size_t{1} << w);
  int mu_m = (w % 2 == 0) ? 1 : -1;
  for (u64 mask = 0; mask < (u64{1} << w); ++mask) {
    u64 d = 1;
    int bits = 0;
    for (size_t i = 0; i < w; ++i)
      if (mask & (u64{1} << i)) {
        d *= primes[i];
        ++bits;
      }
    // mu(m/d) = mu(m) * mu(d) for squarefree m, d | m
    int mu = mu_m * ((bits % 2 == 0) ? 1 : -1);
    out.emplace_back(d, mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Spreads coefficients s positions apart: f(x) -> f(x^s).
std::vector<i64> respace(std::vector<i64> c, u64 s) {
  if (s == 1) return c;
  std::vector<i64> out((c.size() - 1) * s + 1, 0);
  for (u64 k = 0; k < c.size(); ++k) out[k * s] = c[k];
  return out;
}

// Phi_rad for squarefree rad > 1 as a length deg+1 series.
std::vector<i64> phi_squarefree(const Radical& r, u64 n_for_diag) {
  u64 deg = r.rad;
  for (u64 p : r.primes) deg -= deg / p;  // phi(rad)
  if (deg + 1 > kDenseLengthCap)
    throw CapacityError("cyclotomic_coeffs: coefficient array too large");
  std::vector<i64> c(deg + 1, 0);
  c[0] = 1;
  for (auto& [d, mu] : divisors_with_comu(r.primes)) {
    if (d > deg) continue;  // pass is a no-op beyond the truncation degree
    i64 m = (mu == 1) ? multiply_pass(c, d) : divide_pass(c, d);
    guard(m, n_for_diag);
  }
  return c;
}

// Psi_rad for squarefree rad > 1: degree rad - phi(rad), complementary
// exponents over the proper divisors, overall sign -1.
std::vector<i64> psi_squarefree(const Radical& r, u64 n_for_diag) {
  u64 phi = r.rad;
  for (u64 p : r.primes) phi -= phi / p;
  u64 deg = r.rad - phi;
  if (deg + 1 > kDenseLengthCap)
    throw CapacityError("inverse_cyclotomic_coeffs: coefficient array too large");
  std::vector<i64> c(deg + 1, 0);
  c[0] = 1;
  for (auto& [d, mu] : divisors_with_comu(r.primes)) {
    if (d == r.rad) continue;  // proper divisors only
    if (d > deg) continue;
    i64 m = (-mu == 1) ? multiply_pass(c, d) : divide_pass(c, d);
    guard(m, n_for_diag);
  }
  for (i64& v : c) v = -v;
  return c;
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

u64 IntegerPolynomial::height() const {
  u64 h = 0;
  for (i64 v : coeffs_) h = std::max(h, static_cast<u64>(std::abs(v)));
  return h;
}

i64 IntegerPolynomial::min_coeff() const {
  if (coeffs_.empty()) return 0;
  return *std::min_element(coeffs_.begin(), coeffs_.end());
}

i64 IntegerPolynomial::max_coeff() const {
  if (coeffs_.empty()) return 0;
  return *std::max_element(coeffs_.begin(), coeffs_.end());
}

bool IntegerPolynomial::palindromic() const {
  for (size_t i = 0, j = coeffs_.size(); i < j; ++i)
    if (coeffs_[i] != coeffs_[j - 1 - i]) return false;
  return true;
}

IntegerPolynomial cyclotomic_coeffs(u64 n) {
  if (n == 0) throw std::domain_error("cyclotomic_coeffs: n must be >= 1");
  if (n == 1) return IntegerPolynomial({-1, 1});
  Radical r = radical_of(n);
  return IntegerPolynomial(respace(phi_squarefree(r, n), n / r.rad));
}

IntegerPolynomial inverse_cyclotomic_coeffs(u64 n) {
  if (n == 0) throw std::domain_error("inverse_cyclotomic_coeffs: n must be >= 1");
  if (n == 1) return IntegerPolynomial({1});  // Psi_1 = 1
  Radical r = radical_of(n);
  return IntegerPolynomial(respace(psi_squarefree(r, n), n / r.rad));
}

bool product_is_x_pow_n_minus_1(const IntegerPolynomial& phi,
                                const IntegerPolynomial& psi, u64 n) {
  if (phi.degree() < 0 || psi.degree() < 0) return false;
  if (static_cast<u64>(phi.degree() + psi.degree()) != n) return false;
  std::vector<i64> prod(n + 1, 0);
  auto a = phi.coeffs();
  auto b = psi.coeffs();
  for (size_t i = 0; i < a.size(); ++i) {
    i64 ai = a[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += ai * b[j];
  }
  if (prod[0] != -1 || prod[n] != 1) return false;
  for (u64 k = 1; k < n; ++k)
    if (prod[k] != 0) return false;
  return true;
}

bool is_flat_cyclotomic(u64 n) { return cyclotomic_coeffs(n).height() == 1; }

u64 ternary_inverse_height(u64 p, u64 q, u64 r) {
  if (!(3 <= p && p < q && q < r))
    throw std::domain_error("ternary_inverse_height: need 3 <= p < q < r");
  // Psi_pqr(x) = Phi_pq(x) * Psi_pq(x^r) with
  // Psi_pq(y) = sum_{j=q}^{q+p-1} y^j - sum_{j=0}^{p-1} y^j,
  // i.e. 2p copies of Phi_pq at stride r, signed -1 on the j-block [0, p-1]
  // and +1 on [q, q+p-1].
  Radical rad{{p, q}, p * q};
  std::vector<i64> a = phi_squarefree(rad, p * q);
  const u64 F = a.size() - 1;  // phi(pq)

  if (r > F) {
    // Stride exceeds the copy width: copies never overlap, so the
    // coefficient multiset is just +-coeffs(Phi_pq).
    i64 h = 0;
    for (i64 v : a) h = std::max(h, std::abs(v));
    return static_cast<u64>(h);
  }

  auto at = [&](u64 k) -> i64 { return k <= F ? a[k] : 0; };

  // P(k) = sum_{j=0}^{p-1} a(k - j r); coefficient of x^k in Psi_pqr is
  // P(k - q r) - P(k). Walk k with P(k) = P(k-r) + a(k) - a(k-pr).
  const u64 block1_end = (p - 1) * r + F;
  if (q * r > block1_end) {
    // Blocks are disjoint; both contribute the same magnitudes.
    std::vector<i64> ring(r, 0);
    i64 h = 0;
    for (u64 k = 0; k <= block1_end; ++k) {
      i64 v = (k >= r ? ring[k % r] : 0) + at(k) - (k >= p * r ? at(k - p * r) : 0);
      ring[k % r] = v;
      h = std::max(h, std::abs(v));
    }
    return static_cast<u64>(h);
  }

  // Overlapping blocks (only possible when q < 2p - 1, which keeps q*r
  // small); keep q*r + 1 past values of P.
  const u64 span = (q + p - 1) * r + F;
  const u64 hist = q * r + 1;
  if (hist > kDenseLengthCap)
    throw CapacityError("ternary_inverse_height: history window too large");
  std::vector<i64> ring(hist, 0);
  i64 h = 0;
  for (u64 k = 0; k <= span; ++k) {
    i64 pk = (k >= r ? ring[(k - r) % hist] : 0) + at(k) - (k >= p * r ? at(k - p * r) : 0);
    i64 c = (k >= q * r ? ring[(k - q * r) % hist] : 0) - pk;
    ring[k % hist] = pk;
    h = std::max(h, std::abs(c));
  }
  return static_cast<u64>(h);
}

bool is_coefficient_optimal_criterion(const TernaryTriple& t) {
  u64 qm = t.q % t.p;
  if (qm != 1 && qm != t.p - 1) return false;
  if (t.r % t.p != qm) return false;
  return t.r * (t.p - 2) < (t.p - 1) * (t.q - 1);
}

bool is_coefficient_optimal_direct(const TernaryTriple& t) {
  return ternary_inverse_height(t.p, t.q, t.r) == t.p - 1;
}

bool coefficient_range_check(const TernaryTriple& t) {
  IntegerPolynomial phi = cyclotomic_coeffs(t.n);
  i64 lo = phi.min_coeff(), hi = phi.max_coeff();
  std::vector<char> seen(static_cast<size_t>(hi - lo + 1), 0);
  for (i64 v : phi.coeffs()) seen[static_cast<size_t>(v - lo)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

bool neighbor_diff_check(const TernaryTriple& t) {
  IntegerPolynomial phi = cyclotomic_coeffs(t.n);
  i64 prev = 0;  // a_n(-1)
  for (i64 v : phi.coeffs()) {
    if (std::abs(v - prev) > 1) return false;
    prev = v;
  }
  return true;
}

}  // namespace forge
