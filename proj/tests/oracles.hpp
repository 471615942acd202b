#pragma once

// Test-only oracles, deliberately written from first principles and kept
// independent of the library's sieving/counting paths.

#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool trial_division_is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> trial_division_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n)
    if (trial_division_is_prime(n)) out.push_back(n);
  return out;
}

// Plain boolean sieve, structurally unlike the segmented implementation.
inline std::vector<char> plain_sieve(u64 limit) {
  std::vector<char> is_p(limit + 1, 1);
  is_p[0] = 0;
  if (limit >= 1) is_p[1] = 0;
  for (u64 i = 2; i * i <= limit; ++i)
    if (is_p[i])
      for (u64 j = i * i; j <= limit; j += i) is_p[j] = 0;
  return is_p;
}

// Least-prime-factor table for factoring everything <= limit.
inline std::vector<u64> lpf_table(u64 limit) {
  std::vector<u64> lpf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i)
    if (lpf[i] == 0)
      for (u64 m = i; m <= limit; m += i)
        if (lpf[m] == 0) lpf[m] = i;
  return lpf;
}

struct Factored {
  std::vector<u64> primes;
  std::vector<int> exps;
};

inline Factored factor_with_lpf(u64 n, const std::vector<u64>& lpf) {
  Factored f;
  while (n > 1) {
    u64 p = lpf[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.primes.push_back(p);
    f.exps.push_back(e);
  }
  return f;
}

inline int big_omega(u64 n, const std::vector<u64>& lpf) {
  int k = 0;
  Factored f = factor_with_lpf(n, lpf);
  for (int e : f.exps) k += e;
  return k;
}

inline bool squarefree(u64 n, const std::vector<u64>& lpf) {
  for (int e : factor_with_lpf(n, lpf).exps)
    if (e > 1) return false;
  return true;
}

// Is n = p*q*r with 3 <= p < q < r? Fills the primes if so.
inline bool ternary_parts(u64 n, const std::vector<u64>& lpf, u64 out[3]) {
  Factored f = factor_with_lpf(n, lpf);
  if (f.primes.size() != 3) return false;
  for (int e : f.exps)
    if (e != 1) return false;
  if (f.primes[0] == 2) return false;
  out[0] = f.primes[0];
  out[1] = f.primes[1];
  out[2] = f.primes[2];
  return true;
}

}  // namespace oracle
