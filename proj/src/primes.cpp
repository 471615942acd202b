#include "forge/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace forge {

namespace {

constexpr u64 kSegmentFlags = 1u << 20;  // odd flags per segment, ~1MiB range x2

// Base sieve up to limit inclusive, plain boolean array.
std::vector<char> small_sieve(u64 limit) {
  std::vector<char> comp(limit + 1, 0);
  for (u64 i = 2; i * i <= limit; ++i)
    if (!comp[i])
      for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
  return comp;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_rho(u64 n) {
  // Brent's cycle variant on f(y) = y^2 + c with batched gcds.
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, ys = 2, d = 1, q = 1, r = 1;
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += 128) {
        ys = y;
        u64 lim = std::min<u64>(128, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (mul_mod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  r = std::min(r, u64{0xFFFFFFFF});  // keep r*r inside 64 bits
  while (r > 0 && r * r > n) --r;
  while (r < 0xFFFFFFFF && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 PrimeTable::pi(u64 n) const {
  if (n > limit) throw std::domain_error("PrimeTable::pi: n exceeds table limit");
  auto it = std::upper_bound(primes.begin(), primes.end(), n);
  return static_cast<u64>(it - primes.begin());
}

bool PrimeTable::contains(u64 n) const {
  if (n > limit) throw std::domain_error("PrimeTable::contains: n exceeds table limit");
  if (n == 2) return true;
  if (n < 2 || (n & 1) == 0) return false;
  u64 i = (n - 1) / 2;
  return (odd_bits[i >> 6] >> (i & 63)) & 1;
}

namespace {

// Shared segmented driver: emit(p) for every prime <= limit, and if table is
// non-null also fill its storage.
void segmented_run(u64 limit, const std::function<void(u64)>* emit, PrimeTable* table) {
  u64 sqrt_limit = isqrt(limit);
  std::vector<char> comp = small_sieve(sqrt_limit);

  if (table) {
    table->limit = limit;
    table->odd_bits.assign((limit / 2) / 64 + 1, 0);
    double est = limit < 17 ? 8.0 : 1.12 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    table->primes.reserve(static_cast<size_t>(est));
  }

  auto deliver = [&](u64 p) {
    if (table) {
      table->primes.push_back(p);
      if (p > 2) {
        u64 i = (p - 1) / 2;
        table->odd_bits[i >> 6] |= 1ull << (i & 63);
      }
    }
    if (emit) (*emit)(p);
  };

  if (limit >= 2) deliver(2);

  std::vector<u64> base_primes;   // odd primes <= sqrt_limit
  std::vector<u64> next_multiple; // index into current segment flags
  u64 scanned = 3;                // next base-prime candidate to absorb

  std::vector<char> flags(kSegmentFlags);
  for (u64 low = 3; low <= limit; low += 2 * kSegmentFlags) {
    u64 high = std::min(low + 2 * kSegmentFlags - 2, limit);
    std::fill(flags.begin(), flags.end(), 1);

    for (; scanned * scanned <= high && scanned <= sqrt_limit; scanned += 2) {
      if (!comp[scanned]) {
        base_primes.push_back(scanned);
        next_multiple.push_back((scanned * scanned - low) / 2);
      }
    }
    for (size_t i = 0; i < base_primes.size(); ++i) {
      u64 p = base_primes[i];
      u64 j = next_multiple[i];
      u64 span = (high - low) / 2 + 1;
      for (; j < span; j += p) flags[j] = 0;
      next_multiple[i] = j - span;
    }
    u64 span = (high - low) / 2 + 1;
    for (u64 j = 0; j < span; ++j)
      if (flags[j]) deliver(low + 2 * j);
  }
}

}  // namespace

PrimeTable sieve_primes(u64 limit) {
  if (limit < 2) throw std::domain_error("sieve_primes: limit must be >= 2");
  if (limit > kSieveStoreCap) throw CapacityError("sieve_primes: limit above stored-table cap (1e10)");
  PrimeTable table;
  segmented_run(limit, nullptr, &table);
  return table;
}

void for_each_prime(u64 limit, const std::function<void(u64)>& fn) {
  if (limit < 2) throw std::domain_error("for_each_prime: limit must be >= 2");
  if (limit > kSieveStreamCap) throw CapacityError("for_each_prime: limit above streaming cap (1e12)");
  segmented_run(limit, &fn, nullptr);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3e24, in particular for
  // every 64-bit input.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin_witness(n, a, d, s)) return false;
  return true;
}

std::vector<u64> primes_in_ap(u64 limit, u64 modulus, u64 residue) {
  if (modulus < 1) throw std::domain_error("primes_in_ap: modulus must be >= 1");
  if (residue >= modulus) throw std::domain_error("primes_in_ap: residue out of [0, modulus)");
  std::vector<u64> out;
  for_each_prime(limit, [&](u64 p) {
    if (p % modulus == residue) out.push_back(p);
  });
  return out;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  if (n <= 1) return out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.emplace_back(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(u64 n) {
  if (n == 0) throw std::domain_error("mobius: n must be >= 1");
  if (n == 1) return 1;
  auto fac = factorize(n);
  for (auto& [p, e] : fac)
    if (e > 1) return 0;
  return (fac.size() & 1) ? -1 : 1;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
  u64 phi = n;
  for (auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

std::vector<signed char> mobius_table(u64 limit) {
  std::vector<signed char> mu(limit + 1, 1);
  std::vector<char> comp(limit + 1, 0);
  mu[0] = 0;
  for (u64 p = 2; p <= limit; ++p) {
    if (comp[p]) continue;
    for (u64 m = 2 * p; m <= limit; m += p) comp[m] = 1;
    for (u64 m = p; m <= limit; m += p) mu[m] = static_cast<signed char>(-mu[m]);
    if (p <= limit / p)
      for (u64 m = p * p; m <= limit; m += p * p) mu[m] = 0;
  }
  return mu;
}

std::vector<u64> euler_phi_table(u64 limit) {
  std::vector<u64> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0ull);
  for (u64 p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // p composite already reduced
    for (u64 m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

}  // namespace forge
