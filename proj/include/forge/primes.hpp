#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "forge/common.hpp"

namespace forge {

// Caps for the segmented sieve. Streaming keeps O(segment) memory and is the
// mode of choice above 1e8; stored tables additionally keep O(pi(limit)).
inline constexpr u64 kSieveStreamCap = 1'000'000'000'000ULL;  // 1e12
inline constexpr u64 kSieveStoreCap = 10'000'000'000ULL;      // 1e10

/// All primes <= limit, ascending, plus an O(1) membership bitmap and a
/// binary-search prime counter. Immutable after construction; safe to share
/// across threads.
struct PrimeTable {
  u64 limit = 0;
  std::vector<u64> primes;
  std::vector<u64> odd_bits;  // bit i set <=> 2i+1 is prime

  /// pi(n) for n <= limit.
  u64 pi(u64 n) const;
  /// true iff n is prime; requires n <= limit.
  bool contains(u64 n) const;
};

/// Segmented sieve of Eratosthenes, 2^20 flags per segment (odd numbers
/// only). Stored output; throws CapacityError above kSieveStoreCap and
/// std::domain_error for limit < 2.
PrimeTable sieve_primes(u64 limit);

/// Streaming variant: fn(p) for every prime p <= limit, ascending.
void for_each_prime(u64 limit, const std::function<void(u64)>& fn);

/// Deterministic Miller-Rabin, valid for every 64-bit n. Fermat-style tests
/// are not enough here: 561 is a Carmichael number and must come out
/// composite.
bool is_prime(u64 n);

/// Primes p <= limit with p ≡ residue (mod modulus), ascending.
/// residue must lie in [0, modulus).
std::vector<u64> primes_in_ap(u64 limit, u64 modulus, u64 residue);

/// Prime factorization, (prime, exponent) pairs with ascending primes.
/// Pollard rho + Miller-Rabin beyond a trial-division floor. factorize(1)
/// is empty.
std::vector<std::pair<u64, int>> factorize(u64 n);

int mobius(u64 n);
u64 euler_phi(u64 n);

/// Bulk tabulations, index 0..limit (entry 0 unused, set to 0 resp. 0).
/// Must agree with the pointwise variants.
std::vector<signed char> mobius_table(u64 limit);
std::vector<u64> euler_phi_table(u64 limit);

/// (base^exp) mod m without overflow.
u64 pow_mod(u64 base, u64 exp, u64 m);

u64 isqrt(u64 n);

}  // namespace forge
