#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "forge/ternary.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// Independent count by factoring every n <= x.
u64 brute_count(u64 x, const std::function<bool(u64 p, u64 q, u64 r)>& cond) {
  auto lpf = oracle::lpf_table(x);
  u64 count = 0;
  for (u64 n = 105; n <= x; ++n) {
    u64 pr[3];
    if (oracle::ternary_parts(n, lpf, pr) && cond(pr[0], pr[1], pr[2])) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("smallest ternary integers") {
  auto triples = collect_ternary(105, ConstraintSpec::unconstrained());
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].p == 3);
  CHECK(triples[0].q == 5);
  CHECK(triples[0].r == 7);
  CHECK(triples[0].n == 105);
  CHECK(collect_ternary(104, ConstraintSpec::unconstrained()).empty());

  auto co = collect_ternary(561, ConstraintSpec::coefficient_optimal());
  REQUIRE(co.size() == 1);
  CHECK(co[0].n == 561);
  CHECK(co[0].p == 3);
  CHECK(co[0].q == 11);
  CHECK(co[0].r == 17);
}

TEST_CASE("coefficient-optimal members up to 1000 are {561, 741}") {
  // brute force over all n <= 1000, constraint re-derived from scratch
  auto lpf = oracle::lpf_table(1000);
  std::set<u64> expect;
  for (u64 n = 105; n <= 1000; ++n) {
    u64 pr[3];
    if (!oracle::ternary_parts(n, lpf, pr)) continue;
    u64 p = pr[0], q = pr[1], r = pr[2];
    u64 qm = q % p;
    if ((qm == 1 || qm == p - 1) && r % p == qm && r * (p - 2) < (p - 1) * (q - 1))
      expect.insert(n);
  }
  CHECK(expect == std::set<u64>{561, 741});

  std::set<u64> got;
  for (auto& t : collect_ternary(1000, ConstraintSpec::coefficient_optimal())) got.insert(t.n);
  CHECK(got == expect);
}

TEST_CASE("counts match factor-all brute force at 1e4") {
  const u64 x = 10'000;
  CHECK(count_ternary(x, ConstraintSpec::unconstrained()).count ==
        brute_count(x, [](u64, u64, u64) { return true; }));
  CHECK(count_ternary(x, ConstraintSpec::residue_mod_pq(1)).count ==
        brute_count(x, [](u64 p, u64 q, u64 r) { return r % (p * q) == 1; }));
  CHECK(count_ternary(x, ConstraintSpec::residue_mod_pq(-1)).count ==
        brute_count(x, [](u64 p, u64 q, u64 r) { return r % (p * q) == p * q - 1; }));
  CHECK(count_ternary(x, ConstraintSpec::crypto_gap()).count ==
        brute_count(x, [](u64 p, u64 q, u64 r) { return 4 * (p - 1) > q && p * p > r; }));
  CHECK(count_ternary(561, ConstraintSpec::coefficient_optimal()).count == 1);
}

TEST_CASE("pair-set partition and symmetric-predicate properties") {
  const u64 x = 100'000;
  u64 unconstrained = count_ternary(x, ConstraintSpec::unconstrained()).count;

  PairSetPredicate always{"all", [](u64, u64, u64) { return true; }, 1, 1};
  CHECK(count_ternary(x, ConstraintSpec::pair_set_mod_p(always)).count == unconstrained);

  // partition of the residue-pair space by parity of q mod p + r mod p
  PairSetPredicate even{"even", [](u64, u64 a, u64 b) { return (a + b) % 2 == 0; }, 1, 2};
  PairSetPredicate odd{"odd", [](u64, u64 a, u64 b) { return (a + b) % 2 == 1; }, 1, 2};
  u64 c_even = count_ternary(x, ConstraintSpec::pair_set_mod_p(even)).count;
  u64 c_odd = count_ternary(x, ConstraintSpec::pair_set_mod_p(odd)).count;
  CHECK(c_even + c_odd == unconstrained);

  // predicate depends only on the residues
  auto spec = ConstraintSpec::pair_set_mod_p(even);
  CHECK(spec.matches(5, 7, 11) == spec.matches(5, 7 + 5, 11));
  CHECK(spec.matches(5, 7, 11) == spec.matches(5, 7, 11 + 5));
}

TEST_CASE("monotonicity and enumeration/count agreement") {
  std::vector<ConstraintSpec> specs;
  specs.push_back(ConstraintSpec::unconstrained());
  specs.push_back(ConstraintSpec::coefficient_optimal());
  specs.push_back(ConstraintSpec::residue_mod_pq(1));
  specs.push_back(ConstraintSpec::crypto_gap());
  for (const auto& spec : specs) {
    u64 prev = 0;
    for (u64 x : {105ull, 1000ull, 5000ull, 20000ull}) {
      u64 c = count_ternary(x, spec).count;
      CHECK(c >= prev);
      prev = c;
      CHECK(collect_ternary(x, spec).size() == c);
    }
  }
}

TEST_CASE("emitted mod-pq triples satisfy the congruence, lexicographic order") {
  u64 last_p = 0, last_q = 0, last_r = 0;
  enumerate_ternary(50'000, ConstraintSpec::residue_mod_pq(1), [&](const TernaryTriple& t) {
    CHECK(t.r % (t.p * t.q) == 1);
    CHECK(t.n == t.p * t.q * t.r);
    bool ordered = std::tie(last_p, last_q, last_r) < std::tie(t.p, t.q, t.r);
    CHECK(ordered);
    std::tie(last_p, last_q, last_r) = std::tie(t.p, t.q, t.r);
  });
}

TEST_CASE("omega counting against direct listing") {
  CHECK(count_omega_exact(10, 2) == 4);       // 4, 6, 9, 10
  CHECK(count_squarefree_omega(10, 2) == 2);  // 6, 10

  const u64 x = 10'000;
  auto lpf = oracle::lpf_table(x);
  for (int k = 1; k <= 3; ++k) {
    u64 n_exp = 0, m_exp = 0;
    for (u64 n = 2; n <= x; ++n) {
      if (oracle::big_omega(n, lpf) != k) continue;
      ++n_exp;
      if (oracle::squarefree(n, lpf)) ++m_exp;
    }
    CHECK(count_omega_exact(x, k) == n_exp);
    CHECK(count_squarefree_omega(x, k) == m_exp);
  }
  CHECK_THROWS_AS(count_omega_exact(100, 4), std::invalid_argument);
}

TEST_CASE("N(x,1) matches pi(x)") {
  PrimeTable tbl = sieve_primes(100'000);
  CHECK(count_omega_exact(100'000, 1) == tbl.pi(100'000));
}

TEST_CASE("ternary identity N_T = M(x,3) - M(x/2,2) + pi(x/4) - 1") {
  CHECK_THROWS_AS(ternary_identity_report(104), std::domain_error);
  IdentityReport rep = ternary_identity_report(105);
  CHECK(rep.direct == 1);
  CHECK(rep.discrepancy == -1);
  for (u64 x : {1000ull, 10'000ull, 50'000ull}) {
    IdentityReport r = ternary_identity_report(x);
    CHECK(r.discrepancy == -1);
    CHECK(ternary_identity_check(x));
  }
}

TEST_CASE("count across thread counts is identical") {
  const u64 x = 200'000;
  u64 ref = count_ternary(x, ConstraintSpec::unconstrained(), 1).count;
  for (unsigned t : {2u, 4u, 8u})
    CHECK(count_ternary(x, ConstraintSpec::unconstrained(), t).count == ref);
}

TEST_CASE("seeded sampling is deterministic and valid") {
  auto a = sample_ternary_triples(1'000'000, 50, 123);
  auto b = sample_ternary_triples(1'000'000, 50, 123);
  REQUIRE(a.size() == 50);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].p >= 3);
    CHECK(a[i].p < a[i].q);
    CHECK(a[i].q < a[i].r);
    CHECK(is_prime(a[i].p));
    CHECK(is_prime(a[i].q));
    CHECK(is_prime(a[i].r));
    CHECK(a[i].n <= 1'000'000);
  }
  auto c = sample_ternary_triples(1'000'000, 50, 124);
  bool any_diff = false;
  for (size_t i = 0; i < c.size(); ++i) any_diff |= c[i].n != a[i].n;
  CHECK(any_diff);
}

TEST_CASE("constraint validation") {
  CHECK_THROWS_AS(ConstraintSpec::residue_mod_pq(0), std::domain_error);
  CHECK(ConstraintSpec::residue_mod_pq(-1).label() == "mod-pq(a=-1)");
}
