#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/beiter.hpp"
#include "forge/primes.hpp"

using namespace forge;

TEST_CASE("modular inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK(mod_inverse(7, 5) == 3);  // 21 ≡ 1 (mod 5)
  CHECK_THROWS_AS(mod_inverse(10, 5), std::domain_error);
  for (u64 p : {5ull, 13ull, 101ull})
    for (u64 a = 1; a < p; ++a) CHECK(a * mod_inverse(a, p) % p == 1);
}

TEST_CASE("bound params on the worked triples") {
  BoundParams b = bound_params(5, 7, 11);
  CHECK(b.q_star == 3);
  CHECK(b.r_star == 1);
  CHECK(b.a == 1);
  CHECK(b.d == 3);
  CHECK(b.d1 == 2);

  BoundParams c = bound_params(5, 11, 31);
  CHECK(c.q_star == 1);
  CHECK(c.r_star == 1);
  CHECK(c.a == 1);
  CHECK(c.d == 1);
  CHECK(c.d1 == 1);

  // p = 3: only residues 1 and 2 exist
  for (auto [q, r] : std::vector<std::pair<u64, u64>>{{5, 7}, {7, 11}, {11, 17}, {13, 19}}) {
    BoundParams d = bound_params(3, q, r);
    CHECK(d.a == 1);
    CHECK((d.d == 1 || d.d == 2));
  }
}

TEST_CASE("GB/BB values and symmetry") {
  CHECK(gb_value(5, 1, 1) == 3);
  CHECK(bb_value(5, 1, 1) == 3);
  CHECK(gb_value(11, 5, 5) == 6);
  CHECK(bb_value(11, 5, 5) == 6);
  CHECK_THROWS_AS(gb_value(5, 0, 1), std::domain_error);
  CHECK_THROWS_AS(bb_value(5, 1, 5), std::domain_error);

  PrimeTable tbl = sieve_primes(50);
  for (u64 p : tbl.primes) {
    if (p < 5) continue;
    PairBoundTable t = make_pair_bound_table(p);
    for (u64 j = 1; j < p; ++j)
      for (u64 k = j; k < p; ++k) {
        REQUIRE(t.gb_at(j, k) == t.gb_at(k, j));
        REQUIRE(t.bb_at(j, k) == t.bb_at(k, j));
        REQUIRE(t.gb_at(j, k) >= 1);
        REQUIRE(t.gb_at(j, k) <= p);
        REQUIRE(t.bb_at(j, k) >= 1);
        REQUIRE(t.bb_at(j, k) <= p);
      }
  }
}

TEST_CASE("pair sets at p = 5") {
  CHECK(bb_set(5).size() == 16);
  CHECK(gb_set(5).size() == 16);
  auto bb = bb_set(5);
  CHECK(std::find(bb.begin(), bb.end(), std::pair<u64, u64>{1, 1}) != bb.end());
}

TEST_CASE("closed forms match brute force for 5 <= p <= 100") {
  CHECK(n_gb_closed(7) == 32);
  CHECK(n_bb_closed(5) == 16);
  CHECK_THROWS_AS(n_gb_closed(3), std::domain_error);
  for_each_prime(100, [](u64 p) {
    if (p < 5) return;
    CAPTURE(p);
    CHECK(gb_set_size(p) == n_gb_closed(p));
    CHECK(bb_set_size(p) == n_bb_closed(p));
    CHECK(beiter_pair_set(p).size == n_bb_closed(p));
  });
}

TEST_CASE("beiter pair predicate semantics") {
  BeiterPairSet s5 = beiter_pair_set(5);
  CHECK(s5.member_residues(1, 1));  // inverses (1,1) in bb_set(5)

  PairSetPredicate pred = beiter_pair_predicate();
  CHECK(pred.alpha_num == 25);
  CHECK(pred.alpha_den == 27);
  // depends only on residues
  CHECK(pred.member(5, 7 % 5, 11 % 5) == pred.member(5, 12 % 5, 11 % 5));
  // p = 3 certifies everything
  CHECK(pred.member(3, 1, 1));
  CHECK(pred.member(3, 2, 1));
  // predicate membership equals the raw jk-set through inversion
  for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
    BeiterPairSet s = beiter_pair_set(p);
    auto raw = bb_set(p);
    u64 via_pred = 0;
    for (u64 a = 1; a < p; ++a)
      for (u64 b = 1; b < p; ++b)
        if (pred.member(p, a, b)) ++via_pred;
    CHECK(via_pred == raw.size());
    CHECK(via_pred == s.size);
  }
}

TEST_CASE("theorem bounds hold on small triples, with exact report values") {
  TernaryTriple t105{3, 5, 7, 105};
  TripleBoundReport rep = check_bounds_on_poly(t105, cyclotomic_coeffs(105));
  CHECK(rep.params.a == 1);
  CHECK(rep.params.d == 2);
  CHECK(rep.params.d1 == 1);
  CHECK(rep.min_coeff == -2);
  CHECK(rep.max_coeff == 1);
  CHECK(rep.bachman_lo == -2);
  CHECK(rep.bachman_hi == 1);
  CHECK(rep.bzdega_lo == -2);
  CHECK(rep.bzdega_hi == 1);
  CHECK(rep.corollary_bachman == 2);
  CHECK(rep.corollary_bzdega == 2);

  CHECK_NOTHROW(check_bounds_on_triple(TernaryTriple{5, 7, 11, 385}));
  enumerate_ternary(20'000, ConstraintSpec::unconstrained(),
                    [](const TernaryTriple& t) { check_bounds_on_triple(t); });
}

TEST_CASE("corrected Beiter") {
  CHECK(corrected_beiter_holds(TernaryTriple{3, 5, 7, 105}));  // h = 2 = 2p/3 boundary
  CHECK(corrected_beiter_holds_height(3, 2));
  CHECK(!corrected_beiter_holds_height(3, 3));
  enumerate_ternary(5000, ConstraintSpec::unconstrained(), [](const TernaryTriple& t) {
    if (t.p == 3) CHECK(corrected_beiter_holds(t));
  });
}

TEST_CASE("d-definition agreement over residue pairs") {
  for_each_prime(60, [](u64 p) {
    if (p < 3) return;
    for (u64 j = 1; j < p; ++j)
      for (u64 k = 1; k < p; ++k) {
        u64 a = std::min({j, k, p - j, p - k});
        u64 qr = (mod_inverse(j, p) * mod_inverse(k, p)) % p;
        u64 d_cong = mod_inverse(a * qr % p, p);
        u64 d_closed = std::min(std::max(j, k), std::max(p - j, p - k));
        REQUIRE(d_cong == d_closed);
      }
  });
}
