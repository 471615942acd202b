#include "forge/beiter.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace forge {

namespace {

std::string triple_str(u64 p, u64 q, u64 r) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

void check_jk(u64 p, u64 j, u64 k) {
  if (j < 1 || j > p - 1 || k < 1 || k > p - 1)
    throw std::domain_error("pair index out of [1, p-1]");
}

u64 alpha_of(u64 p, u64 j, u64 k) { return std::min({j, k, p - j, p - k}); }

u64 delta1_of(u64 p, u64 j, u64 k) {
  u64 delta = std::min(std::max(j, k), std::max(p - j, p - k));
  return std::min(delta, p - delta);
}

}  // namespace

u64 mod_inverse(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inverse: p divides a");
  // extended Euclid on (a, p)
  i64 old_r = static_cast<i64>(a), r = static_cast<i64>(p);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  i64 inv = old_s % static_cast<i64>(p);
  if (inv < 0) inv += static_cast<i64>(p);
  return static_cast<u64>(inv);
}

BoundParams bound_params(u64 p, u64 q, u64 r) {
  if (!(3 <= p && p < q && q < r)) throw std::domain_error("bound_params: need 3 <= p < q < r");
  if (q % p == 0 || r % p == 0) throw std::domain_error("bound_params: p divides q or r");
  BoundParams b;
  b.p = p;
  b.q_star = mod_inverse(q, p);
  b.r_star = mod_inverse(r, p);
  b.a = std::min({b.q_star, b.r_star, p - b.q_star, p - b.r_star});
  // d via the defining congruence a d q r ≡ 1 (mod p) ...
  u64 aqr = b.a % p;
  aqr = (aqr * (q % p)) % p;
  aqr = (aqr * (r % p)) % p;
  b.d = mod_inverse(aqr, p);
  // ... must agree with the closed form.
  u64 d_closed = std::min(std::max(b.q_star, b.r_star), std::max(p - b.q_star, p - b.r_star));
  if (b.d != d_closed)
    throw TheoremViolation("bound_params: congruence and closed-form d disagree at " +
                           triple_str(p, q, r));
  b.d1 = std::min(b.d, p - b.d);
  if (!(1 <= b.a && b.a <= (p - 1) / 2) || !(1 <= b.d1 && b.d1 <= (p - 1) / 2))
    throw TheoremViolation("bound_params: a or d1 out of [1, (p-1)/2] at " + triple_str(p, q, r));
  return b;
}

u64 gb_value(u64 p, u64 j, u64 k) {
  check_jk(p, j, k);
  return std::min((p - 1) / 2 + alpha_of(p, j, k), p - delta1_of(p, j, k));
}

u64 bb_value(u64 p, u64 j, u64 k) {
  check_jk(p, j, k);
  return std::min(2 * alpha_of(p, j, k) + delta1_of(p, j, k), p - delta1_of(p, j, k));
}

PairBoundTable make_pair_bound_table(u64 p) {
  if (p < 3 || p % 2 == 0) throw std::domain_error("make_pair_bound_table: p must be an odd prime");
  PairBoundTable t;
  t.p = p;
  t.gb.resize((p - 1) * (p - 1));
  t.bb.resize((p - 1) * (p - 1));
  for (u64 j = 1; j < p; ++j)
    for (u64 k = 1; k < p; ++k) {
      t.gb[(j - 1) * (p - 1) + (k - 1)] = gb_value(p, j, k);
      t.bb[(j - 1) * (p - 1) + (k - 1)] = bb_value(p, j, k);
    }
  return t;
}

namespace {

template <typename Value>
std::vector<std::pair<u64, u64>> collect_set(u64 p, Value&& value) {
  std::vector<std::pair<u64, u64>> out;
  if (p == 3) {  // Beiter holds classically at p = 3; every pair certifies
    return {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  }
  for (u64 j = 1; j < p; ++j)
    for (u64 k = 1; k < p; ++k)
      if (3 * value(p, j, k) <= 2 * p) out.emplace_back(j, k);
  return out;
}

template <typename Value>
u64 count_set(u64 p, Value&& value) {
  if (p == 3) return 4;
  u64 n = 0;
  for (u64 j = 1; j < p; ++j)
    for (u64 k = 1; k < p; ++k)
      if (3 * value(p, j, k) <= 2 * p) ++n;
  return n;
}

u64 bb_value_unchecked(u64 p, u64 j, u64 k) {
  u64 d1 = delta1_of(p, j, k);
  return std::min(2 * alpha_of(p, j, k) + d1, p - d1);
}

u64 gb_value_unchecked(u64 p, u64 j, u64 k) {
  return std::min((p - 1) / 2 + alpha_of(p, j, k), p - delta1_of(p, j, k));
}

}  // namespace

std::vector<std::pair<u64, u64>> gb_set(u64 p) { return collect_set(p, gb_value_unchecked); }
std::vector<std::pair<u64, u64>> bb_set(u64 p) { return collect_set(p, bb_value_unchecked); }
u64 gb_set_size(u64 p) { return count_set(p, gb_value_unchecked); }
u64 bb_set_size(u64 p) { return count_set(p, bb_value_unchecked); }

u64 n_gb_closed(u64 p) {
  if (p <= 3) throw std::domain_error("n_gb_closed: the closed form assumes p > 3");
  u64 val = (p % 3 == 1) ? 8 * p * p - 16 * p + 8 : 8 * p * p - 8 * p - 16;
  if (val % 9 != 0)
    throw InterpretationError("n_gb_closed: non-integral value at p=" + std::to_string(p));
  return val / 9;
}

u64 n_bb_closed(u64 p) {
  if (p <= 3) throw std::domain_error("n_bb_closed: the closed form assumes p > 3");
  // (p/3) as the Legendre symbol: +1 for p ≡ 1, -1 for p ≡ 2 (mod 3)
  i64 legendre = (p % 3 == 1) ? 1 : -1;
  u64 pm9 = p % 9;
  u64 tail = (pm9 == 2 || pm9 == 7) ? 73 : 37;
  i64 val = 25 * static_cast<i64>(p) * static_cast<i64>(p) -
            (8 * legendre + 54) * static_cast<i64>(p) + static_cast<i64>(tail);
  if (val < 0 || val % 27 != 0)
    throw InterpretationError("n_bb_closed: non-integral value at p=" + std::to_string(p));
  return static_cast<u64>(val / 27);
}

BeiterPairSet beiter_pair_set(u64 p) {
  if (p < 3) throw std::domain_error("beiter_pair_set: p must be an odd prime >= 3");
  BeiterPairSet s;
  s.p = p;
  s.member_jk.assign((p - 1) * (p - 1), 0);
  s.inverse.assign(p, 0);
  for (u64 i = 1; i < p; ++i) s.inverse[i] = mod_inverse(i, p);
  if (p == 3) {
    std::fill(s.member_jk.begin(), s.member_jk.end(), 1);
    s.size = 4;
    return s;
  }
  for (u64 j = 1; j < p; ++j)
    for (u64 k = 1; k < p; ++k)
      if (3 * bb_value_unchecked(p, j, k) <= 2 * p) {
        s.member_jk[(j - 1) * (p - 1) + (k - 1)] = 1;
        ++s.size;
      }
  return s;
}

PairSetPredicate beiter_pair_predicate() {
  struct Cache {
    std::shared_mutex mu;
    std::map<u64, std::shared_ptr<const BeiterPairSet>> sets;
  };
  auto cache = std::make_shared<Cache>();
  PairSetPredicate pred;
  pred.name = "bb-2p3";
  pred.alpha_num = 25;
  pred.alpha_den = 27;
  pred.member = [cache](u64 p, u64 q_mod_p, u64 r_mod_p) {
    std::shared_ptr<const BeiterPairSet> set;
    {
      std::shared_lock lock(cache->mu);
      auto it = cache->sets.find(p);
      if (it != cache->sets.end()) set = it->second;
    }
    if (!set) {
      auto fresh = std::make_shared<const BeiterPairSet>(beiter_pair_set(p));
      std::unique_lock lock(cache->mu);
      set = cache->sets.try_emplace(p, std::move(fresh)).first->second;
    }
    return set->member_residues(q_mod_p, r_mod_p);
  };
  return pred;
}

TripleBoundReport check_bounds_on_poly(const TernaryTriple& t, const IntegerPolynomial& phi) {
  TripleBoundReport rep;
  rep.t = t;
  rep.params = bound_params(t.p, t.q, t.r);
  rep.min_coeff = phi.min_coeff();
  rep.max_coeff = phi.max_coeff();
  const i64 p = static_cast<i64>(t.p);
  const i64 a = static_cast<i64>(rep.params.a);
  const i64 d = static_cast<i64>(rep.params.d);
  const i64 d1 = static_cast<i64>(rep.params.d1);
  rep.bachman_lo = -std::min((p - 1) / 2 + a, d);
  rep.bachman_hi = std::min((p - 1) / 2 + a, p - d);
  rep.bzdega_lo = -std::min(p + 2 * a - d, d);
  rep.bzdega_hi = std::min(2 * a + d, p - d);
  rep.corollary_bachman = static_cast<u64>(std::min((p - 1) / 2 + a, p - d1));
  rep.corollary_bzdega = static_cast<u64>(std::min(2 * a + d1, p - d1));
  u64 h = phi.height();
  bool ok = rep.bachman_lo <= rep.min_coeff && rep.max_coeff <= rep.bachman_hi &&
            rep.bzdega_lo <= rep.min_coeff && rep.max_coeff <= rep.bzdega_hi &&
            h <= rep.corollary_bachman && h <= rep.corollary_bzdega;
  if (!ok)
    throw TheoremViolation("coefficient bound violated at " + triple_str(t.p, t.q, t.r) +
                           ": this falsifies the build, not the theorem");
  return rep;
}

TripleBoundReport check_bounds_on_triple(const TernaryTriple& t) {
  return check_bounds_on_poly(t, cyclotomic_coeffs(t.n));
}

bool corrected_beiter_holds_height(u64 p, u64 height) { return 3 * height <= 2 * p; }

bool corrected_beiter_holds(const TernaryTriple& t) {
  return corrected_beiter_holds_height(t.p, cyclotomic_coeffs(t.n).height());
}

}  // namespace forge
