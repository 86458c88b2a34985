#include "irrcert/ratio_engine.hpp"

#include <algorithm>

namespace irrcert {

namespace {

using u128 = unsigned __int128;

u128 pow_small(std::uint64_t base, unsigned long exp) {
  u128 r = 1;
  for (unsigned long i = 0; i < exp; ++i) r *= base;
  return r;
}

struct Witness {
  BigInt d1{1};
  BigInt d2{1};
};

Witness maximize_small(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                       std::uint64_t va, std::uint64_t vb, unsigned long k) {
  std::uint64_t best1 = 1, best2 = 1;
  for (std::uint64_t d1 : a) {
    const u128 rhs = pow_small(d1, k + 1) * vb;
    auto it = std::partition_point(b.begin(), b.end(),
                                   [&](std::uint64_t d2) { return pow_small(d2, k + 1) * va <= rhs; });
    if (it == b.begin()) continue;
    const std::uint64_t d2 = *(it - 1);
    const u128 lhs = u128{d2} * best1;
    const u128 cur = u128{best2} * d1;
    if (lhs > cur || (lhs == cur && d2 < best2)) {
      best1 = d1;
      best2 = d2;
    }
  }
  return {BigInt(static_cast<unsigned long>(best1)), BigInt(static_cast<unsigned long>(best2))};
}

Witness maximize_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b, const BigInt& va,
                     const BigInt& vb, unsigned long k) {
  Witness best;
  for (const BigInt& d1 : a) {
    const BigInt rhs = ipow(d1, k + 1) * vb;
    auto it = std::partition_point(b.begin(), b.end(),
                                   [&](const BigInt& d2) { return ipow(d2, k + 1) * va <= rhs; });
    if (it == b.begin()) continue;
    const BigInt& d2 = *(it - 1);
    const BigInt lhs = d2 * best.d1;
    const BigInt cur = best.d2 * d1;
    if (lhs > cur || (lhs == cur && d2 < best.d2)) {
      best.d1 = d1;
      best.d2 = d2;
    }
  }
  return best;
}

void check_order(const DivisorSet& da, const DivisorSet& db) {
  if (!(da.value() < db.value()))
    throw PreconditionError("divisor ratio requires |f(a)| < |f(b)|, got " + to_string(da.value()) +
                            " >= " + to_string(db.value()));
}

}  // namespace

QkResult compute_qk(const DivisorSet& da, const DivisorSet& db, unsigned long k, DivisorClass cls) {
  check_order(da, db);
  if (k == 0) throw PreconditionError("compute_qk: k must be positive");
  const auto* sa = da.small_members(cls);
  const auto* sb = db.small_members(cls);
  const std::size_t bits = mpz_sizeinbase(db.value().get_mpz_t(), 2);
  Witness w;
  if (sa && sb && (k + 2) * bits <= 126) {
    w = maximize_small(*sa, *sb, mpz_get_ui(da.value().get_mpz_t()), mpz_get_ui(db.value().get_mpz_t()), k);
  } else {
    w = maximize_big(da.members(cls), db.members(cls), da.value(), db.value(), k);
  }
  QkResult r;
  r.k = k;
  r.q = make_rational(w.d2, w.d1);
  r.d1 = std::move(w.d1);
  r.d2 = std::move(w.d2);
  r.divisor_class = cls;
  return r;
}

Rational least_ratio_above_one(const DivisorSet& da, const DivisorSet& db, DivisorClass cls) {
  check_order(da, db);
  const auto& b = db.members(cls);
  std::optional<Rational> best;
  for (const BigInt& d1 : da.members(cls)) {
    auto it = std::upper_bound(b.begin(), b.end(), d1);
    if (it == b.end()) continue;
    Rational r = make_rational(*it, d1);
    if (!best || r < *best) best = std::move(r);
  }
  // |f(b)| / 1 > 1 always qualifies.
  return *best;
}

unsigned long min_k_with_unit_ratio(const DivisorSet& da, const DivisorSet& db, DivisorClass cls) {
  const Rational s = least_ratio_above_one(da, db, cls);
  return min_k_exceeding(s, make_rational(db.value(), da.value()));
}

}  // namespace irrcert
