#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "irrcert/ratio_engine.hpp"
#include "support.hpp"

using namespace irrcert;
using testing_support::loop_admissible;
using testing_support::loop_divisors;
using testing_support::loop_unitary;
using testing_support::rq;

namespace {

bool in_class(std::uint64_t d, std::uint64_t v, std::uint64_t dv, DivisorClass cls) {
  if (cls == DivisorClass::any) return true;
  if (cls == DivisorClass::unitary) return loop_unitary(d, v);
  return loop_admissible(d, v, dv);
}

// Largest d2/d1 with (d2/d1)^(k+1) <= fb/fa, compared as exact rationals.
Rational loop_qk(std::uint64_t fa, std::uint64_t dfa, std::uint64_t fb, std::uint64_t dfb, unsigned k,
                 DivisorClass cls) {
  const Rational ratio = rq(static_cast<long>(fb), static_cast<long>(fa));
  Rational best = 1;
  for (auto d1 : loop_divisors(fa)) {
    if (!in_class(d1, fa, dfa, cls)) continue;
    for (auto d2 : loop_divisors(fb)) {
      if (!in_class(d2, fb, dfb, cls)) continue;
      const Rational r = rq(static_cast<long>(d2), static_cast<long>(d1));
      if (r > best && ipow(r, k + 1) <= ratio) best = r;
    }
  }
  return best;
}

DivisorSet ds(long v, long dv) { return divisor_set(BigInt(v), BigInt(dv)); }

}  // namespace

TEST(Qk, QuarticValues) {
  const QkResult r = compute_qk(ds(48, 164), ds(609, 1168), 2, DivisorClass::admissible);
  EXPECT_EQ(r.q, rq(29, 16));
  EXPECT_EQ(r.d1, 16);
  EXPECT_EQ(r.d2, 29);
  EXPECT_EQ(loop_qk(48, 164, 609, 1168, 2, DivisorClass::admissible), rq(29, 16));
}

TEST(Qk, Preconditions) {
  EXPECT_THROW(compute_qk(ds(49, 1), ds(49, 1), 1, DivisorClass::any), PreconditionError);
  EXPECT_THROW(compute_qk(ds(50, 1), ds(49, 1), 1, DivisorClass::any), PreconditionError);
  EXPECT_THROW(compute_qk(ds(5, 1), ds(49, 1), 0, DivisorClass::any), PreconditionError);
}

TEST(Qk, TieIncludedAtExactPower) {
  // fb / fa = 8 = 2^3, k = 2: d2/d1 = 2 attains equality.
  EXPECT_EQ(compute_qk(ds(1, 1), ds(8, 1), 2, DivisorClass::any).q, 2);
}

TEST(Qk, MinKWithUnitRatio) {
  EXPECT_EQ(min_k_with_unit_ratio(ds(1, 5), ds(49, 133), DivisorClass::any), 2u);
  EXPECT_EQ(least_ratio_above_one(ds(1, 5), ds(49, 133), DivisorClass::any), 7);
  // Against 1: the least unitary divisor d > 1 of s must satisfy d^(k+1) > s.
  for (long s = 2; s < 200; ++s) {
    long least = s;
    for (long d = 2; d < s; ++d)
      if (s % d == 0 && std::gcd(d, s / d) == 1) {
        least = d;
        break;
      }
    unsigned long k = 1;
    for (long p = least * least; p <= s; p *= least) ++k;
    EXPECT_EQ(min_k_with_unit_ratio(ds(1, 0), ds(s, 1), DivisorClass::unitary), k) << s;
  }
}

TEST(Qk, LoopOracleGridAndInvariants) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> deriv(0, 3000);
  for (long fb = 2; fb <= 400; ++fb) {
    const long dfb = deriv(rng);
    const DivisorSet db = ds(fb, dfb);
    for (long fa = 1; fa < fb; fa += 1 + fb / 60) {
      const long dfa = deriv(rng);
      const DivisorSet da = ds(fa, dfa);
      for (unsigned k = 1; k <= 4; ++k) {
        Rational q[3];
        for (auto cls : {DivisorClass::admissible, DivisorClass::unitary, DivisorClass::any}) {
          const Rational got = compute_qk(da, db, k, cls).q;
          ASSERT_EQ(got, loop_qk(fa, dfa, fb, dfb, k, cls)) << fa << " " << fb << " k=" << k;
          EXPECT_GE(got, 1);
          if (k > 1) EXPECT_LE(got, compute_qk(da, db, k - 1, cls).q);
          q[static_cast<int>(cls)] = got;
        }
        EXPECT_LE(q[1], q[0]);
        EXPECT_LE(q[0], q[2]);
      }
    }
  }
}

TEST(Qk, WitnessIsSmallestAmongTies) {
  // 12 / 2 = 6 / 1 = 6: ratios 6 appear twice; the smaller (d2, d1) wins.
  const QkResult r = compute_qk(ds(2, 0), ds(12 * 37, 0), 1, DivisorClass::any);
  EXPECT_EQ(r.q * r.d1, r.d2);
  for (auto d1 : loop_divisors(2))
    for (auto d2 : loop_divisors(12 * 37)) {
      const Rational ratio = rq(static_cast<long>(d2), static_cast<long>(d1));
      if (ratio == r.q) {
        EXPECT_LE(r.d2, BigInt(static_cast<unsigned long>(d2)));
      }
    }
}
