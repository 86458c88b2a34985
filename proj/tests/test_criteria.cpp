#include <gtest/gtest.h>

#include <random>

#include "irrcert/criteria.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/report.hpp"
#include "support.hpp"

using namespace irrcert;
using testing_support::ip;
using testing_support::random_poly;
using testing_support::rq;

namespace {

const PrimePattern* find_shape(const std::vector<PrimePattern>& v, PatternShape s) {
  for (const auto& p : v)
    if (p.shape == s) return &p;
  return nullptr;
}

void expect_sound(const IntPoly& f, const CriterionReport& r) {
  if (!r.certified()) return;
  EXPECT_LE(count_irreducible_factors(f).count, *r.certified_k) << print_canonical(f) << " " << r.route;
  const RecheckResult again = recheck_report(r);
  EXPECT_TRUE(again.reproduced) << print_canonical(f) << " " << r.route << ": " << again.detail;
}

}  // namespace

TEST(CertifyThm0, QuarticSqrtCircle) {
  const IntPoly f = ip({1, 0, 12, 0, 35});
  const CriterionReport r = certify_thm0(f, BigInt(1), BigInt(2), 2, DivisorClass::admissible);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(*r.certified_k, 2u);
  EXPECT_EQ(r.route, "thm0Explicit.ii");
  EXPECT_EQ(*r.find("q"), "29/16");
  const double clearance = parse_rational(*r.find("clearance")).get_d();
  EXPECT_NEAR(clearance, 1.4262, 1e-4);
  expect_sound(f, r);
}

TEST(CertifyThm0, RejectsDecreasingValues) {
  const CriterionReport r = certify_thm0(ip({1, 0, 12, 0, 35}), BigInt(2), BigInt(1), 2, DivisorClass::admissible);
  EXPECT_FALSE(r.certified());
  EXPECT_FALSE(r.preconditions_passed());
}

TEST(CertifyThm0, HalfPlaneRouteWhenRatioIsOne) {
  // f(0) = 2, f(3) = 20: the least ratio above one is 2 and 2^4 > 10, so q_3 = 1.
  const IntPoly f = ip({2, 3, 1});
  const CriterionReport r = certify_thm0(f, BigInt(0), BigInt(3), 3, DivisorClass::admissible);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(r.route, "thm0.iii");
  expect_sound(f, r);
}

TEST(CertifyThm0, UnitaryRoutesNeedCoprimeDerivativeValues) {
  const IntPoly f = ip({1, 0, 12, 0, 35});
  // gcd(48, 164) = 4, so the unitary hypotheses fail at a = 1.
  const CriterionReport r = certify_thm0(f, BigInt(1), BigInt(2), 2, DivisorClass::unitary);
  EXPECT_FALSE(r.certified());
}

TEST(CertifyThm1, CubicAtStrictBound) {
  // Roots lie strictly inside |z| < 1/2, so |b| = 1 meeting 0 + 2 * 1/2 with equality suffices.
  const IntPoly f = ip({1, 5, 1, 42});
  const RootBound m{rq(1, 2), BoundMethod::rouche, true};
  ASSERT_TRUE(rouche_disk_certificate(f, m.bound));
  const CriterionReport r = certify_thm1(f, BigInt(0), BigInt(1), 2, DivisorClass::admissible, m);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(*r.certified_k, 2u);
  EXPECT_EQ(r.route, "thm1.i");
  expect_sound(f, r);
  // The same radius taken as non-strict leaves every case at equality.
  EXPECT_FALSE(certify_thm1(f, BigInt(0), BigInt(1), 2, DivisorClass::admissible,
                            RootBound{rq(1, 2), BoundMethod::user, false})
                   .certified());
}

TEST(CertifyThm1, HalfSumRoute) {
  // x + 1 at (3, 4): values 4, 5 give q_1 = 1. With M = 1, 4 <= 3 + 2 and (4-1)^2 <= (3+1)^2,
  // leaving only M < 7/2.
  const IntPoly f = ip({1, 1});
  const RootBound m{rq(1), BoundMethod::user, false};
  const CriterionReport r = certify_thm1(f, BigInt(3), BigInt(4), 1, DivisorClass::admissible, m);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(r.route, "thm1.iii");
  expect_sound(f, r);
}

TEST(Remark1Relaxed, ZeroBaseCase) {
  // x^2+x+1 at (0, 7): f = 1, 57; q_1 = 3 and 7 > (1 + 3) * 1.
  const IntPoly f = ip({1, 1, 1});
  const RootBound m{rq(1), BoundMethod::user, false};
  const CriterionReport r = remark1_relaxed(f, BigInt(0), BigInt(7), 1, DivisorClass::any, m);
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(r.route, "remark1.case4");
  EXPECT_EQ(*r.certified_k, 1u);
}

TEST(Remark1Relaxed, CertificatesAreSound) {
  std::mt19937_64 rng(53);
  int hits = 0;
  for (int i = 0; i < 150; ++i) {
    const IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 3), 6, true);
    const RootBound m = best_root_bound(f);
    for (long a = -3; a <= 3; ++a)
      for (long b = -9; b <= 9; ++b) {
        if (a == b) continue;
        const BigInt fa = eval_at(f, BigInt(a)), fb = eval_at(f, BigInt(b));
        if (fa == 0 || abs(fa) >= abs(fb)) continue;
        for (unsigned long k = 1; k <= 3; ++k) {
          const CriterionReport r = remark1_relaxed(f, BigInt(a), BigInt(b), k, DivisorClass::admissible, m);
          if (r.certified()) {
            ++hits;
            expect_sound(f, r);
            break;
          }
        }
      }
  }
  EXPECT_GT(hits, 0);
}

TEST(Patterns, Matching) {
  const auto p1 = match_prime_pattern(BigInt(1), BigInt(49), BigInt(5), BigInt(133));
  const PrimePattern* c1 = find_shape(p1, PatternShape::coro1main);
  ASSERT_NE(c1, nullptr);
  EXPECT_EQ(c1->p, 7);
  EXPECT_EQ(c1->r, 1);
  EXPECT_EQ(c1->k1, 0u);
  EXPECT_EQ(c1->k2, 2u);
  EXPECT_EQ(corollary_bound(*c1), 2u);

  EXPECT_TRUE(match_prime_pattern(BigInt(8), BigInt(8), BigInt(1), BigInt(1)).empty());

  const auto p3 = match_prime_pattern(BigInt(25), BigInt(1125), BigInt(1), BigInt(1));
  const PrimePattern* c3 = find_shape(p3, PatternShape::coro3main);
  ASSERT_NE(c3, nullptr);
  EXPECT_EQ(c3->p, 5);
  EXPECT_EQ(c3->r, 3);
  EXPECT_EQ(c3->j, 2u);
  EXPECT_EQ(c3->k1, 2u);
  EXPECT_EQ(c3->k2, 3u);
  EXPECT_EQ(c3->values(), std::make_pair(BigInt(25), BigInt(1125)));
}

TEST(Patterns, EqualExponentsGiveIrreducibility) {
  const auto pats = match_prime_pattern(BigInt(25), BigInt(75), BigInt(1), BigInt(1));
  const PrimePattern* c3 = find_shape(pats, PatternShape::coro3main);
  ASSERT_NE(c3, nullptr);
  EXPECT_EQ(c3->k1, c3->k2);
  EXPECT_EQ(corollary_bound(*c3), 1u);
  EXPECT_EQ(min_k_with_unit_ratio(divisor_set(BigInt(25), BigInt(1)), divisor_set(BigInt(75), BigInt(1)),
                                  DivisorClass::unitary),
            1u);
}

TEST(Corollaries, PrimeSquareValue) {
  for (long p : {7L, 11L, 13L}) {
    const IntPoly f = ip({1, p - 2, 1, p * (p - 1)});
    const CriterionReport r = certify_corollary(f, BigInt(0), BigInt(1));
    ASSERT_TRUE(r.certified()) << p;
    EXPECT_EQ(r.route, "coro2");
    EXPECT_EQ(*r.certified_k, 2u);
    EXPECT_EQ(*r.find("f_b"), std::to_string(p * p));
    expect_sound(f, r);
  }
}

TEST(Corollaries, PrimePowerOverTwiceSquare) {
  const IntPoly f = ip({50, 1, 1, 573});
  EXPECT_EQ(eval_at(f, BigInt(0)), 50);
  EXPECT_EQ(eval_at(f, BigInt(1)), 625);
  const CriterionReport r = certify_corollary(f, BigInt(0), BigInt(1));
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(r.route, "coro1main");
  EXPECT_EQ(*r.certified_k, 2u);
  EXPECT_EQ(*r.find("r"), "2");
  expect_sound(f, r);
}

TEST(Corollaries, NondecreasingCoefficientSearch) {
  // Small tuples 0 < a0 <= a1 <= a2 <= a3; any EK-family route must agree with the oracle.
  int ek_hits = 0;
  for (long a0 = 1; a0 <= 6; ++a0)
    for (long a1 = a0; a1 <= 8; ++a1)
      for (long a2 = a1; a2 <= 10; ++a2)
        for (long a3 = a2; a3 <= 12; ++a3) {
          const IntPoly f = ip({a0, a1, a2, a3});
          for (long a = 1; a <= 2; ++a)
            for (long b = a + 1; b <= 4; ++b) {
              const CriterionReport r = certify_corollary(f, BigInt(a), BigInt(b));
              if (!r.certified()) continue;
              if (r.route.rfind("EK", 0) == 0) ++ek_hits;
              expect_sound(f, r);
            }
        }
  EXPECT_GT(ek_hits, 0);
}

TEST(BestBound, Examples) {
  const ScanResult s2 = best_bound(ip({1, 0, 12, 0, 35}), BigInt(-3), BigInt(3), BigInt(-3), BigInt(3));
  ASSERT_TRUE(s2.report.certified());
  EXPECT_EQ(*s2.report.certified_k, 2u);

  const ScanResult s1 = best_bound(ip({-1, 1}), BigInt(-3), BigInt(3), BigInt(-3), BigInt(3));
  ASSERT_TRUE(s1.report.certified());
  EXPECT_EQ(*s1.report.certified_k, 1u);
  EXPECT_EQ(s1.integer_roots, std::vector<BigInt>{BigInt(1)});

  const IntPoly sq = ip({1, 0, 2, 0, 1});
  const ScanResult s3 = best_bound(sq, BigInt(-5), BigInt(5), BigInt(-5), BigInt(5));
  if (s3.report.certified()) EXPECT_GE(*s3.report.certified_k, 2u);
  expect_sound(sq, s3.report);
}

TEST(BestBound, Deterministic) {
  const IntPoly f = ip({1, 5, 1, 42});
  const ScanResult a = best_bound(f, BigInt(-5), BigInt(5), BigInt(-5), BigInt(5));
  const ScanResult b = best_bound(f, BigInt(-5), BigInt(5), BigInt(-5), BigInt(5));
  EXPECT_EQ(a.report, b.report);
  EXPECT_EQ(a.report.route, "coro2");
  EXPECT_EQ(*a.report.find("b"), "1");
}

TEST(Soundness, RandomScans) {
  std::mt19937_64 rng(59);
  int certified = 0;
  for (int i = 0; i < 60; ++i) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 5), 12);
    const ScanResult s = best_bound(f, BigInt(-4), BigInt(4), BigInt(-4), BigInt(4), 8);
    if (s.report.certified()) ++certified;
    expect_sound(f, s.report);
  }
  EXPECT_GT(certified, 20);
}

TEST(Consistency, UnitaryCertificateImpliesAdmissible) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 120; ++i) {
    const IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 4), 9, true);
    for (long a = -2; a <= 2; ++a)
      for (long b = -6; b <= 6; ++b) {
        const BigInt fa = eval_at(f, BigInt(a)), fb = eval_at(f, BigInt(b));
        if (a == b || fa == 0 || abs(fa) >= abs(fb)) continue;
        for (unsigned long k = 1; k <= 3; ++k) {
          const CriterionReport u = certify_thm0(f, BigInt(a), BigInt(b), k, DivisorClass::unitary);
          if (!u.certified()) continue;
          const CriterionReport adm = certify_thm0(f, BigInt(a), BigInt(b), k, DivisorClass::admissible);
          EXPECT_TRUE(adm.certified()) << print_canonical(f) << " a=" << a << " b=" << b << " k=" << k;
        }
      }
  }
}

TEST(CertifyPoint, PicksSmallestK) {
  const IntPoly f = ip({1, 0, 12, 0, 35});
  const CriterionReport r = certify_point(f, BigInt(1), BigInt(2), 16, DivisorClass::admissible, best_root_bound(f));
  ASSERT_TRUE(r.certified());
  EXPECT_EQ(*r.certified_k, 2u);
  EXPECT_EQ(r.route, "thm0Explicit.ii");
}
