#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "irrcert/root_location.hpp"
#include "support.hpp"

using namespace irrcert;
using testing_support::horner;
using testing_support::ip;
using testing_support::random_poly;
using testing_support::rq;

namespace {

using cld = std::complex<long double>;

double max_modulus(const IntPoly& f) {
  double m = 0;
  for (const auto& z : numeric_roots(f).roots) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TEST(RootBounds, Cauchy) {
  EXPECT_EQ(cauchy_bound(ip({-1, 0, 1})).bound, 2);
  EXPECT_EQ(cauchy_bound(ip({1, 0, 12, 0, 35})).bound, rq(47, 35));
  EXPECT_EQ(cauchy_bound(ip({0, 0, 0, 1})).bound, 1);
  EXPECT_TRUE(cauchy_bound(ip({1, 1})).strict);
}

TEST(RootBounds, AllMethodsEncloseNumericRoots) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 7), 30);
    const double m = max_modulus(f);
    for (const RootBound& b : {cauchy_bound(f), fujiwara_bound(f), rouche_bound(f), best_root_bound(f)})
      EXPECT_GE(b.bound.get_d(), m - 1e-9) << print_canonical(f) << " " << to_string(b.method);
    EXPECT_LE(best_root_bound(f).bound, cauchy_bound(f).bound);
  }
}

TEST(Rouche, Examples) {
  EXPECT_TRUE(rouche_disk_certificate(ip({1, 5, 1, 42}), rq(1, 2)));
  EXPECT_FALSE(rouche_disk_certificate(ip({-10, 1}), rq(1)));
  EXPECT_TRUE(rouche_disk_certificate(ip({0, 0, 0, 7}), rq(1, 1000)));
}

TEST(CoefficientShapes, EnestromKakeyaAndLittlewood) {
  EXPECT_TRUE(enestrom_kakeya_applies(ip({1, 2, 3})));
  EXPECT_FALSE(enestrom_kakeya_applies(ip({3, 2, 1})));
  EXPECT_TRUE(enestrom_kakeya_applies(ip({0, 1, 1})));
  EXPECT_TRUE(littlewood_applies(ip({1, -1, 1})));
  EXPECT_FALSE(littlewood_applies(ip({1, 0, 1})));
  EXPECT_TRUE(littlewood_applies(ip({-1, -1, -1, -1})));
}

TEST(Apollonius, CircleParameters) {
  const ApolloniusCircle c = apollonius_circle(BigInt(1), BigInt(2), rq(29, 16));
  EXPECT_EQ(c.center, rq(329, 585));
  EXPECT_EQ(c.radius(), rq(464, 585));
  const ApolloniusCircle u = apollonius_circle(BigInt(0), BigInt(1), rq(2));
  EXPECT_EQ(u.center, rq(-1, 3));
  EXPECT_EQ(u.radius(), rq(2, 3));
  EXPECT_THROW(apollonius_circle(BigInt(2), BigInt(1), rq(16, 29)), std::invalid_argument);
}

TEST(Apollonius, RationalPointsSatisfyDistanceRatio) {
  // P = center + r (1 - t^2, 2t) / (1 + t^2) for rational t.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> small(-12, 12), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const BigInt a(small(rng)), b = a + 1 + static_cast<long>(rng() % 9);
    const Rational q = 1 + rq(1 + static_cast<long>(rng() % 20), den(rng));
    const ApolloniusCircle c = apollonius_circle(a, b, q);
    const Rational t = rq(small(rng), den(rng));
    const Rational x = c.center + c.radius() * (1 - t * t) / (1 + t * t);
    const Rational y = c.radius() * 2 * t / (1 + t * t);
    const Rational dA = (x - a) * (x - a) + y * y, dB = (x - b) * (x - b) + y * y;
    EXPECT_EQ(dB, q * q * dA);
    EXPECT_EQ(c.radius() * c.radius(), c.radius_sq);
  }
}

TEST(Apollonius, MembershipExamples) {
  const IntPoly f = ip({1, 0, 12, 0, 35});
  EXPECT_TRUE(inside_disk_certificate(f, sqrt_apollonius_disk(BigInt(1), BigInt(2), rq(29, 16))));
  EXPECT_FALSE(inside_disk_certificate(ip({-5, 1}), Disk{rq(0), rq(1)}));
  EXPECT_TRUE(inside_disk_certificate(ip({1, 0, 1}), Disk{rq(0), rq(4)}));
}

TEST(SqrtBounds, LowerAndUpperIterates) {
  EXPECT_EQ(sqrt_lower_bound(rq(4), 3), 2);
  EXPECT_EQ(sqrt_upper_bound(rq(4), 3), 2);
  // Newton from 1 on q = 2: 3/2, 17/12, 577/408 are upper iterates; 2 / x gives the lower ones.
  EXPECT_EQ(sqrt_upper_bound(rq(2), 3), rq(577, 408));
  EXPECT_EQ(sqrt_lower_bound(rq(2), 3), rq(816, 577));
  EXPECT_GT(rq(577 * 577, 408 * 408), 2);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Rational q = 1 + rq(1 + static_cast<long>(rng() % 500), 1 + static_cast<long>(rng() % 60));
    Rational prev = 0;
    for (unsigned it = 1; it <= 6; ++it) {
      const Rational lo = sqrt_lower_bound(q, it), hi = sqrt_upper_bound(q, it);
      EXPECT_LE(lo * lo, q);
      EXPECT_GE(hi * hi, q);
      EXPECT_GE(lo, prev);
      prev = lo;
    }
  }
}

TEST(RouthHurwitz, Examples) {
  EXPECT_EQ(routh_hurwitz_stable(to_rat(ip({2, 3, 1}))), HalfPlaneVerdict::certified);
  EXPECT_EQ(routh_hurwitz_stable(to_rat(ip({-1, 0, 1}))), HalfPlaneVerdict::not_certified);
  EXPECT_EQ(routh_hurwitz_stable(to_rat(ip({1, 0, 1}))), HalfPlaneVerdict::indeterminate);
}

TEST(HalfPlane, Examples) {
  EXPECT_EQ(half_plane_certificate(ip({2, 3, 1}), BigInt(0), BigInt(3)), HalfPlaneVerdict::certified);
  EXPECT_NE(half_plane_certificate(ip({-1, 1}), BigInt(0), BigInt(1)), HalfPlaneVerdict::certified);
  // Roots 1, 2 lie right of x = 1/2 when a = 3 > b = -2.
  EXPECT_EQ(half_plane_certificate(ip({2, -3, 1}), BigInt(3), BigInt(-2)), HalfPlaneVerdict::certified);
  EXPECT_NE(half_plane_certificate(ip({2, -3, 1}), BigInt(-2), BigInt(3)), HalfPlaneVerdict::certified);
}

TEST(NumericRoots, KnownRoots) {
  const NumericRoots r = numeric_roots(ip({1, 0, 1}));
  ASSERT_EQ(r.roots.size(), 2u);
  for (const auto& z : r.roots) {
    EXPECT_NEAR(std::abs(z.real()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z.imag()), 1.0, 1e-12);
  }
  IntPoly w = ip({1});
  for (long k = 1; k <= 6; ++k) w = w * ip({-k, 1});
  for (const auto& z : numeric_roots(w).roots) EXPECT_NEAR(z.real(), std::round(z.real()), 1e-6);
  const NumericRoots e = numeric_roots(ip({1, 0, 12, 0, 35}));
  for (const auto& z : e.roots) {
    EXPECT_LT(std::abs(z), 1.0);
    EXPECT_NEAR(z.real(), 0.0, 1e-9);
  }
}

TEST(NumericRoots, ResidualsAreSmall) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 5), 20, true);
    const NumericRoots r = numeric_roots(f);
    ASSERT_EQ(r.roots.size(), static_cast<std::size_t>(f.degree()));
    for (const auto& z : r.roots) {
      long double scale = 0;
      for (int j = 0; j <= f.degree(); ++j) scale += std::abs(f[j].get_d()) * std::pow(std::abs(z), j);
      EXPECT_LT(std::abs(horner(f, cld(z))), 1e-9L * scale) << print_canonical(f);
    }
  }
}
