// Where the roots of a polynomial are: modulus bounds, Rouche-type disk
// certificates, Apollonius circles, Routh-Hurwitz half-plane tests, and a
// floating-point root finder used for diagnostics and plots only.

#ifndef IRRCERT_ROOT_LOCATION_HPP
#define IRRCERT_ROOT_LOCATION_HPP

#include <complex>
#include <string_view>
#include <vector>

#include "irrcert/poly.hpp"

namespace irrcert {

enum class BoundMethod { cauchy, fujiwara, enestrom_kakeya, littlewood, rouche, user };
std::string_view to_string(BoundMethod m);

/// Every root theta of the tagged polynomial has |theta| <= bound, or
/// |theta| < bound when strict is set.
struct RootBound {
  Rational bound;
  BoundMethod method = BoundMethod::user;
  bool strict = false;
};

/// Open disk |z - center| < sqrt(radius_sq) with real center.
struct Disk {
  Rational center;
  Rational radius_sq;
};

/// Ap(a, b, q): points P with d(P, B) = q * d(P, A), q > 1; the disk around A.
struct ApolloniusCircle {
  BigInt a;
  BigInt b;
  Rational q;
  Rational center;     // (a q^2 - b) / (q^2 - 1)
  Rational radius_sq;  // (q (b - a) / (q^2 - 1))^2

  Disk disk() const { return {center, radius_sq}; }
  Rational radius() const;  // exact: q |b - a| / (q^2 - 1)
};

enum class HalfPlaneVerdict { certified, not_certified, indeterminate };
std::string_view to_string(HalfPlaneVerdict v);

RootBound cauchy_bound(const IntPoly& f);
/// 2 max(|a_{n-i}/a_n|^(1/i), |a_0/(2 a_n)|^(1/n)), roots rounded upward.
RootBound fujiwara_bound(const IntPoly& f);
/// Smallest dyadic radius (24 bisection steps below the Cauchy bound) at
/// which rouche_disk_certificate holds.
RootBound rouche_bound(const IntPoly& f);
/// Tightest of the bounds above plus the Enestrom-Kakeya / Littlewood ones
/// when those apply.
RootBound best_root_bound(const IntPoly& f);

/// |a_n| R^n > sum_{i<n} |a_i| R^i, which forces every root into |z| < R.
bool rouche_disk_certificate(const IntPoly& f, const Rational& radius);
/// Same test with only R^2 known: even and odd powers are separated so that
/// the comparison stays exact for irrational R.
bool rouche_disk_certificate_sq(const RatPoly& f, const Rational& radius_sq);

/// 0 <= a_0 <= a_1 <= ... <= a_n.
bool enestrom_kakeya_applies(const IntPoly& f);
/// Every coefficient (up to the degree) is +1 or -1.
bool littlewood_applies(const IntPoly& f);

/// Throws std::invalid_argument unless q > 1 and a != b.
ApolloniusCircle apollonius_circle(const BigInt& a, const BigInt& b, const Rational& q);
/// Ap(a, b, sqrt(q)) with exact center (a q - b) / (q - 1) and
/// radius^2 = q (b - a)^2 / (q - 1)^2.
Disk sqrt_apollonius_disk(const BigInt& a, const BigInt& b, const Rational& q);

/// Shift to the center, then the Rouche test at the radius. True means every
/// root lies strictly inside.
bool inside_disk_certificate(const IntPoly& f, const Disk& disk);
bool inside_apollonius_certificate(const IntPoly& f, const ApolloniusCircle& circle);

/// Newton lower iterate q / x_n with x_0 = q: r^2 <= q, r > 1, nondecreasing
/// in iterations. Perfect squares return the exact root.
Rational sqrt_lower_bound(const Rational& q, unsigned iterations);
/// Newton upper iterate x_n >= sqrt(q).
Rational sqrt_upper_bound(const Rational& q, unsigned iterations);

/// Routh array with exact rationals. Zero pivots give indeterminate; a
/// coefficient of the wrong strict sign gives not_certified at once.
HalfPlaneVerdict routh_hurwitz_stable(const RatPoly& f);
/// b > a: every root has real part < (a+b)/2; a > b: real part > (a+b)/2.
HalfPlaneVerdict half_plane_certificate(const IntPoly& f, const BigInt& a, const BigInt& b);

struct NumericRoots {
  std::vector<std::complex<double>> roots;
  /// Radius n |f(z)/f'(z)| around each approximation; a root lies within it.
  std::vector<double> inclusion_radii;
  bool converged = false;
};

/// Aberth-Ehrlich iteration in long double. Never used by any certificate.
NumericRoots numeric_roots(const IntPoly& f, unsigned max_iterations = 500);

}  // namespace irrcert

#endif  // IRRCERT_ROOT_LOCATION_HPP
