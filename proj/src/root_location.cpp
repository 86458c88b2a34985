#include "irrcert/root_location.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace irrcert {

std::string_view to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::cauchy: return "cauchy";
    case BoundMethod::fujiwara: return "fujiwara";
    case BoundMethod::enestrom_kakeya: return "enestrom_kakeya";
    case BoundMethod::littlewood: return "littlewood";
    case BoundMethod::rouche: return "rouche";
    case BoundMethod::user: return "user";
  }
  return "?";
}

std::string_view to_string(HalfPlaneVerdict v) {
  switch (v) {
    case HalfPlaneVerdict::certified: return "certified";
    case HalfPlaneVerdict::not_certified: return "not_certified";
    case HalfPlaneVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

Rational ApolloniusCircle::radius() const {
  const Rational q2 = q * q;
  return q * Rational(abs(b - a)) / (q2 - 1);
}

namespace {

void require_nonconstant(const IntPoly& f, const char* who) {
  if (f.degree() < 1) throw std::invalid_argument(std::string(who) + ": polynomial must have degree >= 1");
}

}  // namespace

RootBound cauchy_bound(const IntPoly& f) {
  require_nonconstant(f, "cauchy_bound");
  const auto& c = f.coefficients();
  const BigInt lead = abs(f.leading());
  BigInt top = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) top = std::max(top, BigInt(abs(c[i])));
  return {1 + make_rational(top, lead), BoundMethod::cauchy, true};
}

RootBound fujiwara_bound(const IntPoly& f) {
  require_nonconstant(f, "fujiwara_bound");
  const auto& c = f.coefficients();
  const std::size_t n = c.size() - 1;
  const BigInt lead = abs(f.leading());
  Rational best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational ratio = make_rational(abs(c[n - i]), lead);
    if (i == n) ratio /= 2;
    best = std::max(best, root_upper_bound(ratio, i));
  }
  return {2 * best, BoundMethod::fujiwara, false};
}

bool rouche_disk_certificate(const IntPoly& f, const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("rouche_disk_certificate: radius must be positive");
  require_nonconstant(f, "rouche_disk_certificate");
  const auto& c = f.coefficients();
  const std::size_t n = c.size() - 1;
  Rational rhs = 0;
  Rational rpow = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rhs += Rational(abs(c[i])) * rpow;
    rpow *= radius;
  }
  return Rational(abs(c[n])) * rpow > rhs;
}

bool rouche_disk_certificate_sq(const RatPoly& f, const Rational& radius_sq) {
  if (radius_sq <= 0) throw std::invalid_argument("rouche_disk_certificate_sq: radius^2 must be positive");
  if (f.is_zero()) return false;
  const auto& c = f.coefficients();
  const std::size_t n = c.size() - 1;
  // |b_n| R^n - sum_{i<n} |b_i| R^i = even + R * odd.
  Rational even = 0, odd = 0;
  Rational rsq_pow = 1;  // rsq^(i/2) for the current pair of exponents
  for (std::size_t i = 0; i <= n; ++i) {
    Rational t = abs(c[i]);
    if (i < n) t = -t;
    if (i % 2 == 0) {
      even += t * rsq_pow;
    } else {
      odd += t * rsq_pow;
      rsq_pow *= radius_sq;
    }
  }
  if (odd == 0) return even > 0;
  if (even >= 0 && odd > 0) return true;
  if (even <= 0 && odd < 0) return false;
  if (even > 0) return even * even > radius_sq * odd * odd;  // odd < 0
  return radius_sq * odd * odd > even * even;                 // even < 0 < odd
}

RootBound rouche_bound(const IntPoly& f) {
  const RootBound cauchy = cauchy_bound(f);
  if (!rouche_disk_certificate(f, cauchy.bound)) return cauchy;
  Rational lo = 0, hi = cauchy.bound;
  for (int step = 0; step < 24; ++step) {
    Rational mid = (lo + hi) / 2;
    if (rouche_disk_certificate(f, mid)) hi = mid;
    else lo = mid;
  }
  return {hi, BoundMethod::rouche, true};
}

bool enestrom_kakeya_applies(const IntPoly& f) {
  if (f.is_zero()) return false;
  const auto& c = f.coefficients();
  if (c.front() < 0) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1]) return false;
  }
  return true;
}

bool littlewood_applies(const IntPoly& f) {
  if (f.is_zero()) return false;
  return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                     [](const BigInt& v) { return v == 1 || v == -1; });
}

RootBound best_root_bound(const IntPoly& f) {
  std::vector<RootBound> candidates{cauchy_bound(f), fujiwara_bound(f), rouche_bound(f)};
  if (enestrom_kakeya_applies(f)) candidates.push_back({Rational(1), BoundMethod::enestrom_kakeya, false});
  if (littlewood_applies(f)) candidates.push_back({Rational(2), BoundMethod::littlewood, true});
  RootBound best = candidates.front();
  for (const auto& cand : candidates) {
    if (cand.bound < best.bound || (cand.bound == best.bound && cand.strict && !best.strict)) best = cand;
  }
  return best;
}

ApolloniusCircle apollonius_circle(const BigInt& a, const BigInt& b, const Rational& q) {
  if (q <= 1) throw std::invalid_argument("apollonius_circle: ratio must exceed 1");
  if (a == b) throw std::invalid_argument("apollonius_circle: a and b must differ");
  const Rational q2 = q * q;
  const Rational denom = q2 - 1;
  ApolloniusCircle c{a, b, q, (Rational(a) * q2 - Rational(b)) / denom, 0};
  const Rational r = q * Rational(b - a) / denom;
  c.radius_sq = r * r;
  return c;
}

Disk sqrt_apollonius_disk(const BigInt& a, const BigInt& b, const Rational& q) {
  if (q <= 1) throw std::invalid_argument("sqrt_apollonius_disk: ratio must exceed 1");
  if (a == b) throw std::invalid_argument("sqrt_apollonius_disk: a and b must differ");
  const Rational denom = q - 1;
  const Rational diff = Rational(b - a);
  return {(Rational(a) * q - Rational(b)) / denom, q * diff * diff / (denom * denom)};
}

bool inside_disk_certificate(const IntPoly& f, const Disk& disk) {
  require_nonconstant(f, "inside_disk_certificate");
  return rouche_disk_certificate_sq(taylor_shift(f, disk.center), disk.radius_sq);
}

bool inside_apollonius_certificate(const IntPoly& f, const ApolloniusCircle& circle) {
  return inside_disk_certificate(f, circle.disk());
}

namespace {

Rational newton_sqrt_iterate(const Rational& q, unsigned iterations) {
  Rational x = q;
  for (unsigned i = 0; i < iterations; ++i) x = (x + q / x) / 2;
  return x;
}

constexpr unsigned kMaxSqrtIterations = 12;

}  // namespace

Rational sqrt_lower_bound(const Rational& q, unsigned iterations) {
  if (q <= 1) throw std::invalid_argument("sqrt_lower_bound: q must exceed 1");
  if (auto exact = exact_root(q, 2)) return *exact;
  iterations = std::clamp(iterations, 1u, kMaxSqrtIterations);
  return q / newton_sqrt_iterate(q, iterations);
}

Rational sqrt_upper_bound(const Rational& q, unsigned iterations) {
  if (q <= 1) throw std::invalid_argument("sqrt_upper_bound: q must exceed 1");
  if (auto exact = exact_root(q, 2)) return *exact;
  iterations = std::clamp(iterations, 1u, kMaxSqrtIterations);
  return newton_sqrt_iterate(q, iterations);
}

HalfPlaneVerdict routh_hurwitz_stable(const RatPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("routh_hurwitz_stable: degree must be >= 1");
  const auto& c = f.coefficients();
  const std::size_t n = c.size() - 1;
  const int lead_sign = sgn(c[n]);
  for (const auto& v : c) {
    if (v != 0 && sgn(v) != lead_sign) return HalfPlaneVerdict::not_certified;
  }
  std::vector<std::vector<Rational>> rows(2);
  for (std::size_t i = 0; i <= n; ++i) rows[i % 2].push_back(c[n - i]);
  auto at = [](const std::vector<Rational>& row, std::size_t j) { return j < row.size() ? row[j] : Rational(0); };
  for (std::size_t i = 2; i <= n; ++i) {
    const auto& upper = rows[i - 2];
    const auto& lower = rows[i - 1];
    if (lower.empty() || lower[0] == 0) return HalfPlaneVerdict::indeterminate;
    std::vector<Rational> next(std::max<std::size_t>(upper.size(), 2) - 1);
    for (std::size_t j = 0; j < next.size(); ++j)
      next[j] = (lower[0] * at(upper, j + 1) - upper[0] * at(lower, j + 1)) / lower[0];
    rows.push_back(std::move(next));
  }
  for (const auto& row : rows) {
    if (row.empty() || row[0] == 0) return HalfPlaneVerdict::indeterminate;
    if (sgn(row[0]) != lead_sign) return HalfPlaneVerdict::not_certified;
  }
  return HalfPlaneVerdict::certified;
}

HalfPlaneVerdict half_plane_certificate(const IntPoly& f, const BigInt& a, const BigInt& b) {
  if (a == b) throw std::invalid_argument("half_plane_certificate: a and b must differ");
  require_nonconstant(f, "half_plane_certificate");
  const Rational mid = make_rational(a + b, 2);
  return routh_hurwitz_stable(b > a ? taylor_shift(f, mid) : reflect_shift(f, mid));
}

NumericRoots numeric_roots(const IntPoly& f, unsigned max_iterations) {
  require_nonconstant(f, "numeric_roots");
  using cld = std::complex<long double>;
  NumericRoots out;
  const auto& c = f.coefficients();
  std::size_t zeros = 0;
  while (c[zeros] == 0) ++zeros;
  std::vector<long double> a;
  for (std::size_t i = zeros; i < c.size(); ++i) a.push_back(static_cast<long double>(c[i].get_d()));
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < zeros; ++i) {
    out.roots.emplace_back(0.0, 0.0);
    out.inclusion_radii.push_back(0.0);
  }
  if (n == 0) {
    out.converged = true;
    return out;
  }
  const long double lead = a[n];
  for (auto& v : a) v /= lead;

  long double radius = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    long double t = std::fabs(a[n - i]);
    if (i == n) t /= 2;
    radius = std::max(radius, std::pow(t, 1.0L / static_cast<long double>(i)));
  }
  radius = std::max(2 * radius, 1e-3L);

  auto eval = [&](const cld& z, cld& p, cld& dp, long double& abs_sum) {
    p = a[n];
    dp = 0;
    abs_sum = std::fabs(a[n]);
    const long double az = std::abs(z);
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[i];
      abs_sum = abs_sum * az + std::fabs(a[i]);
    }
  };

  std::vector<cld> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n + 0.4L;
    z[k] = std::polar(radius, angle);
  }
  const long double tol = 64 * std::numeric_limits<long double>::epsilon();
  bool done = false;
  for (unsigned it = 0; it < max_iterations && !done; ++it) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      cld p, dp;
      long double abs_sum;
      eval(z[i], p, dp, abs_sum);
      if (std::abs(p) <= tol * abs_sum) continue;
      const cld ratio = p / dp;
      cld s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += 1.0L / (z[i] - z[j]);
      }
      const cld w = ratio / (1.0L - ratio * s);
      z[i] -= w;
      if (std::abs(w) > tol * std::max(1.0L, std::abs(z[i]))) done = false;
    }
  }
  out.converged = done;
  const long double gamma = 4 * static_cast<long double>(n) * std::numeric_limits<long double>::epsilon();
  for (const auto& zi : z) {
    cld p, dp;
    long double abs_sum;
    eval(zi, p, dp, abs_sum);
    const long double err = std::abs(p) + gamma * abs_sum;
    const long double adp = std::abs(dp);
    const long double r = adp > 0 ? static_cast<long double>(n) * err / adp : std::numeric_limits<long double>::infinity();
    out.roots.emplace_back(static_cast<double>(zi.real()), static_cast<double>(zi.imag()));
    out.inclusion_radii.push_back(static_cast<double>(r));
  }
  return out;
}

}  // namespace irrcert
