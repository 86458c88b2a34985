// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "irrcert/bivariate.hpp"
#include "irrcert/criteria.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/ratio_engine.hpp"
#include "irrcert/report.hpp"
#include "irrcert/root_location.hpp"

using namespace irrcert;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

IntPoly ip(std::vector<long> c) {
  std::vector<BigInt> out;
  for (long v : c) out.emplace_back(v);
  return IntPoly(std::move(out));
}

IntPoly random_poly(std::mt19937_64& rng, int deg, long h) {
  std::uniform_int_distribution<long> coef(-h, h);
  std::vector<BigInt> c(deg + 1);
  for (auto& v : c) v = coef(rng);
  while (c[deg] == 0) c[deg] = coef(rng);
  return IntPoly(std::move(c));
}

int run_criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.ok ? "" : " -- ", o.ok ? "" : o.why.str().c_str());
  std::fflush(stdout);
  return o.ok ? 0 : 1;
}

// 35x^4 + 12x^2 + 1 at (1, 2).
void sqrt_circle_end_to_end(Outcome& o) {
  const IntPoly f = ip({1, 0, 12, 0, 35});
  const IntPoly df = derivative(f);
  const BigInt fa = eval_at(f, BigInt(1)), fb = eval_at(f, BigInt(2));
  o.require(fa == 48 && fb == 609, "values differ from 48, 609");
  const Rational expected = make_rational(29, 16);
  const QkResult qk = compute_qk(divisor_set(fa, eval_at(df, BigInt(1))), divisor_set(fb, eval_at(df, BigInt(2))), 2,
                                 DivisorClass::admissible);
  o.require(qk.q == expected, "q_2 = " + to_string(qk.q));
  o.require(brute_qk(fa, eval_at(df, BigInt(1)), fb, eval_at(df, BigInt(2)), 2, DivisorClass::admissible) == expected,
            "brute-force q_2 differs");
  const CriterionReport r = certify_thm0(f, BigInt(1), BigInt(2), 2, DivisorClass::admissible);
  o.require(r.certified_k == 2u && r.route == "thm0Explicit.ii", "route " + r.route);
  const std::string* clearance = r.find("clearance");
  o.require(clearance != nullptr, "no clearance recorded");
  if (clearance) {
    // Recompute from the rational square-root bound independently of the report.
    const Rational s = sqrt_lower_bound(expected, 4);
    o.require(s * s <= expected, "sqrt bound is not a lower bound");
    const Rational c = (s * 1 - abs(Rational(expected - 2))) / (expected - 1);
    o.require(parse_rational(*clearance) == c, "clearance mismatch");
    o.require(std::fabs(c.get_d() - 1.4262) <= 1e-4, "clearance " + std::to_string(c.get_d()));
  }
  o.require(recheck_report(r).reproduced, "re-check failed");
  o.require(count_irreducible_factors(f).count == 2, "oracle count differs from 2");
}

// p(p-1)x^3 + x^2 + (p-2)x + 1 at (0, 1).
void dominant_leading_prime_power(Outcome& o, long p) {
  const IntPoly f = ip({1, p - 2, 1, p * (p - 1)});
  o.require(eval_at(f, BigInt(1)) == p * p, "f(1) != p^2");
  const auto pats = match_prime_pattern(eval_at(f, BigInt(0)), eval_at(f, BigInt(1)), BigInt(p - 2),
                                        eval_at(derivative(f), BigInt(1)));
  bool matched = false;
  for (const auto& pat : pats)
    matched |= pat.shape == PatternShape::coro1main && pat.p == p && pat.k1 == 0 && pat.k2 == 2 && pat.r == 1;
  o.require(matched, "prime-power pattern not matched");
  const CriterionReport r = certify_corollary(f, BigInt(0), BigInt(1));
  o.require(r.route == "coro2" && r.certified_k == 2u, "p=" + std::to_string(p) + " route " + r.route);
  o.require(recheck_report(r).reproduced, "re-check failed");
  const OracleFactorization fac = count_irreducible_factors(f);
  o.require(fac.count == 2, "oracle count differs from 2");
  const std::vector<std::pair<IntPoly, unsigned>> expected{{ip({1, p - 1}), 1}, {ip({1, -1, p}), 1}};
  o.require(fac.factors == expected && fac.unit == 1, "factorization differs");
}

// 573x^3 + x^2 + x + 50 at (0, 1).
void two_times_prime_power(Outcome& o) {
  const IntPoly f = ip({50, 1, 1, 573});
  o.require(eval_at(f, BigInt(0)) == 50 && eval_at(f, BigInt(1)) == 625, "values differ from 50, 625");
  const CriterionReport r = certify_corollary(f, BigInt(0), BigInt(1));
  o.require(r.route == "coro1main" && r.certified_k == 2u, "route " + r.route);
  o.require(r.find("p") && *r.find("p") == "5" && r.find("r") && *r.find("r") == "2", "pattern parameters");
  o.require(recheck_report(r).reproduced, "re-check failed");
  o.require(count_irreducible_factors(f).count <= 2, "oracle count exceeds 2");
}

// ((2X+1)Y^2 + XY + 1)^2 with g = X.
void bivariate_square(Outcome& o) {
  const RatPoly X = RatPoly::x(), one = RatPoly::constant(Rational(1));
  const BivarPoly f({one, Rational(2) * X, X * X + Rational(4) * X + Rational(2) * one,
                     Rational(4) * X * X + Rational(2) * X, pow(Rational(2) * X + one, 2)});
  const RatPoly fx = substitute_y(f, X);
  const RatPoly h = to_rat(ip({1, 0, 2, 2}));
  o.require(poly_kth_root(fx, 2) == h, "square root differs from 2x^3+2x^2+1");
  const CriterionReport r = certify_coro6(f, X);
  o.require(r.route == "coro6" && r.certified_k == 2u, "route " + r.route);
  o.require(r.find("h") && *r.find("h") == "2x^3+2x^2+1", "h differs");
  const auto fac = factor_ratpoly(fx);
  o.require(fac.size() == 1 && fac[0].first == make_monic(h) && fac[0].second == 2, "factorization differs");
  o.require(pow(h, 2) == fx, "h^2 != f(X, X)");
  o.require(recheck_report(r).reproduced, "re-check failed");
}

void random_soundness(Outcome& o) {
  std::mt19937_64 rng(20240611);
  int certified = 0, tried = 0, unsound = 0, recheck_failures = 0;
  while (certified < 200 && tried < 2000) {
    ++tried;
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
    const ScanResult s = best_bound(f, BigInt(-10), BigInt(10), BigInt(-10), BigInt(10));
    if (!s.report.certified()) continue;
    ++certified;
    if (count_irreducible_factors(f).count > *s.report.certified_k) {
      ++unsound;
      o.require(false, "unsound: " + print_canonical(f) + " route " + s.report.route);
    }
    if (!recheck_report(s.report).reproduced) ++recheck_failures;
  }
  o.require(certified >= 200, "only " + std::to_string(certified) + " certified instances");
  o.require(recheck_failures == 0, std::to_string(recheck_failures) + " re-check failures");
  std::printf("    %d instances drawn, %d certified, %d unsound\n", tried, certified, unsound);
}

void ratio_engine_grid(Outcome& o) {
  constexpr long kMax = 2000;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> deriv(-3 * kMax, 3 * kMax);
  std::vector<DivisorSet> sets;
  std::vector<BruteDivisors> brute;
  sets.reserve(kMax + 1);
  brute.reserve(kMax + 1);
  sets.push_back(divisor_set(BigInt(1), BigInt(1)));  // index 0 unused
  brute.push_back(brute_divisors(BigInt(1), BigInt(1)));
  for (long v = 1; v <= kMax; ++v) {
    const BigInt dv(deriv(rng));
    sets.push_back(divisor_set(BigInt(v), dv));
    brute.push_back(brute_divisors(BigInt(v), dv));
  }
  const DivisorClass classes[] = {DivisorClass::admissible, DivisorClass::unitary, DivisorClass::any};
  std::size_t instances = 0;
  for (long fb = 2; fb <= kMax && o.ok; ++fb)
    for (long fa = 1; fa < fb && o.ok; ++fa)
      for (DivisorClass cls : classes) {
        Rational prev;
        for (unsigned long k = 1; k <= 4; ++k) {
          ++instances;
          const Rational q = compute_qk(sets[fa], sets[fb], k, cls).q;
          const Rational b = brute_qk(brute[fa], brute[fb], k, cls);
          if (q != b)
            o.require(false, "fa=" + std::to_string(fa) + " fb=" + std::to_string(fb) + " k=" + std::to_string(k) +
                                 " engine " + to_string(q) + " brute " + to_string(b));
          if (q < 1) o.require(false, "q < 1");
          if (k > 1 && q > prev) o.require(false, "q_k increased in k");
          prev = q;
        }
      }
  std::printf("    %zu (pair, class, k) instances\n", instances);
}

void closed_form_floors(Outcome& o) {
  const long primes[] = {2, 3, 5, 7, 11, 13};
  std::map<std::string, std::size_t> seen;
  std::size_t checked = 0;
  auto check = [&](const BigInt& fa, const BigInt& fb) {
    if (fa >= fb) return;
    for (const PrimePattern& pat : match_prime_pattern(fa, fb, BigInt(1), BigInt(1))) {
      const auto k = corollary_bound(pat);
      const std::string key = pat.shape == PatternShape::coro3main ? "coro3main." + pat.coro3_case
                                                                    : std::string(to_string(pat.shape));
      if (!k) {
        if (pat.coro3_case != "none") o.require(false, "no closed form for " + key);
        continue;
      }
      const DivisorClass cls = pat.shape == PatternShape::coro3main ? DivisorClass::unitary : DivisorClass::any;
      const unsigned long expect = min_k_with_unit_ratio(divisor_set(fa, BigInt(1)), divisor_set(fb, BigInt(1)), cls);
      ++checked;
      ++seen[key];
      if (*k != expect)
        o.require(false, key + " fa=" + fa.get_str() + " fb=" + fb.get_str() + " closed form " +
                             std::to_string(*k) + " exhaustive " + std::to_string(expect));
      if ((pat.coro3_case == "v" || pat.coro3_case == "vi") && *k != 1) o.require(false, key + " not 1");
    }
  };
  for (long p : primes)
    for (long r = 1; r <= 13; ++r)
      for (unsigned k1 = 0; k1 <= 6; ++k1)
        for (unsigned k2 = 0; k2 <= 6; ++k2) {
          const BigInt pk1 = ipow(BigInt(p), k1), pk2 = ipow(BigInt(p), k2);
          if (r < p) check(pk1 * r, pk2);  // |fa| = p^k1 r, |fb| = p^k2
          if (r > 1 && r < p) check(pk1, pk2 * r);
          for (unsigned j = 1; j <= 6; ++j)
            if (r != p && r > 1) check(pk1, pk2 * ipow(BigInt(r), j));
        }
  for (const char* shape : {"coro1main", "coro1main'", "coro1main''"})
    o.require(seen[shape] > 0, std::string("shape never matched: ") + shape);
  for (const char* c : {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"})
    o.require(seen[std::string("coro3main.") + c] > 0, std::string("coro3main case never matched: ") + c);
  std::printf("    %zu patterns checked:", checked);
  for (const auto& [k, n] : seen) std::printf(" %s=%zu", k.c_str(), n);
  std::printf("\n");
}

// A true root lies within inclusion_radius of each approximation.
bool all_roots(const NumericRoots& nr, const std::function<bool(std::complex<double>, double)>& inside) {
  for (std::size_t i = 0; i < nr.roots.size(); ++i)
    if (!inside(nr.roots[i], nr.inclusion_radii[i] + 1e-6)) return false;
  return true;
}

void root_location_soundness(Outcome& o) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> small(-6, 6);
  int rouche = 0, apollonius = 0, half_plane = 0, routh = 0, skipped = 0;
  for (int i = 0; i < 500; ++i) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 8), 50);
    const NumericRoots nr = numeric_roots(f);
    bool validated = nr.converged;
    for (double rad : nr.inclusion_radii) validated = validated && rad < 1e-3;
    if (!validated) {
      ++skipped;
      continue;
    }
    const std::string name = print_canonical(f);
    for (const RootBound& m : {cauchy_bound(f), rouche_bound(f), best_root_bound(f)}) {
      const double R = m.bound.get_d();
      o.require(all_roots(nr, [&](auto z, double tol) { return std::abs(z) < R + tol; }),
                "root bound " + std::string(to_string(m.method)) + " violated by " + name);
    }
    for (int t = 0; t < 4; ++t) {
      const Rational R = make_rational(1 + static_cast<long>(rng() % 40), 4);
      if (rouche_disk_certificate(f, R)) {
        ++rouche;
        o.require(all_roots(nr, [&](auto z, double tol) { return std::abs(z) < R.get_d() + tol; }),
                  "Rouche disk violated by " + name);
      }
      const BigInt a(small(rng));
      BigInt b(small(rng));
      if (a == b) b += 1;
      const Rational q = 1 + make_rational(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 6));
      const ApolloniusCircle c = apollonius_circle(a, b, q);
      if (inside_apollonius_certificate(f, c)) {
        ++apollonius;
        o.require(all_roots(nr,
                            [&](auto z, double tol) {
                              return std::abs(z - c.center.get_d()) < c.radius().get_d() + tol;
                            }),
                  "Apollonius membership violated by " + name);
      }
      if (half_plane_certificate(f, a, b) == HalfPlaneVerdict::certified) {
        ++half_plane;
        const double mid = (a.get_d() + b.get_d()) / 2;
        const bool left = b > a;
        o.require(all_roots(nr, [&](auto z, double tol) { return left ? z.real() < mid + tol : z.real() > mid - tol; }),
                  "half-plane violated by " + name);
      }
    }
    if (routh_hurwitz_stable(to_rat(f)) == HalfPlaneVerdict::certified) {
      ++routh;
      o.require(all_roots(nr, [&](auto z, double tol) { return z.real() < tol; }), "Routh-Hurwitz violated by " + name);
    }
  }
  o.require(rouche > 0 && apollonius > 0 && half_plane > 0 && routh > 0, "some certificate type never fired");
  // Zero pivots must never certify.
  for (const IntPoly& g : {ip({1, 0, 1}), ip({4, 0, 1}), ip({1, 0, 2, 0, 1}), ip({2, 1, 2, 1}), ip({0, 0, 1})})
    o.require(routh_hurwitz_stable(to_rat(g)) == HalfPlaneVerdict::indeterminate,
              "zero pivot not indeterminate for " + print_canonical(g));
  std::printf("    certified: rouche=%d apollonius=%d half_plane=%d routh=%d (skipped %d unvalidated)\n", rouche,
              apollonius, half_plane, routh, skipped);
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "35x^4+12x^2+1 at (1,2): q_2 = 29/16, sqrt-circle route, k = 2, oracle 2", 1.0,
                            sqrt_circle_end_to_end);
  for (long p : {7L, 11L, 13L})
    failures += run_criterion(2, "p(p-1)x^3+x^2+(p-2)x+1 with p = " + std::to_string(p) + ": f(1) = p^2, k = 2", 1.0,
                              [p](Outcome& o) { dominant_leading_prime_power(o, p); });
  failures += run_criterion(3, "573x^3+x^2+x+50: f(0) = 2*5^2, f(1) = 5^4, k = 2", 1.0, two_times_prime_power);
  failures += run_criterion(4, "((2X+1)Y^2+XY+1)^2 at g = X: h = 2X^3+2X^2+1, k = 2", 2.0, bivariate_square);
  failures += run_criterion(5, "random scans never certify fewer factors than the oracle finds", 60.0,
                            random_soundness);
  failures += run_criterion(6, "q_k engine equals brute force on all |f(a)| < |f(b)| <= 2000, k <= 4", 60.0,
                            ratio_engine_grid);
  failures += run_criterion(7, "closed-form corollary floors equal exhaustive minimal k", 10.0, closed_form_floors);
  failures += run_criterion(8, "root-location certificates agree with validated numeric roots", 30.0,
                            root_location_soundness);
  std::printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "acceptance failures present");
  return failures == 0 ? 0 : 1;
}
