#include "irrcert/criteria.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <tuple>

namespace irrcert {

bool CriterionReport::preconditions_passed() const {
  return std::all_of(preconditions.begin(), preconditions.end(), [](const auto& c) { return c.passed; });
}

const std::string* CriterionReport::find(std::string_view name) const {
  for (const auto& [key, value] : evidence) {
    if (key == name) return &value;
  }
  return nullptr;
}

void CriterionReport::set(std::string name, std::string value) {
  for (auto& [key, old] : evidence) {
    if (key == name) {
      old = std::move(value);
      return;
    }
  }
  evidence.emplace_back(std::move(name), std::move(value));
}

bool CriterionReport::check(std::string name, bool passed, std::string detail) {
  preconditions.push_back({std::move(name), passed, std::move(detail)});
  return passed;
}

std::string_view to_string(PatternShape s) {
  switch (s) {
    case PatternShape::coro1main: return "coro1main";
    case PatternShape::coro1main_prime: return "coro1main'";
    case PatternShape::coro1main_second: return "coro1main''";
    case PatternShape::coro3main: return "coro3main";
  }
  return "?";
}

std::pair<BigInt, BigInt> PrimePattern::values() const {
  switch (shape) {
    case PatternShape::coro1main: return {ipow(p, k1) * r, ipow(p, k2)};
    case PatternShape::coro1main_prime:
    case PatternShape::coro1main_second: return {ipow(p, k1), ipow(p, k2) * r};
    case PatternShape::coro3main: return {ipow(p, k1), ipow(p, k2) * ipow(r, j)};
  }
  return {0, 0};
}

namespace {

BigInt absval(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
Rational absval(const Rational& x) { return x < 0 ? Rational(-x) : x; }

BigInt gcd_of(const BigInt& x, const BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

struct PointValues {
  BigInt fa, fb, dfa, dfb;
};

PointValues point_values(const IntPoly& f, const IntPoly& df, const BigInt& a, const BigInt& b) {
  return {eval_at(f, a), eval_at(f, b), eval_at(df, a), eval_at(df, b)};
}

void record_point(CriterionReport& r, const IntPoly& f, const BigInt& a, const BigInt& b, const PointValues& v) {
  r.set("f", print_canonical(f));
  r.set("a", a);
  r.set("b", b);
  r.set("f_a", v.fa);
  r.set("f_b", v.fb);
  r.set("df_a", v.dfa);
  r.set("df_b", v.dfb);
}

bool check_basic(CriterionReport& r, const IntPoly& f, const PointValues& v, DivisorClass cls) {
  bool ok = r.check("degree_positive", f.degree() >= 1, "deg f = " + std::to_string(f.degree()));
  ok = r.check("f_a_nonzero", v.fa != 0, "f(a) = " + to_string(v.fa)) && ok;
  ok = r.check("abs_f_a_lt_abs_f_b", absval(v.fa) < absval(v.fb),
               "|f(a)| = " + to_string(absval(v.fa)) + ", |f(b)| = " + to_string(absval(v.fb))) &&
       ok;
  if (cls == DivisorClass::unitary) {
    const BigInt ga = gcd_of(v.fa, v.dfa), gb = gcd_of(v.fb, v.dfb);
    ok = r.check("gcd_f_a_df_a_is_1", ga == 1, "gcd = " + to_string(ga)) && ok;
    ok = r.check("gcd_f_b_df_b_is_1", gb == 1, "gcd = " + to_string(gb)) && ok;
  }
  return ok;
}

struct RouteHit {
  std::string route;
  std::vector<std::pair<std::string, std::string>> evidence;
  std::vector<PreconditionCheck> checks;

  void put(std::string name, std::string value) { evidence.emplace_back(std::move(name), std::move(value)); }
  void pass(std::string name, std::string detail = {}) { checks.push_back({std::move(name), true, std::move(detail)}); }
};

using Attempts = std::vector<std::string>;

class RationalRootCache {
 public:
  explicit RationalRootCache(const IntPoly& f) : f_(f) {}
  bool none() {
    if (!none_) none_ = rational_roots(f_).empty();
    return *none_;
  }

 private:
  const IntPoly& f_;
  std::optional<bool> none_;
};

std::string thm0_route(DivisorClass cls, std::string_view which) {
  const bool uni = cls == DivisorClass::unitary;
  if (which == "iii") return uni ? "thm0unitary.iii" : "thm0.iii";
  return std::string(uni ? "thm0unitaryExplicit." : "thm0Explicit.") + std::string(which);
}

std::string thm1_route(DivisorClass cls, std::string_view which) {
  return std::string(cls == DivisorClass::unitary ? "thm3." : "thm1.") + std::string(which);
}

void put_q(CriterionReport& r, const QkResult& qk) {
  r.set("k", BigInt(qk.k));
  r.set("q", qk.q);
  r.set("q_d1", qk.d1);
  r.set("q_d2", qk.d2);
}

void put_bound(RouteHit& h, const RootBound& m) {
  h.put("M_hat", to_string(m.bound));
  h.put("M_hat_method", std::string(to_string(m.method)));
  h.put("M_hat_strict", m.strict ? "true" : "false");
}

void apply(CriterionReport& r, RouteHit&& hit, unsigned long k) {
  r.route = std::move(hit.route);
  r.certified_k = k;
  for (auto& [name, value] : hit.evidence) r.set(std::move(name), std::move(value));
  for (auto& c : hit.checks) r.preconditions.push_back(std::move(c));
}

void fail(CriterionReport& r, const Attempts& attempts) {
  std::string detail;
  for (const auto& a : attempts) detail += (detail.empty() ? "" : "; ") + a;
  r.check("route_conditions", false, detail);
}

std::optional<RouteHit> thm0_hit(const IntPoly& f, const BigInt& a, const BigInt& b, const QkResult& qk,
                                 RationalRootCache& roots, DivisorClass cls, Attempts& attempts) {
  const Rational& q = qk.q;
  if (q > 1) {
    if (roots.none()) {
      const Disk disk = sqrt_apollonius_disk(a, b, q);
      if (inside_disk_certificate(f, disk)) {
        RouteHit h{thm0_route(cls, "ii"), {}, {}};
        const Rational s = sqrt_lower_bound(q, 4);
        const Rational clearance = (s * Rational(absval(BigInt(b - a))) - absval(Rational(a) * q - Rational(b))) / (q - 1);
        h.put("center", to_string(disk.center));
        h.put("radius_sq", to_string(disk.radius_sq));
        h.put("sqrt_q_lower", to_string(s));
        h.put("clearance", to_string(clearance));
        h.pass("q_gt_1");
        h.pass("no_rational_roots");
        h.pass("roots_inside_sqrt_circle", "Rouche test after shifting to the center");
        return h;
      }
      attempts.push_back("sqrt circle: Rouche test failed");
    } else {
      attempts.push_back("sqrt circle: f has a rational root");
    }
    const ApolloniusCircle circle = apollonius_circle(a, b, q);
    if (inside_apollonius_certificate(f, circle)) {
      RouteHit h{thm0_route(cls, "i"), {}, {}};
      h.put("center", to_string(circle.center));
      h.put("radius_sq", to_string(circle.radius_sq));
      h.pass("q_gt_1");
      h.pass("roots_inside_circle", "Rouche test after shifting to the center");
      return h;
    }
    attempts.push_back("q circle: Rouche test failed");
    return std::nullopt;
  }
  const HalfPlaneVerdict v = half_plane_certificate(f, a, b);
  if (v == HalfPlaneVerdict::certified) {
    RouteHit h{thm0_route(cls, "iii"), {}, {}};
    h.put("midpoint", to_string(make_rational(a + b, 2)));
    h.put("half_plane", "certified");
    h.pass("q_eq_1");
    h.pass(b > a ? "roots_left_of_midpoint" : "roots_right_of_midpoint", "Routh-Hurwitz after shifting");
    return h;
  }
  attempts.push_back("half-plane: " + std::string(to_string(v)));
  return std::nullopt;
}

// lhs > rhs, or lhs >= rhs when the root bound is strict and rhs grows with it.
bool exceeds(const Rational& lhs, const Rational& rhs, bool strict_bound) {
  return strict_bound ? lhs >= rhs : lhs > rhs;
}

std::optional<RouteHit> thm1_hit(const BigInt& a, const BigInt& b, const QkResult& qk, const RootBound& m,
                                 RationalRootCache& roots, DivisorClass cls, Attempts& attempts) {
  const Rational& q = qk.q;
  const Rational A = absval(Rational(a)), B = absval(Rational(b)), M = m.bound;
  const Rational t1 = q * A + (1 + q) * M;
  if (exceeds(B, t1, m.strict)) {
    RouteHit h{thm1_route(cls, "i"), {}, {}};
    put_bound(h, m);
    h.put("threshold", to_string(t1));
    h.pass("abs_b_exceeds_q_abs_a_plus_1_plus_q_M");
    return h;
  }
  attempts.push_back("|b| > q|a| + (1+q)M fails");
  const Rational lhs = B - M, rhs_base = A + M;
  if (lhs > 0) {
    const Rational l2 = lhs * lhs, r2 = q * rhs_base * rhs_base;
    if ((m.strict ? l2 >= r2 : l2 > r2)) {
      if (roots.none()) {
        RouteHit h{thm1_route(cls, "ii"), {}, {}};
        put_bound(h, m);
        h.pass("abs_b_exceeds_sqrt_q_abs_a_plus_1_plus_sqrt_q_M", "(|b| - M)^2 vs q (|a| + M)^2");
        h.pass("no_rational_roots");
        return h;
      }
      attempts.push_back("sqrt form holds but f has a rational root");
    } else {
      attempts.push_back("|b| > sqrt(q)|a| + (1+sqrt(q))M fails");
    }
  }
  if (q == 1) {
    const Rational half = absval(Rational(a + b)) / 2;
    if (a * a < b * b && (m.strict ? M <= half : M < half)) {
      RouteHit h{thm1_route(cls, "iii"), {}, {}};
      put_bound(h, m);
      h.put("half_sum", to_string(half));
      h.pass("q_eq_1");
      h.pass("a_sq_lt_b_sq");
      h.pass("M_lt_half_abs_a_plus_b");
      return h;
    }
    attempts.push_back("q = 1 but a^2 < b^2 and M < |a+b|/2 not both hold");
  }
  return std::nullopt;
}

std::optional<int> remark1_case(const BigInt& a, const BigInt& b, const Rational& q) {
  const Rational A = absval(Rational(a)), B = absval(Rational(b));
  if (a > 0 && b < 0 && B > A && q * A < B) return 1;
  if (b > a && a > 0) {
    if (q * q * A < B) return 2;
    if (q * A < B) return 3;
  }
  if (a == 0 && b != 0) return 4;
  if (a < 0 && b > 0 && B > A && q * A < B) return 5;
  if (b < a && a < 0) {
    if (q * q * A < B) return 6;
    if (q * A < B) return 7;
  }
  return std::nullopt;
}

std::optional<RouteHit> remark1_hit(const BigInt& a, const BigInt& b, const QkResult& qk, const RootBound& m,
                                    Attempts& attempts) {
  const Rational& q = qk.q;
  if (q <= 1) {
    attempts.push_back("relaxed circle cases need q > 1");
    return std::nullopt;
  }
  const auto c = remark1_case(a, b, q);
  if (!c) {
    attempts.push_back("no relaxed sign case applies");
    return std::nullopt;
  }
  const Rational A = absval(Rational(a)), B = absval(Rational(b)), M = m.bound;
  Rational threshold;
  switch (*c) {
    case 1:
    case 5: threshold = q * A + (1 + q) * M; break;
    case 2:
    case 6: threshold = -q * A + (1 + q) * M; break;
    case 3:
    case 7: threshold = q * A + (q - 1) * M; break;
    default: threshold = (1 + q) * M; break;
  }
  if (!exceeds(B, threshold, m.strict)) {
    attempts.push_back("relaxed case " + std::to_string(*c) + ": |b| <= " + to_string(threshold));
    return std::nullopt;
  }
  RouteHit h{"remark1.case" + std::to_string(*c), {}, {}};
  put_bound(h, m);
  h.put("remark1_case", std::to_string(*c));
  h.put("threshold", to_string(threshold));
  h.pass("q_gt_1");
  h.pass("sign_case", "case " + std::to_string(*c));
  h.pass("abs_b_exceeds_threshold");
  return h;
}

struct Prepared {
  std::optional<DivisorSet> da, db;
};

bool prepare_divisors(CriterionReport& r, const PointValues& v, const FactorConfig& cfg, Prepared& out) {
  try {
    out.da.emplace(divisor_set(v.fa, v.dfa, cfg));
    out.db.emplace(divisor_set(v.fb, v.dfb, cfg));
    return true;
  } catch (const FactorizationBudgetExceeded& e) {
    r.check("factorization", false, "could not factor " + to_string(e.cofactor()));
    return false;
  }
}

template <class RouteFn>
CriterionReport run_theorem(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k, DivisorClass cls,
                            const FactorConfig& cfg, RouteFn&& route) {
  CriterionReport r;
  r.divisor_class = cls;
  const PointValues v = point_values(f, derivative(f), a, b);
  record_point(r, f, a, b, v);
  r.set("k", BigInt(k));
  if (!r.check("k_positive", k >= 1)) return r;
  if (!check_basic(r, f, v, cls)) return r;
  Prepared p;
  if (!prepare_divisors(r, v, cfg, p)) return r;
  const QkResult qk = compute_qk(*p.da, *p.db, k, cls);
  put_q(r, qk);
  RationalRootCache roots(f);
  Attempts attempts;
  if (auto hit = route(qk, roots, attempts)) apply(r, std::move(*hit), k);
  else fail(r, attempts);
  return r;
}

}  // namespace

CriterionReport certify_thm0(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k, DivisorClass cls,
                             const FactorConfig& cfg) {
  return run_theorem(f, a, b, k, cls, cfg, [&](const QkResult& qk, RationalRootCache& roots, Attempts& at) {
    return thm0_hit(f, a, b, qk, roots, cls, at);
  });
}

CriterionReport certify_thm1(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k, DivisorClass cls,
                             const RootBound& m_hat, const FactorConfig& cfg) {
  return run_theorem(f, a, b, k, cls, cfg, [&](const QkResult& qk, RationalRootCache& roots, Attempts& at) {
    return thm1_hit(a, b, qk, m_hat, roots, cls, at);
  });
}

CriterionReport remark1_relaxed(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                                DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg) {
  return run_theorem(f, a, b, k, cls, cfg, [&](const QkResult& qk, RationalRootCache&, Attempts& at) {
    return remark1_hit(a, b, qk, m_hat, at);
  });
}

std::vector<PrimePattern> match_prime_pattern(const BigInt& fa, const BigInt& fb, const BigInt& dfa,
                                              const BigInt& dfb, const FactorConfig& cfg) {
  std::vector<PrimePattern> out;
  const BigInt A = absval(fa), B = absval(fb);
  if (A == 0 || B == 0) return out;
  const Factorization FA = factor_integer(A, cfg), FB = factor_integer(B, cfg);

  if (FB.factors.size() == 1) {
    const auto& [p, k2] = *FB.factors.begin();
    const unsigned k1 = FA.exponent_of(p);
    const BigInt r = A / ipow(p, k1);
    if (r < p && k2 > k1) {
      PrimePattern pat;
      pat.shape = PatternShape::coro1main;
      pat.p = p;
      pat.r = r;
      pat.k1 = k1;
      pat.k2 = k2;
      out.push_back(pat);
    }
  }

  if (FA.factors.size() == 1) {
    const auto& [p, k1] = *FA.factors.begin();
    const unsigned k2 = FB.exponent_of(p);
    const BigInt r = B / ipow(p, k2);
    if (r > 1 && r < p && k2 >= k1) {
      PrimePattern pat;
      pat.p = p;
      pat.r = r;
      pat.k1 = k1;
      pat.k2 = k2;
      pat.q = factor_integer(r, cfg).factors.begin()->first;
      if (pat.q == r) {
        pat.shape = PatternShape::coro1main_prime;
        out.push_back(pat);
      }
      pat.shape = PatternShape::coro1main_second;
      out.push_back(pat);
    }
    if (FB.factors.size() == 2 && k2 > 0 && B > A) {
      PrimePattern pat;
      pat.shape = PatternShape::coro3main;
      pat.p = p;
      pat.k1 = k1;
      pat.k2 = k2;
      for (const auto& [prime, e] : FB.factors) {
        if (prime != p) {
          pat.r = prime;
          pat.j = e;
        }
      }
      pat.q = pat.r;
      auto divides = [](const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; };
      if (!divides(p, dfa) && !divides(p, dfb) && !divides(pat.r, dfb)) {
        const BigInt R = ipow(pat.r, pat.j), P1 = ipow(p, k1);
        std::string c = "none";
        if (k1 < k2) {
          const BigInt Pd = ipow(p, k2 - k1);
          if (R < P1 && R < Pd) c = "i";
          else if (R > P1 && R < Pd) c = "ii";
        } else if (k1 == k2) {
          const BigInt P2 = ipow(p, 2 * k1);
          if (R > P2) c = "iii";
          else if (R > P1) c = "iv";
          else c = "v";
        } else {
          const BigInt Ps = ipow(p, k1 + k2);
          if (R < P1) c = "vi";
          else if (R > Ps) c = "vii";
          else c = "viii";
        }
        pat.coro3_case = c;
        out.push_back(pat);
      }
    }
  }
  return out;
}

std::optional<unsigned long> corollary_bound(const PrimePattern& pat) {
  const Rational p(pat.p), r(pat.r);
  switch (pat.shape) {
    case PatternShape::coro1main: return 1 + floor_log(p / r, ipow(p, pat.k2 - pat.k1 - 1));
    case PatternShape::coro1main_prime: return 1 + floor_log(r, ipow(p, pat.k2 - pat.k1));
    case PatternShape::coro1main_second: {
      const Rational q(pat.q);
      return 1 + floor_log(q, ipow(p, pat.k2 - pat.k1) * r / q);
    }
    case PatternShape::coro3main: break;
  }
  const Rational rj = ipow(r, pat.j), pk1 = ipow(p, pat.k1);
  const std::string& c = pat.coro3_case;
  if (c == "i") return 1 + floor_log(rj, ipow(p, pat.k2 - pat.k1));
  if (c == "ii" || c == "viii") return 1 + floor_log(rj / pk1, ipow(p, pat.k2));
  if (c == "iii") return floor_log(pk1, rj);
  if (c == "iv") return 1 + floor_log(rj / pk1, pk1);
  if (c == "v" || c == "vi") return 1;
  if (c == "vii") return 1 + floor_log(ipow(p, pat.k2), rj / pk1);
  return std::nullopt;
}

namespace {

struct CorollaryCandidate {
  std::string route;
  unsigned long k;
  DivisorClass cls;
  RootBound m_hat;
  std::optional<PrimePattern> pattern;
  std::vector<PreconditionCheck> checks;
};

void put_pattern(CriterionReport& r, const PrimePattern& pat) {
  r.set("pattern", std::string(to_string(pat.shape)));
  r.set("p", pat.p);
  r.set("r", pat.r);
  r.set("pattern_q", pat.q);
  r.set("j", BigInt(pat.j));
  r.set("k1", BigInt(pat.k1));
  r.set("k2", BigInt(pat.k2));
  if (pat.shape == PatternShape::coro3main) r.set("coro3_case", pat.coro3_case);
}

std::vector<CorollaryCandidate> corollary_candidates(const IntPoly& f, const BigInt& a, const BigInt& b,
                                                     const PointValues& v, const FactorConfig& cfg) {
  std::vector<CorollaryCandidate> out;
  if (f.degree() < 1 || v.fa == 0 || v.fb == 0 || absval(v.fa) >= absval(v.fb)) return out;
  const auto& c = f.coefficients();
  const std::size_t n = c.size() - 1;

  // coro2: a = 0, a_0 != 0, |a_n| > sum 2^(n-i) |a_i|, |f(b)| = p^k with p > |a_0|.
  if (a == 0 && b != 0 && c[0] != 0) {
    BigInt dominated = 0;
    for (std::size_t i = 0; i < n; ++i) dominated += absval(c[i]) * ipow(BigInt(2), n - i);
    if (absval(c[n]) > dominated) {
      const Factorization FB = factor_integer(absval(v.fb), cfg);
      if (FB.factors.size() == 1 && FB.factors.begin()->first > absval(c[0])) {
        const auto& [p, e] = *FB.factors.begin();
        const Rational base = make_rational(p, absval(c[0]));
        CorollaryCandidate cand{"coro2", 1 + floor_log(base, ipow(Rational(p), e - 1)), DivisorClass::any,
                                {make_rational(1, 2), BoundMethod::rouche, true}, std::nullopt, {}};
        PrimePattern pat;
        pat.shape = PatternShape::coro1main;
        pat.p = p;
        pat.r = absval(c[0]);
        pat.k2 = e;
        cand.pattern = pat;
        cand.checks = {{"a_is_0", true, ""},
                       {"a0_nonzero", true, ""},
                       {"leading_dominates_powers_of_2", true, to_string(absval(c[n])) + " > " + to_string(dominated)},
                       {"f_b_prime_power_p_gt_abs_a0", true, ""}};
        out.push_back(std::move(cand));
      }
    }
  }

  const std::vector<PrimePattern> patterns = match_prime_pattern(v.fa, v.fb, v.dfa, v.dfb, cfg);
  if (patterns.empty()) return out;

  const bool a2_lt_b2 = a * a < b * b;
  const Rational half = absval(Rational(a + b)) / 2;
  const bool rouche_half = a2_lt_b2 && rouche_disk_certificate(f, half);
  const bool ek = enestrom_kakeya_applies(f) && c[0] != 0 && a > 0 && b > 0;
  const bool lw_nonneg = littlewood_applies(f) && a >= 0 && b >= 0 && a + b >= 4 && a2_lt_b2;
  const bool lw_pos = lw_nonneg && a > 0 && b > 0;

  for (const auto& pat : patterns) {
    const auto bound = corollary_bound(pat);
    if (!bound) continue;
    auto add = [&](const std::string& route, DivisorClass cls, const RootBound& m, std::vector<PreconditionCheck> checks) {
      checks.push_back({"pattern_" + std::string(to_string(pat.shape)), true, ""});
      out.push_back({route, *bound, cls, m, pat, std::move(checks)});
    };
    const RootBound rouche_m{half, BoundMethod::rouche, true};
    const std::vector<PreconditionCheck> rouche_checks{{"a_sq_lt_b_sq", true, ""},
                                                       {"rouche_at_half_abs_a_plus_b", true, to_string(half)}};
    switch (pat.shape) {
      case PatternShape::coro1main:
        if (rouche_half) add("coro1main", DivisorClass::any, rouche_m, rouche_checks);
        if (ek) add("EK", DivisorClass::any, {Rational(1), BoundMethod::enestrom_kakeya, false},
                    {{"enestrom_kakeya_shape", true, ""}, {"a_b_positive", true, ""}});
        if (lw_nonneg) add("LW", DivisorClass::any, {Rational(2), BoundMethod::littlewood, true},
                           {{"littlewood_shape", true, ""}, {"a_b_nonnegative_sum_ge_4", true, ""}});
        break;
      case PatternShape::coro1main_prime:
        if (rouche_half) add("coro1main'", DivisorClass::any, rouche_m, rouche_checks);
        if (ek) add("EK2", DivisorClass::any, {Rational(1), BoundMethod::enestrom_kakeya, false},
                    {{"enestrom_kakeya_shape", true, ""}, {"a_b_positive", true, ""}});
        if (lw_pos) add("LW2", DivisorClass::any, {Rational(2), BoundMethod::littlewood, true},
                        {{"littlewood_shape", true, ""}, {"a_b_positive_sum_ge_4", true, ""}});
        break;
      case PatternShape::coro1main_second:
        if (rouche_half) add("coro1main''", DivisorClass::any, rouche_m, rouche_checks);
        break;
      case PatternShape::coro3main:
        if (rouche_half) add("coro3main." + pat.coro3_case, DivisorClass::unitary, rouche_m, rouche_checks);
        break;
    }
  }
  return out;
}

}  // namespace

CriterionReport certify_corollary(const IntPoly& f, const BigInt& a, const BigInt& b, const FactorConfig& cfg) {
  const PointValues v = point_values(f, derivative(f), a, b);
  CriterionReport best;
  best.divisor_class = DivisorClass::any;
  record_point(best, f, a, b, v);
  std::vector<CorollaryCandidate> cands;
  try {
    cands = corollary_candidates(f, a, b, v, cfg);
  } catch (const FactorizationBudgetExceeded& e) {
    best.check("factorization", false, "could not factor " + to_string(e.cofactor()));
    return best;
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.k < y.k; });
  for (auto& cand : cands) {
    CriterionReport confirm = certify_thm1(f, a, b, cand.k, cand.cls, cand.m_hat, cfg);
    if (!confirm.certified()) continue;
    confirm.set("confirmation_route", confirm.route);
    confirm.route = cand.route;
    confirm.set("corollary_k", BigInt(cand.k));
    if (cand.pattern) put_pattern(confirm, *cand.pattern);
    for (auto& c : cand.checks) confirm.preconditions.push_back(std::move(c));
    return confirm;
  }
  best.check("corollary_pattern", false, cands.empty() ? "no corollary shape matches" : "confirmation failed");
  return best;
}

namespace {

class PointEvaluator {
 public:
  PointEvaluator(const IntPoly& f, DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg)
      : f_(f), df_(derivative(f)), cls_(cls), m_hat_(m_hat), cfg_(cfg), roots_(f) {}

  /// Theorem routes for k <= theorem_limit, corollary routes for k <= corollary_limit.
  CriterionReport evaluate(const BigInt& a, const BigInt& b, unsigned long theorem_limit,
                           unsigned long corollary_limit) {
    CriterionReport none;
    none.divisor_class = cls_;
    const PointValues v = point_values(f_, df_, a, b);
    record_point(none, f_, a, b, v);
    if (!check_basic(none, f_, v, cls_)) return none;

    std::optional<CriterionReport> coro;
    if (corollary_limit > 0) {
      CriterionReport c = certify_corollary(f_, a, b, cfg_);
      if (c.certified() && *c.certified_k <= corollary_limit) {
        theorem_limit = std::min(theorem_limit, *c.certified_k - 1);
        coro = std::move(c);
      }
    }
    CriterionReport result = theorem_routes(a, b, v, theorem_limit);
    if (result.certified() || !coro) return result;
    return std::move(*coro);
  }

 private:
  const DivisorSet* divisors_at(const BigInt& x, const BigInt& fx, const BigInt& dfx) {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, std::make_unique<DivisorSet>(divisor_set(fx, dfx, cfg_))).first;
    return it->second.get();
  }

  CriterionReport theorem_routes(const BigInt& a, const BigInt& b, const PointValues& v, unsigned long limit) {
    CriterionReport r;
    r.divisor_class = cls_;
    record_point(r, f_, a, b, v);
    check_basic(r, f_, v, cls_);
    const DivisorSet *da = nullptr, *db = nullptr;
    try {
      da = divisors_at(a, v.fa, v.dfa);
      db = divisors_at(b, v.fb, v.dfb);
    } catch (const FactorizationBudgetExceeded& e) {
      r.check("factorization", false, "could not factor " + to_string(e.cofactor()));
      return r;
    }
    // Certificates depend on k only through q_k, so each distinct q is tried once.
    std::map<Rational, bool> tried;
    Attempts attempts;
    for (unsigned long k = 1; k <= limit; ++k) {
      const QkResult qk = compute_qk(*da, *db, k, cls_);
      if (tried.count(qk.q)) {
        if (qk.q == 1) break;
        continue;
      }
      tried[qk.q] = false;
      std::optional<RouteHit> hit = thm0_hit(f_, a, b, qk, roots_, cls_, attempts);
      if (!hit) hit = thm1_hit(a, b, qk, m_hat_, roots_, cls_, attempts);
      if (!hit) hit = remark1_hit(a, b, qk, m_hat_, attempts);
      if (hit) {
        put_q(r, qk);
        apply(r, std::move(*hit), k);
        return r;
      }
      if (qk.q == 1) break;
    }
    r.set("k_max", BigInt(limit));
    fail(r, attempts);
    return r;
  }

  const IntPoly& f_;
  IntPoly df_;
  DivisorClass cls_;
  RootBound m_hat_;
  FactorConfig cfg_;
  RationalRootCache roots_;
  std::map<BigInt, std::unique_ptr<DivisorSet>> cache_;
};

bool is_corollary_route(const std::string& route) {
  return route.rfind("coro", 0) == 0 || route.rfind("EK", 0) == 0 || route.rfind("LW", 0) == 0;
}

}  // namespace

CriterionReport certify_point(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k_max,
                              DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg) {
  PointEvaluator ev(f, cls, m_hat, cfg);
  return ev.evaluate(a, b, k_max, std::numeric_limits<unsigned long>::max());
}

ScanResult best_bound(const IntPoly& f, const BigInt& a_lo, const BigInt& a_hi, const BigInt& b_lo,
                      const BigInt& b_hi, unsigned long k_max, DivisorClass cls, const FactorConfig& cfg) {
  ScanResult out;
  out.report.divisor_class = cls;
  out.report.set("f", print_canonical(f));
  if (f.degree() < 1) {
    out.report.check("degree_positive", false, "deg f = " + std::to_string(f.degree()));
    return out;
  }
  std::vector<BigInt> xs;
  auto collect = [&](const BigInt& lo, const BigInt& hi) {
    for (BigInt x = lo; x <= hi; ++x) xs.push_back(x);
  };
  collect(a_lo, a_hi);
  collect(b_lo, b_hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& x : xs) {
    if (eval_at(f, x) == 0) out.integer_roots.push_back(x);
  }
  auto is_root = [&](const BigInt& x) { return std::binary_search(out.integer_roots.begin(), out.integer_roots.end(), x); };

  struct Pt {
    BigInt a, b, weight;
  };
  std::vector<Pt> points;
  for (BigInt a = a_lo; a <= a_hi; ++a) {
    if (is_root(a)) continue;
    for (BigInt b = b_lo; b <= b_hi; ++b) {
      if (a == b || is_root(b)) continue;
      points.push_back({a, b, absval(a) + absval(b)});
    }
  }
  std::sort(points.begin(), points.end(), [](const Pt& x, const Pt& y) {
    return std::tie(x.weight, x.a, x.b) < std::tie(y.weight, y.a, y.b);
  });

  const RootBound m_hat = best_root_bound(f);
  PointEvaluator ev(f, cls, m_hat, cfg);
  std::optional<CriterionReport> best;
  bool best_is_corollary = false;
  for (const auto& pt : points) {
    const BigInt fa = eval_at(f, pt.a), fb = eval_at(f, pt.b);
    if (absval(fa) >= absval(fb)) continue;
    ++out.points_tried;
    unsigned long theorem_limit = k_max, coro_limit = std::numeric_limits<unsigned long>::max();
    if (best) {
      // Later points are never lighter, so only a strictly smaller k or a
      // corollary replacing a theorem route at the same k can win.
      theorem_limit = std::min(theorem_limit, *best->certified_k - 1);
      coro_limit = best_is_corollary ? *best->certified_k - 1 : *best->certified_k;
    }
    if (theorem_limit == 0 && coro_limit == 0) break;
    CriterionReport r = ev.evaluate(pt.a, pt.b, theorem_limit, coro_limit);
    if (!r.certified()) continue;
    const bool coro = is_corollary_route(r.route);
    if (!best || *r.certified_k < *best->certified_k || (coro && !best_is_corollary)) {
      best = std::move(r);
      best_is_corollary = coro;
    }
  }
  if (best) {
    out.report = std::move(*best);
  } else {
    out.report.set("k_max", BigInt(k_max));
    out.report.check("scan", false, "no route certified any point");
  }
  std::string roots;
  for (const auto& x : out.integer_roots) roots += (roots.empty() ? "" : ",") + to_string(x);
  out.report.set("scan_a", to_string(a_lo) + ".." + to_string(a_hi));
  out.report.set("scan_b", to_string(b_lo) + ".." + to_string(b_hi));
  if (!roots.empty()) out.report.set("integer_roots", roots);
  return out;
}

}  // namespace irrcert
