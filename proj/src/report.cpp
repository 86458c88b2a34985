#include "irrcert/report.hpp"

#include <sstream>

#include "irrcert/bivariate.hpp"
#include "irrcert/oracle.hpp"

namespace irrcert {

nlohmann::ordered_json to_json(const CriterionReport& r) {
  nlohmann::ordered_json j;
  j["certified_k"] = r.certified_k ? nlohmann::ordered_json(*r.certified_k) : nlohmann::ordered_json(nullptr);
  j["route"] = r.route;
  j["divisor_class"] = std::string(to_string(r.divisor_class));
  nlohmann::ordered_json ev = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.evidence) ev[k] = v;
  j["evidence"] = ev;
  nlohmann::ordered_json pre = nlohmann::ordered_json::array();
  for (const auto& c : r.preconditions) pre.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["preconditions"] = pre;
  return j;
}

CriterionReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    CriterionReport r;
    if (!j.at("certified_k").is_null()) r.certified_k = j.at("certified_k").get<unsigned long>();
    r.route = j.at("route").get<std::string>();
    const auto cls = parse_divisor_class(j.at("divisor_class").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown divisor_class");
    r.divisor_class = *cls;
    for (const auto& [k, v] : j.at("evidence").items()) r.evidence.emplace_back(k, v.get<std::string>());
    for (const auto& c : j.at("preconditions")) {
      r.preconditions.push_back(
          {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const CriterionReport& r) {
  std::ostringstream out;
  out << "certified_k: " << (r.certified_k ? std::to_string(*r.certified_k) : "none") << "\n";
  out << "route: " << r.route << "\n";
  out << "divisor_class: " << to_string(r.divisor_class) << "\n";
  out << "evidence:\n";
  for (const auto& [k, v] : r.evidence) {
    if (v.find('\n') == std::string::npos) {
      out << "  " << k << " = " << v << "\n";
      continue;
    }
    out << "  " << k << " =\n";
    std::istringstream lines(v);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
  out << "preconditions:\n";
  for (const auto& c : r.preconditions) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

namespace {

class Evidence {
 public:
  explicit Evidence(const CriterionReport& r) : r_(r) {}
  const std::string& text(std::string_view name) const {
    const std::string* v = r_.find(name);
    if (!v) throw std::invalid_argument("missing evidence field " + std::string(name));
    return *v;
  }
  BigInt integer(std::string_view name) const { return BigInt(text(name)); }
  Rational rational(std::string_view name) const { return parse_rational(text(name)); }

 private:
  const CriterionReport& r_;
};

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

Rational absq(const Rational& x) { return x < 0 ? Rational(-x) : x; }

bool bound_is_sound(const IntPoly& f, const Rational& bound, const std::string& method, bool strict) {
  if (bound <= 0) return false;
  if (method == "enestrom_kakeya") return enestrom_kakeya_applies(f) && bound >= 1;
  if (method == "littlewood") return littlewood_applies(f) && bound >= 2;
  if (rouche_disk_certificate(f, bound)) return true;
  if (bound >= cauchy_bound(f).bound) return true;
  return !strict && bound >= fujiwara_bound(f).bound;
}

RecheckResult mismatch(std::string what) { return {false, std::move(what)}; }

RecheckResult recheck_bivariate(const CriterionReport& r, const Evidence& ev) {
  const BivarPoly f = parse_bivariate(ev.text("f"));
  CriterionReport again;
  if (r.route == "coro6") {
    again = certify_coro6(f, parse_ratpoly(ev.text("g_X")));
  } else {
    again = certify_thm5(f, parse_ratpoly(ev.text("a_X")), parse_ratpoly(ev.text("b_X")),
                         ev.integer("k").get_ui(), r.divisor_class);
  }
  if (again.certified_k != r.certified_k || again.route != r.route) return mismatch("bivariate verdict differs");
  return {true, "bivariate route re-run"};
}

// Half-plane form of the modulus-bound route: q = 1, a^2 < b^2, M < |a+b|/2.
bool half_sum_condition(const BigInt& a, const BigInt& b, const Rational& m, bool strict) {
  const Rational half = absq(Rational(a + b)) / 2;
  return a * a < b * b && (strict ? m <= half : m < half);
}

}  // namespace

RecheckResult recheck_report(const CriterionReport& r) {
  if (!r.certified()) return {true, "no certificate claimed"};
  if (!r.preconditions_passed()) return mismatch("certificate lists a failed precondition");
  try {
    const Evidence ev(r);
    if (r.route == "thm5" || r.route == "thm7" || r.route == "coro6") return recheck_bivariate(r, ev);

    const IntPoly f = parse_poly(ev.text("f"));
    const BigInt a = ev.integer("a"), b = ev.integer("b");
    const unsigned long k = *r.certified_k;
    if (ev.integer("k") != k) return mismatch("k differs from certified_k");
    const IntPoly df = derivative(f);
    const BigInt fa = eval_at(f, a), fb = eval_at(f, b), dfa = eval_at(df, a), dfb = eval_at(df, b);
    if (fa != ev.integer("f_a") || fb != ev.integer("f_b") || dfa != ev.integer("df_a") || dfb != ev.integer("df_b"))
      return mismatch("polynomial values differ");
    if (fa == 0 || abs(fa) >= abs(fb)) return mismatch("|f(a)| < |f(b)| fails");
    const DivisorClass cls = r.divisor_class;
    if (cls == DivisorClass::unitary) {
      BigInt ga, gb;
      mpz_gcd(ga.get_mpz_t(), fa.get_mpz_t(), dfa.get_mpz_t());
      mpz_gcd(gb.get_mpz_t(), fb.get_mpz_t(), dfb.get_mpz_t());
      if (ga != 1 || gb != 1) return mismatch("unitary class needs coprime derivative values");
    }
    const Rational q = brute_qk(fa, dfa, fb, dfb, k, cls);
    if (q != ev.rational("q")) return mismatch("q_k differs: oracle gives " + to_string(q));
    const bool no_rational_roots = rational_roots(f).empty();
    const std::string& route = r.route;

    auto bound = [&]() {
      const Rational m = ev.rational("M_hat");
      const bool strict = ev.text("M_hat_strict") == "true";
      if (!bound_is_sound(f, m, ev.text("M_hat_method"), strict)) throw std::invalid_argument("root bound not sound");
      return std::pair<Rational, bool>(m, strict);
    };
    auto exceeds = [](const Rational& lhs, const Rational& rhs, bool strict) { return strict ? lhs >= rhs : lhs > rhs; };
    const Rational A = absq(Rational(a)), B = absq(Rational(b));

    bool ok = false;
    if (route == "thm0Explicit.i" || route == "thm0unitaryExplicit.i") {
      ok = q > 1 && inside_apollonius_certificate(f, apollonius_circle(a, b, q));
    } else if (route == "thm0Explicit.ii" || route == "thm0unitaryExplicit.ii") {
      ok = q > 1 && no_rational_roots && inside_disk_certificate(f, sqrt_apollonius_disk(a, b, q));
    } else if (route == "thm0.iii" || route == "thm0unitary.iii") {
      ok = q == 1 && half_plane_certificate(f, a, b) == HalfPlaneVerdict::certified;
    } else if (starts_with(route, "thm1.") || starts_with(route, "thm3.")) {
      const auto [m, strict] = bound();
      const std::string which = route.substr(5);
      if (which == "i") {
        ok = exceeds(B, q * A + (1 + q) * m, strict);
      } else if (which == "ii") {
        const Rational l = B - m, rr = A + m;
        ok = no_rational_roots && l > 0 && (strict ? l * l >= q * rr * rr : l * l > q * rr * rr);
      } else if (which == "iii") {
        ok = q == 1 && half_sum_condition(a, b, m, strict);
      }
    } else if (starts_with(route, "remark1.case")) {
      const auto [m, strict] = bound();
      const int c = std::stoi(route.substr(12));
      // Case conditions and thresholds, restated.
      bool applies = false;
      Rational t;
      switch (c) {
        case 1: applies = a > 0 && b < 0 && B > A && q * A < B; t = q * A + (1 + q) * m; break;
        case 2: applies = b > a && a > 0 && q * q * A < B; t = -q * A + (1 + q) * m; break;
        case 3: applies = b > a && a > 0 && q * q * A >= B && q * A < B; t = q * A + (q - 1) * m; break;
        case 4: applies = a == 0 && b != 0; t = (1 + q) * m; break;
        case 5: applies = a < 0 && b > 0 && B > A && q * A < B; t = q * A + (1 + q) * m; break;
        case 6: applies = b < a && a < 0 && q * q * A < B; t = -q * A + (1 + q) * m; break;
        case 7: applies = b < a && a < 0 && q * q * A >= B && q * A < B; t = q * A + (q - 1) * m; break;
        default: break;
      }
      ok = q > 1 && applies && exceeds(B, t, strict);
    } else if (starts_with(route, "coro") || starts_with(route, "EK") || starts_with(route, "LW")) {
      PrimePattern pat;
      const std::string shape = ev.text("pattern");
      pat.shape = shape == "coro3main"     ? PatternShape::coro3main
                  : shape == "coro1main'"  ? PatternShape::coro1main_prime
                  : shape == "coro1main''" ? PatternShape::coro1main_second
                                           : PatternShape::coro1main;
      pat.p = ev.integer("p");
      pat.r = ev.integer("r");
      pat.q = ev.integer("pattern_q");
      pat.j = ev.integer("j").get_ui();
      pat.k1 = ev.integer("k1").get_ui();
      pat.k2 = ev.integer("k2").get_ui();
      if (pat.shape == PatternShape::coro3main) pat.coro3_case = ev.text("coro3_case");
      if (!is_prime(pat.p)) return mismatch("pattern prime is not prime");
      const auto [va, vb] = pat.values();
      if (va != abs(fa) || vb != abs(fb)) return mismatch("pattern does not reproduce |f(a)|, |f(b)|");
      const auto kb = corollary_bound(pat);
      if (!kb || *kb != k) return mismatch("closed-form k differs");
      const auto [m, strict] = bound();
      ok = q == 1 && half_sum_condition(a, b, m, strict);
    } else {
      return mismatch("unknown route " + route);
    }
    if (!ok) return mismatch("route inequality does not hold on recomputation");
    return {true, "route " + route + " reproduced"};
  } catch (const std::exception& e) {
    return mismatch(e.what());
  }
}

}  // namespace irrcert
