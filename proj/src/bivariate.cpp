#include "irrcert/bivariate.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "irrcert/oracle.hpp"

namespace irrcert {

BivarPoly::BivarPoly(std::vector<RatPoly> coeffs) : y_coeffs(std::move(coeffs)) {
  while (!y_coeffs.empty() && y_coeffs.back().is_zero()) y_coeffs.pop_back();
}

namespace {

std::string strip_position(const std::string& what) {
  const auto at = what.rfind(" at position ");
  return at == std::string::npos ? what : what.substr(0, at);
}

bool blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

BivarPoly parse_bivariate(std::string_view text) {
  std::vector<RatPoly> coeffs;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size() && blank(line[i])) ++i;
    if (i < line.size()) {
      const std::size_t digits = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == digits) throw ParseError("expected Y exponent", line_start + i);
      if (i - digits > 6) throw ParseError("Y exponent too large", line_start + digits);
      const std::size_t power = std::stoul(std::string(line.substr(digits, i - digits)));
      while (i < line.size() && blank(line[i])) ++i;
      if (i == line.size() || line[i] != ':') throw ParseError("expected ':'", line_start + i);
      ++i;
      try {
        const RatPoly c = parse_ratpoly(line.substr(i));
        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] += c;
      } catch (const ParseError& e) {
        throw ParseError(strip_position(e.what()), line_start + i + e.position());
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return BivarPoly(std::move(coeffs));
}

std::string print_bivariate(const BivarPoly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.y_coeffs.size(); ++i) {
    if (f.y_coeffs[i].is_zero()) continue;
    out += std::to_string(i) + ": " + print_canonical(f.y_coeffs[i]) + "\n";
  }
  return out.empty() ? "0: 0\n" : out;
}

RatPoly substitute_y(const BivarPoly& f, const RatPoly& s) {
  RatPoly acc;
  for (std::size_t i = f.y_coeffs.size(); i-- > 0;) acc = acc * s + f.y_coeffs[i];
  return acc;
}

BivarPoly partial_y(const BivarPoly& f) {
  std::vector<RatPoly> out;
  for (std::size_t i = 1; i < f.y_coeffs.size(); ++i) out.push_back(Rational(static_cast<unsigned long>(i)) * f.y_coeffs[i]);
  return BivarPoly(std::move(out));
}

std::vector<std::pair<RatPoly, unsigned>> factor_ratpoly(const RatPoly& F, int degree_cap) {
  if (F.is_zero()) throw std::invalid_argument("factor_ratpoly: zero polynomial");
  const OracleFactorization fac = count_irreducible_factors(primitive_part(F), degree_cap);
  std::vector<std::pair<RatPoly, unsigned>> out;
  for (const auto& [g, m] : fac.factors) out.emplace_back(make_monic(to_rat(g)), m);
  return out;
}

std::vector<int> PolyDivisorSet::degrees(DivisorClass cls) const {
  std::vector<int> out;
  for (const auto& d : divisors) {
    const bool member = cls == DivisorClass::any || (cls == DivisorClass::admissible ? d.admissible : d.unitary);
    if (member) out.push_back(d.degree);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PolyDivisorSet poly_divisor_set(const RatPoly& F, const RatPoly& G, int degree_cap) {
  if (F.is_zero()) throw std::invalid_argument("poly_divisor_set: zero polynomial");
  PolyDivisorSet out;
  out.base = F;
  out.irreducible_factors = factor_ratpoly(F, degree_cap);
  out.derivative_gcd = gcd(F, G);

  const std::size_t m = out.irreducible_factors.size();
  std::vector<unsigned> in_gcd(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    RatPoly rest = out.derivative_gcd;
    const RatPoly& h = out.irreducible_factors[i].first;
    while (rest.degree() >= h.degree()) {
      auto [q, r] = divmod(rest, h);
      if (!r.is_zero()) break;
      rest = q;
      ++in_gcd[i];
    }
  }
  std::vector<unsigned> c(m, 0);
  while (true) {
    PolyDivisor d;
    d.exponents = c;
    d.poly = RatPoly::constant(Rational(1));
    d.admissible = d.unitary = true;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [h, e] = out.irreducible_factors[i];
      d.poly *= pow(h, c[i]);
      d.degree += static_cast<int>(c[i]) * h.degree();
      const unsigned overlap = std::min(c[i], e - c[i]);
      if (overlap > 0) d.unitary = false;
      if (overlap > in_gcd[i]) d.admissible = false;
    }
    out.divisors.push_back(std::move(d));
    std::size_t i = 0;
    while (i < m && c[i] == out.irreducible_factors[i].second) c[i++] = 0;
    if (i == m) break;
    ++c[i];
  }
  std::stable_sort(out.divisors.begin(), out.divisors.end(),
                   [](const PolyDivisor& x, const PolyDivisor& y) { return x.degree < y.degree; });
  return out;
}

std::optional<Rational> degree_delta(const BivarPoly& f) {
  const int n = f.degree_y();
  if (n < 1) return std::nullopt;
  const int dn = f.y_coeffs[n].degree();
  std::optional<Rational> best;
  for (int i = 0; i < n; ++i) {
    if (f.y_coeffs[i].is_zero()) continue;
    const Rational v = make_rational(f.y_coeffs[i].degree() - dn, n - i);
    if (!best || v > *best) best = v;
  }
  return best;
}

long bivariate_qk(const PolyDivisorSet& da, const PolyDivisorSet& db, unsigned long k, DivisorClass cls) {
  const long span = static_cast<long>(db.base.degree()) - da.base.degree();
  if (span < 0) throw PreconditionError("bivariate q_k requires deg f(X,b(X)) >= deg f(X,a(X))");
  if (k == 0) throw PreconditionError("bivariate q_k: k must be positive");
  long best = 0;
  for (int d1 : da.degrees(cls)) {
    for (int d2 : db.degrees(cls)) {
      const long diff = d2 - d1;
      if (diff > best && diff * static_cast<long>(k + 1) <= span) best = diff;
    }
  }
  return best;
}

namespace {

std::string degree_text(const RatPoly& p) { return p.is_zero() ? "-inf" : std::to_string(p.degree()); }

}  // namespace

CriterionReport certify_thm5(const BivarPoly& f, const RatPoly& a, const RatPoly& b, unsigned long k,
                             DivisorClass cls, int degree_cap) {
  CriterionReport r;
  r.divisor_class = cls;
  r.set("f", print_bivariate(f));
  r.set("a_X", print_canonical(a));
  r.set("b_X", print_canonical(b));
  r.set("k", BigInt(k));
  bool ok = r.check("class_admissible_or_unitary", cls != DivisorClass::any, std::string(to_string(cls)));
  ok = r.check("k_positive", k >= 1) && ok;
  const int n = f.degree_y();
  ok = r.check("degree_in_y_positive", n >= 1, "deg_Y f = " + std::to_string(n)) && ok;
  if (!ok) return r;
  ok = r.check("a0_an_nonzero", !f.y_coeffs[0].is_zero());
  const RatPoly Fa = substitute_y(f, a), Fb = substitute_y(f, b);
  ok = r.check("values_nonzero", !Fa.is_zero() && !Fb.is_zero()) && ok;
  if (!ok) return r;
  r.set("f_a_X", print_canonical(Fa));
  r.set("f_b_X", print_canonical(Fb));
  r.set("deg_f_a", std::to_string(Fa.degree()));
  r.set("deg_f_b", std::to_string(Fb.degree()));
  if (!r.check("delta_k_nonnegative", Fb.degree() >= Fa.degree())) return r;
  const Rational delta_k = make_rational(Fb.degree() - Fa.degree(), BigInt(k + 1));
  r.set("delta_k", delta_k);

  const BivarPoly fy = partial_y(f);
  const RatPoly Ga = substitute_y(fy, a), Gb = substitute_y(fy, b);
  std::optional<PolyDivisorSet> da, db;
  try {
    da.emplace(poly_divisor_set(Fa, Ga, degree_cap));
    db.emplace(poly_divisor_set(Fb, Gb, degree_cap));
  } catch (const DegreeCapExceeded& e) {
    r.check("degree_cap", false, e.what());
    return r;
  }
  if (cls == DivisorClass::unitary) {
    ok = r.check("gcd_f_a_fy_a_is_1", da->derivative_gcd.degree() == 0, print_canonical(da->derivative_gcd));
    ok = r.check("gcd_f_b_fy_b_is_1", db->derivative_gcd.degree() == 0, print_canonical(db->derivative_gcd)) && ok;
    if (!ok) return r;
  }
  const long q = bivariate_qk(*da, *db, k, cls);
  r.set("q", BigInt(q));
  const std::optional<Rational> delta = degree_delta(f);
  r.set("delta", delta ? to_string(*delta) : "-inf");
  r.set("deg_a", degree_text(a));
  r.set("deg_b", degree_text(b));

  std::optional<Rational> floor_value = delta;
  if (!a.is_zero()) {
    const Rational da_deg(a.degree());
    if (!floor_value || da_deg > *floor_value) floor_value = da_deg;
  }
  if (!r.check("b_nonzero", !b.is_zero())) return r;
  const Rational rhs = floor_value ? *floor_value + q : Rational(q);
  r.set("threshold", rhs);
  if (!r.check("deg_b_exceeds_threshold", Rational(b.degree()) > rhs,
               std::to_string(b.degree()) + " > " + to_string(rhs))) {
    return r;
  }
  r.route = cls == DivisorClass::unitary ? "thm7" : "thm5";
  r.certified_k = k;
  return r;
}

namespace {

std::optional<RatPoly> kth_root_up_to_constant(const RatPoly& F, unsigned k) {
  if (auto h = poly_kth_root(F, k)) return h;
  return poly_kth_root(make_monic(F), k);
}

}  // namespace

CriterionReport certify_coro6(const BivarPoly& f, const RatPoly& g, int degree_cap) {
  CriterionReport r;
  r.divisor_class = DivisorClass::admissible;
  r.set("f", print_bivariate(f));
  r.set("g_X", print_canonical(g));
  const int n = f.degree_y();
  if (!r.check("degree_in_y_positive", n >= 1, "deg_Y f = " + std::to_string(n))) return r;
  const RatPoly& a0 = f.y_coeffs[0];
  bool ok = r.check("a0_nonzero_constant", a0.degree() == 0, print_canonical(a0));
  const int dn = f.y_coeffs[n].degree();
  const int dn1 = f.y_coeffs[n - 1].degree();  // -1 for the zero polynomial
  int lower = std::numeric_limits<int>::min();
  for (int i = 0; i + 2 <= n; ++i) {
    if (!f.y_coeffs[i].is_zero()) lower = std::max(lower, f.y_coeffs[i].degree());
  }
  ok = r.check("degree_profile", !f.y_coeffs[n - 1].is_zero() && dn1 >= dn && dn >= lower,
               "deg a_{n-1} = " + degree_text(f.y_coeffs[n - 1]) + ", deg a_n = " + std::to_string(dn)) &&
       ok;
  ok = r.check("deg_g_exceeds", !g.is_zero() && g.degree() > dn1 - dn,
               "deg g = " + degree_text(g) + ", deg a_{n-1} - deg a_n = " + std::to_string(dn1 - dn)) &&
       ok;
  if (!ok) return r;
  const RatPoly F = substitute_y(f, g);
  r.set("f_g_X", print_canonical(F));
  if (!r.check("value_nonconstant", F.degree() >= 1, "deg = " + degree_text(F))) return r;

  unsigned k = 1;
  RatPoly h = F;
  for (int e = F.degree(); e >= 1; --e) {
    if (F.degree() % e != 0) continue;
    if (auto root = kth_root_up_to_constant(F, static_cast<unsigned>(e))) {
      k = static_cast<unsigned>(e);
      h = *root;
      break;
    }
  }
  const Rational unit = F.leading() / pow(h, k).leading();
  r.set("h", print_canonical(h));
  r.set("k", BigInt(k));
  r.set("unit", unit);
  try {
    const auto fac = factor_ratpoly(h, degree_cap);
    if (!r.check("h_irreducible", fac.size() == 1 && fac.front().second == 1,
                 std::to_string(fac.size()) + " distinct factor(s)")) {
      return r;
    }
  } catch (const DegreeCapExceeded& e) {
    r.check("degree_cap", false, e.what());
    return r;
  }
  CriterionReport confirm = certify_thm5(f, RatPoly{}, g, k, DivisorClass::admissible, degree_cap);
  for (auto& c : confirm.preconditions) r.preconditions.push_back(c);
  for (const auto& [name, value] : confirm.evidence) {
    if (!r.find(name)) r.set(name, value);
  }
  if (!confirm.certified()) return r;
  r.set("confirmation_route", confirm.route);
  r.route = "coro6";
  r.certified_k = k;
  return r;
}

}  // namespace irrcert
