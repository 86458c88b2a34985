#include "irrcert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace irrcert {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, bool allow_rational) : s_(text), rational_(allow_rational) {}

  std::map<std::size_t, Rational> parse() {
    std::map<std::size_t, Rational> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      int sign = 1;
      skip_ws();
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      skip_ws();
      const std::size_t term_start = pos_;
      std::optional<Rational> coeff;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) coeff = read_coefficient();
      skip_ws();
      bool has_x = false;
      if (coeff && !at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'x' && peek() != 'X')) throw ParseError("expected 'x' after '*'", pos_);
      }
      std::size_t exp = 0;
      if (!at_end() && (peek() == 'x' || peek() == 'X')) {
        has_x = true;
        exp = 1;
        ++pos_;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (!at_end() && peek() == '-') throw ParseError("negative exponent", pos_);
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected exponent", pos_);
          const std::size_t exp_start = pos_;
          BigInt e = read_digits();
          if (e > 100000) throw ParseError("exponent too large", exp_start);
          exp = e.get_ui();
        }
      }
      if (!coeff && !has_x) throw ParseError("expected term", term_start);
      Rational value = coeff.value_or(Rational(1));
      if (sign < 0) value = -value;
      terms[exp] += value;
      skip_ws();
      if (at_end()) break;
      first = false;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  BigInt read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }
  Rational read_coefficient() {
    BigInt num = read_digits();
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
      throw ParseError("non-integer coefficient", pos_);
    if (!at_end() && peek() == '/') {
      if (!rational_) throw ParseError("non-integer coefficient", pos_);
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator", pos_);
      const std::size_t den_pos = pos_;
      BigInt den = read_digits();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  std::string_view s_;
  bool rational_;
  std::size_t pos_ = 0;
};

std::vector<Rational> dense_from_terms(const std::map<std::size_t, Rational>& terms) {
  if (terms.empty()) return {};
  std::vector<Rational> c(terms.rbegin()->first + 1, Rational(0));
  for (const auto& [e, v] : terms) c[e] = v;
  return c;
}

template <class Coeff>
std::string print_impl(const Polynomial<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (int i = f.degree(); i >= 0; --i) {
    const Coeff& v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const bool negative = v < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    Coeff mag = abs(v);
    if (i == 0) {
      out += to_string(Rational(mag));
      continue;
    }
    if (mag != 1) {
      const Rational q(mag);
      out += to_string(q);
      if (q.get_den() != 1) out += "*";
    }
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

template <class Coeff, class Arg>
Coeff horner(const Polynomial<Coeff>& f, const Arg& x) {
  Coeff acc = 0;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class Coeff>
Polynomial<Coeff> derivative_impl(const Polynomial<Coeff>& f) {
  if (f.degree() < 1) return {};
  std::vector<Coeff> out(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) out[i - 1] = f.coefficients()[i] * static_cast<unsigned long>(i);
  return Polynomial<Coeff>(std::move(out));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  auto terms = PolyParser(text, false).parse();
  std::vector<BigInt> c;
  for (const auto& v : dense_from_terms(terms)) c.push_back(v.get_num());
  return IntPoly(std::move(c));
}

RatPoly parse_ratpoly(std::string_view text) {
  return RatPoly(dense_from_terms(PolyParser(text, true).parse()));
}

std::string print_canonical(const IntPoly& f) { return print_impl(f); }
std::string print_canonical(const RatPoly& f) { return print_impl(f); }

BigInt eval_at(const IntPoly& f, const BigInt& x) { return horner(f, x); }
Rational eval_at(const RatPoly& f, const Rational& x) { return horner(f, x); }

IntPoly derivative(const IntPoly& f) { return derivative_impl(f); }
RatPoly derivative(const RatPoly& f) { return derivative_impl(f); }

RatPoly taylor_shift(const RatPoly& f, const Rational& c) {
  std::vector<Rational> b = f.coefficients();
  if (c == 0 || b.size() <= 1) return f;
  const std::size_t n = b.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1;; --j) {
      b[j] += c * b[j + 1];
      if (j == i) break;
    }
  }
  return RatPoly(std::move(b));
}

RatPoly taylor_shift(const IntPoly& f, const Rational& c) { return taylor_shift(to_rat(f), c); }

RatPoly reflect_shift(const IntPoly& f, const Rational& c) {
  std::vector<Rational> b = taylor_shift(f, c).coefficients();
  for (std::size_t i = 1; i < b.size(); i += 2) b[i] = -b[i];
  return RatPoly(std::move(b));
}

std::vector<Rational> rational_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::set<Rational> roots;
  const auto& c = f.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<BigInt> g(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  const std::size_t n = g.size() - 1;
  if (n == 0) return {roots.begin(), roots.end()};
  const auto num_divs = positive_divisors(factor_integer(g.front()));
  const auto den_divs = positive_divisors(factor_integer(g.back()));
  // p/q is a root iff sum g_i p^i q^(n-i) == 0.
  auto vanishes = [&](const BigInt& p, const BigInt& q) {
    BigInt sum = 0;
    BigInt ppow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      sum += g[i] * ppow * ipow(q, n - i);
      ppow *= p;
    }
    return sum == 0;
  };
  for (const auto& q : den_divs) {
    for (const auto& p : num_divs) {
      BigInt gg;
      mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (gg != 1) continue;
      if (vanishes(p, q)) roots.insert(make_rational(p, q));
      if (vanishes(BigInt(-p), q)) roots.insert(make_rational(-p, q));
    }
  }
  return {roots.begin(), roots.end()};
}

std::optional<RatPoly> poly_kth_root(const RatPoly& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("poly_kth_root: k must be positive");
  if (f.is_zero() || k == 1) return f;
  const int deg = f.degree();
  if (deg % static_cast<int>(k) != 0) return std::nullopt;
  const std::size_t m = static_cast<std::size_t>(deg) / k;
  auto lead_root = exact_root(f.leading(), k);
  if (!lead_root) return std::nullopt;
  if (*lead_root < 0 && k % 2 == 0) *lead_root = -*lead_root;
  // Power-series k-th root of the reversed polynomial F(t) = t^deg f(1/t).
  const auto& c = f.coefficients();
  auto F = [&](std::size_t j) -> Rational {
    return j <= static_cast<std::size_t>(deg) ? c[static_cast<std::size_t>(deg) - j] : Rational(0);
  };
  const Rational alpha_plus_1 = make_rational(BigInt(k + 1), BigInt(k));
  std::vector<Rational> G(m + 1);
  G[0] = *lead_root;
  const Rational F0 = F(0);
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational fj = F(j);
      if (fj == 0) continue;
      acc += (alpha_plus_1 * static_cast<unsigned long>(j) - static_cast<unsigned long>(n)) * fj * G[n - j];
    }
    G[n] = acc / (F0 * static_cast<unsigned long>(n));
  }
  std::vector<Rational> h(m + 1);
  for (std::size_t n = 0; n <= m; ++n) h[m - n] = G[n];
  RatPoly root(std::move(h));
  if (pow(root, k) != f) return std::nullopt;
  return root;
}

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& v : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<BigInt> c;
  for (const auto& v : f.coefficients()) c.push_back(v / g);
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& f) {
  BigInt l = 1;
  for (const auto& v : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> c;
  for (const auto& v : f.coefficients()) c.push_back(v.get_num() * (l / v.get_den()));
  return primitive_part(IntPoly(std::move(c)));
}

std::optional<IntPoly> to_int(const RatPoly& f) {
  std::vector<BigInt> c;
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1) return std::nullopt;
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  std::vector<Rational> r = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size() - 1;
  std::vector<Rational> q(r.size() - dn, Rational(0));
  for (std::size_t i = r.size(); i-- > dn;) {
    const Rational t = r[i] / d[dn];
    q[i - dn] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= t * d[j];
  }
  r.resize(dn);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::optional<IntPoly> exact_divide(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> r = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size() - 1;
  std::vector<BigInt> q(r.size() - dn, BigInt(0));
  for (std::size_t i = r.size(); i-- > dn;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), d[dn].get_mpz_t())) return std::nullopt;
    const BigInt t = r[i] / d[dn];
    q[i - dn] = t;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= t * d[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

RatPoly make_monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  const Rational inv = 1 / f.leading();
  return inv * f;
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
  RatPoly a = f, b = g;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

template <class P>
static P pow_impl(const P& f, unsigned k) {
  P result = P::constant(1);
  P base = f;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

RatPoly pow(const RatPoly& f, unsigned k) { return pow_impl(f, k); }
IntPoly pow(const IntPoly& f, unsigned k) { return pow_impl(f, k); }

RatPoly compose(const RatPoly& f, const RatPoly& g) {
  RatPoly acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + RatPoly::constant(*it);
  return acc;
}

}  // namespace irrcert
