// Dense univariate polynomials over Z and Q.

#ifndef IRRCERT_POLY_HPP
#define IRRCERT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrcert/arith.hpp"

namespace irrcert {

/// Coefficients lowest degree first; trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient vector and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& v) { return Polynomial(std::vector<Coeff>{v}); }
  static Polynomial monomial(const Coeff& v, std::size_t degree) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Coeff(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }

  /// Coefficient of X^i (zero past the degree).
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial operator-() const {
    std::vector<Coeff> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<Coeff> out(std::max(lhs.c_.size(), rhs.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) out[i] += lhs.c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Coeff> out(lhs.c_.size() + rhs.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> out(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = s * p.c_[i];
    return Polynomial(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.c_ == rhs.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

/// Syntax error in polynomial text; position is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: sum of terms `[+|-] [coeff] [x [^ exp]]`, integer coefficients,
/// variable x or X, whitespace ignored, optional `*` between coeff and x.
IntPoly parse_poly(std::string_view text);
/// As parse_poly but coefficients may be written `n/d`.
RatPoly parse_ratpoly(std::string_view text);

std::string print_canonical(const IntPoly& f);
/// Non-integer coefficients print as `n/d*x^k`; parse_ratpoly reads it back.
std::string print_canonical(const RatPoly& f);

BigInt eval_at(const IntPoly& f, const BigInt& x);
Rational eval_at(const RatPoly& f, const Rational& x);

IntPoly derivative(const IntPoly& f);
RatPoly derivative(const RatPoly& f);

/// g(X) = f(X + c), by repeated synthetic division.
RatPoly taylor_shift(const RatPoly& f, const Rational& c);
RatPoly taylor_shift(const IntPoly& f, const Rational& c);
/// g(X) = f(c - X); used for the mirrored half-plane test.
RatPoly reflect_shift(const IntPoly& f, const Rational& c);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const IntPoly& f);

/// h with h^k == f, or nullopt. When several exist (even k) the one with
/// positive leading coefficient is returned.
std::optional<RatPoly> poly_kth_root(const RatPoly& f, unsigned k);

RatPoly to_rat(const IntPoly& f);
/// Content (positive gcd of coefficients, 0 for the zero polynomial).
BigInt content(const IntPoly& f);
/// Primitive integer associate of f with positive leading coefficient.
IntPoly primitive_part(const RatPoly& f);
IntPoly primitive_part(const IntPoly& f);
/// Returns nullopt if some coefficient is not an integer.
std::optional<IntPoly> to_int(const RatPoly& f);

/// Euclidean division over Q; throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
/// Exact quotient in Z[X] if den divides num there.
std::optional<IntPoly> exact_divide(const IntPoly& num, const IntPoly& den);
/// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& f, const RatPoly& g);
RatPoly make_monic(const RatPoly& f);
RatPoly pow(const RatPoly& f, unsigned k);
IntPoly pow(const IntPoly& f, unsigned k);
/// f(g(X)).
RatPoly compose(const RatPoly& f, const RatPoly& g);

}  // namespace irrcert

#endif  // IRRCERT_POLY_HPP
