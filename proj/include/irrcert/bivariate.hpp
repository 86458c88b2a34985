// Polynomials in Y over Q[X]: divisor sets in Q[X] classified by degree, the
// degree analogue of q_k, and certificates for "at most k irreducible
// factors over Q(X)".

#ifndef IRRCERT_BIVARIATE_HPP
#define IRRCERT_BIVARIATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrcert/criteria.hpp"
#include "irrcert/poly.hpp"

namespace irrcert {

/// f(X, Y) = sum_i y_coeffs[i](X) Y^i, trailing zero coefficients trimmed.
struct BivarPoly {
  std::vector<RatPoly> y_coeffs;

  BivarPoly() = default;
  explicit BivarPoly(std::vector<RatPoly> coeffs);

  int degree_y() const { return static_cast<int>(y_coeffs.size()) - 1; }
  RatPoly coeff(std::size_t i) const { return i < y_coeffs.size() ? y_coeffs[i] : RatPoly{}; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;
};

/// Lines `i: <poly>` (blank lines and `#` comments ignored). Repeated i adds.
/// Throws ParseError with the byte offset into text.
BivarPoly parse_bivariate(std::string_view text);
/// Inverse of parse_bivariate, one line per nonzero coefficient.
std::string print_bivariate(const BivarPoly& f);

/// f(X, s(X)) by Horner in Y.
RatPoly substitute_y(const BivarPoly& f, const RatPoly& s);
BivarPoly partial_y(const BivarPoly& f);

/// Irreducible factorization over Q: monic factors with multiplicities,
/// sorted by degree then coefficients. Throws DegreeCapExceeded.
std::vector<std::pair<RatPoly, unsigned>> factor_ratpoly(const RatPoly& F, int degree_cap = 8);

struct PolyDivisor {
  std::vector<unsigned> exponents;  // per irreducible factor
  RatPoly poly;                     // monic
  int degree = 0;
  bool admissible = false;
  bool unitary = false;
};

struct PolyDivisorSet {
  RatPoly base;
  std::vector<std::pair<RatPoly, unsigned>> irreducible_factors;
  /// Monic gcd(base, G).
  RatPoly derivative_gcd;
  /// Every monic divisor, sorted by degree (ties in exponent order).
  std::vector<PolyDivisor> divisors;

  /// Sorted distinct degrees of the class members.
  std::vector<int> degrees(DivisorClass cls) const;
};

/// Divisors D of F classified by gcd(D, F/D) | gcd(F, G) (admissible) and
/// gcd(D, F/D) = 1 (unitary). Throws std::invalid_argument on F == 0.
PolyDivisorSet poly_divisor_set(const RatPoly& F, const RatPoly& G, int degree_cap = 8);

/// max(deg a_i - deg a_n) / (n - i) over i < n with a_i != 0, or nullopt
/// when every lower coefficient is zero.
std::optional<Rational> degree_delta(const BivarPoly& f);

/// Largest deg d2 - deg d1 with (k+1)(deg d2 - deg d1) <= deg Fb - deg Fa.
long bivariate_qk(const PolyDivisorSet& da, const PolyDivisorSet& db, unsigned long k, DivisorClass cls);

/// Degree test deg b > max(deg a, delta) + q_k with a(X) = 0 ignored in the
/// max. The unitary class also checks that both values are coprime to the
/// Y-derivative values. Class any is rejected.
CriterionReport certify_thm5(const BivarPoly& f, const RatPoly& a, const RatPoly& b, unsigned long k,
                             DivisorClass cls, int degree_cap = 8);

/// Finds the largest k with f(X, g(X)) = c h^k, checks h irreducible and the
/// degree profile, and confirms with certify_thm5 at a = 0, b = g.
CriterionReport certify_coro6(const BivarPoly& f, const RatPoly& g, int degree_cap = 8);

}  // namespace irrcert

#endif  // IRRCERT_BIVARIATE_HPP
