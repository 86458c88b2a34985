// Exact integer and rational arithmetic, integer factorization and exact
// power comparisons.
//
// BigInt and Rational are the GMP C++ classes. Every comparison that would
// involve a real k-th root or a logarithm is decided here by integer
// cross-multiplication instead.

#ifndef IRRCERT_ARITH_HPP
#define IRRCERT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irrcert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a cofactor resists trial division and every allotted
/// splitting round. Partial factorizations are never returned.
class FactorizationBudgetExceeded : public std::runtime_error {
 public:
  explicit FactorizationBudgetExceeded(const BigInt& cofactor);
  const BigInt& cofactor() const { return cofactor_; }

 private:
  BigInt cofactor_;
};

struct FactorConfig {
  std::uint64_t trial_bound = 1'000'000;
  unsigned rho_rounds = 48;
  std::uint64_t rho_iterations = 1u << 20;  // per round
  std::uint64_t seed = 0x5eed5eedULL;
};

/// n = sign * prod p^e, keys strictly increasing primes.
struct Factorization {
  int sign = 1;
  std::map<BigInt, unsigned> factors;

  BigInt value() const;
  std::size_t distinct_primes() const { return factors.size(); }
  unsigned exponent_of(const BigInt& p) const;
};

/// Canonical rational num/den; throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& n);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
/// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(std::string_view text);

BigInt ipow(const BigInt& base, unsigned long exp);
Rational ipow(const Rational& base, unsigned long exp);

/// Deterministic below 3.3e24 (fixed Miller-Rabin bases 2..37). Above that
/// 24 further pseudo-random bases are tried, so a composite is accepted with
/// probability at most 4^-36. Precondition n > 1.
bool is_prime(const BigInt& n);

/// Trial division up to cfg.trial_bound, then Pollard-Brent splitting with
/// primality certification of every prime factor.
Factorization factor_integer(const BigInt& n, const FactorConfig& cfg = {});

/// All positive divisors, ascending.
std::vector<BigInt> positive_divisors(const Factorization& f);

/// Least u >= 0 with base^u > target. Requires base > 1.
unsigned long min_power_exceeding(const Rational& base, const Rational& target);

/// Least k >= 1 with s^(k+1) > ratio. Requires s > 1 and ratio >= 1.
unsigned long min_k_exceeding(const Rational& s, const Rational& ratio);

/// Largest t >= 0 with base^t <= target, i.e. floor(log_base(target)).
/// Requires base > 1 and target >= 1.
unsigned long floor_log(const Rational& base, const Rational& target);

/// Exact k-th root if n is a perfect k-th power (negative n allowed for odd k).
std::optional<BigInt> exact_root(const BigInt& n, unsigned long k);
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

/// Rational t >= x^(1/k) within 2^-bits (dyadic). Requires x >= 0.
Rational root_upper_bound(const Rational& x, unsigned long k, unsigned bits = 24);

}  // namespace irrcert

#endif  // IRRCERT_ARITH_HPP
