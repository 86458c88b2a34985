// Certificates of the form "f is a product of at most k irreducible factors
// over Q", obtained by combining q_k with a root-location test.

#ifndef IRRCERT_CRITERIA_HPP
#define IRRCERT_CRITERIA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrcert/ratio_engine.hpp"
#include "irrcert/root_location.hpp"

namespace irrcert {

struct PreconditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const PreconditionCheck&, const PreconditionCheck&) = default;
};

/// Route identifiers:
///   thm0Explicit.i  thm0Explicit.ii  thm0.iii        (admissible or any)
///   thm0unitaryExplicit.i  .ii  thm0unitary.iii      (unitary)
///   thm1.i  thm1.ii  thm1.iii  /  thm3.i  thm3.ii  thm3.iii
///   remark1.case1 .. remark1.case7
///   coro1main coro1main' coro1main'' coro2 EK EK2 LW LW2 coro3main.i .. coro3main.viii
///   thm5 thm7 coro6 (bivariate)
///   none (nothing certified)
struct CriterionReport {
  std::optional<unsigned long> certified_k;
  std::string route = "none";
  DivisorClass divisor_class = DivisorClass::admissible;
  /// Exact values as decimal strings, in insertion order.
  std::vector<std::pair<std::string, std::string>> evidence;
  std::vector<PreconditionCheck> preconditions;

  bool certified() const { return certified_k.has_value(); }
  bool preconditions_passed() const;
  /// nullptr when absent.
  const std::string* find(std::string_view name) const;

  void set(std::string name, std::string value);
  void set(std::string name, const BigInt& value) { set(std::move(name), to_string(value)); }
  void set(std::string name, const Rational& value) { set(std::move(name), to_string(value)); }
  /// Records the check and returns passed.
  bool check(std::string name, bool passed, std::string detail = {});

  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

/// Admissible / any class use Theorem-0 routes; unitary additionally needs
/// gcd(f(a), f'(a)) = gcd(f(b), f'(b)) = 1, which is checked and reported.
/// Tries the sqrt circle (no rational roots), then the q_k circle, then the
/// half-plane test when q_k = 1. Never throws on failed hypotheses.
CriterionReport certify_thm0(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                             DivisorClass cls, const FactorConfig& cfg = {});

/// Same hypotheses phrased with a root-modulus bound M_hat. A strict bound
/// (every root has |theta| < M_hat) lets the inequalities hold with equality.
CriterionReport certify_thm1(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                             DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg = {});

/// The seven sign cases in which M < R - |C| puts the disk |z| <= M inside
/// Ap(a, b, q_k). Requires q_k > 1.
CriterionReport remark1_relaxed(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k,
                                DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg = {});

enum class PatternShape { coro1main, coro1main_prime, coro1main_second, coro3main };
std::string_view to_string(PatternShape s);

struct PrimePattern {
  PatternShape shape = PatternShape::coro1main;
  BigInt p;
  BigInt r{1};
  /// Smallest prime factor of r (r > 1), else 1.
  BigInt q{1};
  unsigned long j = 0;
  unsigned long k1 = 0;
  unsigned long k2 = 0;
  /// coro3main regime "i".."viii", or "none" when the shape matches but no
  /// closed form applies.
  std::string coro3_case;

  /// |f(a)| and |f(b)| as declared by the shape.
  std::pair<BigInt, BigInt> values() const;
};

/// Every corollary shape matched by |fa|, |fb|:
///   coro1main    |fa| = p^k1 r, |fb| = p^k2, k2 > k1 >= 0, 0 < r < p
///   coro1main'   |fa| = p^k1, |fb| = p^k2 r, r prime, r < p, k2 >= k1 > 0
///   coro1main''  as above with any 1 < r < p
///   coro3main    |fa| = p^k1, |fb| = p^k2 r^j, p != r primes, k1, k2, j > 0,
///                |fb| > |fa|, p coprime to fa' fb', r coprime to fb'
std::vector<PrimePattern> match_prime_pattern(const BigInt& fa, const BigInt& fb, const BigInt& dfa,
                                              const BigInt& dfb, const FactorConfig& cfg = {});

/// Closed-form k of the shape, by exact power comparisons. Empty for a
/// coro3main pattern outside the eight regimes.
std::optional<unsigned long> corollary_bound(const PrimePattern& pattern);

/// Smallest k over the corollary routes that apply at (a, b); each candidate
/// is confirmed by re-running the half-plane form of certify_thm1.
CriterionReport certify_corollary(const IntPoly& f, const BigInt& a, const BigInt& b,
                                  const FactorConfig& cfg = {});

/// Best certificate at one point: corollaries, then the theorem routes for
/// k = 1..k_max with the given root bound.
CriterionReport certify_point(const IntPoly& f, const BigInt& a, const BigInt& b, unsigned long k_max,
                              DivisorClass cls, const RootBound& m_hat, const FactorConfig& cfg = {});

struct ScanResult {
  CriterionReport report;
  std::vector<BigInt> integer_roots;
  std::size_t points_tried = 0;
};

/// Scans a in [a_lo, a_hi], b in [b_lo, b_hi]. Minimal k wins; ties prefer
/// corollary routes, then smaller |a| + |b|, then lexicographic (a, b).
/// Points where f vanishes are skipped and listed in integer_roots.
ScanResult best_bound(const IntPoly& f, const BigInt& a_lo, const BigInt& a_hi, const BigInt& b_lo,
                      const BigInt& b_hi, unsigned long k_max = 16, DivisorClass cls = DivisorClass::admissible,
                      const FactorConfig& cfg = {});

}  // namespace irrcert

#endif  // IRRCERT_CRITERIA_HPP
