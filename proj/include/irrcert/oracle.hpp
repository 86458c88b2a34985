// Ground truth for desk-scale inputs: exact factorization over Q by
// Kronecker's method, and a double-loop recomputation of q_k that shares no
// code with the ratio engine.

#ifndef IRRCERT_ORACLE_HPP
#define IRRCERT_ORACLE_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "irrcert/divisors.hpp"
#include "irrcert/poly.hpp"

namespace irrcert {

class DegreeCapExceeded : public std::invalid_argument {
 public:
  DegreeCapExceeded(int degree, int cap);
};

struct OracleFactorization {
  /// f = unit * prod factor^multiplicity; factors primitive with positive
  /// leading coefficient, sorted by (degree, coefficients).
  BigInt unit{1};
  std::vector<std::pair<IntPoly, unsigned>> factors;
  /// Sum of multiplicities of the non-constant factors.
  unsigned count = 0;

  IntPoly product() const;
};

/// Throws DegreeCapExceeded when deg f > degree_cap and std::invalid_argument
/// for f == 0.
OracleFactorization count_irreducible_factors(const IntPoly& f, int degree_cap = 8);

/// Squarefree decomposition of a primitive f: pairs (g_i, i) with f equal to
/// prod g_i^i up to sign, g_i primitive and pairwise coprime.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// Kronecker search for a factor of degree exactly d of a squarefree
/// primitive g with no factor of smaller degree. Returns a primitive factor
/// with positive leading coefficient, or nullopt.
std::optional<IntPoly> kronecker_factor_of_degree(const IntPoly& g, int d);

/// True when no factor of degree 1..deg/2 exists.
bool kronecker_irreducible(const IntPoly& g);

/// Positive divisors of |v| by trial division, with class flags computed
/// from gcds against dv.
struct BruteDivisors {
  BigInt value;
  BigInt deriv;
  std::vector<BigInt> divisors;
  std::vector<bool> admissible;
  std::vector<bool> unitary;
};

BruteDivisors brute_divisors(const BigInt& v, const BigInt& dv);

/// max d2/d1 over the class with d2^(k+1) |fa| <= d1^(k+1) |fb|.
/// Throws std::invalid_argument unless 0 < |fa| < |fb| and k >= 1.
Rational brute_qk(const BigInt& fa, const BigInt& dfa, const BigInt& fb, const BigInt& dfb, unsigned long k,
                  DivisorClass cls);
Rational brute_qk(const BruteDivisors& da, const BruteDivisors& db, unsigned long k, DivisorClass cls);

}  // namespace irrcert

#endif  // IRRCERT_ORACLE_HPP
