// The divisor-ratio quantity q_k: the largest d2/d1 (d1 from the divisors of
// |f(a)|, d2 from those of |f(b)|, both in the chosen class) with
// (d2/d1)^(k+1) <= |f(b)|/|f(a)|.

#ifndef IRRCERT_RATIO_ENGINE_HPP
#define IRRCERT_RATIO_ENGINE_HPP

#include <stdexcept>

#include "irrcert/divisors.hpp"

namespace irrcert {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QkResult {
  unsigned long k = 1;
  Rational q{1};
  /// Witness pair attaining q; among ties the lexicographically smallest (d2, d1).
  BigInt d1{1};
  BigInt d2{1};
  DivisorClass divisor_class = DivisorClass::admissible;
};

/// Requires da.value() < db.value() and k >= 1 (PreconditionError otherwise).
/// The bound is tested as d2^(k+1) * |f(a)| <= d1^(k+1) * |f(b)|, ties included.
QkResult compute_qk(const DivisorSet& da, const DivisorSet& db, unsigned long k, DivisorClass cls);

/// Least class ratio d2/d1 strictly above 1 (always exists: |f(b)|/1 qualifies).
Rational least_ratio_above_one(const DivisorSet& da, const DivisorSet& db, DivisorClass cls);

/// Least k with compute_qk(da, db, k, cls).q == 1.
unsigned long min_k_with_unit_ratio(const DivisorSet& da, const DivisorSet& db, DivisorClass cls);

}  // namespace irrcert

#endif  // IRRCERT_RATIO_ENGINE_HPP
