// Positive divisors of a polynomial value |f(a)|, classified as admissible
// (gcd(d, v/d) divides gcd(v, f'(a))) and unitary (gcd(d, v/d) = 1).

#ifndef IRRCERT_DIVISORS_HPP
#define IRRCERT_DIVISORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "irrcert/arith.hpp"

namespace irrcert {

enum class DivisorClass { admissible, unitary, any };

std::string_view to_string(DivisorClass cls);
std::optional<DivisorClass> parse_divisor_class(std::string_view text);

class DivisorSet {
 public:
  /// |value| of a nonzero fa, its factorization and the derivative value.
  DivisorSet(const Factorization& value_factorization, const BigInt& deriv_value);

  const BigInt& value() const { return value_; }
  const BigInt& deriv_value() const { return deriv_value_; }
  /// gcd(value, deriv_value).
  const BigInt& derivative_gcd() const { return gcd_; }
  const Factorization& factorization() const { return factorization_; }

  /// Every positive divisor, ascending.
  const std::vector<BigInt>& all() const { return all_; }
  bool is_admissible(std::size_t index) const { return admissible_[index]; }
  bool is_unitary(std::size_t index) const { return unitary_[index]; }

  /// Ascending members of a class.
  const std::vector<BigInt>& members(DivisorClass cls) const {
    return members_[static_cast<std::size_t>(cls)];
  }
  /// Same list as 64-bit integers, or nullptr when value does not fit.
  const std::vector<std::uint64_t>* small_members(DivisorClass cls) const {
    return small_ ? &small_members_[static_cast<std::size_t>(cls)] : nullptr;
  }

 private:
  BigInt value_;
  BigInt deriv_value_;
  BigInt gcd_;
  Factorization factorization_;
  std::vector<BigInt> all_;
  std::vector<bool> admissible_;
  std::vector<bool> unitary_;
  std::array<std::vector<BigInt>, 3> members_;
  bool small_ = false;
  std::array<std::vector<std::uint64_t>, 3> small_members_;
};

/// Factors |fa| and classifies its divisors against dfa = f'(a).
/// Throws std::invalid_argument on fa == 0; propagates FactorizationBudgetExceeded.
DivisorSet divisor_set(const BigInt& fa, const BigInt& dfa, const FactorConfig& cfg = {});

}  // namespace irrcert

#endif  // IRRCERT_DIVISORS_HPP
