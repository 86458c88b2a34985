#include "irrcert/divisors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace irrcert {

std::string_view to_string(DivisorClass cls) {
  switch (cls) {
    case DivisorClass::admissible: return "admissible";
    case DivisorClass::unitary: return "unitary";
    case DivisorClass::any: return "any";
  }
  return "?";
}

std::optional<DivisorClass> parse_divisor_class(std::string_view text) {
  if (text == "admissible") return DivisorClass::admissible;
  if (text == "unitary") return DivisorClass::unitary;
  if (text == "any") return DivisorClass::any;
  return std::nullopt;
}

DivisorSet::DivisorSet(const Factorization& value_factorization, const BigInt& deriv_value)
    : deriv_value_(deriv_value), factorization_(value_factorization) {
  factorization_.sign = 1;
  value_ = factorization_.value();
  mpz_gcd(gcd_.get_mpz_t(), value_.get_mpz_t(), deriv_value_.get_mpz_t());

  // Enumerate exponent vectors; for d = prod p^c the gcd(d, v/d) exponent at
  // p is min(c, e - c), compared against the exponent of p in gcd(v, f'(a)).
  std::vector<BigInt> primes;
  std::vector<unsigned> exps, gexps;
  for (const auto& [p, e] : factorization_.factors) {
    primes.push_back(p);
    exps.push_back(e);
    unsigned ge = 0;
    BigInt g = gcd_;
    while (ge < e && mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
      ++ge;
    }
    gexps.push_back(ge);
  }
  struct Entry {
    BigInt d;
    bool adm;
    bool uni;
  };
  std::vector<Entry> entries;
  std::vector<unsigned> c(primes.size(), 0);
  while (true) {
    BigInt d = 1;
    bool adm = true, uni = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      d *= ipow(primes[i], c[i]);
      const unsigned overlap = std::min(c[i], exps[i] - c[i]);
      if (overlap > gexps[i]) adm = false;
      if (overlap > 0) uni = false;
    }
    entries.push_back({std::move(d), adm, uni});
    std::size_t i = 0;
    while (i < primes.size() && c[i] == exps[i]) c[i++] = 0;
    if (i == primes.size()) break;
    ++c[i];
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.d < y.d; });
  for (auto& e : entries) {
    all_.push_back(e.d);
    admissible_.push_back(e.adm);
    unitary_.push_back(e.uni);
    members_[static_cast<std::size_t>(DivisorClass::any)].push_back(e.d);
    if (e.adm) members_[static_cast<std::size_t>(DivisorClass::admissible)].push_back(e.d);
    if (e.uni) members_[static_cast<std::size_t>(DivisorClass::unitary)].push_back(e.d);
  }
  if (gcd_ == 1 && members(DivisorClass::admissible) != members(DivisorClass::unitary))
    throw std::logic_error("divisor_set: coprime derivative but admissible != unitary");

  small_ = mpz_sizeinbase(value_.get_mpz_t(), 2) <= 63;
  if (small_) {
    for (std::size_t k = 0; k < 3; ++k) {
      for (const auto& d : members_[k]) small_members_[k].push_back(mpz_get_ui(d.get_mpz_t()));
    }
  }
}

DivisorSet divisor_set(const BigInt& fa, const BigInt& dfa, const FactorConfig& cfg) {
  if (fa == 0) throw std::invalid_argument("divisor_set: f(a) must be nonzero");
  return DivisorSet(factor_integer(fa, cfg), dfa);
}

}  // namespace irrcert
