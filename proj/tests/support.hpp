// Helpers shared by the unit tests. Everything here is deliberately naive so
// it can serve as an independent check on the library.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "irrcert/arith.hpp"
#include "irrcert/poly.hpp"

namespace testing_support {

using irrcert::BigInt;
using irrcert::IntPoly;
using irrcert::Rational;
using irrcert::RatPoly;

inline IntPoly ip(std::vector<long> c) {
  std::vector<BigInt> out;
  for (long v : c) out.emplace_back(v);
  return IntPoly(std::move(out));
}

inline Rational rq(long n, long d = 1) { return irrcert::make_rational(n, d); }

inline RatPoly rp(std::vector<Rational> c) { return RatPoly(std::move(c)); }

/// Random polynomial of exact degree deg with coefficients in [-h, h].
inline IntPoly random_poly(std::mt19937_64& rng, int deg, long h, bool nonzero_constant = false) {
  std::uniform_int_distribution<long> coef(-h, h);
  std::vector<BigInt> c(deg + 1);
  for (auto& v : c) v = coef(rng);
  while (c[deg] == 0) c[deg] = coef(rng);
  while (nonzero_constant && c[0] == 0) c[0] = coef(rng);
  return IntPoly(std::move(c));
}

/// Divisors of n > 0 by a plain loop.
inline std::vector<std::uint64_t> loop_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

inline bool loop_admissible(std::uint64_t d, std::uint64_t v, std::uint64_t dv) {
  const std::uint64_t g = std::gcd(d, v / d);
  return std::gcd(v, dv) % g == 0;
}

inline bool loop_unitary(std::uint64_t d, std::uint64_t v) { return std::gcd(d, v / d) == 1; }

/// Horner evaluation at a complex point in long double.
template <class C>
C horner(const IntPoly& f, C z) {
  C acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * z + C(f[i].get_d());
  return acc;
}

}  // namespace testing_support
