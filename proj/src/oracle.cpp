#include "irrcert/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace irrcert {

DegreeCapExceeded::DegreeCapExceeded(int degree, int cap)
    : std::invalid_argument("degree cap exceeded: degree " + std::to_string(degree) + " > cap " +
                            std::to_string(cap)) {}

IntPoly OracleFactorization::product() const {
  IntPoly out = IntPoly::constant(unit);
  for (const auto& [g, m] : factors) out *= pow(g, m);
  return out;
}

namespace {

RatPoly exact_quotient(const RatPoly& num, const RatPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("squarefree decomposition: inexact division");
  return q;
}

bool poly_less(const IntPoly& x, const IntPoly& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return std::lexicographical_compare(x.coefficients().rbegin(), x.coefficients().rend(),
                                      y.coefficients().rbegin(), y.coefficients().rend());
}

std::vector<IntPoly> factor_squarefree(IntPoly g) {
  std::vector<IntPoly> out;
  for (const Rational& root : rational_roots(g)) {
    IntPoly lin{-root.get_num(), root.get_den()};
    auto q = exact_divide(g, lin);
    if (!q) throw std::logic_error("oracle: rational root does not divide");
    out.push_back(lin);
    g = *q;
  }
  for (int d = 2; 2 * d <= g.degree(); ++d) {
    while (2 * d <= g.degree()) {
      auto h = kronecker_factor_of_degree(g, d);
      if (!h) break;
      out.push_back(*h);
      g = *exact_divide(g, *h);
    }
  }
  if (g.degree() >= 1) out.push_back(primitive_part(g));
  return out;
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const RatPoly F = to_rat(f);
  const RatPoly dF = derivative(F);
  const RatPoly a0 = gcd(F, dF);
  RatPoly b = exact_quotient(F, a0);
  RatPoly c = exact_quotient(dF, a0);
  RatPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const RatPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  return out;
}

std::optional<IntPoly> kronecker_factor_of_degree(const IntPoly& g, int d) {
  if (d < 1 || g.degree() < 2 * d) return std::nullopt;
  const int n = g.degree();

  struct Node {
    BigInt x;
    std::vector<BigInt> divisors;
  };
  std::vector<Node> candidates;
  const int span = n + d + 4;
  for (int t = 0; t <= 2 * span; ++t) {
    const long xv = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
    const BigInt x(xv);
    const BigInt v = eval_at(g, x);
    if (v == 0) continue;
    candidates.push_back({x, positive_divisors(factor_integer(v < 0 ? BigInt(-v) : v))});
  }
  if (static_cast<int>(candidates.size()) < d + 1) return std::nullopt;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Node& l, const Node& r) { return l.divisors.size() < r.divisors.size(); });
  candidates.resize(d + 1);

  // Values h(x_j) run over +-divisors of g(x_j); h(x_0) > 0 fixes the sign.
  std::vector<std::vector<BigInt>> choices(d + 1);
  for (int j = 0; j <= d; ++j) {
    for (const BigInt& dv : candidates[j].divisors) {
      choices[j].push_back(dv);
      if (j > 0) choices[j].push_back(-dv);
    }
  }
  const BigInt lc = g.leading();
  std::vector<std::vector<BigInt>> rows(d + 1);
  std::vector<std::size_t> index(d + 1, 0);

  // Newton divided differences of an integer polynomial at integer nodes are
  // integers, so any fractional entry prunes the branch.
  auto fill_row = [&](int j, const BigInt& y) {
    std::vector<BigInt>& row = rows[j];
    row.assign(1, y);
    for (int i = 1; i <= j; ++i) {
      const BigInt num = row[i - 1] - rows[j - 1][i - 1];
      const BigInt den = candidates[j].x - candidates[j - i].x;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
      BigInt q;
      mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      row.push_back(q);
    }
    return true;
  };

  int depth = 0;
  while (depth >= 0) {
    if (index[depth] == choices[depth].size()) {
      index[depth] = 0;
      --depth;
      if (depth >= 0) ++index[depth];
      continue;
    }
    if (!fill_row(depth, choices[depth][index[depth]])) {
      ++index[depth];
      continue;
    }
    if (depth < d) {
      ++depth;
      continue;
    }
    const BigInt& top = rows[d][d];
    if (top != 0 && mpz_divisible_p(lc.get_mpz_t(), top.get_mpz_t())) {
      IntPoly h;
      IntPoly basis = IntPoly::constant(BigInt(1));
      for (int i = 0; i <= d; ++i) {
        h += rows[i][i] * basis;
        basis *= IntPoly{-candidates[i].x, BigInt(1)};
      }
      if (h.degree() == d && exact_divide(g, h)) return primitive_part(h);
    }
    ++index[depth];
  }
  return std::nullopt;
}

bool kronecker_irreducible(const IntPoly& g) {
  if (g.degree() < 1) return false;
  if (!rational_roots(g).empty()) return g.degree() == 1;
  for (int d = 2; 2 * d <= g.degree(); ++d) {
    if (kronecker_factor_of_degree(g, d)) return false;
  }
  return true;
}

OracleFactorization count_irreducible_factors(const IntPoly& f, int degree_cap) {
  if (f.is_zero()) throw std::invalid_argument("count_irreducible_factors: zero polynomial");
  if (f.degree() > degree_cap) throw DegreeCapExceeded(f.degree(), degree_cap);
  OracleFactorization out;
  if (f.degree() == 0) {
    out.unit = f.leading();
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(primitive_part(f))) {
    for (IntPoly& g : factor_squarefree(part)) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return poly_less(x.first, y.first);
  });
  for (const auto& fm : out.factors) out.count += fm.second;
  out.unit = 1;
  const IntPoly prod = out.product();
  out.unit = f.leading() / prod.leading();
  if (out.product() != f) throw std::logic_error("oracle: factors do not reproduce f");
  return out;
}

BruteDivisors brute_divisors(const BigInt& v, const BigInt& dv) {
  BruteDivisors out;
  out.value = v < 0 ? BigInt(-v) : v;
  out.deriv = dv;
  if (out.value == 0) throw std::invalid_argument("brute_divisors: zero value");
  std::vector<BigInt> low, high;
  for (BigInt d = 1; d * d <= out.value; ++d) {
    if (mpz_divisible_p(out.value.get_mpz_t(), d.get_mpz_t())) {
      low.push_back(d);
      const BigInt e = out.value / d;
      if (e != d) high.push_back(e);
    }
  }
  out.divisors = low;
  out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), out.value.get_mpz_t(), dv.get_mpz_t());
  for (const BigInt& d : out.divisors) {
    BigInt h;
    const BigInt co = out.value / d;
    mpz_gcd(h.get_mpz_t(), d.get_mpz_t(), co.get_mpz_t());
    out.admissible.push_back(mpz_divisible_p(g.get_mpz_t(), h.get_mpz_t()) != 0);
    out.unitary.push_back(h == 1);
  }
  return out;
}

namespace {

bool in_class(const BruteDivisors& s, std::size_t i, DivisorClass cls) {
  switch (cls) {
    case DivisorClass::admissible: return s.admissible[i];
    case DivisorClass::unitary: return s.unitary[i];
    case DivisorClass::any: return true;
  }
  return false;
}

using u128 = unsigned __int128;

u128 upow(std::uint64_t base, unsigned long e) {
  u128 r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

Rational brute_qk(const BruteDivisors& da, const BruteDivisors& db, unsigned long k, DivisorClass cls) {
  if (k == 0) throw std::invalid_argument("brute_qk: k must be positive");
  if (!(da.value > 0 && da.value < db.value)) throw std::invalid_argument("brute_qk: need 0 < |f(a)| < |f(b)|");
  const std::size_t bits = mpz_sizeinbase(db.value.get_mpz_t(), 2);
  if ((k + 2) * bits <= 126) {
    const std::uint64_t A = da.value.get_ui(), B = db.value.get_ui();
    std::uint64_t bn = 1, bd = 1;
    for (std::size_t i = 0; i < da.divisors.size(); ++i) {
      if (!in_class(da, i, cls)) continue;
      const std::uint64_t d1 = da.divisors[i].get_ui();
      const u128 cap = upow(d1, k + 1) * B;
      for (std::size_t j = 0; j < db.divisors.size(); ++j) {
        if (!in_class(db, j, cls)) continue;
        const std::uint64_t d2 = db.divisors[j].get_ui();
        if (upow(d2, k + 1) * A > cap) continue;
        if (u128{d2} * bd > u128{bn} * d1) {
          bn = d2;
          bd = d1;
        }
      }
    }
    return make_rational(BigInt(static_cast<unsigned long>(bn)), BigInt(static_cast<unsigned long>(bd)));
  }
  BigInt bn = 1, bd = 1;
  for (std::size_t i = 0; i < da.divisors.size(); ++i) {
    if (!in_class(da, i, cls)) continue;
    const BigInt& d1 = da.divisors[i];
    const BigInt cap = ipow(d1, k + 1) * db.value;
    for (std::size_t j = 0; j < db.divisors.size(); ++j) {
      if (!in_class(db, j, cls)) continue;
      const BigInt& d2 = db.divisors[j];
      if (ipow(d2, k + 1) * da.value > cap) continue;
      if (d2 * bd > bn * d1) {
        bn = d2;
        bd = d1;
      }
    }
  }
  return make_rational(bn, bd);
}

Rational brute_qk(const BigInt& fa, const BigInt& dfa, const BigInt& fb, const BigInt& dfb, unsigned long k,
                  DivisorClass cls) {
  if (fa == 0) throw std::invalid_argument("brute_qk: f(a) must be nonzero");
  return brute_qk(brute_divisors(fa, dfa), brute_divisors(fb, dfb), k, cls);
}

}  // namespace irrcert
