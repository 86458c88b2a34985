#include "irrcert/arith.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

namespace irrcert {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& sieve_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& d, unsigned long s,
                        const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// One Pollard-Brent attempt; writes a nontrivial factor of n on success.
bool brent_split(const BigInt& n, const BigInt& c, const BigInt& x0, std::uint64_t budget,
                 BigInt& factor) {
  constexpr std::uint64_t kBatch = 128;
  BigInt y = x0, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1, spent = 0;
  auto step = [&](BigInt& v) {
    v = (v * v + c) % n;
  };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += kBatch;
      spent += lim;
    }
    r *= 2;
    if (spent > budget && g == 1) return false;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return false;
  factor = g;
  return true;
}

void add_prime(Factorization& out, const BigInt& p, unsigned e) { out.factors[p] += e; }

// Fully factors m (all prime factors above the trial bound).
void split_cofactor(const BigInt& m, const FactorConfig& cfg, std::mt19937_64& rng,
                    Factorization& out) {
  std::vector<std::pair<BigInt, unsigned>> work{{m, 1u}};
  while (!work.empty()) {
    auto [x, mult] = work.back();
    work.pop_back();
    if (x == 1) continue;
    if (is_prime(x)) {
      add_prime(out, x, mult);
      continue;
    }
    if (mpz_perfect_power_p(x.get_mpz_t())) {
      bool done = false;
      for (unsigned long k = mpz_sizeinbase(x.get_mpz_t(), 2); k >= 2 && !done; --k) {
        if (auto r = exact_root(x, k)) {
          work.emplace_back(*r, mult * static_cast<unsigned>(k));
          done = true;
        }
      }
      if (done) continue;
    }
    BigInt factor;
    bool found = false;
    for (unsigned round = 0; round < cfg.rho_rounds && !found; ++round) {
      BigInt c = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 1));
      BigInt x0 = BigInt(static_cast<unsigned long>(rng() % 1'000'000 + 2));
      found = brent_split(x, c, x0, cfg.rho_iterations, factor);
    }
    if (!found) throw FactorizationBudgetExceeded(x);
    BigInt other = x / factor;
    work.emplace_back(factor, mult);
    work.emplace_back(other, mult);
  }
}

}  // namespace

FactorizationBudgetExceeded::FactorizationBudgetExceeded(const BigInt& cofactor)
    : std::runtime_error("factorization budget exceeded on cofactor " + cofactor.get_str()),
      cofactor_(cofactor) {}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return sign < 0 ? BigInt(-v) : v;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  auto it = factors.find(p);
  return it == factors.end() ? 0u : it->second;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational ipow(const Rational& base, unsigned long exp) {
  Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  return r;  // already canonical: gcd(num^e, den^e) = 1
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned p : kBases) {
    if (!miller_rabin_round(n, n_minus_1, d, s, BigInt(p))) return false;
  }
  // 3317044064679887385961981 is the least strong pseudoprime to all 12 bases.
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  std::mt19937_64 rng(mpz_get_ui(n.get_mpz_t()) ^ 0x9e3779b97f4a7c15ULL);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(rng()));
  for (int i = 0; i < 24; ++i) {
    BigInt base = gen.get_z_range(n - 3) + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  return true;
}

Factorization factor_integer(const BigInt& n, const FactorConfig& cfg) {
  if (n == 0) throw std::invalid_argument("factor_integer: n must be nonzero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  BigInt m = abs(n);
  const auto& primes = sieve_primes();
  bool exhausted_trial = true;  // every prime <= trial bound was tried
  std::uint64_t last_tried = 1;
  for (std::uint32_t p : primes) {
    if (p > cfg.trial_bound) break;
    if (BigInt(p) * p > m) {
      exhausted_trial = false;
      break;
    }
    last_tried = p;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors[BigInt(p)] = e;
    }
  }
  if (m == 1) return out;
  // Every prime factor of m exceeds last_tried; a single factor if m < next^2.
  const BigInt next = BigInt(static_cast<unsigned long>(last_tried + 1));
  if (!exhausted_trial || m < next * next) {
    out.factors[m] += 1;
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  split_cofactor(m, cfg, rng, out);
  return out;
}

std::vector<BigInt> positive_divisors(const Factorization& f) {
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned long min_power_exceeding(const Rational& base, const Rational& target) {
  if (base <= 1) throw std::invalid_argument("min_power_exceeding: base must exceed 1");
  // base^u > target  <=>  bn^u * td > tn * bd^u
  const BigInt& bn = base.get_num();
  const BigInt& bd = base.get_den();
  const BigInt& tn = target.get_num();
  const BigInt& td = target.get_den();
  auto exceeds = [&](unsigned long u) { return ipow(bn, u) * td > tn * ipow(bd, u); };
  if (exceeds(0)) return 0;
  unsigned long hi = 1;
  while (!exceeds(hi)) hi *= 2;
  unsigned long lo = hi / 2;  // !exceeds(lo) holds (lo == 0 checked above)
  while (hi - lo > 1) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (exceeds(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

unsigned long min_k_exceeding(const Rational& s, const Rational& ratio) {
  if (s <= 1) throw std::invalid_argument("min_k_exceeding: s must exceed 1");
  if (ratio < 1) throw std::invalid_argument("min_k_exceeding: ratio must be at least 1");
  const unsigned long u = min_power_exceeding(s, ratio);
  return u >= 2 ? u - 1 : 1;
}

unsigned long floor_log(const Rational& base, const Rational& target) {
  if (target < 1) throw std::invalid_argument("floor_log: target must be at least 1");
  return min_power_exceeding(base, target) - 1;
}

std::optional<BigInt> exact_root(const BigInt& n, unsigned long k) {
  if (k == 0) throw std::invalid_argument("exact_root: k must be positive");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  auto num = exact_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = exact_root(q.get_den(), k);
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

Rational root_upper_bound(const Rational& x, unsigned long k, unsigned bits) {
  if (x < 0) throw std::invalid_argument("root_upper_bound: x must be nonnegative");
  if (x == 0) return Rational(0);
  if (auto exact = exact_root(x, k)) return *exact;
  // floor(x * 2^(bits*k)) then floor k-th root, plus one ulp.
  BigInt scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits * k);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  BigInt r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k);
  r += 1;
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(r, den);
}

}  // namespace irrcert
