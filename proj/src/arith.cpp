#include "psp4/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace psp4 {

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

BigInt from_decimal(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a non-negative decimal integer: '" +
                                text + "'");
  }
  return BigInt(text, 10);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace psp4

namespace psp4::arith {
namespace {

constexpr unsigned kTrialBound = 1'000'000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialBound; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           mod.get_mpz_t());
  return out;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s,
                        BigInt a) {
  a %= n;
  if (a == 0) return true;
  BigInt x = powm(a, d, n);
  const BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Pollard rho, Brent's cycle detection with batched gcds. n is odd,
// composite and has no factor below the trial bound.
BigInt pollard_brent(const BigInt& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b97f4a7c15UL);
  constexpr std::uint64_t kBatch = 128;
  for (;;) {
    const BigInt c = rng.get_z_range(n - 1) + 1;
    BigInt y = rng.get_z_range(n);
    BigInt g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t limit = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < limit; ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) factor_into(root, out);
        return;
      }
    }
  }
  const BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (!(pairs_[i - 1].prime < pairs_[i].prime)) {
      throw std::invalid_argument("factorization primes must increase");
    }
  }
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  out.reserve(pairs_.size());
  for (const auto& pp : pairs_) out.push_back(pp.prime);
  return out;
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& pp : pairs_) v *= pow(pp.prime, pp.exponent);
  return v;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    // Jim Sinclair's base set, exact for all n < 2^64.
    static constexpr std::array<unsigned long, 7> kBases = {
        2UL, 325UL, 9375UL, 28178UL, 450775UL, 9780504UL, 1795265022UL};
    for (unsigned long a : kBases) {
      if (!miller_rabin_round(n, d, s, BigInt(a))) return false;
    }
    return true;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedUL);
  for (int round = 0; round < 64; ++round) {
    BigInt a = rng.get_z_range(n - 3) + 2;
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

Factorization factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }
  factor_into(rest, found);

  std::vector<PrimePower> pairs;
  pairs.reserve(found.size());
  for (auto& [p, e] : found) pairs.push_back({p, e});
  return Factorization(std::move(pairs));
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : f.pairs()) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) { return divisors(factorize(n)); }

BigInt euler_phi(const BigInt& n) {
  BigInt out = n;
  const auto fac = factorize(n);
  for (const auto& [p, e] : fac.pairs()) out = out / p * (p - 1);
  return out;
}

BigInt dedekind_psi(const BigInt& n) {
  BigInt out = n;
  const auto fac = factorize(n);
  for (const auto& [p, e] : fac.pairs()) out = out / p * (p + 1);
  return out;
}

BigInt coprime_part(const BigInt& n, const BigInt& m) {
  BigInt out = n;
  for (BigInt g = gcd(out, m); g != 1; g = gcd(out, g)) out /= g;
  return out;
}

std::optional<PrimePower> as_prime_power(const BigInt& n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.pairs().size() != 1) return std::nullopt;
  return f.pairs().front();
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<unsigned> log2_exact(const BigInt& n) {
  if (n < 1) return std::nullopt;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (mpz_scan1(n.get_mpz_t(), 0) != bits - 1) return std::nullopt;
  return static_cast<unsigned>(bits - 1);
}

BigInt cyclotomic_eval(unsigned n, const BigInt& x) {
  if (n == 0) throw std::invalid_argument("cyclotomic_eval: n must be >= 1");
  if (x < 2) throw std::invalid_argument("cyclotomic_eval: x must be >= 2");
  std::map<unsigned, BigInt> memo;
  auto eval = [&](auto&& self, unsigned k) -> BigInt {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    BigInt value = pow(x, k) - 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) {
        const BigInt factor = self(self, d);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                     factor.get_mpz_t());
      }
    }
    memo.emplace(k, value);
    return value;
  };
  return eval(eval, n);
}

std::optional<BigInt> twisted_cyclotomic_eval(TwistedCyclotomic tag,
                                              const BigInt& x) {
  if (x < 2) {
    throw std::invalid_argument("twisted_cyclotomic_eval: x must be >= 2");
  }
  switch (tag) {
    case TwistedCyclotomic::Phi6Plus:
    case TwistedCyclotomic::Phi6Minus: {
      const auto root = exact_sqrt(3 * x);
      if (!root) return std::nullopt;
      return tag == TwistedCyclotomic::Phi6Plus ? BigInt(x + *root + 1)
                                                : BigInt(x - *root + 1);
    }
    case TwistedCyclotomic::Phi12Plus:
    case TwistedCyclotomic::Phi12Minus: {
      const auto root = exact_sqrt(2 * x);
      if (!root) return std::nullopt;
      const BigInt twist = x * *root + *root;
      const BigInt base = x * x + x + 1;
      return tag == TwistedCyclotomic::Phi12Plus ? BigInt(base + twist)
                                                 : BigInt(base - twist);
    }
  }
  return std::nullopt;
}

std::string to_string(TwistedCyclotomic tag) {
  switch (tag) {
    case TwistedCyclotomic::Phi6Plus: return "Phi6+";
    case TwistedCyclotomic::Phi6Minus: return "Phi6-";
    case TwistedCyclotomic::Phi12Plus: return "Phi12+";
    case TwistedCyclotomic::Phi12Minus: return "Phi12-";
  }
  return "?";
}

std::string to_string(CatalanKind kind) {
  switch (kind) {
    case CatalanKind::Exceptional: return "Exceptional";
    case CatalanKind::Fermat: return "Fermat";
    case CatalanKind::Mersenne: return "Mersenne";
  }
  return "?";
}

std::optional<CatalanSolution> classify_catalan(std::uint64_t p,
                                                std::uint64_t q, unsigned m,
                                                unsigned n) {
  if (m == 0 || n == 0) return std::nullopt;
  if (!is_probable_prime(BigInt(p)) || !is_probable_prime(BigInt(q))) {
    return std::nullopt;
  }
  if (pow(BigInt(p), m) != pow(BigInt(q), n) + 1) return std::nullopt;

  CatalanSolution s{p, q, m, n, CatalanKind::Exceptional};
  if (p == 3 && q == 2 && m == 2 && n == 3) return s;
  const bool n_power_of_two = (n & (n - 1)) == 0;
  if (q == 2 && m == 1 && n_power_of_two) {
    s.kind = CatalanKind::Fermat;
    return s;
  }
  if (p == 2 && n == 1 && is_probable_prime(BigInt(m))) {
    s.kind = CatalanKind::Mersenne;
    return s;
  }
  throw std::logic_error("prime powers differing by one outside the known "
                         "classification");
}

std::vector<CatalanSolution> search_catalan(std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("search_catalan: bound >= 2");
  std::vector<CatalanSolution> out;
  const BigInt limit(bound);
  // Walk q^n + 1 over primes q and classify the prime-power ones.
  for (std::uint64_t q = 2; q + 1 <= bound; ++q) {
    if (!is_probable_prime(BigInt(q))) continue;
    BigInt qn = q;
    for (unsigned n = 1; qn + 1 <= limit; ++n, qn *= q) {
      const auto pp = as_prime_power(qn + 1);
      if (!pp) continue;
      const auto s = classify_catalan(pp->prime.get_ui(), q, pp->exponent, n);
      if (s) out.push_back(*s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DivisibilityWitness divide_witness(std::string label, const BigInt& divisor,
                                   const BigInt& dividend) {
  DivisibilityWitness w{std::move(label), divisor, 0, 0};
  mpz_fdiv_qr(w.quotient.get_mpz_t(), w.remainder.get_mpz_t(),
              dividend.get_mpz_t(), divisor.get_mpz_t());
  return w;
}

SmallDivisorChecks q1_predicates(const BigInt& q) {
  const auto f = log2_exact(q);
  if (!f || *f < 2) {
    throw std::invalid_argument("q must be a power of 2 greater than 2, got " +
                                to_decimal(q));
  }
  const BigInt q2 = q * q;
  const BigInt q4 = q2 * q2;
  const BigInt order = q4 * (q4 - 1) * (q2 - 1);
  return SmallDivisorChecks{
      q,
      order,
      divide_witness("2q^2+3", 2 * q2 + 3, order),
      divide_witness("q^2+2", q2 + 2, order),
      divide_witness("2q^2+1", 2 * q2 + 1, order),
      divide_witness("3q^2+2", 3 * q2 + 2, order),
      divide_witness("q^4-9", q4 - 9, order),
  };
}

}  // namespace psp4::arith
