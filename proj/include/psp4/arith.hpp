#pragma once

// Exact integer number theory used by every other layer: factorization,
// divisors, multiplicative functions, cyclotomic values and a few
// special-purpose divisibility predicates.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace psp4 {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& n);
BigInt from_decimal(const std::string& text);
BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace psp4

namespace psp4::arith {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  std::vector<BigInt> primes() const;
  BigInt value() const;
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

/// Miller-Rabin. Deterministic below 2^64; above that 64 rounds with
/// bases drawn from a fixed-seed generator, so the answer is probabilistic
/// but reproducible.
bool is_probable_prime(const BigInt& n);

/// Trial division to 10^6, then Pollard rho with Brent cycling.
/// Throws std::invalid_argument for n < 1.
Factorization factorize(const BigInt& n);

/// All positive divisors, ascending.
std::vector<BigInt> divisors(const BigInt& n);
std::vector<BigInt> divisors(const Factorization& f);

BigInt euler_phi(const BigInt& n);
BigInt dedekind_psi(const BigInt& n);

/// Largest divisor of n coprime to m.
BigInt coprime_part(const BigInt& n, const BigInt& m);

/// Returns p when n = p^k for a prime p and k >= 1.
std::optional<PrimePower> as_prime_power(const BigInt& n);

/// Exact square root when n is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);

/// Returns k when n = 2^k.
std::optional<unsigned> log2_exact(const BigInt& n);

/// Phi_n(x) by exact division of x^n - 1 by the lower cyclotomic factors.
BigInt cyclotomic_eval(unsigned n, const BigInt& x);

enum class TwistedCyclotomic { Phi6Plus, Phi6Minus, Phi12Plus, Phi12Minus };

/// Phi6^{+/-}(x) = x +/- sqrt(3x) + 1 and
/// Phi12^{+/-}(x) = x^2 +/- x sqrt(2x) + x +/- sqrt(2x) + 1.
/// Empty when the square root is not integral.
std::optional<BigInt> twisted_cyclotomic_eval(TwistedCyclotomic tag,
                                              const BigInt& x);
std::string to_string(TwistedCyclotomic tag);

// ---------------------------------------------------------------------
// Prime powers differing by one.

enum class CatalanKind { Exceptional, Fermat, Mersenne };
std::string to_string(CatalanKind kind);

/// A solution of p^m = q^n + 1 with p, q prime.
struct CatalanSolution {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned n = 0;
  CatalanKind kind = CatalanKind::Exceptional;

  friend bool operator==(const CatalanSolution&, const CatalanSolution&) =
      default;
  friend auto operator<=>(const CatalanSolution& a, const CatalanSolution& b) {
    return std::tie(a.p, a.m, a.q, a.n) <=> std::tie(b.p, b.m, b.q, b.n);
  }
};

/// Empty unless p, q are prime and p^m = q^n + 1.
std::optional<CatalanSolution> classify_catalan(std::uint64_t p,
                                                std::uint64_t q, unsigned m,
                                                unsigned n);

/// Every solution with p^m <= bound, sorted by (p, m).
std::vector<CatalanSolution> search_catalan(std::uint64_t bound);

// ---------------------------------------------------------------------
// Divisibility of q^4 (q^4 - 1)(q^2 - 1) by five small polynomials in q.

struct DivisibilityWitness {
  std::string label;  // e.g. "2q^2+3"
  BigInt divisor;
  BigInt quotient;
  BigInt remainder;
  bool divides() const { return remainder == 0; }
};

struct SmallDivisorChecks {
  BigInt q;
  BigInt order;
  DivisibilityWitness two_q2_plus_3;   // never divides
  DivisibilityWitness q2_plus_2;       // divides only for q = 2, 4
  DivisibilityWitness two_q2_plus_1;   // divides only for q = 2
  DivisibilityWitness three_q2_plus_2; // divides only for q = 4
  DivisibilityWitness q4_minus_9;      // never divides

  std::vector<const DivisibilityWitness*> all() const {
    return {&two_q2_plus_3, &q2_plus_2, &two_q2_plus_1, &three_q2_plus_2,
            &q4_minus_9};
  }
};

/// Throws std::invalid_argument unless q = 2^f with f >= 2.
SmallDivisorChecks q1_predicates(const BigInt& q);

DivisibilityWitness divide_witness(std::string label, const BigInt& divisor,
                                   const BigInt& dividend);

}  // namespace psp4::arith
