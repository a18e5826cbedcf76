#pragma once

// Binary extension fields GF(2^f), f <= 16. Elements are f-bit masks of
// polynomials over GF(2) reduced modulo the lexicographically smallest
// irreducible polynomial of degree f.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace psp4::gf2 {

inline constexpr unsigned kMaxDegree = 16;

struct FieldElement {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Carry-less product of two polynomials over GF(2), unreduced.
constexpr std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (; b != 0; b >>= 1, a <<= 1) {
    if (b & 1) out ^= a;
  }
  return out;
}

constexpr unsigned poly_degree(std::uint64_t p) {
  unsigned d = 0;
  while (p >>= 1) ++d;
  return d;
}

constexpr std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

/// Irreducibility by trial division over all polynomials of degree
/// 1..deg/2.
constexpr bool is_irreducible(std::uint64_t p) {
  const unsigned d = poly_degree(p);
  if (d == 0) return false;
  for (std::uint64_t g = 2; poly_degree(g) <= d / 2; ++g) {
    if (poly_mod(p, g) == 0) return false;
  }
  return true;
}

/// Smallest irreducible of each degree 1..16 (index 0 unused).
inline constexpr std::array<std::uint32_t, kMaxDegree + 1> kModulusTable = [] {
  std::array<std::uint32_t, kMaxDegree + 1> t{};
  for (unsigned f = 1; f <= kMaxDegree; ++f) {
    for (std::uint32_t p = 1u << f; p < (2u << f); ++p) {
      if (is_irreducible(p)) {
        t[f] = p;
        break;
      }
    }
  }
  return t;
}();

/// The field GF(2^f). Immutable after construction; log/antilog tables are
/// built eagerly so multiplication is two lookups.
class FieldSpec {
 public:
  /// Throws std::invalid_argument unless 1 <= f <= 16.
  explicit FieldSpec(unsigned degree);

  unsigned degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << degree_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// The polynomial x (or 1 when f = 1).
  FieldElement x() const { return {degree_ == 1 ? 1u : 2u}; }
  /// Throws std::out_of_range when bits >= 2^f.
  FieldElement element(std::uint32_t bits) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return {a.bits ^ b.bits};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.bits == 0 || b.bits == 0) return {0};
    return {exp_[log_[a.bits] + log_[b.bits]]};
  }
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  /// k may be negative for nonzero a.
  FieldElement pow(FieldElement a, long long k) const;

  /// Smallest k >= 1 with a^k = 1. Throws std::domain_error for zero.
  std::uint64_t multiplicative_order(FieldElement a) const;
  /// Element of order 2^f - 1 with the smallest mask.
  FieldElement generator() const { return generator_; }

  /// Reference multiply by shift-and-reduce, independent of the tables.
  FieldElement mul_slow(FieldElement a, FieldElement b) const;

 private:
  unsigned degree_;
  std::uint32_t modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so log sums never wrap
};

inline FieldElement find_generator(const FieldSpec& spec) {
  return spec.generator();
}

}  // namespace psp4::gf2
