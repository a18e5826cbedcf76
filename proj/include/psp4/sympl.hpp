#pragma once

// Closed forms for PSp4(q), q = 2^f > 2: group order, element-order
// spectrum, the parameterized conjugacy classes, and the number of elements
// of each order.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psp4/arith.hpp"

namespace psp4::sympl {

/// q = 2^f with f >= 2. PSp4(q) = Sp4(q) for these q.
class FieldSize {
 public:
  /// Throws std::invalid_argument unless q is a power of 2 greater than 2.
  static FieldSize from_q(const BigInt& q);
  static FieldSize from_degree(unsigned f);

  unsigned degree() const { return degree_; }
  const BigInt& q() const { return q_; }

  friend bool operator==(const FieldSize& a, const FieldSize& b) {
    return a.degree_ == b.degree_;
  }

 private:
  FieldSize(unsigned f, BigInt q) : degree_(f), q_(std::move(q)) {}
  unsigned degree_;
  BigInt q_;
};

/// q^4 (q^4 - 1)(q^2 - 1).
BigInt group_order(const FieldSize& q);

/// Union of the divisors of 4, 2(q-1), 2(q+1), q^2-1 and q^2+1, ascending.
std::vector<BigInt> spectrum(const FieldSize& q);

// ---------------------------------------------------------------------
// Conjugacy classes.

enum class ClassFamily {
  A1, A2, A31, A32, A41, A42,
  B1, B2, B3, B4, B5,
  C1, C2, C3, C4,
  D1, D2, D3, D4,
};

inline constexpr ClassFamily kAllFamilies[] = {
    ClassFamily::A1,  ClassFamily::A2,  ClassFamily::A31, ClassFamily::A32,
    ClassFamily::A41, ClassFamily::A42, ClassFamily::B1,  ClassFamily::B2,
    ClassFamily::B3,  ClassFamily::B4,  ClassFamily::B5,  ClassFamily::C1,
    ClassFamily::C2,  ClassFamily::C3,  ClassFamily::C4,  ClassFamily::D1,
    ClassFamily::D2,  ClassFamily::D3,  ClassFamily::D4,
};

std::string to_string(ClassFamily family);
/// Number of parameters the family carries: 0, 1 or 2.
unsigned parameter_count(ClassFamily family);

/// One conjugacy class. Parameters are the lexicographically least member
/// of their orbit under the class identifications; index counts classes
/// within the family from 1.
struct ClassDescriptor {
  ClassFamily family;
  std::optional<std::uint64_t> i;
  std::optional<std::uint64_t> j;
  BigInt rep_order;
  std::uint64_t index = 1;
  BigInt class_length;
};

/// Number of classes in a family, from its closed-form count.
BigInt family_class_count(const FieldSize& q, ClassFamily family);

inline constexpr unsigned kMaxClassTableDegree = 12;

/// Every class, families in declaration order. The table has O(q^2) rows,
/// so this throws std::invalid_argument for f > kMaxClassTableDegree.
std::vector<ClassDescriptor> class_table(const FieldSize& q);

// ---------------------------------------------------------------------
// Element counts by order.

/// The closed form that yields m_r for a given order r.
enum class CountForm {
  Identity,      // r = 1
  Involution,    // r = 2
  Four,          // r = 4
  MinusTorus,    // 1 != r | q-1
  PlusTorus,     // 1 != r | q+1
  TwiceMinus,    // r = 2r', 1 != r' | q-1
  TwicePlus,     // r = 2r', 1 != r' | q+1
  Mixed,         // r = r's', 1 != r' | q-1, 1 != s' | q+1
  Anisotropic,   // 1 != r | q^2+1
};

std::string to_string(CountForm form);

/// Throws std::invalid_argument when r is not in spectrum(q).
CountForm count_form(const FieldSize& q, const BigInt& r);

/// Number of elements of order r. Fractional coefficients are evaluated
/// as exact rationals; a non-integral result throws std::logic_error.
/// Throws std::invalid_argument when r is not in spectrum(q).
BigInt m_of_order(const FieldSize& q, const BigInt& r);

struct NseTable {
  BigInt q;
  BigInt order;
  std::map<BigInt, BigInt> counts;  // element order -> number of elements
};

NseTable nse_table(const FieldSize& q);
std::set<BigInt> nse_set(const FieldSize& q);
std::set<BigInt> nse_set(const NseTable& table);

/// 4 | phi(r) for every divisor r > 1 of q^2 + 1.
bool phi_divisibility_check(const FieldSize& q);

}  // namespace psp4::sympl
