#pragma once

// Brute-force ground truth. Builds Sp4(q) from its root-subgroup, torus and
// Weyl generators, closes it under multiplication, and counts elements by
// order. A small permutation-group engine covers the order-84 pair.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psp4/gf2.hpp"

namespace psp4::oracle {

using gf2::FieldElement;
using gf2::FieldSpec;

/// Thrown when a closure grows past the caller's cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(std::uint64_t cap)
      : std::runtime_error("group closure exceeded cap of " +
                           std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

/// 4x4 matrix over GF(2^f), row-major. Holds a non-owning pointer to its
/// field, which must outlive the matrix.
class Mat4 {
 public:
  explicit Mat4(const FieldSpec& field);  // zero matrix
  static Mat4 identity(const FieldSpec& field);

  const FieldSpec& field() const { return *field_; }
  FieldElement at(unsigned row, unsigned col) const {
    return {entries_[row * 4 + col]};
  }
  void set(unsigned row, unsigned col, FieldElement v) {
    entries_[row * 4 + col] = static_cast<std::uint16_t>(v.bits);
  }

  Mat4 operator*(const Mat4& rhs) const;
  Mat4 transpose() const;
  bool is_identity() const;

  /// M^T J M == J for J the all-ones antidiagonal.
  bool is_symplectic() const;

  /// Packs the 16 entries into 16*f bits. Requires f <= 4.
  std::uint64_t key() const;
  static Mat4 from_key(const FieldSpec& field, std::uint64_t key);

  friend bool operator==(const Mat4& a, const Mat4& b) {
    return a.entries_ == b.entries_;
  }

 private:
  const FieldSpec* field_;
  std::array<std::uint16_t, 16> entries_{};
};

/// The alternating form preserved by every generator.
Mat4 form_matrix(const FieldSpec& field);

enum class Root { A, B, APlusB, TwoAPlusB };

/// Root element x_root(t).
Mat4 root_element(const FieldSpec& field, Root root, FieldElement t);
/// Torus element diag(z1, z2, z2^-1, z1^-1). Throws for zero arguments.
Mat4 torus_element(const FieldSpec& field, FieldElement z1, FieldElement z2);
/// x(1) * transpose(x(-1)) * x(1), the Weyl reflection for the root.
Mat4 weyl_element(const FieldSpec& field, Root root);

struct NamedGenerator {
  std::string name;
  Mat4 matrix;
};

/// x_a(1), x_b(1), x_{a+b}(1), x_{2a+b}(1), h(g,1), h(1,g), w_a, w_b where g
/// generates the multiplicative group. Throws std::invalid_argument unless
/// f >= 2, and std::logic_error if a generator fails to preserve the form.
std::vector<NamedGenerator> sp4_named_generators(const FieldSpec& field);
std::vector<Mat4> sp4_generators(const FieldSpec& field);

/// Validates q = 2^f with 2 <= f <= 16.
unsigned field_degree_for_q(std::uint64_t q);

/// Breadth-first closure from the identity. Throws CapacityError once more
/// than cap elements are found, std::invalid_argument when f > 4 or the
/// generator list is empty.
std::vector<Mat4> enumerate_group(const std::vector<Mat4>& generators,
                                  std::uint64_t cap);

/// Element order by repeated multiplication; empty past max_order.
std::optional<std::uint64_t> element_order(const Mat4& m,
                                           std::uint64_t max_order);

using OrderHistogram = std::map<std::uint64_t, std::uint64_t>;

/// Throws std::runtime_error if some element has order above max_order.
OrderHistogram order_histogram(const std::vector<Mat4>& elements,
                               std::uint64_t max_order);

/// Orders of `samples` random words of length 1..max_word_length over the
/// generators, with a fixed seed. Words whose order exceeds max_order are
/// counted under key 0.
OrderHistogram sample_word_orders(const std::vector<Mat4>& generators,
                                  std::uint64_t samples,
                                  unsigned max_word_length,
                                  std::uint64_t max_order,
                                  std::uint64_t seed);

// Derived counts on a histogram.

std::uint64_t histogram_total(const OrderHistogram& h);
/// |{x : x^n = 1}|.
std::uint64_t power_count(const OrderHistogram& h, std::uint64_t n);
/// Number of elements whose order is a multiple of n.
std::uint64_t multiples_count(const OrderHistogram& h, std::uint64_t n);

// ---------------------------------------------------------------------
// Permutation groups.

using Permutation = std::vector<std::uint16_t>;

struct PermGroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Throws std::invalid_argument when a generator is not a bijection of
/// {0..degree-1}.
void validate(const PermGroupSpec& spec);
std::vector<Permutation> enumerate_perm_group(const PermGroupSpec& spec,
                                              std::uint64_t cap = 1'000'000);
OrderHistogram perm_nse(const PermGroupSpec& spec,
                        std::uint64_t cap = 1'000'000);
/// |{x : x^n = 1}|, evaluated by raising every element to the n-th power.
std::uint64_t power_count(const PermGroupSpec& spec, std::uint64_t n,
                          std::uint64_t cap = 1'000'000);

/// Z4 x (Z7 : Z3) on 4 + 7 points, Z3 acting by a -> 2a.
PermGroupSpec example_z4_times_f21();
/// Z3 x (Z7 : Z4) on 3 + 11 points, Z4 acting on Z7 through a -> -a.
PermGroupSpec example_z3_times_z7z4();

}  // namespace psp4::oracle
