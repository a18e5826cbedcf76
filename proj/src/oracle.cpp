#include "psp4/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace psp4::oracle {

Mat4::Mat4(const FieldSpec& field) : field_(&field) {}

Mat4 Mat4::identity(const FieldSpec& field) {
  Mat4 m(field);
  for (unsigned i = 0; i < 4; ++i) m.set(i, i, field.one());
  return m;
}

Mat4 Mat4::operator*(const Mat4& rhs) const {
  Mat4 out(*field_);
  const FieldSpec& f = *field_;
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < 4; ++k) {
        acc ^= f.mul(at(r, k), rhs.at(k, c)).bits;
      }
      out.entries_[r * 4 + c] = static_cast<std::uint16_t>(acc);
    }
  }
  return out;
}

Mat4 Mat4::transpose() const {
  Mat4 out(*field_);
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) out.set(c, r, at(r, c));
  }
  return out;
}

bool Mat4::is_identity() const {
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) {
      if (entries_[r * 4 + c] != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Mat4::is_symplectic() const {
  const Mat4 j = form_matrix(*field_);
  return transpose() * j * *this == j;
}

std::uint64_t Mat4::key() const {
  const unsigned f = field_->degree();
  if (f > 4) throw std::invalid_argument("Mat4::key requires f <= 4");
  std::uint64_t k = 0;
  for (unsigned i = 0; i < 16; ++i) {
    k |= std::uint64_t{entries_[i]} << (f * i);
  }
  return k;
}

Mat4 Mat4::from_key(const FieldSpec& field, std::uint64_t key) {
  const unsigned f = field.degree();
  if (f > 4) throw std::invalid_argument("Mat4::from_key requires f <= 4");
  const std::uint64_t mask = (std::uint64_t{1} << f) - 1;
  Mat4 m(field);
  for (unsigned i = 0; i < 16; ++i) {
    m.entries_[i] = static_cast<std::uint16_t>((key >> (f * i)) & mask);
  }
  return m;
}

Mat4 form_matrix(const FieldSpec& field) {
  Mat4 j(field);
  for (unsigned i = 0; i < 4; ++i) j.set(i, 3 - i, field.one());
  return j;
}

Mat4 root_element(const FieldSpec& field, Root root, FieldElement t) {
  // Signs are dropped: -t = t in characteristic 2.
  Mat4 m = Mat4::identity(field);
  switch (root) {
    case Root::A:
      m.set(0, 1, t);
      m.set(2, 3, t);
      break;
    case Root::B:
      m.set(1, 2, t);
      break;
    case Root::APlusB:
      m.set(0, 2, t);
      m.set(1, 3, t);
      break;
    case Root::TwoAPlusB:
      m.set(0, 3, t);
      break;
  }
  return m;
}

Mat4 torus_element(const FieldSpec& field, FieldElement z1, FieldElement z2) {
  Mat4 m(field);
  m.set(0, 0, z1);
  m.set(1, 1, z2);
  m.set(2, 2, field.inv(z2));
  m.set(3, 3, field.inv(z1));
  return m;
}

Mat4 weyl_element(const FieldSpec& field, Root root) {
  const Mat4 x = root_element(field, root, field.one());
  return x * x.transpose() * x;
}

std::vector<NamedGenerator> sp4_named_generators(const FieldSpec& field) {
  if (field.degree() < 2) {
    throw std::invalid_argument("Sp4 generators need q = 2^f with f >= 2");
  }
  const FieldElement one = field.one();
  const FieldElement g = field.generator();

  // The Weyl elements are written out entry by entry.
  Mat4 w_a(field);
  w_a.set(0, 1, one);
  w_a.set(1, 0, one);
  w_a.set(2, 3, one);
  w_a.set(3, 2, one);
  Mat4 w_b(field);
  w_b.set(0, 0, one);
  w_b.set(1, 2, one);
  w_b.set(2, 1, one);
  w_b.set(3, 3, one);

  std::vector<NamedGenerator> out{
      {"x_a(1)", root_element(field, Root::A, one)},
      {"x_b(1)", root_element(field, Root::B, one)},
      {"x_{a+b}(1)", root_element(field, Root::APlusB, one)},
      {"x_{2a+b}(1)", root_element(field, Root::TwoAPlusB, one)},
      {"h(g,1)", torus_element(field, g, one)},
      {"h(1,g)", torus_element(field, one, g)},
      {"w_a", w_a},
      {"w_b", w_b},
  };
  for (const auto& gen : out) {
    if (!gen.matrix.is_symplectic()) {
      throw std::logic_error("generator " + gen.name +
                             " does not preserve the alternating form");
    }
  }
  return out;
}

std::vector<Mat4> sp4_generators(const FieldSpec& field) {
  std::vector<Mat4> out;
  for (auto& g : sp4_named_generators(field)) out.push_back(g.matrix);
  return out;
}

unsigned field_degree_for_q(std::uint64_t q) {
  if (q <= 2 || (q & (q - 1)) != 0) {
    throw std::invalid_argument("q must be a power of 2 greater than 2, got " +
                                std::to_string(q));
  }
  const unsigned f = static_cast<unsigned>(std::countr_zero(q));
  if (f > gf2::kMaxDegree) {
    throw std::invalid_argument("q = 2^f is limited to f <= 16");
  }
  return f;
}

std::vector<Mat4> enumerate_group(const std::vector<Mat4>& generators,
                                  std::uint64_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("enumerate_group needs at least one generator");
  }
  const FieldSpec& field = generators.front().field();
  if (field.degree() > 4) {
    throw std::invalid_argument("enumerate_group packs keys and needs f <= 4");
  }

  std::unordered_set<std::uint64_t> seen;
  std::vector<Mat4> elements;
  const Mat4 id = Mat4::identity(field);
  seen.insert(id.key());
  elements.push_back(id);
  if (cap < 1) throw CapacityError(cap);

  // elements doubles as the BFS queue.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Mat4& g : generators) {
      Mat4 next = elements[head] * g;
      if (seen.insert(next.key()).second) {
        if (elements.size() >= cap) throw CapacityError(cap);
        elements.push_back(next);
      }
    }
  }
  return elements;
}

std::optional<std::uint64_t> element_order(const Mat4& m,
                                           std::uint64_t max_order) {
  Mat4 power = m;
  for (std::uint64_t k = 1; k <= max_order; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

OrderHistogram order_histogram(const std::vector<Mat4>& elements,
                               std::uint64_t max_order) {
  OrderHistogram h;
  for (const Mat4& m : elements) {
    const auto order = element_order(m, max_order);
    if (!order) {
      throw std::runtime_error("element order exceeds " +
                               std::to_string(max_order));
    }
    ++h[*order];
  }
  return h;
}

OrderHistogram sample_word_orders(const std::vector<Mat4>& generators,
                                  std::uint64_t samples,
                                  unsigned max_word_length,
                                  std::uint64_t max_order,
                                  std::uint64_t seed) {
  if (generators.empty() || max_word_length == 0) {
    throw std::invalid_argument("sample_word_orders: empty generator set");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::uniform_int_distribution<unsigned> length(1, max_word_length);
  OrderHistogram h;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Mat4 word = generators[pick(rng)];
    for (unsigned i = 1, n = length(rng); i < n; ++i) {
      word = word * generators[pick(rng)];
    }
    ++h[element_order(word, max_order).value_or(0)];
  }
  return h;
}

std::uint64_t histogram_total(const OrderHistogram& h) {
  std::uint64_t total = 0;
  for (const auto& [order, count] : h) total += count;
  return total;
}

std::uint64_t power_count(const OrderHistogram& h, std::uint64_t n) {
  std::uint64_t total = 0;
  for (const auto& [order, count] : h) {
    if (n % order == 0) total += count;
  }
  return total;
}

std::uint64_t multiples_count(const OrderHistogram& h, std::uint64_t n) {
  std::uint64_t total = 0;
  for (const auto& [order, count] : h) {
    if (order % n == 0) total += count;
  }
  return total;
}

// ---------------------------------------------------------------------

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // Apply a, then b.
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

std::uint64_t perm_order(const Permutation& p) {
  std::vector<bool> visited(p.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (visited[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !visited[j]; j = p[j]) {
      visited[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

// Disjoint union of the two actions on degree_a + degree_b points.
Permutation join(const Permutation& a, const Permutation& b) {
  Permutation out = a;
  const auto shift = static_cast<std::uint16_t>(a.size());
  for (auto v : b) out.push_back(static_cast<std::uint16_t>(v + shift));
  return out;
}

Permutation affine_z7(int mul, int add) {
  Permutation p(7);
  for (int a = 0; a < 7; ++a) {
    p[a] = static_cast<std::uint16_t>(((mul * a + add) % 7 + 7) % 7);
  }
  return p;
}

Permutation cycle(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % n);
  return p;
}

}  // namespace

void validate(const PermGroupSpec& spec) {
  if (spec.degree == 0 || spec.degree > 65535) {
    throw std::invalid_argument("permutation degree out of range");
  }
  for (const auto& g : spec.generators) {
    if (g.size() != spec.degree) {
      throw std::invalid_argument("generator length differs from degree");
    }
    std::vector<bool> hit(spec.degree, false);
    for (auto v : g) {
      if (v >= spec.degree || hit[v]) {
        throw std::invalid_argument("generator is not a bijection");
      }
      hit[v] = true;
    }
  }
}

std::vector<Permutation> enumerate_perm_group(const PermGroupSpec& spec,
                                              std::uint64_t cap) {
  validate(spec);
  std::set<Permutation> seen;
  std::vector<Permutation> elements{identity_perm(spec.degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : spec.generators) {
      Permutation next = compose(elements[head], g);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapacityError(cap);
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

OrderHistogram perm_nse(const PermGroupSpec& spec, std::uint64_t cap) {
  OrderHistogram h;
  for (const auto& p : enumerate_perm_group(spec, cap)) ++h[perm_order(p)];
  return h;
}

std::uint64_t power_count(const PermGroupSpec& spec, std::uint64_t n,
                          std::uint64_t cap) {
  const Permutation id = identity_perm(spec.degree);
  std::uint64_t count = 0;
  for (const auto& x : enumerate_perm_group(spec, cap)) {
    Permutation acc = id;
    Permutation base = x;
    for (std::uint64_t e = n; e != 0; e >>= 1, base = compose(base, base)) {
      if (e & 1) acc = compose(acc, base);
    }
    if (acc == id) ++count;
  }
  return count;
}

PermGroupSpec example_z4_times_f21() {
  const Permutation z4 = cycle(4);
  const Permutation id4 = identity_perm(4);
  const Permutation id7 = identity_perm(7);
  return PermGroupSpec{
      11,
      {join(z4, id7), join(id4, affine_z7(1, 1)), join(id4, affine_z7(2, 0))}};
}

PermGroupSpec example_z3_times_z7z4() {
  // Z4 acts faithfully on 4 extra points and on Z7 through its quotient of
  // order 2, so <translation, inversion x 4-cycle> has order 28.
  const Permutation z3 = cycle(3);
  const Permutation id3 = identity_perm(3);
  const Permutation id4 = identity_perm(4);
  const Permutation translation = join(affine_z7(1, 1), id4);
  const Permutation twist = join(affine_z7(-1, 0), cycle(4));
  const Permutation id11 = identity_perm(11);
  return PermGroupSpec{
      14, {join(z3, id11), join(id3, translation), join(id3, twist)}};
}

}  // namespace psp4::oracle
