#include "psp4/gf2.hpp"

#include <stdexcept>
#include <string>

namespace psp4::gf2 {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec::FieldSpec(unsigned degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("GF(2^f) supports 1 <= f <= 16, got f = " +
                                std::to_string(degree));
  }
  modulus_ = kModulusTable[degree];

  const std::uint64_t group = size() - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](FieldElement a, std::uint64_t k) {
    FieldElement r = one();
    for (; k != 0; k >>= 1, a = mul_slow(a, a)) {
      if (k & 1) r = mul_slow(r, a);
    }
    return r;
  };
  generator_ = one();
  for (std::uint32_t bits = 1; bits < size(); ++bits) {
    const FieldElement g{bits};
    bool primitive = true;
    for (auto p : factors) {
      if (slow_pow(g, group / p) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  log_.assign(size(), 0);
  exp_.assign(2 * group + 1, 0);
  FieldElement cur = one();
  for (std::uint64_t k = 0; k < group; ++k) {
    exp_[k] = cur.bits;
    exp_[k + group] = cur.bits;
    log_[cur.bits] = static_cast<std::uint32_t>(k);
    cur = mul_slow(cur, generator_);
  }
  exp_[2 * group] = 1;
}

FieldElement FieldSpec::element(std::uint32_t bits) const {
  if (bits >= size()) {
    throw std::out_of_range("field element mask out of range");
  }
  return {bits};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.bits == 0) throw std::domain_error("inverse of zero in GF(2^f)");
  const std::uint32_t group = size() - 1;
  return {exp_[(group - log_[a.bits]) % group]};
}

FieldElement FieldSpec::pow(FieldElement a, long long k) const {
  if (a.bits == 0) {
    if (k < 0) throw std::domain_error("negative power of zero in GF(2^f)");
    return k == 0 ? one() : zero();
  }
  const long long group = size() - 1;
  long long e = (static_cast<long long>(log_[a.bits]) * (k % group)) % group;
  if (e < 0) e += group;
  return {exp_[e]};
}

std::uint64_t FieldSpec::multiplicative_order(FieldElement a) const {
  if (a.bits == 0) throw std::domain_error("order of zero in GF(2^f)");
  std::uint64_t order = size() - 1;
  for (auto p : prime_factors(order)) {
    while (order % p == 0 &&
           pow(a, static_cast<long long>(order / p)) == one()) {
      order /= p;
    }
  }
  return order;
}

FieldElement FieldSpec::mul_slow(FieldElement a, FieldElement b) const {
  return {static_cast<std::uint32_t>(poly_mod(clmul(a.bits, b.bits), modulus_))};
}

}  // namespace psp4::gf2
