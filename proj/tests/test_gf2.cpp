#include <doctest.h>

#include <map>
#include <numeric>
#include <stdexcept>

#include "psp4/gf2.hpp"

using namespace psp4::gf2;

TEST_CASE("modulus table holds irreducibles of the right degree") {
  CHECK(kModulusTable[2] == 0b111);
  CHECK(kModulusTable[3] == 0b1011);
  CHECK(kModulusTable[4] == 0b10011);
  for (unsigned f = 1; f <= kMaxDegree; ++f) {
    CHECK(poly_degree(kModulusTable[f]) == f);
    CHECK(is_irreducible(kModulusTable[f]));
  }
  CHECK_FALSE(is_irreducible(0b101));  // (x+1)^2
}

TEST_CASE("construction limits") {
  CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(17), std::invalid_argument);
  const FieldSpec f(3);
  CHECK_THROWS_AS(f.element(8), std::out_of_range);
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  CHECK_THROWS_AS(f.multiplicative_order(f.zero()), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for f = 2..5") {
  for (unsigned d = 2; d <= 5; ++d) {
    const FieldSpec f(d);
    const std::uint32_t n = f.size();
    for (std::uint32_t a = 0; a < n; ++a) {
      const auto x = f.element(a);
      CHECK(f.mul(x, f.one()) == x);
      CHECK(f.add(x, x) == f.zero());
      if (a) CHECK(f.mul(x, f.inv(x)) == f.one());
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto y = f.element(b);
        REQUIRE(f.mul(x, y) == f.mul_slow(x, y));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (std::uint32_t c = 0; c < n; ++c) {
          const auto z = f.element(c);
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("elements of each order number phi(d)") {
  for (unsigned d = 2; d <= 8; ++d) {
    const FieldSpec f(d);
    const std::uint64_t m = f.size() - 1;
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint32_t a = 1; a < f.size(); ++a) {
      const auto x = f.element(a);
      const auto k = f.multiplicative_order(x);
      CHECK(m % k == 0);
      CHECK(f.pow(x, static_cast<long long>(k)) == f.one());
      ++hist[k];
    }
    for (const auto& [k, count] : hist) {
      std::uint64_t phi = 0;
      for (std::uint64_t t = 1; t <= k; ++t) phi += std::gcd(t, k) == 1;
      CHECK(count == phi);
    }
    CHECK(f.multiplicative_order(f.generator()) == m);
  }
}

TEST_CASE("powers and inverses") {
  const FieldSpec f(4);
  const auto g = f.generator();
  CHECK(f.pow(g, 15) == f.one());
  CHECK(f.pow(g, -1) == f.inv(g));
  CHECK(f.mul(f.pow(g, 7), f.pow(g, -7)) == f.one());
  CHECK(f.x() == f.element(2));
  CHECK(FieldSpec(1).x() == FieldSpec(1).one());
}
