#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "psp4/arith.hpp"

using namespace psp4;
using namespace psp4::arith;

namespace {

// Smallest prime factor by plain trial division.
std::uint64_t least_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

bool naive_prime(std::uint64_t n) { return n >= 2 && least_factor(n) == n; }

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

TEST_CASE("factorize examples") {
  CHECK(factorize(1).empty());
  const auto f = factorize(979200);
  REQUIRE(f.pairs().size() == 4);
  CHECK(f.pairs()[0] == PrimePower{2, 8});
  CHECK(f.pairs()[1] == PrimePower{3, 2});
  CHECK(f.pairs()[2] == PrimePower{5, 2});
  CHECK(f.pairs()[3] == PrimePower{17, 1});
  const auto g = factorize(65);
  REQUIRE(g.pairs().size() == 2);
  CHECK(g.pairs()[0] == PrimePower{5, 1});
  CHECK(g.pairs()[1] == PrimePower{13, 1});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs and finds large factors") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    for (const auto& pp : f.pairs()) CHECK(naive_prime(pp.prime.get_ui()));
  }
  const BigInt m31 = pow(BigInt(2), 31) - 1;
  const BigInt m61 = pow(BigInt(2), 61) - 1;
  const auto f = factorize(m31 * m61);
  REQUIRE(f.pairs().size() == 2);
  CHECK(f.pairs()[0].prime == m31);
  CHECK(f.pairs()[1].prime == m61);
  const BigInt p = BigInt(1000003);
  const auto h = factorize(pow(p, 3) * 4);
  REQUIRE(h.pairs().size() == 2);
  CHECK(h.pairs()[1] == PrimePower{p, 3});
  CHECK(is_probable_prime(pow(BigInt(2), 127) - 1));
  CHECK_FALSE(is_probable_prime(pow(BigInt(2), 128) + 1));
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<BigInt>{1});
  CHECK(divisors(12) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(17) == std::vector<BigInt>{1, 17});
  for (std::uint64_t n = 1; n <= 600; ++n) {
    std::vector<BigInt> naive;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) naive.emplace_back(d);
    }
    CHECK(divisors(n) == naive);
  }
}

TEST_CASE("phi and psi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(dedekind_psi(1) == 1);
  CHECK(euler_phi(17) == 16);
  CHECK(dedekind_psi(17) == 18);
  CHECK(euler_phi(15) == 8);
  CHECK(dedekind_psi(6) == 12);
}

TEST_CASE("phi against a gcd count") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("phi and psi are multiplicative") {
  for (std::uint64_t a = 1; a <= 150; ++a) {
    for (std::uint64_t b = 1; b <= 150; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      CHECK(dedekind_psi(a * b) == dedekind_psi(a) * dedekind_psi(b));
    }
  }
  for (std::uint64_t a : {97ULL, 1000ULL, 9999ULL}) {
    for (std::uint64_t b : {101ULL, 7ULL, 10000ULL - 1}) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      CHECK(dedekind_psi(a * b) == dedekind_psi(a) * dedekind_psi(b));
    }
  }
}

TEST_CASE("sum of phi over divisors") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    BigInt s = 0;
    for (const auto& d : divisors(n)) s += euler_phi(d);
    REQUIRE(s == n);
  }
}

TEST_CASE("cyclotomic examples") {
  CHECK(cyclotomic_eval(1, 5) == 4);
  CHECK(cyclotomic_eval(12, 2) == 13);
  CHECK(cyclotomic_eval(9, 2) == 73);
  CHECK_THROWS(cyclotomic_eval(0, 2));
  CHECK_THROWS(cyclotomic_eval(3, 1));
}

TEST_CASE("cyclotomic values by the Mobius product") {
  for (unsigned n = 1; n <= 64; ++n) {
    for (unsigned long x = 2; x <= 5; ++x) {
      mpq_class prod = 1;
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = mobius(n / d);
        const BigInt term = pow(BigInt(x), d) - 1;
        if (mu == 1) prod *= mpq_class(term);
        if (mu == -1) prod /= mpq_class(term);
      }
      prod.canonicalize();
      REQUIRE(prod.get_den() == 1);
      const BigInt phi = cyclotomic_eval(n, x);
      CHECK(phi == prod.get_num());
      CHECK((pow(BigInt(x), n) - 1) % phi == 0);
    }
  }
}

TEST_CASE("twisted cyclotomic values") {
  CHECK(twisted_cyclotomic_eval(TwistedCyclotomic::Phi6Plus, 3) == BigInt(7));
  CHECK(twisted_cyclotomic_eval(TwistedCyclotomic::Phi12Plus, 2) == BigInt(13));
  CHECK(twisted_cyclotomic_eval(TwistedCyclotomic::Phi12Minus, 2) == BigInt(1));
  CHECK_FALSE(twisted_cyclotomic_eval(TwistedCyclotomic::Phi6Plus, 5));
  CHECK_FALSE(twisted_cyclotomic_eval(TwistedCyclotomic::Phi12Minus, 4));
  for (unsigned e = 1; e <= 15; e += 2) {
    const BigInt x3 = pow(BigInt(3), e);
    CHECK(*twisted_cyclotomic_eval(TwistedCyclotomic::Phi6Plus, x3) *
              *twisted_cyclotomic_eval(TwistedCyclotomic::Phi6Minus, x3) ==
          cyclotomic_eval(6, x3));
    const BigInt x2 = pow(BigInt(2), e);
    CHECK(*twisted_cyclotomic_eval(TwistedCyclotomic::Phi12Plus, x2) *
              *twisted_cyclotomic_eval(TwistedCyclotomic::Phi12Minus, x2) ==
          cyclotomic_eval(12, x2));
  }
}

TEST_CASE("classify_catalan") {
  const auto a = classify_catalan(3, 2, 2, 3);
  REQUIRE(a);
  CHECK(a->kind == CatalanKind::Exceptional);
  const auto b = classify_catalan(17, 2, 1, 4);
  REQUIRE(b);
  CHECK(b->kind == CatalanKind::Fermat);
  const auto c = classify_catalan(2, 7, 3, 1);
  REQUIRE(c);
  CHECK(c->kind == CatalanKind::Mersenne);
  CHECK_FALSE(classify_catalan(5, 2, 1, 3));
  CHECK_FALSE(classify_catalan(9, 2, 1, 3));  // 9 is not prime
}

TEST_CASE("search_catalan agrees with a double loop") {
  const std::uint64_t bound = 1'000'000;
  std::set<std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned>> naive;
  for (std::uint64_t q = 2; q + 1 <= bound; ++q) {
    if (!naive_prime(q)) continue;
    std::uint64_t qn = q;
    for (unsigned n = 1; qn + 1 <= bound; ++n) {
      const std::uint64_t v = qn + 1;
      const std::uint64_t p = least_factor(v);
      std::uint64_t w = v;
      unsigned m = 0;
      while (w % p == 0) {
        w /= p;
        ++m;
      }
      if (w == 1) naive.insert({p, m, q, n});
      if (qn > bound / q) break;
      qn *= q;
    }
  }
  std::set<std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned>> found;
  for (const auto& s : search_catalan(bound)) {
    found.insert({s.p, s.m, s.q, s.n});
    const bool exceptional = s.p == 3 && s.q == 2 && s.m == 2 && s.n == 3;
    const bool fermat = s.q == 2 && s.m == 1 && (s.n & (s.n - 1)) == 0;
    const bool mersenne = s.p == 2 && s.n == 1 && naive_prime(s.m);
    CHECK(exceptional + fermat + mersenne == 1);
  }
  CHECK(found == naive);
}

TEST_CASE("q1 predicates examples") {
  const auto c4 = q1_predicates(4);
  CHECK(c4.order == 979200);
  CHECK(c4.three_q2_plus_2.divisor == 50);
  CHECK(c4.three_q2_plus_2.divides());
  CHECK(c4.three_q2_plus_2.quotient == 19584);
  CHECK(c4.two_q2_plus_3.divisor == 35);
  CHECK_FALSE(c4.two_q2_plus_3.divides());
  CHECK(c4.two_q2_plus_3.remainder == 5);
  const auto c8 = q1_predicates(8);
  CHECK(c8.q2_plus_2.divisor == 66);
  CHECK_FALSE(c8.q2_plus_2.divides());
  CHECK_THROWS_AS(q1_predicates(2), std::invalid_argument);
  CHECK_THROWS_AS(q1_predicates(12), std::invalid_argument);
}

TEST_CASE("q1 predicates over f <= 10") {
  for (unsigned f = 2; f <= 10; ++f) {
    const BigInt q = pow(BigInt(2), f);
    const auto c = q1_predicates(q);
    const BigInt n = q * q * q * q * (q * q * q * q - 1) * (q * q - 1);
    CHECK(c.order == n);
    CHECK(c.two_q2_plus_3.divides() == (n % (2 * q * q + 3) == 0));
    CHECK_FALSE(c.two_q2_plus_3.divides());
    CHECK_FALSE(c.q4_minus_9.divides());
    CHECK_FALSE(c.two_q2_plus_1.divides());
    CHECK(c.q2_plus_2.divides() == (q == 4));
    CHECK(c.three_q2_plus_2.divides() == (q == 4));
  }
}
