#include <doctest.h>

#include <algorithm>

#include "psp4/primegraph.hpp"
#include "psp4/sympl.hpp"

using namespace psp4;
using namespace psp4::primegraph;

using Primes = std::vector<BigInt>;

TEST_CASE("graph at q = 4") {
  const auto fs = sympl::FieldSize::from_q(4);
  const auto g = build_graph(sympl::spectrum(fs), 979200);
  CHECK(g.vertices == Primes{2, 3, 5, 17});
  REQUIRE(component_count(g) == 2);
  CHECK(g.components[0] == Primes{2, 3, 5});
  CHECK(g.components[1] == Primes{17});
  CHECK(g.order_components == Primes{57600, 17});
  CHECK(separation_check(4));
}

TEST_CASE("graph at q = 8") {
  const auto fs = sympl::FieldSize::from_q(8);
  const auto g = build_graph(sympl::spectrum(fs), sympl::group_order(fs));
  REQUIRE(component_count(g) == 2);
  CHECK(g.components[0] == Primes{2, 3, 7});
  CHECK(g.components[1] == Primes{5, 13});
  const std::pair<BigInt, BigInt> e{5, 13};
  CHECK(std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end());
}

TEST_CASE("small graphs") {
  const auto empty = build_graph({1}, 1);
  CHECK(empty.vertices.empty());
  CHECK(component_count(empty) == 0);
  const auto single = build_graph({1, 2, 4}, 8);
  CHECK(component_count(single) == 1);
  CHECK(single.order_components == Primes{8});
  CHECK_THROWS_AS(build_graph({1, 3}, 8), std::invalid_argument);
  CHECK(separation_check(16));
}

TEST_CASE("two components for f <= 12") {
  for (unsigned f = 2; f <= 12; ++f) {
    const auto fs = sympl::FieldSize::from_degree(f);
    const BigInt& q = fs.q();
    const BigInt n = sympl::group_order(fs);
    const auto g = build_graph(sympl::spectrum(fs), n);
    REQUIRE(component_count(g) == 2);
    CHECK(g.order_components[1] == q * q + 1);
    CHECK(g.order_components[0] == n / (q * q + 1));
    for (const auto& p : g.components[1]) CHECK((q * q + 1) % p == 0);
    for (const auto& s : g.components[0]) CHECK((2 * (q * q - 1)) % s == 0);
    BigInt prod = 1;
    for (const auto& c : g.order_components) prod *= c;
    CHECK(prod == n);
    CHECK(separation_check(q));
  }
}
