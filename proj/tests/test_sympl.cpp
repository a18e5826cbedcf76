#include <doctest.h>

#include <map>

#include "psp4/arith.hpp"
#include "psp4/sympl.hpp"

using namespace psp4;
using namespace psp4::sympl;

namespace {

BigInt order_of(const BigInt& q) {
  return q * q * q * q * (q * q * q * q - 1) * (q * q - 1);
}

// Number of classes per family, written out from the class table.
BigInt expected_class_count(const BigInt& q, ClassFamily fam) {
  switch (fam) {
    case ClassFamily::B1: return (q - 2) * (q - 4) / 8;
    case ClassFamily::B2:
    case ClassFamily::B3: return q * (q - 2) / 4;
    case ClassFamily::B4: return q * (q - 2) / 8;
    case ClassFamily::B5: return q * q / 4;
    case ClassFamily::C1:
    case ClassFamily::C2:
    case ClassFamily::D1:
    case ClassFamily::D2: return (q - 2) / 2;
    case ClassFamily::C3:
    case ClassFamily::C4:
    case ClassFamily::D3:
    case ClassFamily::D4: return q / 2;
    default: return 1;
  }
}

std::vector<BigInt> divisor_union(const BigInt& q) {
  std::set<BigInt> s;
  for (const BigInt& n : {BigInt(4), BigInt(2 * (q - 1)), BigInt(2 * (q + 1)),
                          BigInt(q * q - 1), BigInt(q * q + 1)}) {
    for (BigInt d = 1; d <= n; ++d) {
      if (n % d == 0) s.insert(d);
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("field size validation") {
  CHECK(FieldSize::from_q(4).degree() == 2);
  CHECK(FieldSize::from_degree(5).q() == 32);
  CHECK_THROWS_AS(FieldSize::from_q(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::from_q(12), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::from_q(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::from_degree(1), std::invalid_argument);
}

TEST_CASE("group order") {
  CHECK(group_order(FieldSize::from_q(4)) == 979200);
  CHECK(group_order(FieldSize::from_q(8)) == BigInt(4096) * 4095 * 63);
  CHECK(group_order(FieldSize::from_q(8)) == 1056706560);
}

TEST_CASE("spectrum") {
  const auto s4 = spectrum(FieldSize::from_q(4));
  CHECK(s4 == std::vector<BigInt>{1, 2, 3, 4, 5, 6, 10, 15, 17});
  const auto s8 = spectrum(FieldSize::from_q(8));
  CHECK(s8 == std::vector<BigInt>{1, 2, 3, 4, 5, 6, 7, 9, 13, 14, 18, 21, 63,
                                  65});
  for (unsigned f = 2; f <= 7; ++f) {
    const auto fs = FieldSize::from_degree(f);
    CHECK(spectrum(fs) == divisor_union(fs.q()));
  }
}

TEST_CASE("m_of_order examples") {
  const auto q4 = FieldSize::from_q(4);
  CHECK(m_of_order(q4, 2) == 4335);
  CHECK(m_of_order(q4, 15) == 261120);
  CHECK(m_of_order(q4, 17) == 230400);
  CHECK_THROWS_AS(m_of_order(q4, 7), std::invalid_argument);
  CHECK(count_form(q4, 15) == CountForm::Mixed);
  CHECK(count_form(q4, 6) == CountForm::TwiceMinus);
  CHECK(count_form(q4, 10) == CountForm::TwicePlus);
  CHECK(count_form(q4, 17) == CountForm::Anisotropic);
}

TEST_CASE("nse table at q = 4") {
  const auto t = nse_table(FieldSize::from_q(4));
  const std::map<BigInt, BigInt> expected{
      {1, 1},          {2, 4335},       {3, 10880},
      {4, 61200},      {5, 52224},      {6, 163200},
      {10, 195840},    {15, 261120},    {17, 230400}};
  CHECK(t.counts == expected);
  CHECK(t.order == 979200);
  CHECK(nse_set(t).size() == 9);
}

TEST_CASE("partition identity for f = 2..16") {
  for (unsigned f = 2; f <= 16; ++f) {
    const auto fs = FieldSize::from_degree(f);
    const auto t = nse_table(fs);
    BigInt total = 0;
    for (const auto& [r, m] : t.counts) {
      total += m;
      CHECK(m % arith::euler_phi(r) == 0);
    }
    CHECK(total == order_of(fs.q()));
    CHECK(t.counts.at(1) == 1);
  }
}

TEST_CASE("r divides the number of solutions of x^r = 1") {
  for (unsigned f = 2; f <= 4; ++f) {
    const auto t = nse_table(FieldSize::from_degree(f));
    for (const auto& [r, m] : t.counts) {
      BigInt sum = 0;
      for (const auto& d : arith::divisors(r)) sum += t.counts.at(d);
      CHECK(sum % r == 0);
    }
  }
}

TEST_CASE("class table against closed forms") {
  for (unsigned f = 2; f <= 5; ++f) {
    const auto fs = FieldSize::from_degree(f);
    const BigInt& q = fs.q();
    const auto rows = class_table(fs);
    std::map<BigInt, BigInt> by_order;
    std::map<ClassFamily, BigInt> per_family;
    BigInt total = 0;
    for (const auto& row : rows) {
      by_order[row.rep_order] += row.class_length;
      per_family[row.family] += 1;
      total += row.class_length;
      CHECK(order_of(q) % row.class_length == 0);
      CHECK(parameter_count(row.family) ==
            unsigned(row.i.has_value()) + unsigned(row.j.has_value()));
    }
    CHECK(total == order_of(q));
    CHECK(by_order == nse_table(fs).counts);
    for (auto fam : kAllFamilies) {
      const BigInt want = expected_class_count(q, fam);
      CHECK(per_family[fam] == want);
      CHECK(family_class_count(fs, fam) == want);
    }
  }
}

TEST_CASE("class table examples at q = 4") {
  const auto rows = class_table(FieldSize::from_q(4));
  CHECK(rows.size() == 27);
  int b5 = 0, b1 = 0;
  for (const auto& row : rows) {
    if (row.family == ClassFamily::B5) {
      ++b5;
      CHECK(row.class_length == 57600);
      CHECK(row.rep_order == 17);
    }
    b1 += row.family == ClassFamily::B1;
  }
  CHECK(b5 == 4);
  CHECK(b1 == 0);
  CHECK_THROWS_AS(class_table(FieldSize::from_degree(13)),
                  std::invalid_argument);
}

TEST_CASE("4 divides phi of divisors of q^2+1") {
  for (unsigned f = 2; f <= 16; ++f) {
    CHECK(phi_divisibility_check(FieldSize::from_degree(f)));
  }
}
