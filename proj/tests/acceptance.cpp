// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "psp4/arith.hpp"
#include "psp4/characterize.hpp"
#include "psp4/oracle.hpp"
#include "psp4/primegraph.hpp"
#include "psp4/sympl.hpp"

using namespace psp4;

namespace {

// Thrown by expect() with a message naming the first failed condition.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

BigInt order_of(const BigInt& q) {
  return q * q * q * q * (q * q * q * q - 1) * (q * q - 1);
}

const std::map<std::uint64_t, std::uint64_t> kTable4{
    {1, 1},        {2, 4335},     {3, 10880},    {4, 61200},  {5, 52224},
    {6, 163200},   {10, 195840},  {15, 261120},  {17, 230400}};

const oracle::OrderHistogram& sp4_histogram() {
  static const oracle::FieldSpec field(2);
  static const auto h = [] {
    const auto elems =
        oracle::enumerate_group(oracle::sp4_generators(field), 2'000'000);
    for (const auto& m : elems) expect(m.is_symplectic(), "non-symplectic element");
    return oracle::order_histogram(elems, 17);
  }();
  return h;
}

void oracle_equality() {
  const auto& h = sp4_histogram();
  expect(oracle::histogram_total(h) == 979200, "enumeration size");
  expect(h == kTable4, "oracle histogram vs expected table");
  const auto t = sympl::nse_table(sympl::FieldSize::from_q(4));
  expect(t.counts.size() == h.size(), "key sets differ");
  for (const auto& [r, m] : t.counts) {
    const auto it = h.find(r.get_ui());
    expect(it != h.end() && m == it->second, "closed form at order " + to_decimal(r));
  }
}

void partition_identity() {
  for (unsigned f = 2; f <= 16; ++f) {
    const auto fs = sympl::FieldSize::from_degree(f);
    BigInt total = 0;
    for (const auto& r : sympl::spectrum(fs)) total += sympl::m_of_order(fs, r);
    expect(total == order_of(fs.q()), "f = " + std::to_string(f));
  }
}

void table_vs_formula() {
  for (unsigned f = 2; f <= 5; ++f) {
    const auto fs = sympl::FieldSize::from_degree(f);
    const BigInt& q = fs.q();
    std::map<BigInt, BigInt> by_order;
    std::map<sympl::ClassFamily, BigInt> per_family;
    for (const auto& row : sympl::class_table(fs)) {
      by_order[row.rep_order] += row.class_length;
      per_family[row.family] += 1;
    }
    for (const auto& r : sympl::spectrum(fs)) {
      expect(by_order[r] == sympl::m_of_order(fs, r),
             "order " + to_decimal(r) + " at q = " + to_decimal(q));
    }
    expect(by_order.size() == sympl::spectrum(fs).size(), "extra orders");
    using F = sympl::ClassFamily;
    const std::map<F, BigInt> expected{
        {F::A1, 1}, {F::A2, 1}, {F::A31, 1}, {F::A32, 1}, {F::A41, 1},
        {F::A42, 1},
        {F::B1, (q - 2) * (q - 4) / 8}, {F::B2, q * (q - 2) / 4},
        {F::B3, q * (q - 2) / 4},       {F::B4, q * (q - 2) / 8},
        {F::B5, q * q / 4},
        {F::C1, (q - 2) / 2}, {F::C2, (q - 2) / 2}, {F::C3, q / 2}, {F::C4, q / 2},
        {F::D1, (q - 2) / 2}, {F::D2, (q - 2) / 2}, {F::D3, q / 2}, {F::D4, q / 2}};
    for (const auto& [fam, n] : expected) {
      const BigInt got = per_family.count(fam) ? per_family[fam] : BigInt(0);
      expect(got == n, sympl::to_string(fam) + " at q = " + to_decimal(q));
    }
  }
}

void spectrum_and_graph() {
  const auto fs = sympl::FieldSize::from_q(4);
  const auto s = sympl::spectrum(fs);
  expect(s == std::vector<BigInt>{1, 2, 3, 4, 5, 6, 10, 15, 17}, "spectrum(4)");
  const auto g = primegraph::build_graph(s, 979200);
  expect(g.components == std::vector<std::vector<BigInt>>{{2, 3, 5}, {17}},
         "components at q = 4");
  expect(g.order_components == std::vector<BigInt>{57600, 17},
         "order components at q = 4");
  for (unsigned f = 2; f <= 12; ++f) {
    const auto fk = sympl::FieldSize::from_degree(f);
    const auto gk = primegraph::build_graph(sympl::spectrum(fk), sympl::group_order(fk));
    expect(primegraph::component_count(gk) == 2, "f = " + std::to_string(f));
  }
}

void end_to_end() {
  using characterize::Outcome;
  using characterize::Status;
  const std::set<std::string> expected{
      "PSL: n = 2, q' even, q^2+1 = q'+1",
      "PSp: n = 2^m >= 2, q^2+1 = (q'^n+1)/(2,q'-1)"};
  for (const auto& [order, f] : {std::pair<BigInt, unsigned>{979200, 2},
                                 std::pair<BigInt, unsigned>{1056706560, 3}}) {
    const auto fs = sympl::FieldSize::from_degree(f);
    const auto v = characterize::characterize(order, sympl::nse_set(fs));
    const std::string at = " at q = " + to_decimal(fs.q());
    expect(v.outcome == Outcome::IsomorphicToPSp4 && v.q == fs.q(), "outcome" + at);
    expect(v.trace_complete(), "trace incomplete" + at);
    std::set<std::string> confirming;
    std::set<characterize::Family> families;
    for (const auto& e : v.trace) {
      families.insert(e.family);
      expect(e.status != Status::NeedsManualLemma,
             "manual case " + e.case_label + at);
      if (e.status == Status::Confirming) {
        confirming.insert(characterize::to_string(e.family) + ": " + e.case_label);
      }
    }
    expect(families.size() == std::size(characterize::kAllFamilies),
           "missing family" + at);
    expect(confirming == expected, "confirming set" + at);

    const auto t = sympl::nse_table(fs);
    const auto base = sympl::nse_set(t);
    for (const auto& [r, m] : t.counts) {
      auto nse = base;
      nse.erase(m);
      nse.insert(m + 1);
      expect(characterize::characterize(order, nse).outcome != Outcome::IsomorphicToPSp4,
             "perturbation at order " + to_decimal(r) + at);
    }
  }
}

void example_84() {
  const auto g = oracle::example_z4_times_f21();
  const auto h = oracle::example_z3_times_z7z4();
  const auto hg = oracle::perm_nse(g);
  const auto hh = oracle::perm_nse(h);
  std::set<std::uint64_t> sg, sh;
  for (const auto& [o, c] : hg) sg.insert(c);
  for (const auto& [o, c] : hh) sh.insert(c);
  const std::set<std::uint64_t> expected{1, 2, 6, 12, 14, 28};
  expect(sg == expected, "nse of Z4 x (Z7:Z3)");
  expect(sh == expected, "nse of Z3 x (Z7:Z4)");
  expect(oracle::power_count(g, 3) == 15, "|G_3|");
  expect(oracle::power_count(h, 3) == 3, "|H_3|");
  expect(hg.count(28) == 1 && hh.count(28) == 0, "order-28 elements");
}

std::uint64_t least_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

void number_theory() {
  const std::uint64_t bound = 1'000'000;
  std::set<std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned>> naive, found;
  for (std::uint64_t q = 2; q < bound; ++q) {
    if (least_factor(q) != q) continue;
    for (std::uint64_t qn = q, n = 1; qn + 1 <= bound; qn *= q, ++n) {
      const std::uint64_t p = least_factor(qn + 1);
      std::uint64_t w = qn + 1;
      unsigned m = 0;
      for (; w % p == 0; w /= p) ++m;
      if (w == 1) naive.insert({p, m, q, static_cast<unsigned>(n)});
      if (qn > bound / q) break;
    }
  }
  for (const auto& s : arith::search_catalan(bound)) found.insert({s.p, s.m, s.q, s.n});
  expect(found == naive, "catalan search vs double loop");

  for (unsigned f = 2; f <= 10; ++f) {
    const BigInt q = pow(BigInt(2), f);
    const auto c = arith::q1_predicates(q);
    const BigInt n = order_of(q);
    const bool q4 = q == 4;
    expect(!c.two_q2_plus_3.divides() && n % (2 * q * q + 3) != 0, "2q^2+3");
    expect(c.q2_plus_2.divides() == q4 && (n % (q * q + 2) == 0) == q4, "q^2+2");
    expect(!c.two_q2_plus_1.divides() && n % (2 * q * q + 1) != 0, "2q^2+1");
    expect(c.three_q2_plus_2.divides() == q4 && (n % (3 * q * q + 2) == 0) == q4,
           "3q^2+2");
    expect(!c.q4_minus_9.divides() && n % (q * q * q * q - 9) != 0, "q^4-9");
  }

  const auto& h = sp4_histogram();
  for (const auto& d : arith::divisors(979200)) {
    const auto k = d.get_ui();
    expect(oracle::power_count(h, k) % k == 0, "Frobenius on Sp4(4), n = " + std::to_string(k));
  }
  for (const auto& spec : {oracle::example_z4_times_f21(), oracle::example_z3_times_z7z4()}) {
    for (std::uint64_t k = 1; k <= 84; ++k) {
      if (84 % k == 0) {
        expect(oracle::power_count(spec, k) % k == 0, "Frobenius on order 84");
      }
    }
  }
  for (std::uint64_t k = 1; k <= 979200; ++k) {
    if (979200 % k) continue;
    std::uint64_t coprime = 979200, g;
    while ((g = std::gcd(coprime, k)) != 1) coprime /= g;
    const auto c = oracle::multiples_count(h, k);
    expect(c == 0 || c % coprime == 0, "Weisner on Sp4(4), n = " + std::to_string(k));
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void()>> criteria[] = {
      {"oracle equality at q = 4", oracle_equality},
      {"partition identity for 2 <= f <= 16", partition_identity},
      {"class table against closed forms", table_vs_formula},
      {"spectrum and prime graph", spectrum_and_graph},
      {"end-to-end recognition", end_to_end},
      {"order-84 example", example_84},
      {"number-theory suite", number_theory},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    try {
      run();
      std::cout << "PASS " << k << " " << name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << k << " " << name << ": " << e.what() << "\n";
    }
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
