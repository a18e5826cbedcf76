#include "psp4/characterize.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "psp4/primegraph.hpp"

namespace psp4::characterize {

using arith::cyclotomic_eval;
using arith::TwistedCyclotomic;
using sympl::FieldSize;

// ---------------------------------------------------------------------
// Count sets.

const std::set<BigInt>& CountSets::at(unsigned one_based) const {
  if (one_based < 1 || one_based > 9) {
    throw std::out_of_range("count sets are numbered 1..9");
  }
  return sets[one_based - 1];
}

std::set<BigInt> CountSets::all() const {
  std::set<BigInt> out;
  for (const auto& s : sets) out.insert(s.begin(), s.end());
  return out;
}

CountSets build_count_sets(const FieldSize& fs) {
  const BigInt& q = fs.q();
  CountSets c;
  auto nontrivial = [](const BigInt& n) {
    auto d = arith::divisors(n);
    d.erase(d.begin());
    return d;
  };
  c.sets[0].insert(BigInt(1));
  c.sets[1].insert(sympl::m_of_order(fs, 2));
  c.sets[2].insert(sympl::m_of_order(fs, 4));
  for (const auto& r : nontrivial(q - 1)) {
    c.sets[3].insert(sympl::m_of_order(fs, r));
    c.sets[5].insert(sympl::m_of_order(fs, 2 * r));
  }
  for (const auto& r : nontrivial(q + 1)) {
    c.sets[4].insert(sympl::m_of_order(fs, r));
    c.sets[6].insert(sympl::m_of_order(fs, 2 * r));
  }
  for (const auto& r : nontrivial(q - 1)) {
    for (const auto& s : nontrivial(q + 1)) {
      c.sets[7].insert(sympl::m_of_order(fs, r * s));
    }
  }
  for (const auto& r : nontrivial(q * q + 1)) {
    c.sets[8].insert(sympl::m_of_order(fs, r));
  }
  return c;
}

std::optional<BigInt> match_order(const BigInt& n) {
  if (n < 1) return std::nullopt;
  // The order is increasing in f; double f until it reaches n, then bisect.
  auto order_at = [](unsigned f) {
    return sympl::group_order(sympl::FieldSize::from_degree(f));
  };
  unsigned hi = 2;
  while (order_at(hi) < n) hi *= 2;
  unsigned lo = 2;
  while (lo < hi) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (order_at(mid) < n) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (order_at(lo) != n) return std::nullopt;
  return pow(BigInt(2), lo);
}

bool prime_count_membership(const FieldSize& fs, const BigInt& r,
                            const BigInt& value) {
  const BigInt& q = fs.q();
  const auto sets = build_count_sets(fs);
  if (r == 2) return sets.at(2).count(value) > 0;
  if (!arith::is_probable_prime(r)) {
    throw std::invalid_argument(to_decimal(r) + " is not prime");
  }
  if ((q * q + 1) % r == 0) return sets.at(9).count(value) > 0;
  if ((q * q - 1) % r == 0) {
    return sets.at(4).count(value) > 0 || sets.at(5).count(value) > 0;
  }
  throw std::invalid_argument(to_decimal(r) + " divides neither 2, q^2+1 "
                              "nor q^2-1");
}

FrobeniusExclusion frobenius_exclusion(const FieldSize& fs) {
  const BigInt& q = fs.q();
  const BigInt q2 = q * q;
  const BigInt even = q2 * q2 * (q2 - 1) * (q2 - 1);
  FrobeniusExclusion out;
  out.odd_into_even_minus_one =
      arith::divide_witness("q^2+1 into q^4(q^2-1)^2-1", q2 + 1, even - 1);
  out.even_into_q2 = arith::divide_witness("q^4(q^2-1)^2 into q^2", even, q2);
  out.excluded = !out.odd_into_even_minus_one.divides() &&
                 !out.even_into_q2.divides();
  return out;
}

// ---------------------------------------------------------------------

std::string to_string(Family family) {
  switch (family) {
    case Family::Alternating: return "Alternating";
    case Family::Sporadic: return "Sporadic";
    case Family::Tits: return "Tits";
    case Family::Exceptional: return "Exceptional";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::POmega: return "POmega";
  }
  return "?";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Eliminated: return "Eliminated";
    case Status::Confirming: return "Confirming";
    case Status::NeedsManualLemma: return "NeedsManualLemma";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::IsomorphicToPSp4: return "IsomorphicToPSp4";
    case Outcome::HypothesesNotMet: return "HypothesesNotMet";
    case Outcome::NotApplicable: return "NotApplicable";
  }
  return "?";
}

bool Verdict::trace_complete() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; }) &&
         std::none_of(trace.begin(), trace.end(), [](const TraceEntry& e) {
           return e.status == Status::NeedsManualLemma;
         });
}

// ---------------------------------------------------------------------
// Orders of candidate simple sections.

namespace {

std::string dec(const BigInt& n) { return to_decimal(n); }

BigInt gcd_ui(const BigInt& a, unsigned long b) {
  return gcd(a, BigInt(b));
}

BigInt psl_order(unsigned n, const BigInt& x) {
  BigInt r = pow(x, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) r *= pow(x, i) - 1;
  return r / gcd_ui(x - 1, n);
}

BigInt psu_order(unsigned n, const BigInt& x) {
  BigInt r = pow(x, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) {
    r *= (i % 2 == 0) ? BigInt(pow(x, i) - 1) : BigInt(pow(x, i) + 1);
  }
  return r / gcd_ui(x + 1, n);
}

// PSp_{2n}(x); also |Omega_{2n+1}(x)|, which has the same order.
BigInt psp_order(unsigned n, const BigInt& x) {
  BigInt r = pow(x, n * n);
  for (unsigned i = 1; i <= n; ++i) r *= pow(x, 2 * i) - 1;
  return r / gcd_ui(x - 1, 2);
}

// P-Omega^{sign}_{2m}(x), sign = +1 or -1.
BigInt pomega_even_order(int sign, unsigned m, const BigInt& x) {
  const BigInt xm = pow(x, m);
  const BigInt top = sign > 0 ? BigInt(xm - 1) : BigInt(xm + 1);
  BigInt r = pow(x, m * (m - 1)) * top;
  for (unsigned i = 1; i < m; ++i) r *= pow(x, 2 * i) - 1;
  return r / gcd(top, BigInt(4));
}

BigInt poly_product(const BigInt& x, unsigned head,
                    std::initializer_list<int> minus,
                    std::initializer_list<int> plus = {}) {
  BigInt r = pow(x, head);
  for (int e : minus) r *= pow(x, e) - 1;
  for (int e : plus) r *= pow(x, e) + 1;
  return r;
}

BigInt g2_order(const BigInt& x) { return poly_product(x, 6, {6, 2}); }
BigInt d4_twisted_order(const BigInt& x) {
  return pow(x, 12) * (pow(x, 8) + pow(x, 4) + 1) * (pow(x, 6) - 1) *
         (pow(x, 2) - 1);
}
BigInt ree_order(const BigInt& x) { return poly_product(x, 3, {1}, {3}); }
BigInt f4_twisted_order(const BigInt& x) {
  return poly_product(x, 12, {4, 1}, {6, 3});
}
BigInt suzuki_order(const BigInt& x) { return poly_product(x, 2, {1}, {2}); }
BigInt f4_order(const BigInt& x) { return poly_product(x, 24, {12, 8, 6, 2}); }
BigInt e6_order(const BigInt& x) {
  return poly_product(x, 36, {12, 9, 8, 6, 5, 2}) / gcd_ui(x - 1, 3);
}
BigInt e6_twisted_order(const BigInt& x) {
  return poly_product(x, 36, {12, 8, 6, 2}, {9, 5}) / gcd_ui(x + 1, 3);
}
BigInt e7_order(const BigInt& x) {
  return poly_product(x, 63, {2, 6, 8, 10, 12, 14, 18}) / gcd_ui(x - 1, 2);
}
BigInt e8_order(const BigInt& x) {
  return poly_product(x, 120, {30, 24, 20, 18, 14, 12, 8, 2});
}

// n!/2 divides N, computed without forming n!/2 once it exceeds N.
bool alternating_order_divides(const BigInt& n, const BigInt& big_n) {
  BigInt prod = 1;
  for (BigInt k = 3; k <= n; ++k) {
    prod *= k;
    if (prod > big_n) return false;
  }
  return big_n % prod == 0;
}

// ---------------------------------------------------------------------
// Equation solving on the odd order component.

using Form = std::function<BigInt(const BigInt&)>;

// The x >= lo with f(x) == target, for f strictly increasing on [lo, inf).
std::optional<BigInt> solve_increasing(const Form& f, const BigInt& target,
                                       BigInt lo) {
  if (f(lo) > target) return std::nullopt;
  BigInt hi = lo + 1;
  while (f(hi) < target) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (f(mid) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (f(lo) != target) return std::nullopt;
  return lo;
}

bool is_prime_power(const BigInt& x) {
  return x >= 2 && arith::as_prime_power(x).has_value();
}
bool is_odd_prime_power(const BigInt& x) {
  return is_prime_power(x) && mpz_odd_p(x.get_mpz_t());
}
bool is_power_of_two(const BigInt& x) {
  return x >= 2 && arith::log2_exact(x).has_value();
}

bool is_prime_ui(unsigned long n) {
  return n >= 2 && arith::is_probable_prime(BigInt(n));
}

// One candidate section that satisfies the odd-component equation.
struct Hit {
  std::string group;                 // printable name, e.g. "PSL_2(17)"
  std::vector<BigInt> orders;        // alternative section orders
  std::string equation;              // e.g. "q^2+1 = q'+1 with q' = 16"
  BigInt qp;                         // q', 0 when not meaningful
  unsigned rank = 0;
};

struct Resolution {
  Status status;
  std::string witness;
};

using Resolver = std::function<std::optional<Resolution>(const Hit&)>;

class Eliminator {
 public:
  explicit Eliminator(const FieldSize& fs)
      : fs_(fs),
        q_(fs.q()),
        target_(fs.q() * fs.q() + 1),
        order_(sympl::group_order(fs)) {}

  const BigInt& q() const { return q_; }
  const BigInt& target() const { return target_; }
  const BigInt& order() const { return order_; }
  const FieldSize& field() const { return fs_; }

  // Records a case: no hits means the equation has no admissible solution.
  void decide(Family family, std::string label, std::string anchor,
              const std::vector<Hit>& hits, std::string no_hit_witness,
              const Resolver& resolver = {}) {
    TraceEntry e{family, std::move(label), Status::Eliminated, "",
                 std::move(anchor)};
    if (hits.empty()) {
      e.witness = std::move(no_hit_witness);
      out_.push_back(std::move(e));
      return;
    }
    std::vector<std::string> parts;
    bool confirming = false;
    bool manual = false;
    for (const auto& hit : hits) {
      const bool some_divides =
          std::any_of(hit.orders.begin(), hit.orders.end(),
                      [&](const BigInt& o) { return order_ % o == 0; });
      if (!some_divides) {
        std::string orders;
        for (const auto& o : hit.orders) {
          if (!orders.empty()) orders += ", ";
          orders += dec(o);
        }
        parts.push_back(hit.equation + "; |" + hit.group + "| = " + orders +
                        " does not divide |G| = " + dec(order_));
        continue;
      }
      std::optional<Resolution> r;
      if (resolver) r = resolver(hit);
      if (!r) {
        manual = true;
        parts.push_back(hit.equation + "; |" + hit.group +
                        "| divides |G| and no mechanized argument applies");
        continue;
      }
      if (r->status == Status::Confirming) confirming = true;
      if (r->status == Status::NeedsManualLemma) manual = true;
      parts.push_back(hit.equation + "; " + r->witness);
    }
    e.status = manual       ? Status::NeedsManualLemma
               : confirming ? Status::Confirming
                            : Status::Eliminated;
    for (const auto& p : parts) {
      if (!e.witness.empty()) e.witness += " | ";
      e.witness += p;
    }
    out_.push_back(std::move(e));
  }

  void push(TraceEntry e) { out_.push_back(std::move(e)); }
  std::vector<TraceEntry> take() { return std::move(out_); }

  std::string no_solution(const std::string& form,
                          const std::string& domain) const {
    return "no " + domain + " solves q^2+1 = " + dec(target_) + " = " + form;
  }

 private:
  const FieldSize& fs_;
  BigInt q_;
  BigInt target_;
  BigInt order_;
  std::vector<TraceEntry> out_;
};

// Solves target = form(x) over x >= lo accepted by `domain`; returns the
// solution as a hit built by `make`.
void add_solution(std::vector<Hit>& hits, const Form& form,
                  const BigInt& target, const BigInt& lo,
                  const std::function<bool(const BigInt&)>& domain,
                  const std::function<Hit(const BigInt&)>& make) {
  const auto x = solve_increasing(form, target, lo);
  if (x && domain(*x)) hits.push_back(make(*x));
}

std::string pname(const std::string& base, unsigned n, const BigInt& x) {
  return base + "_" + std::to_string(n) + "(" + dec(x) + ")";
}
std::string xname(const std::string& base, const BigInt& x) {
  return base + "(" + dec(x) + ")";
}

// ---------------------------------------------------------------------
// Alternating groups.

void eliminate_alternating(Eliminator& el) {
  const BigInt& t = el.target();
  const BigInt& n = el.order();
  const BigInt& q = el.q();
  const auto q4m9 = arith::divide_witness("q^4-9", pow(q, 4) - 9, n);
  const std::string q4m9_text =
      "q^4-9 = " + dec(q4m9.divisor) + " does not divide |G| (remainder " +
      dec(q4m9.remainder) + ")";

  {
    TraceEntry e{Family::Alternating, "A_n, n in {p, p+1, p+2}, q^2+1 = p",
                 Status::Eliminated, "",
                 "odd component of A_n is p or p-2; q^2-3 = p-4 divides |A_n|"};
    if (!arith::is_probable_prime(t)) {
      e.witness = "q^2+1 = " + dec(t) + " is not prime; " + q4m9_text;
    } else if (!alternating_order_divides(t, n)) {
      e.witness = "p = " + dec(t) + ": |A_p| = p!/2 does not divide |G|; " +
                  q4m9_text;
    } else {
      e.status = Status::NeedsManualLemma;
      e.witness = "p = " + dec(t) + " and p!/2 divides |G|";
    }
    if (q4m9.divides()) e.status = Status::NeedsManualLemma;
    el.push(std::move(e));
  }
  {
    const BigInt p = t + 2;
    std::string w;
    Status s = Status::Eliminated;
    if (!arith::is_probable_prime(p)) {
      w = "q^2+3 = " + dec(p) + " is not prime";
    } else if (n % p != 0) {
      w = "p = q^2+3 = " + dec(p) + " is prime and does not divide |G|";
    } else {
      s = Status::NeedsManualLemma;
      w = "p = q^2+3 = " + dec(p) + " divides |G|";
    }
    el.push({Family::Alternating, "A_n, n in {p, p+1, p+2}, q^2+1 = p-2", s,
             w, "the prime p divides |A_n|"});
  }
  {
    const auto root = arith::exact_sqrt(t + 1);
    std::vector<Hit> hits;
    if (root) {
      const BigInt p = *root + 1;
      if (arith::is_probable_prime(p)) {
        hits.push_back(Hit{"A_" + dec(p), {}, "q^2+1 = p(p-2) with p = " + dec(p), p, 0});
      }
    }
    el.decide(Family::Alternating, "A_n, q^2+1 = p(p-2)",
              "(p-1)^2 = q^2+2 lies strictly between q^2 and (q+1)^2",
              hits, "q^2+2 = " + dec(t + 1) + " is not a perfect square");
  }
  {
    std::vector<Hit> hits;
    if (t == 3 || t == 5 || t == 15) {
      hits.push_back(Hit{"A_5 or A_6", {BigInt(60), BigInt(360)},
                         "q^2+1 = " + dec(t), 0, 0});
    }
    el.decide(Family::Alternating, "A_5, A_6",
              "odd components of A_5 and A_6 are 3, 5 and 15", hits,
              "q^2+1 = " + dec(t) + " is not in {3, 5, 15}");
  }
}

// ---------------------------------------------------------------------
// Sporadic groups and the Tits group.

OddComponentRecord record(std::string name,
                          std::vector<unsigned long> odd,
                          std::initializer_list<std::pair<unsigned, unsigned>> fac) {
  BigInt order = 1;
  for (auto [p, e] : fac) order *= pow(BigInt(p), e);
  std::vector<BigInt> comps(odd.begin(), odd.end());
  return {std::move(name), std::move(comps), order};
}

void eliminate_table(Eliminator& el, Family family,
                     const std::vector<OddComponentRecord>& rows) {
  for (const auto& row : rows) {
    std::vector<Hit> hits;
    std::string list;
    for (const auto& c : row.odd_components) {
      if (!list.empty()) list += ", ";
      list += dec(c);
      if (c == el.target()) {
        hits.push_back(Hit{row.name, {row.order}, "q^2+1 = " + dec(c) +
                           " is an odd component of " + row.name, 0, 0});
      }
    }
    el.decide(family, row.name, "odd order components of " + row.name, hits,
              "q^2+1 = " + dec(el.target()) + " not in {" + list + "}");
  }
}

// ---------------------------------------------------------------------
// Exceptional groups of Lie type.

struct NamedForm {
  std::string text;
  Form form;
};

void eliminate_exceptional(Eliminator& el) {
  const BigInt& t = el.target();
  const BigInt& q = el.q();

  auto fixed_list = [&](const std::string& group, const BigInt& order,
                        std::vector<unsigned long> values) {
    std::vector<Hit> hits;
    std::string list;
    for (auto v : values) {
      if (!list.empty()) list += ", ";
      list += std::to_string(v);
      if (t == v) {
        hits.push_back(Hit{group, {order}, "q^2+1 = " + std::to_string(v), 0, 0});
      }
    }
    el.decide(Family::Exceptional, group, "odd order components of " + group,
              hits, "q^2+1 = " + dec(t) + " not in {" + list + "}");
  };
  fixed_list("2E6(2)", e6_twisted_order(2),
             {13, 17, 19, 13 * 17, 13 * 19, 17 * 19, 13 * 17 * 19});
  fixed_list("E7(2)", e7_order(2), {73, 127, 73 * 127});
  fixed_list("E7(3)", e7_order(3), {757, 1093, 757UL * 1093UL});

  // Polynomial families over all prime powers q' >= lo satisfying `extra`.
  auto family_forms =
      [&](const std::string& base, const std::vector<NamedForm>& forms,
          const std::function<BigInt(const BigInt&)>& order, unsigned lo,
          const std::function<bool(const BigInt&)>& extra,
          const std::string& domain, const std::string& anchor) {
        for (const auto& nf : forms) {
          std::vector<Hit> hits;
          add_solution(
              hits, nf.form, t, BigInt(lo),
              [&](const BigInt& x) { return is_prime_power(x) && extra(x); },
              [&](const BigInt& x) {
                return Hit{xname(base, x), {order(x)},
                           "q^2+1 = " + nf.text + " at q' = " + dec(x), x, 0};
              });
          el.decide(Family::Exceptional, base + "(q'), q^2+1 = " + nf.text,
                    anchor, hits, el.no_solution(nf.text, domain));
        }
      };
  auto cyc = [](unsigned n) {
    return [n](const BigInt& x) { return cyclotomic_eval(n, x); };
  };
  auto any = [](const BigInt&) { return true; };
  const std::string table_anchor = "cyclotomic odd components of exceptional groups";

  family_forms("G2", {{"Phi3(q')", cyc(3)}, {"Phi6(q')", cyc(6)},
                      {"Phi3(q'^2)", [](const BigInt& x) {
                         return cyclotomic_eval(3, x * x);
                       }}},
               g2_order, 3, any, "prime power q' >= 3", table_anchor);
  family_forms("E6", {{"Phi9(q')", cyc(9)}}, e6_order, 2,
               [](const BigInt& x) {
                 const BigInt m = x % 3;
                 return m == 0 || m == 2;
               },
               "prime power q' = 0, -1 mod 3", table_anchor);
  {
    const std::vector<unsigned> base = {15, 20, 24, 30};
    std::vector<NamedForm> forms;
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<unsigned> parts;
      std::string text;
      for (unsigned k = 0; k < 4; ++k) {
        if (mask & (1u << k)) {
          parts.push_back(base[k]);
          text += "Phi" + std::to_string(base[k]) + "(q')";
        }
      }
      forms.push_back({text, [parts](const BigInt& x) {
                         BigInt r = 1;
                         for (auto n : parts) r *= cyclotomic_eval(n, x);
                         return r;
                       }});
    }
    family_forms("E8", forms, e8_order, 2, any, "prime power q'", table_anchor);
  }
  family_forms("3D4", {{"Phi12(q')", cyc(12)}}, d4_twisted_order, 2, any,
               "prime power q'", table_anchor);
  family_forms("2E6", {{"Phi18(q')", cyc(18)}}, e6_twisted_order, 2,
               [](const BigInt& x) {
                 const BigInt m = x % 3;
                 return m == 0 || m == 1;
               },
               "prime power q' = 0, 1 mod 3", table_anchor);

  // Restricted fields q' = p^(2t+1), enumerated by exponent.
  auto odd_exponent = [&](const std::string& base, unsigned p, unsigned min_exp,
                          const std::vector<NamedForm>& forms,
                          const std::function<BigInt(const BigInt&)>& order,
                          const std::string& anchor,
                          const Resolver& resolver = {}) {
    for (const auto& nf : forms) {
      std::vector<Hit> hits;
      for (unsigned e = min_exp;; e += 2) {
        const BigInt x = pow(BigInt(p), e);
        if (x > 4 * t + 4) break;
        if (nf.form(x) == t) {
          hits.push_back(Hit{xname(base, x), {order(x)},
                             "q^2+1 = " + nf.text + " at q' = " + dec(x), x, 0});
        }
      }
      el.decide(Family::Exceptional, base + "(q'), q^2+1 = " + nf.text, anchor,
                hits,
                el.no_solution(nf.text, "q' = " + std::to_string(p) +
                                            "^(2t+1) >= " +
                                            dec(pow(BigInt(p), min_exp))),
                resolver);
    }
  };
  auto twisted = [](TwistedCyclotomic tag) {
    return [tag](const BigInt& x) {
      return arith::twisted_cyclotomic_eval(tag, x).value_or(BigInt(0));
    };
  };
  odd_exponent("2G2", 3, 3,
               {{"Phi6+(q')", twisted(TwistedCyclotomic::Phi6Plus)},
                {"Phi6-(q')", twisted(TwistedCyclotomic::Phi6Minus)},
                {"Phi6(q')", cyc(6)}},
               ree_order, table_anchor);
  odd_exponent("2F4", 2, 3,
               {{"Phi12+(q')", twisted(TwistedCyclotomic::Phi12Plus)},
                {"Phi12-(q')", twisted(TwistedCyclotomic::Phi12Minus)},
                {"Phi12(q')", cyc(12)}},
               f4_twisted_order, table_anchor);

  // Suzuki groups. The only admissible equation is q'^2+1 = q^2+1; the
  // section then has disconnected primes r | q'-sqrt(2q')+1 and
  // s | q'+sqrt(2q')+1, so q'+sqrt(2q')+1 would have to divide phi(r).
  auto root2 = [](const BigInt& x) { return *arith::exact_sqrt(2 * x); };
  const Resolver suzuki = [&](const Hit& h) -> std::optional<Resolution> {
    if (h.qp != q) return std::nullopt;
    const BigInt s = root2(h.qp);
    const BigInt plus = h.qp + s + 1;
    const BigInt minus = h.qp - s + 1;
    std::string w;
    for (const auto& r : arith::factorize(minus).primes()) {
      const BigInt phi = arith::euler_phi(r);
      if (phi % plus == 0) return std::nullopt;
      if (!w.empty()) w += ", ";
      w += "phi(" + dec(r) + ") = " + dec(phi);
    }
    return Resolution{Status::Eliminated,
                      "q'+sqrt(2q')+1 = " + dec(plus) + " does not divide " + w +
                          " for the primes r of q'-sqrt(2q')+1 = " + dec(minus)};
  };
  auto sz = [&](std::function<BigInt(const BigInt&, const BigInt&)> f) {
    return [f, root2](const BigInt& x) { return f(x, root2(x)); };
  };
  odd_exponent(
      "2B2", 2, 3,
      {{"q'-1", sz([](const BigInt& x, const BigInt&) { return BigInt(x - 1); })},
       {"q'+sqrt(2q')+1", sz([](const BigInt& x, const BigInt& s) { return BigInt(x + s + 1); })},
       {"q'-sqrt(2q')+1", sz([](const BigInt& x, const BigInt& s) { return BigInt(x - s + 1); })},
       {"q'^2+1", sz([](const BigInt& x, const BigInt&) { return BigInt(x * x + 1); })},
       {"(q'-1)(q'+sqrt(2q')+1)", sz([](const BigInt& x, const BigInt& s) { return BigInt((x - 1) * (x + s + 1)); })},
       {"(q'-1)(q'-sqrt(2q')+1)", sz([](const BigInt& x, const BigInt& s) { return BigInt((x - 1) * (x - s + 1)); })},
       {"(q'-1)(q'^2+1)", sz([](const BigInt& x, const BigInt&) { return BigInt((x - 1) * (x * x + 1)); })}},
      suzuki_order, "Suzuki odd components; disconnected primes act fixed-point-freely",
      suzuki);

  family_forms("F4",
               {{"q'^4+1", [](const BigInt& x) { return BigInt(pow(x, 4) + 1); }},
                {"q'^4-q'^2+1", [](const BigInt& x) { return BigInt(pow(x, 4) - x * x + 1); }},
                {"q'^8-q'^6+2q'^4-q'^2+1", [](const BigInt& x) {
                   return BigInt(pow(x, 8) - pow(x, 6) + 2 * pow(x, 4) - x * x + 1);
                 }}},
               f4_order, 2, any, "prime power q'",
               "F4 odd components; 2-part of |F4(q')| is q'^24");

  // E6^e(q') with q' = e mod 3: q^2+1 = (q'^6 + e q'^3 + 1)/3.
  for (int sign : {1, -1}) {
    const std::string base = sign > 0 ? "E6" : "2E6";
    const std::string text = sign > 0 ? "(q'^6+q'^3+1)/3" : "(q'^6-q'^3+1)/3";
    std::vector<Hit> hits;
    add_solution(
        hits,
        [sign](const BigInt& x) {
          return BigInt(pow(x, 6) + sign * pow(x, 3) + 1);
        },
        3 * t, BigInt(2),
        [sign](const BigInt& x) {
          const BigInt m = x % 3;
          return is_prime_power(x) && (sign > 0 ? m == 1 : m == 2);
        },
        [&](const BigInt& x) {
          return Hit{xname(base, x),
                     {sign > 0 ? e6_order(x) : e6_twisted_order(x)},
                     "q^2+1 = " + text + " at q' = " + dec(x), x, 0};
        });
    el.decide(Family::Exceptional, base + "(q'), q' = " +
                                       (sign > 0 ? "1" : "-1") +
                                       " mod 3, q^2+1 = " + text,
              "3q^2+2 = q'^6 +- q'^3 divides |G|", hits,
              el.no_solution(text, "prime power q' = " +
                                       std::string(sign > 0 ? "1" : "-1") +
                                       " mod 3"));
  }
}

// ---------------------------------------------------------------------
// Linear groups.

void eliminate_psl(Eliminator& el, const CountSets& sets) {
  const BigInt& t = el.target();
  const BigInt& q = el.q();
  const BigInt& big_n = el.order();

  // n >= 5 prime: q^2+1 = (q'^n - 1)/((q'-1)(n, q'-1)).
  {
    std::vector<Hit> hits;
    for (unsigned n = 5; (pow(BigInt(2), n) - 1) / n <= t; n += 2) {
      if (!is_prime_ui(n)) continue;
      for (unsigned d : {1u, n}) {
        add_solution(
            hits,
            [n](const BigInt& x) { return BigInt((pow(x, n) - 1) / (x - 1)); },
            d * t, BigInt(2),
            [&](const BigInt& x) {
              return is_prime_power(x) && gcd_ui(x - 1, n) == d;
            },
            [&](const BigInt& x) {
              return Hit{pname("PSL", n, x), {psl_order(n, x)},
                         "n = " + std::to_string(n) + ", q' = " + dec(x), x, n};
            });
      }
    }
    el.decide(Family::PSL, "n >= 5 prime, q^2+1 = (q'^n-1)/((q'-1)(n,q'-1))",
              "2-part and size comparison of |PSL_n(q')|", hits,
              el.no_solution("(q'^n-1)/((q'-1)(n,q'-1))",
                             "prime n >= 5 and prime power q'"));
  }
  // n = p+1, p odd prime, q'-1 | p+-1: q^2+1 = (q'^p-1)/(q'-1).
  {
    std::vector<Hit> hits;
    for (unsigned p = 3; pow(BigInt(2), p) - 1 <= t; p += 2) {
      if (!is_prime_ui(p)) continue;
      add_solution(
          hits,
          [p](const BigInt& x) { return BigInt((pow(x, p) - 1) / (x - 1)); },
          t, BigInt(2),
          [&](const BigInt& x) {
            return is_prime_power(x) &&
                   ((p + 1) % (x - 1) == 0 || (p - 1) % (x - 1) == 0);
          },
          [&](const BigInt& x) {
            return Hit{pname("PSL", p + 1, x), {psl_order(p + 1, x)},
                       "p = " + std::to_string(p) + ", q' = " + dec(x), x,
                       p + 1};
          });
    }
    el.decide(Family::PSL, "n = p+1, p odd prime, q'-1 | p+-1, q^2+1 = (q'^p-1)/(q'-1)",
              "q^2 = q'(q'^(p-1)-1)/(q'-1) forces p = 2", hits,
              el.no_solution("(q'^p-1)/(q'-1)", "odd prime p and prime power q'"));
  }
  // n = 3, q' in {2, 4}.
  {
    std::vector<Hit> hits;
    for (unsigned long v : {3, 5, 7, 15, 21, 35, 105}) {
      if (t == v) {
        hits.push_back(Hit{"PSL_3(2) or PSL_3(4)",
                           {psl_order(3, 2), psl_order(3, 4)},
                           "q^2+1 = " + std::to_string(v), 0, 3});
      }
    }
    el.decide(Family::PSL, "n = 3, q' in {2, 4}",
              "odd components of PSL_3(2) and PSL_3(4)", hits,
              "q^2+1 = " + dec(t) + " not in {3, 5, 7, 15, 21, 35, 105}");
  }
  // n = 3 otherwise: q^2+1 = (q'^2+q'+1)/(3, q'-1).
  for (bool even : {true, false}) {
    std::vector<Hit> hits;
    for (unsigned d : {1u, 3u}) {
      add_solution(
          hits, [](const BigInt& x) { return BigInt(x * x + x + 1); }, d * t,
          BigInt(even ? 8 : 3),
          [&](const BigInt& x) {
            return (even ? is_power_of_two(x) : is_odd_prime_power(x)) &&
                   gcd_ui(x - 1, 3) == d;
          },
          [&](const BigInt& x) {
            return Hit{pname("PSL", 3, x), {psl_order(3, x)},
                       "q' = " + dec(x), x, 3};
          });
    }
    el.decide(Family::PSL,
              even ? "n = 3, q' even, q' >= 8, q^2+1 = (q'^2+q'+1)/(3,q'-1)"
                   : "n = 3, q' odd, q^2+1 = (q'^2+q'+1)/(3,q'-1)",
              "3q^2+2 = q'(q'+1) divides |G|", hits,
              el.no_solution("(q'^2+q'+1)/(3,q'-1)",
                             even ? "q' = 2^k >= 8" : "odd prime power q'"));
  }
  // n = 2, q' odd.
  {
    const Resolver psl2_prime = [&](const Hit& h) -> std::optional<Resolution> {
      // q' = q^2+1: q'+1 = q^2+2 divides |K/H|.
      const auto w = arith::divide_witness("q^2+2", t + 1, big_n);
      if (!w.divides()) {
        return Resolution{Status::Eliminated,
                          "q'+1 = q^2+2 = " + dec(t + 1) +
                              " does not divide |G|"};
      }
      // |G/K| divides |Out(PSL_2(q'))|, which is 2 for prime q'; the rest of
      // |G|/|K/H| lies in the nilpotent H, so a prime r | q^2-1 divides |H|
      // and m_r(G) = m_r(H) < |H| <= |G|/|K/H|.
      const BigInt bound = big_n / h.orders.front();
      const auto out_q = arith::as_prime_power(h.qp);
      if (!out_q || out_q->exponent != 1) return std::nullopt;
      const BigInt odd_h = arith::coprime_part(bound, 2);
      if (odd_h == 1 || gcd(odd_h, BigInt(q * q - 1)) == 1) return std::nullopt;
      std::set<BigInt> allowed = sets.at(4);
      allowed.insert(sets.at(5).begin(), sets.at(5).end());
      const BigInt least = *allowed.begin();
      if (least <= bound) return std::nullopt;
      return Resolution{Status::Eliminated,
                        "q^2+2 = " + dec(t + 1) + " divides |G|, so |H| divides |G|/|" +
                            h.group + "| = " + dec(bound) +
                            "; min(A4 u A5) = " + dec(least) + " > " + dec(bound)};
    };
    struct Shape {
      std::string text;
      Form form;
      Resolver resolver;
    };
    const std::vector<Shape> shapes = {
        {"q'", [](const BigInt& x) { return x; }, psl2_prime},
        {"(q'-1)/2", [](const BigInt& x) { return BigInt((x - 1) / 2); }, {}},
        {"(q'+1)/2", [](const BigInt& x) { return BigInt((x + 1) / 2); }, {}},
        {"q'(q'-1)/2", [](const BigInt& x) { return BigInt(x * (x - 1) / 2); }, {}},
        {"q'(q'+1)/2", [](const BigInt& x) { return BigInt(x * (x + 1) / 2); }, {}},
    };
    for (const auto& s : shapes) {
      std::vector<Hit> hits;
      // The halved shapes are only nondecreasing; an odd solution is the
      // unique odd x at which the form reaches the target.
      const auto x = solve_increasing(s.form, t, BigInt(3));
      std::optional<BigInt> sol = x;
      if (x && !mpz_odd_p(x->get_mpz_t())) {
        const BigInt y = *x + 1;
        sol = s.form(y) == t ? std::optional<BigInt>(y) : std::nullopt;
      }
      if (sol && is_odd_prime_power(*sol)) {
        hits.push_back(Hit{pname("PSL", 2, *sol), {psl_order(2, *sol)},
                           "q^2+1 = " + s.text + " at q' = " + dec(*sol), *sol, 2});
      }
      el.decide(Family::PSL, "n = 2, q' odd, q^2+1 = " + s.text,
                s.text == "q'" ? "q'+1 = q^2+2 divides |G|; counts of prime order r | q^2-1 lie in A4 u A5"
                               : "2q^2+3 and 2q^2+1 never divide |G|; parity",
                hits, el.no_solution(s.text, "odd prime power q'"), s.resolver);
    }
  }
  // n = 2, q' even.
  {
    const Resolver confirm = [&](const Hit& h) -> std::optional<Resolution> {
      if (h.qp != q * q) return std::nullopt;
      const auto w = arith::divide_witness("q^2-1 into 2 log2 q", q * q - 1,
                                           BigInt(2 * el.field().degree()));
      if (w.divides()) return std::nullopt;
      return Resolution{Status::Confirming,
                        "q' = q^2; q^2-1 = " + dec(q * q - 1) +
                            " does not divide |Out| = 2 log2 q = " +
                            std::to_string(2 * el.field().degree()) +
                            ", so H meets q^2-1 and oc(G) = oc(PSp4(q))"};
    };
    struct Shape {
      std::string text;
      Form form;
    };
    const std::vector<Shape> shapes = {
        {"q'-1", [](const BigInt& x) { return BigInt(x - 1); }},
        {"q'+1", [](const BigInt& x) { return BigInt(x + 1); }},
        {"q'^2-1", [](const BigInt& x) { return BigInt(x * x - 1); }},
    };
    for (const auto& s : shapes) {
      std::vector<Hit> hits;
      add_solution(hits, s.form, t, BigInt(4), is_power_of_two,
                   [&](const BigInt& x) {
                     return Hit{pname("PSL", 2, x), {psl_order(2, x)},
                                "q^2+1 = " + s.text + " at q' = " + dec(x), x, 2};
                   });
      el.decide(Family::PSL, "n = 2, q' even, q^2+1 = " + s.text,
                s.text == "q'+1" ? "PSL_2(q^2) with oc(G) = oc(PSp4(q))"
                                 : "q^2+2 is not a power of 2",
                hits, el.no_solution(s.text, "q' = 2^k >= 4"),
                s.text == "q'+1" ? confirm : Resolver{});
    }
  }
}

// ---------------------------------------------------------------------
// Unitary groups.

void eliminate_psu(Eliminator& el) {
  const BigInt& t = el.target();
  {
    std::vector<Hit> hits;
    for (unsigned long v : {5, 7, 11, 77}) {
      if (t == v) {
        hits.push_back(Hit{"PSU_4(2) or PSU_6(2)",
                           {psu_order(4, 2), psu_order(6, 2)},
                           "q^2+1 = " + std::to_string(v), 2, 0});
      }
    }
    el.decide(Family::PSU, "n in {4, 6}, q' = 2",
              "odd components of PSU_4(2) and PSU_6(2)", hits,
              "q^2+1 = " + dec(t) + " not in {5, 7, 11, 77}");
  }
  {
    std::vector<Hit> hits;
    for (unsigned p = 3; (pow(BigInt(2), p) + 1) / 3 <= t; p += 2) {
      if (!is_prime_ui(p)) continue;
      add_solution(
          hits,
          [p](const BigInt& x) { return BigInt((pow(x, p) + 1) / (x + 1)); },
          t, BigInt(2), is_prime_power,
          [&](const BigInt& x) {
            std::vector<BigInt> orders = {psu_order(p + 1, x)};
            std::string name = pname("PSU", p + 1, x);
            if (gcd_ui(x + 1, p) == 1) {
              orders.push_back(psu_order(p, x));
              name += " or " + pname("PSU", p, x);
            }
            return Hit{name, orders,
                       "p = " + std::to_string(p) + ", q' = " + dec(x), x, p};
          });
    }
    el.decide(Family::PSU,
              "n = p+1, or n = p with (q'+1, p) = 1, q^2+1 = (q'^p+1)/(q'+1)",
              "q^2 = q'^(p-1) - ... - q' is not a power of 2", hits,
              el.no_solution("(q'^p+1)/(q'+1)", "odd prime p and prime power q'"));
  }
  {
    std::vector<Hit> hits;
    for (unsigned p = 3; (pow(BigInt(2), p) + 1) / (3 * p) <= t; p += 2) {
      if (!is_prime_ui(p)) continue;
      add_solution(
          hits,
          [p](const BigInt& x) { return BigInt((pow(x, p) + 1) / (x + 1)); },
          p * t, BigInt(2),
          [&](const BigInt& x) {
            return is_prime_power(x) && (x + 1) % p == 0;
          },
          [&](const BigInt& x) {
            return Hit{pname("PSU", p, x), {psu_order(p, x)},
                       "p = " + std::to_string(p) + ", q' = " + dec(x), x, p};
          });
    }
    el.decide(Family::PSU, "n = p, p | q'+1, q^2+1 = (q'^p+1)/((q'+1)p)",
              "2-part of |PSU_p(q')| and 3q^2+2 divisibility", hits,
              el.no_solution("(q'^p+1)/((q'+1)p)", "odd prime p | q'+1"));
  }
}

// ---------------------------------------------------------------------
// Symplectic groups.

void eliminate_psp(Eliminator& el) {
  const BigInt& t = el.target();
  const BigInt& q = el.q();
  {
    std::vector<Hit> hits;
    for (unsigned long qp : {2UL, 3UL}) {
      for (unsigned p = 2;; ++p) {
        const BigInt value = (pow(BigInt(qp), p) - 1) / (qp == 2 ? 1 : 2);
        if (value > t) break;
        if (!is_prime_ui(p) || (qp == 2 && p == 2)) continue;
        if (value == t) {
          hits.push_back(Hit{pname("PSp", 2 * p, BigInt(qp)),
                             {psp_order(p, BigInt(qp))},
                             "n = " + std::to_string(p) + ", q' = " +
                                 std::to_string(qp),
                             BigInt(qp), p});
        }
      }
    }
    el.decide(Family::PSp, "n = p prime, q' in {2, 3}, q^2+1 = (q'^p-1)/(2,q'-1)",
              "2q^2 = 3^p-3 or q^2+2 = 2^p", hits,
              el.no_solution("(q'^p-1)/(2,q'-1)", "prime p and q' in {2, 3}"));
  }
  {
    const Resolver confirm = [&](const Hit& h) -> std::optional<Resolution> {
      if (h.rank != 2 || h.qp != q) return std::nullopt;
      if (h.orders.front() != el.order()) return std::nullopt;
      return Resolution{Status::Confirming,
                        "n = 2, q' = q; |K/H| = |G| = " + dec(el.order()) +
                            " so H = 1 and G = K = PSp4(q)"};
    };
    std::vector<Hit> hits;
    for (unsigned n = 2; (pow(BigInt(2), n) + 1) / 2 <= t; n *= 2) {
      for (bool even : {true, false}) {
        add_solution(
            hits, [n](const BigInt& x) { return BigInt(pow(x, n) + 1); },
            even ? t : BigInt(2 * t), BigInt(2),
            [&](const BigInt& x) {
              return even ? is_power_of_two(x) : is_odd_prime_power(x);
            },
            [&](const BigInt& x) {
              return Hit{pname("PSp", 2 * n, x), {psp_order(n, x)},
                         "n = " + std::to_string(n) + ", q' = " + dec(x), x, n};
            });
      }
    }
    el.decide(Family::PSp, "n = 2^m >= 2, q^2+1 = (q'^n+1)/(2,q'-1)",
              "q'^(n^2) divides q^4 forces n = 2, q' = q", hits,
              el.no_solution("(q'^n+1)/(2,q'-1)", "n = 2^m and prime power q'"),
              confirm);
  }
}

// ---------------------------------------------------------------------
// Orthogonal groups.

void eliminate_pomega(Eliminator& el) {
  const BigInt& t = el.target();
  auto is_prime_u = [](unsigned m) { return is_prime_ui(m); };
  auto is_pow2 = [](unsigned m) { return m != 0 && (m & (m - 1)) == 0; };

  // Fixed q', rank loop: values are increasing in m.
  auto fixed = [&](const std::string& label, const std::string& anchor,
                   unsigned m_min, const std::function<bool(unsigned)>& rank_ok,
                   const std::function<BigInt(unsigned)>& value,
                   const std::function<Hit(unsigned)>& make,
                   const std::string& form) {
    std::vector<Hit> hits;
    for (unsigned m = m_min; value(m) <= t; ++m) {
      if (rank_ok(m) && value(m) == t) hits.push_back(make(m));
    }
    el.decide(Family::POmega, label, anchor, hits,
              el.no_solution(form, "admissible m"));
  };

  // (1) n = 2m+1, m = 2^t >= 4, q' odd: q^2+1 = (q'^m+1)/2.
  {
    std::vector<Hit> hits;
    for (unsigned m = 4; (pow(BigInt(3), m) + 1) / 2 <= t; m *= 2) {
      add_solution(
          hits, [m](const BigInt& x) { return BigInt(pow(x, m) + 1); }, 2 * t,
          BigInt(3), is_odd_prime_power, [&](const BigInt& x) {
            return Hit{pname("Omega", 2 * m + 1, x), {psp_order(m, x)},
                       "m = " + std::to_string(m) + ", q' = " + dec(x), x, m};
          });
    }
    el.decide(Family::POmega, "n = 2m+1, m = 2^t >= 4, q^2+1 = (q'^m+1)/2",
              "2q^2+1 = q'^m has no solution", hits,
              el.no_solution("(q'^m+1)/2", "m = 2^t >= 4 and odd prime power q'"));
  }
  // (2) n = 2m+1, m prime, q' = 3: (3^m-1)/2.
  fixed("n = 2m+1, m prime, q' = 3, q^2+1 = (3^m-1)/2", "2q^2 = 3^m-3", 2,
        is_prime_u,
        [](unsigned m) { return BigInt((pow(BigInt(3), m) - 1) / 2); },
        [](unsigned m) {
          return Hit{pname("Omega", 2 * m + 1, BigInt(3)), {psp_order(m, BigInt(3))},
                     "m = " + std::to_string(m), BigInt(3), m};
        },
        "(3^m-1)/2");
  // (3) n = 2m, +, m >= 5 prime, q' in {2,3,5}: (q'^m-1)/(q'-1).
  {
    std::vector<Hit> hits;
    for (unsigned long qp : {2UL, 3UL, 5UL}) {
      for (unsigned m = 5;; ++m) {
        const BigInt v = (pow(BigInt(qp), m) - 1) / (qp - 1);
        if (v > t) break;
        if (is_prime_ui(m) && v == t) {
          hits.push_back(Hit{pname("POmega+", 2 * m, BigInt(qp)),
                             {pomega_even_order(1, m, BigInt(qp))},
                             "m = " + std::to_string(m) + ", q' = " + std::to_string(qp),
                             BigInt(qp), m});
        }
      }
    }
    el.decide(Family::POmega, "n = 2m, +, m >= 5 prime, q' in {2, 3, 5}, q^2+1 = (q'^m-1)/(q'-1)",
              "q^2 = q'^(m-1) + ... + q' is not a power of 2", hits,
              el.no_solution("(q'^m-1)/(q'-1)", "prime m >= 5, q' in {2, 3, 5}"));
  }
  // (4) n = 2(m+1), +, m odd prime, q' = 3: (3^m-1)/2.
  fixed("n = 2(m+1), +, m odd prime, q' = 3, q^2+1 = (3^m-1)/2", "2q^2 = 3^m-3", 3,
        [&](unsigned m) { return m % 2 == 1 && is_prime_u(m); },
        [](unsigned m) { return BigInt((pow(BigInt(3), m) - 1) / 2); },
        [](unsigned m) {
          return Hit{pname("POmega+", 2 * m + 2, BigInt(3)),
                     {pomega_even_order(1, m + 1, BigInt(3))},
                     "m = " + std::to_string(m), BigInt(3), m};
        },
        "(3^m-1)/2");
  // (5) n = 2m, -, m = 2^t >= 4: (q'^m+1)/(2,q'-1).
  {
    std::vector<Hit> hits;
    for (unsigned m = 4; pow(BigInt(2), m) + 1 <= 2 * t; m *= 2) {
      for (bool even : {true, false}) {
        add_solution(
            hits, [m](const BigInt& x) { return BigInt(pow(x, m) + 1); },
            even ? t : BigInt(2 * t), BigInt(2),
            [&](const BigInt& x) {
              return even ? is_power_of_two(x) : is_odd_prime_power(x);
            },
            [&](const BigInt& x) {
              return Hit{pname("POmega-", 2 * m, x),
                         {pomega_even_order(-1, m, x)},
                         "m = " + std::to_string(m) + ", q' = " + dec(x), x, m};
            });
      }
    }
    el.decide(Family::POmega, "n = 2m, -, m = 2^t >= 4, q^2+1 = (q'^m+1)/(2,q'-1)",
              "2q^2+1 never divides |G|; 2-part of |POmega-_2m(q')|", hits,
              el.no_solution("(q'^m+1)/(2,q'-1)", "m = 2^t >= 4 and prime power q'"));
  }
  auto fermat_plus_one = [&](unsigned m) {
    if (m < 3) return false;
    return is_pow2(m - 1);
  };
  // (6) n = 2m, -, m >= 5 odd prime, m != 2^t+1, q' = 3: (3^m+1)/4.
  fixed("n = 2m, -, m >= 5 odd prime, m != 2^t+1, q' = 3, q^2+1 = (3^m+1)/4",
        "4q^2 = 3^m-3", 5,
        [&](unsigned m) { return is_prime_u(m) && !fermat_plus_one(m); },
        [](unsigned m) { return BigInt((pow(BigInt(3), m) + 1) / 4); },
        [](unsigned m) {
          return Hit{pname("POmega-", 2 * m, BigInt(3)),
                     {pomega_even_order(-1, m, BigInt(3))},
                     "m = " + std::to_string(m), BigInt(3), m};
        },
        "(3^m+1)/4");
  // (7) m = 2^t+1 >= 5 not prime, q' = 3: (3^(m-1)+1)/2.
  fixed("n = 2m, -, m = 2^t+1 >= 5 not prime, q' = 3, q^2+1 = (3^(m-1)+1)/2",
        "2q^2+1 = 3^(m-1)", 5,
        [&](unsigned m) { return fermat_plus_one(m) && !is_prime_u(m); },
        [](unsigned m) { return BigInt((pow(BigInt(3), m - 1) + 1) / 2); },
        [](unsigned m) {
          return Hit{pname("POmega-", 2 * m, BigInt(3)),
                     {pomega_even_order(-1, m, BigInt(3))},
                     "m = " + std::to_string(m), BigInt(3), m};
        },
        "(3^(m-1)+1)/2");
  // (8) m = 2^t+1 >= 5 prime, q' = 3: three odd components.
  {
    const std::vector<std::pair<std::string, std::function<BigInt(unsigned)>>> forms = {
        {"(3^(m-1)+1)/2", [](unsigned m) { return BigInt((pow(BigInt(3), m - 1) + 1) / 2); }},
        {"(3^m+1)/4", [](unsigned m) { return BigInt((pow(BigInt(3), m) + 1) / 4); }},
        {"(3^(m-1)+1)(3^m+1)/8", [](unsigned m) {
           return BigInt((pow(BigInt(3), m - 1) + 1) * (pow(BigInt(3), m) + 1) / 8);
         }},
    };
    for (const auto& [text, value] : forms) {
      fixed("n = 2m, -, m = 2^t+1 >= 5 prime, q' = 3, q^2+1 = " + text,
            "3-part of |POmega-_2m(3)| and 2q^2+1, 4q^2 = 3^m-3", 5,
            [&](unsigned m) { return fermat_plus_one(m) && is_prime_u(m); },
            value,
            [](unsigned m) {
              return Hit{pname("POmega-", 2 * m, BigInt(3)),
                         {pomega_even_order(-1, m, BigInt(3))},
                         "m = " + std::to_string(m), BigInt(3), m};
            },
            text);
    }
  }
  // (9) n = 2(m+1), -, m prime, m != 2^t-1, q' = 2: 2^m-1.
  fixed("n = 2(m+1), -, m prime, m != 2^t-1, q' = 2, q^2+1 = 2^m-1",
        "q^2+2 = 2^m", 2,
        [&](unsigned m) { return is_prime_u(m) && !is_pow2(m + 1); },
        [](unsigned m) { return BigInt(pow(BigInt(2), m) - 1); },
        [](unsigned m) {
          return Hit{pname("POmega-", 2 * m + 2, BigInt(2)),
                     {pomega_even_order(-1, m + 1, BigInt(2))},
                     "m = " + std::to_string(m), BigInt(2), m};
        },
        "2^m-1");
  // (10) n = 2m, -, m = p+1, p odd prime, q' = 2: three odd components.
  {
    const std::vector<std::pair<std::string, std::function<BigInt(unsigned)>>> forms = {
        {"2^p+1", [](unsigned p) { return BigInt(pow(BigInt(2), p) + 1); }},
        {"2^(p+1)+1", [](unsigned p) { return BigInt(pow(BigInt(2), p + 1) + 1); }},
        {"(2^p+1)(2^(p+1)+1)", [](unsigned p) {
           return BigInt((pow(BigInt(2), p) + 1) * (pow(BigInt(2), p + 1) + 1));
         }},
    };
    for (const auto& [text, value] : forms) {
      fixed("n = 2m, -, m = p+1, p odd prime, q' = 2, q^2+1 = " + text,
            "2-part of |POmega-_2m(2)|; q^2 is not of this shape", 3,
            [&](unsigned p) { return p % 2 == 1 && is_prime_u(p); }, value,
            [](unsigned p) {
              return Hit{pname("POmega-", 2 * p + 2, BigInt(2)),
                         {pomega_even_order(-1, p + 1, BigInt(2))},
                         "p = " + std::to_string(p), BigInt(2), p + 1};
            },
            text);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------

const std::vector<OddComponentRecord>& sporadic_table() {
  static const std::vector<OddComponentRecord> rows = {
      record("M11", {11}, {{2, 4}, {3, 2}, {5, 1}, {11, 1}}),
      record("M12", {11}, {{2, 6}, {3, 3}, {5, 1}, {11, 1}}),
      record("M22", {7, 11}, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}),
      record("M23", {11, 23}, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}),
      record("M24", {11, 23}, {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}),
      record("J1", {7, 11, 19}, {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}),
      record("J2", {7}, {{2, 7}, {3, 3}, {5, 2}, {7, 1}}),
      record("J3", {17, 19}, {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}),
      record("J4", {23, 29, 31, 37, 43},
             {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1},
              {31, 1}, {37, 1}, {43, 1}}),
      record("HS", {7, 11}, {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}),
      record("McL", {11}, {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}),
      record("Suz", {11, 13}, {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}),
      record("He", {17}, {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}),
      record("Ru", {29}, {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}),
      record("O'N", {11, 19, 31},
             {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}),
      record("Co1", {23},
             {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}),
      record("Co2", {11, 23}, {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}),
      record("Co3", {23}, {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}),
      record("Fi22", {13}, {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}),
      record("Fi23", {17, 23},
             {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}),
      record("Fi24'", {17, 23, 29},
             {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1},
              {23, 1}, {29, 1}}),
      record("HN", {19}, {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}),
      record("Ly", {31, 37, 67},
             {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}),
      record("Th", {19, 31}, {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}),
      record("B", {31, 47},
             {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1},
              {19, 1}, {23, 1}, {31, 1}, {47, 1}}),
      record("M", {41, 59, 71},
             {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1},
              {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1},
              {71, 1}}),
  };
  return rows;
}

const OddComponentRecord& tits_record() {
  static const OddComponentRecord row =
      record("2F4(2)'", {13}, {{2, 11}, {3, 3}, {5, 2}, {13, 1}});
  return row;
}

bool odd_component_record_valid(const OddComponentRecord& rec) {
  BigInt rest = rec.order;
  for (const auto& c : rec.odd_components) {
    if (c < 3 || !mpz_odd_p(c.get_mpz_t())) return false;
    if (!arith::as_prime_power(c)) return false;
    if (rec.order % c != 0) return false;
    if (gcd(c, BigInt(rec.order / c)) != 1) return false;
    rest /= c;
  }
  return rest * std::accumulate(rec.odd_components.begin(),
                                rec.odd_components.end(), BigInt(1),
                                std::multiplies<>()) == rec.order;
}

std::vector<TraceEntry> eliminate_family(const FieldSize& fs, Family family) {
  Eliminator el(fs);
  switch (family) {
    case Family::Alternating: eliminate_alternating(el); break;
    case Family::Sporadic: eliminate_table(el, family, sporadic_table()); break;
    case Family::Tits: eliminate_table(el, family, {tits_record()}); break;
    case Family::Exceptional: eliminate_exceptional(el); break;
    case Family::PSL: eliminate_psl(el, build_count_sets(fs)); break;
    case Family::PSU: eliminate_psu(el); break;
    case Family::PSp: eliminate_psp(el); break;
    case Family::POmega: eliminate_pomega(el); break;
  }
  return el.take();
}

// ---------------------------------------------------------------------

namespace {

std::string join(const std::set<BigInt>& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ", ";
    out += dec(v);
  }
  return "{" + out + "}";
}

}  // namespace

Verdict characterize(const BigInt& order, const std::set<BigInt>& nse) {
  Verdict v;
  if (order == 720) {
    v.outcome = Outcome::NotApplicable;
    v.reason = "720 is the order of PSp4(2); the recognition requires q > 2";
    return v;
  }
  const auto q = match_order(order);
  if (!q) {
    v.outcome = Outcome::NotApplicable;
    v.reason = dec(order) + " is not q^4(q^4-1)(q^2-1) for any q = 2^f > 2";
    return v;
  }
  v.q = *q;
  const auto fs = FieldSize::from_q(*q);
  const auto expected = sympl::nse_set(fs);
  if (nse != expected) {
    v.outcome = Outcome::HypothesesNotMet;
    std::set<BigInt> missing, extra;
    std::set_difference(expected.begin(), expected.end(), nse.begin(),
                        nse.end(), std::inserter(missing, missing.end()));
    std::set_difference(nse.begin(), nse.end(), expected.begin(),
                        expected.end(), std::inserter(extra, extra.end()));
    v.reason = "nse differs from that of PSp4(" + dec(*q) + "): missing " +
               join(missing) + ", unexpected " + join(extra);
    return v;
  }
  v.outcome = Outcome::IsomorphicToPSp4;
  v.reason = "order and nse match PSp4(" + dec(*q) + ")";

  const auto sets = build_count_sets(fs);
  v.checks.push_back({"count sets cover nse", sets.all() == nse,
                      "union of the nine count sets has " +
                          std::to_string(sets.all().size()) + " values"});

  // Prime-order counts: m_r(G) + 1 = |G_r| is divisible by r, so m_r(G)
  // is a value v of nse with r | v+1. The value 1 is the identity's count.
  for (const auto& r : arith::factorize(order).primes()) {
    std::set<BigInt> candidates;
    for (const auto& val : nse) {
      if (val != 1 && (val + 1) % r == 0) candidates.insert(val);
    }
    bool ok = !candidates.empty();
    for (const auto& c : candidates) ok = ok && prime_count_membership(fs, r, c);
    v.checks.push_back({"prime-order count for r = " + dec(r), ok,
                        "candidates " + join(candidates)});
  }

  const bool phi_ok = sympl::phi_divisibility_check(fs);
  v.checks.push_back({"4 | phi(r) for r | q^2+1", phi_ok,
                      "divisors of " + dec(*q * *q + 1)});

  const bool separated = primegraph::separation_check(*q);
  v.checks.push_back({"prime graph separation", separated,
                      "pi(q^2+1) and pi(2(q^2-1)) lie in different components"});

  const auto frob = frobenius_exclusion(fs);
  v.checks.push_back(
      {"not a Frobenius group", frob.excluded,
       "q^2+1 into q^4(q^2-1)^2-1 leaves " +
           dec(frob.odd_into_even_minus_one.remainder) +
           "; q^4(q^2-1)^2 into q^2 leaves " + dec(frob.even_into_q2.remainder)});

  for (auto family : kAllFamilies) {
    auto entries = eliminate_family(fs, family);
    v.trace.insert(v.trace.end(), entries.begin(), entries.end());
  }
  return v;
}

}  // namespace psp4::characterize
