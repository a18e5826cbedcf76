#include "psp4/selftest.hpp"

#include <map>

#include "psp4/characterize.hpp"
#include "psp4/primegraph.hpp"

namespace psp4::selftest {

std::vector<Result> run(const sympl::FieldSize& fs) {
  std::vector<Result> out;
  const std::string at = " at q = " + to_decimal(fs.q());
  const auto table = sympl::nse_table(fs);

  BigInt total = 0;
  for (const auto& [r, m] : table.counts) total += m;
  out.push_back({"partition identity" + at, total == table.order,
                 "sum " + to_decimal(total) + ", order " +
                     to_decimal(table.order)});

  bool phi_ok = true;
  for (const auto& [r, m] : table.counts) {
    phi_ok = phi_ok && m % arith::euler_phi(r) == 0;
  }
  out.push_back({"phi(r) divides m_r" + at, phi_ok, ""});

  bool sum_ok = true;
  for (const auto& [r, m] : table.counts) {
    BigInt s = 0;
    for (const auto& d : arith::divisors(r)) s += table.counts.at(d);
    sum_ok = sum_ok && s % r == 0;
  }
  out.push_back({"r divides the number of solutions of x^r = 1" + at, sum_ok,
                 ""});

  if (fs.degree() <= sympl::kMaxClassTableDegree) {
    const auto classes = sympl::class_table(fs);
    std::map<BigInt, BigInt> by_order;
    std::map<sympl::ClassFamily, BigInt> per_family;
    for (const auto& c : classes) {
      by_order[c.rep_order] += c.class_length;
      per_family[c.family] += 1;
    }
    bool match = by_order.size() <= table.counts.size();
    for (const auto& [r, m] : table.counts) {
      const auto it = by_order.find(r);
      match = match && it != by_order.end() && it->second == m;
    }
    out.push_back({"class lengths grouped by order equal m_r" + at, match,
                   std::to_string(classes.size()) + " classes"});
    bool counts = true;
    for (auto fam : sympl::kAllFamilies) {
      const BigInt have = per_family.count(fam) ? per_family[fam] : BigInt(0);
      counts = counts && have == sympl::family_class_count(fs, fam);
    }
    out.push_back({"classes per family" + at, counts, ""});
  }

  out.push_back({"4 | phi(r) for r | q^2+1" + at,
                 sympl::phi_divisibility_check(fs), ""});

  const auto graph =
      primegraph::build_graph(sympl::spectrum(fs), sympl::group_order(fs));
  const bool two = primegraph::component_count(graph) == 2 &&
                   graph.order_components.size() == 2 &&
                   graph.order_components[1] == fs.q() * fs.q() + 1;
  out.push_back({"prime graph has components {2} u pi(q^2-1) and pi(q^2+1)" + at,
                 two, ""});

  const auto verdict =
      characterize::characterize(table.order, sympl::nse_set(table));
  const bool iso =
      verdict.outcome == characterize::Outcome::IsomorphicToPSp4 &&
      verdict.q && *verdict.q == fs.q() && verdict.trace_complete();
  out.push_back({"recognition from order and nse" + at, iso, verdict.reason});
  return out;
}

}  // namespace psp4::selftest
