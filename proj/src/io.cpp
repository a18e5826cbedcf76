#include "psp4/io.hpp"

#include <sstream>
#include <stdexcept>

namespace psp4::io {
namespace {

Json strings(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

BigInt parse_value(const Json& v) {
  if (v.is_string()) return from_decimal(v.get<std::string>());
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return BigInt(static_cast<unsigned long>(v.get<std::int64_t>()));
  }
  throw std::invalid_argument("nse values must be decimal strings, got " +
                              v.dump());
}

}  // namespace

Json to_json(const sympl::NseTable& table) {
  Json counts = Json::object();
  for (const auto& [order, count] : table.counts) {
    counts[to_decimal(order)] = to_decimal(count);
  }
  return Json{{"q", to_decimal(table.q)},
              {"order", to_decimal(table.order)},
              {"counts", counts}};
}

Json to_json(const primegraph::PrimeGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) {
    edges.push_back(Json::array({to_decimal(a), to_decimal(b)}));
  }
  Json comps = Json::array();
  for (const auto& c : g.components) comps.push_back(strings(c));
  return Json{{"vertices", strings(g.vertices)},
              {"edges", edges},
              {"components", comps},
              {"order_components", strings(g.order_components)}};
}

Json to_json(const characterize::Verdict& v) {
  Json out{{"outcome", characterize::to_string(v.outcome)},
           {"q", v.q ? Json(to_decimal(*v.q)) : Json(nullptr)},
           {"reason", v.reason}};
  if (v.outcome != characterize::Outcome::IsomorphicToPSp4) return out;
  out["trace_complete"] = v.trace_complete();
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  out["checks"] = checks;
  Json entries = Json::array();
  for (const auto& e : v.trace) {
    entries.push_back(Json{{"family", characterize::to_string(e.family)},
                           {"case", e.case_label},
                           {"status", characterize::to_string(e.status)},
                           {"witness", e.witness},
                           {"anchor", e.anchor}});
  }
  out["entries"] = entries;
  return out;
}

Json to_json(const oracle::OrderHistogram& h) {
  Json counts = Json::object();
  for (const auto& [order, count] : h) {
    counts[std::to_string(order)] = std::to_string(count);
  }
  return Json{{"total", std::to_string(oracle::histogram_total(h))},
              {"counts", counts}};
}

Json to_json(const std::vector<arith::CatalanSolution>& solutions) {
  Json out = Json::array();
  for (const auto& s : solutions) {
    out.push_back(Json{{"p", std::to_string(s.p)},
                       {"m", std::to_string(s.m)},
                       {"q", std::to_string(s.q)},
                       {"n", std::to_string(s.n)},
                       {"kind", arith::to_string(s.kind)}});
  }
  return out;
}

Json spectrum_json(const std::vector<BigInt>& spectrum) {
  return strings(spectrum);
}

std::string class_table_csv(const std::vector<sympl::ClassDescriptor>& rows) {
  std::ostringstream out;
  out << "name,i,j,rep_order,class_count_index,class_length\n";
  for (const auto& r : rows) {
    out << sympl::to_string(r.family) << ',';
    if (r.i) out << *r.i;
    out << ',';
    if (r.j) out << *r.j;
    out << ',' << to_decimal(r.rep_order) << ',' << r.index << ','
        << to_decimal(r.class_length) << '\n';
  }
  return out.str();
}

std::set<BigInt> read_nse(const Json& doc) {
  std::set<BigInt> out;
  if (doc.is_array()) {
    for (const auto& v : doc) out.insert(parse_value(v));
    return out;
  }
  if (doc.is_object() && doc.contains("counts") && doc["counts"].is_object()) {
    for (const auto& [key, v] : doc["counts"].items()) {
      out.insert(parse_value(v));
    }
    return out;
  }
  throw std::invalid_argument(
      "nse file must be a JSON array of decimal strings or an nse table");
}

}  // namespace psp4::io
