#include <doctest.h>

#include <sstream>

#include "psp4/io.hpp"

using namespace psp4;
using io::Json;

namespace {

// True when no number appears anywhere in the document.
bool strings_only(const Json& j) {
  if (j.is_number()) return false;
  if (j.is_array() || j.is_object()) {
    for (const auto& v : j) {
      if (!strings_only(v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("nse table json") {
  const auto fs = sympl::FieldSize::from_q(4);
  const auto j = io::to_json(sympl::nse_table(fs));
  CHECK(j.dump() ==
        R"({"q":"4","order":"979200","counts":{"1":"1","2":"4335","3":"10880",)"
        R"("4":"61200","5":"52224","6":"163200","10":"195840","15":"261120",)"
        R"("17":"230400"}})");
  CHECK(io::read_nse(j) == sympl::nse_set(fs));
}

TEST_CASE("big values stay exact") {
  const auto fs = sympl::FieldSize::from_degree(16);
  const auto t = sympl::nse_table(fs);
  const auto j = io::to_json(t);
  CHECK(strings_only(j));
  CHECK(j["order"].get<std::string>() == to_decimal(t.order));
  const auto back = io::read_nse(Json::parse(j.dump()));
  CHECK(back == sympl::nse_set(t));
}

TEST_CASE("read_nse shapes") {
  CHECK(io::read_nse(Json::parse(R"(["1","2","28"])")) ==
        std::set<BigInt>{1, 2, 28});
  CHECK(io::read_nse(Json::parse("[1, 2, 6]")) == std::set<BigInt>{1, 2, 6});
  CHECK_THROWS_AS(io::read_nse(Json::parse(R"({"a":1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_nse(Json::parse(R"(["x"])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::read_nse(Json::parse("[1.5]")), std::invalid_argument);
  CHECK_THROWS_AS(io::read_nse(Json::parse("[-3]")), std::invalid_argument);
}

TEST_CASE("prime graph json") {
  const auto fs = sympl::FieldSize::from_q(4);
  const auto g = primegraph::build_graph(sympl::spectrum(fs), 979200);
  const auto j = io::to_json(g);
  CHECK(j["components"].dump() == R"([["2","3","5"],["17"]])");
  CHECK(j["order_components"].dump() == R"(["57600","17"])");
  CHECK(strings_only(j));
}

TEST_CASE("verdict json") {
  const auto fs = sympl::FieldSize::from_q(4);
  const auto v = characterize::characterize(979200, sympl::nse_set(fs));
  const auto j = io::to_json(v);
  CHECK(j["outcome"] == "IsomorphicToPSp4");
  CHECK(j["q"] == "4");
  CHECK(j["trace_complete"] == true);
  REQUIRE(j["entries"].is_array());
  CHECK(j["entries"].size() == v.trace.size());
  for (const auto& e : j["entries"]) {
    for (const char* key : {"family", "case", "status", "witness", "anchor"}) {
      CHECK(e[key].is_string());
    }
  }
  const auto na = io::to_json(characterize::characterize(84, {1, 2}));
  CHECK(na["outcome"] == "NotApplicable");
  CHECK(na["q"].is_null());
}

TEST_CASE("class table csv") {
  const auto rows = sympl::class_table(sympl::FieldSize::from_q(4));
  const auto csv = io::class_table_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "name,i,j,rep_order,class_count_index,class_length");
  std::getline(in, line);
  CHECK(line == "A1,,,1,1,1");
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  CHECK(n + 1 == rows.size());
}

TEST_CASE("histogram and catalan json") {
  const oracle::OrderHistogram h{{1, 1}, {2, 3}};
  CHECK(io::to_json(h).dump() == R"({"total":"4","counts":{"1":"1","2":"3"}})");
  const auto sols = arith::search_catalan(10);
  const auto j = io::to_json(sols);
  CHECK(j.size() == sols.size());
  CHECK(io::spectrum_json({1, 2}).dump() == R"(["1","2"])");
}
