#pragma once

// JSON and CSV encodings. Every integer is written as a decimal string.

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "psp4/arith.hpp"
#include "psp4/characterize.hpp"
#include "psp4/oracle.hpp"
#include "psp4/primegraph.hpp"
#include "psp4/sympl.hpp"

namespace psp4::io {

using Json = nlohmann::ordered_json;

/// {"q", "order", "counts": {order: count}} with counts in ascending order.
Json to_json(const sympl::NseTable& table);
Json to_json(const primegraph::PrimeGraph& graph);
Json to_json(const characterize::Verdict& verdict);
Json to_json(const oracle::OrderHistogram& histogram);
Json to_json(const std::vector<arith::CatalanSolution>& solutions);
Json spectrum_json(const std::vector<BigInt>& spectrum);

/// Header name,i,j,rep_order,class_count_index,class_length; absent
/// parameters are empty fields.
std::string class_table_csv(const std::vector<sympl::ClassDescriptor>& rows);

/// Accepts a JSON array of decimal strings (or non-negative integers), or an
/// nse table object whose "counts" values are collected. Throws
/// std::invalid_argument on any other shape.
std::set<BigInt> read_nse(const Json& doc);

}  // namespace psp4::io
