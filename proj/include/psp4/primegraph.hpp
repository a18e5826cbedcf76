#pragma once

// Prime graph of a group given by its element-order spectrum: primes
// dividing the order, joined when their product is an element order.

#include <set>
#include <utility>
#include <vector>

#include "psp4/arith.hpp"

namespace psp4::primegraph {

struct PrimeGraph {
  std::vector<BigInt> vertices;                    // ascending
  std::vector<std::pair<BigInt, BigInt>> edges;    // (p, s) with p < s, sorted
  std::vector<std::vector<BigInt>> components;     // component of 2 first
  std::vector<BigInt> order_components;            // parallel to components
};

/// Vertices are the primes of `order`. Throws std::invalid_argument when a
/// spectrum member does not divide the order or is not positive.
PrimeGraph build_graph(const std::vector<BigInt>& spectrum,
                       const BigInt& order);

std::size_t component_count(const PrimeGraph& graph);

/// True when the primes of q^2+1 and of 2(q^2-1) fall in different
/// components of the PSp4(q) graph.
bool separation_check(const BigInt& q);

}  // namespace psp4::primegraph
