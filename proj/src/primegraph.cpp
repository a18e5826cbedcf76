#include "psp4/primegraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "psp4/sympl.hpp"

namespace psp4::primegraph {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

PrimeGraph build_graph(const std::vector<BigInt>& spectrum,
                       const BigInt& order) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  for (const auto& s : spectrum) {
    if (s < 1 || order % s != 0) {
      throw std::invalid_argument("spectrum member " + to_decimal(s) +
                                  " does not divide " + to_decimal(order));
    }
  }
  const auto fac = arith::factorize(order);
  PrimeGraph g;
  g.vertices = fac.primes();
  const std::size_t n = g.vertices.size();

  UnionFind uf(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const BigInt prod = g.vertices[a] * g.vertices[b];
      const bool adjacent = std::any_of(
          spectrum.begin(), spectrum.end(),
          [&](const BigInt& s) { return s % prod == 0; });
      if (adjacent) {
        g.edges.emplace_back(g.vertices[a], g.vertices[b]);
        uf.unite(a, b);
      }
    }
  }

  // Roots are the smallest index in each class, so ordering by root puts
  // the component of 2 first whenever 2 divides the order.
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < n; ++v) {
    const auto root = uf.find(v);
    auto [it, fresh] = slot.emplace(root, g.components.size());
    if (fresh) {
      g.components.emplace_back();
      g.order_components.emplace_back(1);
    }
    g.components[it->second].push_back(g.vertices[v]);
  }
  for (const auto& [p, e] : fac.pairs()) {
    for (std::size_t k = 0; k < g.components.size(); ++k) {
      const auto& comp = g.components[k];
      if (std::find(comp.begin(), comp.end(), p) != comp.end()) {
        g.order_components[k] *= pow(p, e);
      }
    }
  }
  return g;
}

std::size_t component_count(const PrimeGraph& graph) {
  return graph.components.size();
}

bool separation_check(const BigInt& q) {
  const auto fs = sympl::FieldSize::from_q(q);
  const auto g = build_graph(sympl::spectrum(fs), sympl::group_order(fs));
  const auto odd = arith::factorize(q * q + 1).primes();
  auto even = arith::factorize(2 * (q * q - 1)).primes();
  auto component_of = [&](const BigInt& p) {
    for (std::size_t k = 0; k < g.components.size(); ++k) {
      const auto& c = g.components[k];
      if (std::find(c.begin(), c.end(), p) != c.end()) return k;
    }
    throw std::logic_error("prime missing from graph");
  };
  for (const auto& a : odd) {
    for (const auto& b : even) {
      if (component_of(a) == component_of(b)) return false;
    }
  }
  return true;
}

}  // namespace psp4::primegraph
