#pragma once

#include <random>
#include <set>
#include <vector>

#include "hgpeel/hypergraph.hpp"

namespace hgpeel::testing {

inline Hypergraph triangle() { return Hypergraph::build(2, 3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Hypergraph path3() { return Hypergraph::build(2, 3, {{0, 1}, {1, 2}}); }
inline Hypergraph single_triple() { return Hypergraph::build(3, 3, {{0, 1, 2}}); }
inline Hypergraph k4() {
  return Hypergraph::build(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Random simple r-uniform hypergraph with `m` distinct edges drawn by
// rejection; independent of the library's skip sampler.
inline Hypergraph random_hypergraph(unsigned r, std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::set<std::vector<Vertex>> edges;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::size_t attempts = 0;
  while (edges.size() < m && attempts++ < 100 * (m + 1)) {
    std::set<Vertex> e;
    while (e.size() < r) e.insert(pick(rng));
    edges.insert(std::vector<Vertex>(e.begin(), e.end()));
  }
  return Hypergraph::build(r, n, {edges.begin(), edges.end()});
}

}  // namespace hgpeel::testing
