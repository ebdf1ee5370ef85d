#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgpeel {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

enum class HypergraphErrc {
  kBadUniformity,
  kWrongArity,
  kRepeatedVertex,
  kVertexOutOfRange,
  kDuplicateEdge,
  kParse,
};

class HypergraphError : public std::invalid_argument {
 public:
  HypergraphError(HypergraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  HypergraphErrc code() const noexcept { return code_; }

 private:
  HypergraphErrc code_;
};

// Exact non-negative rational, always stored reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

// Simple r-uniform hypergraph on vertices 0..n-1. Immutable after construction.
//
// Edges are stored in canonical form: each edge sorted ascending, and the edge
// list sorted lexicographically. Incidence lists are CSR-packed.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and canonicalizes. Throws HypergraphError on repeated vertices
  // within an edge, out-of-range ids, wrong arity or duplicate edges.
  static Hypergraph build(unsigned r, std::size_t n, std::vector<std::vector<Vertex>> edges);

  // Flat edge storage: edge e occupies flat[e*r, e*r + r). Same validation.
  static Hypergraph from_flat(unsigned r, std::size_t n, std::vector<Vertex> flat);

  unsigned r() const noexcept { return r_; }
  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return r_ == 0 ? 0 : flat_.size() / r_; }

  std::span<const Vertex> edge(EdgeIndex e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * r_, r_};
  }
  std::span<const Vertex> flat_edges() const noexcept { return flat_; }
  std::span<const EdgeIndex> incident(Vertex v) const {
    return {inc_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const;
  Rational average_degree() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(unsigned r, std::size_t n, std::vector<Vertex> flat);

  unsigned r_ = 2;
  std::size_t n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeIndex> inc_;
};

struct InducedSubgraph {
  Hypergraph graph;
  // to_parent[i] is the original id of new vertex i.
  std::vector<Vertex> to_parent;
};

// Edges of h fully inside `vertices`, relabeled 0..|S|-1 in ascending id order.
InducedSubgraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> vertices);

// Number of edges of h with every endpoint in `vertices`.
std::size_t induced_edge_count(const Hypergraph& h, std::span<const Vertex> vertices);

// Partition of vertex ids into connected blocks; each block sorted, blocks
// ordered by smallest member. Isolated vertices form singleton blocks.
std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h);

// Size of the largest component of the subhypergraph formed by the vertices
// with alive_vertex[v] != 0 and the edges with alive_edge[e] != 0.
std::size_t largest_component(const Hypergraph& h, std::span<const std::uint8_t> alive_vertex,
                              std::span<const std::uint8_t> alive_edge);

}  // namespace hgpeel
