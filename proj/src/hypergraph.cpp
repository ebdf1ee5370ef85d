#include "hgpeel/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hgpeel {

namespace {

// Colex order: compare from the largest vertex down. This is the order of
// subset ranks, so generator output is already canonical.
bool colex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t size_of(Vertex x) { return size_[find(x)]; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) return {0, 1};
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Hypergraph Hypergraph::build(unsigned r, std::size_t n, std::vector<std::vector<Vertex>> edges) {
  if (r < 2) throw HypergraphError(HypergraphErrc::kBadUniformity, "uniformity r must be >= 2");
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * r);
  for (const auto& e : edges) {
    if (e.size() != r) {
      throw HypergraphError(HypergraphErrc::kWrongArity,
                            "edge has " + std::to_string(e.size()) + " vertices, expected " +
                                std::to_string(r));
    }
    flat.insert(flat.end(), e.begin(), e.end());
  }
  return from_flat(r, n, std::move(flat));
}

Hypergraph Hypergraph::from_flat(unsigned r, std::size_t n, std::vector<Vertex> flat) {
  if (r < 2) throw HypergraphError(HypergraphErrc::kBadUniformity, "uniformity r must be >= 2");
  if (flat.size() % r != 0) {
    throw HypergraphError(HypergraphErrc::kWrongArity, "flat edge list length is not a multiple of r");
  }
  const std::size_t m = flat.size() / r;
  for (std::size_t e = 0; e < m; ++e) {
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(e * r);
    std::sort(first, first + r);
    for (unsigned i = 0; i < r; ++i) {
      if (first[i] >= n) {
        throw HypergraphError(HypergraphErrc::kVertexOutOfRange,
                              "vertex id " + std::to_string(first[i]) + " out of range [0, " +
                                  std::to_string(n) + ")");
      }
      if (i > 0 && first[i] == first[i - 1]) {
        throw HypergraphError(HypergraphErrc::kRepeatedVertex,
                              "vertex " + std::to_string(first[i]) + " repeated within edge " +
                                  std::to_string(e));
      }
    }
  }

  auto edge_at = [&](const std::vector<Vertex>& f, std::size_t e) {
    return std::span<const Vertex>(f.data() + e * r, r);
  };
  bool sorted = true;
  for (std::size_t e = 1; e < m && sorted; ++e) {
    sorted = !colex_less(edge_at(flat, e), edge_at(flat, e - 1));
  }
  if (!sorted) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return colex_less(edge_at(flat, a), edge_at(flat, b));
    });
    std::vector<Vertex> sorted_flat;
    sorted_flat.reserve(flat.size());
    for (std::size_t e : order) {
      auto s = edge_at(flat, e);
      sorted_flat.insert(sorted_flat.end(), s.begin(), s.end());
    }
    flat = std::move(sorted_flat);
  }
  for (std::size_t e = 1; e < m; ++e) {
    if (std::ranges::equal(edge_at(flat, e), edge_at(flat, e - 1))) {
      throw HypergraphError(HypergraphErrc::kDuplicateEdge, "duplicate edge in input");
    }
  }
  return Hypergraph(r, n, std::move(flat));
}

Hypergraph::Hypergraph(unsigned r, std::size_t n, std::vector<Vertex> flat)
    : r_(r), n_(n), flat_(std::move(flat)), offsets_(n + 1, 0) {
  for (Vertex v : flat_) ++offsets_[v + 1];
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  inc_.resize(flat_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < flat_.size(); ++i) {
    inc_[cursor[flat_[i]]++] = static_cast<EdgeIndex>(i / r_);
  }
}

std::size_t Hypergraph::degree(Vertex v) const {
  if (v >= n_) {
    throw HypergraphError(HypergraphErrc::kVertexOutOfRange,
                          "vertex id " + std::to_string(v) + " out of range");
  }
  return offsets_[v + 1] - offsets_[v];
}

Rational Hypergraph::average_degree() const {
  if (n_ == 0) return {0, 1};
  return Rational::make(static_cast<std::int64_t>(r_ * num_edges()), static_cast<std::int64_t>(n_));
}

InducedSubgraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<Vertex> members(vertices.begin(), vertices.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(h.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= h.num_vertices()) {
      throw HypergraphError(HypergraphErrc::kVertexOutOfRange,
                            "vertex id " + std::to_string(members[i]) + " out of range");
    }
    relabel[members[i]] = static_cast<Vertex>(i);
  }

  std::vector<Vertex> flat;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(static_cast<EdgeIndex>(e));
    if (std::ranges::all_of(edge, [&](Vertex v) { return relabel[v] != kAbsent; })) {
      for (Vertex v : edge) flat.push_back(relabel[v]);
    }
  }
  return {Hypergraph::from_flat(h.r(), members.size(), std::move(flat)), std::move(members)};
}

std::size_t induced_edge_count(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<std::uint8_t> in(h.num_vertices(), 0);
  for (Vertex v : vertices) in.at(v) = 1;
  std::size_t count = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(static_cast<EdgeIndex>(e));
    count += std::ranges::all_of(edge, [&](Vertex v) { return in[v] != 0; });
  }
  return count;
}

std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  DisjointSets sets(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(static_cast<EdgeIndex>(e));
    for (unsigned i = 1; i < edge.size(); ++i) sets.unite(edge[0], edge[i]);
  }
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> block_of_root(n, kUnset);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = sets.find(v);
    if (block_of_root[root] == kUnset) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(v);
  }
  return blocks;
}

std::size_t largest_component(const Hypergraph& h, std::span<const std::uint8_t> alive_vertex,
                              std::span<const std::uint8_t> alive_edge) {
  const std::size_t n = h.num_vertices();
  DisjointSets sets(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (!alive_edge[e]) continue;
    auto edge = h.edge(static_cast<EdgeIndex>(e));
    for (unsigned i = 1; i < edge.size(); ++i) sets.unite(edge[0], edge[i]);
  }
  std::size_t best = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (alive_vertex[v]) best = std::max(best, sets.size_of(v));
  }
  return best;
}

}  // namespace hgpeel
