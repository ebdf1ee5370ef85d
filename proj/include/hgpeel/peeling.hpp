#pragma once

#include <iosfwd>
#include <vector>

#include "hgpeel/hypergraph.hpp"

namespace hgpeel {

// One synchronous peeling round. The "before" fields describe the surviving
// graph at the start of the round; the "surviving" fields describe it after.
struct RoundRecord {
  std::size_t index = 0;  // 1-based
  std::vector<Vertex> removed_vertices;   // ascending
  std::vector<EdgeIndex> removed_edges;   // in removal order
  std::size_t vertices_before = 0;
  std::size_t edges_before = 0;
  std::size_t deg_ge_k_before = 0;
  std::size_t surviving_vertex_count = 0;
  std::size_t surviving_edge_count = 0;
};

struct PeelingTrace {
  unsigned r = 2;
  unsigned k = 1;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::vector<RoundRecord> rounds;
  // Rounds that removed at least one vertex. Equal to rounds.size().
  std::size_t s = 0;
  std::vector<Vertex> core_vertices;
  std::vector<EdgeIndex> core_edges;
  // Round in which each vertex / edge was removed; 0 for core members.
  std::vector<std::uint32_t> vertex_round;
  std::vector<std::uint32_t> edge_round;
};

struct CoreSets {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
  friend bool operator==(const CoreSets&, const CoreSets&) = default;
};

// Round-synchronous peeling: every round removes, simultaneously, all vertices
// whose degree at the start of the round is below k, together with every edge
// touching them. Stops before the first round that would remove nothing.
// Throws std::invalid_argument for k == 0.
PeelingTrace parallel_peel(const Hypergraph& h, unsigned k);

// k-core by repeatedly deleting a single minimum-degree vertex (bucket queue).
// Independent schedule; used to cross-check parallel_peel.
CoreSets sequential_kcore(const Hypergraph& h, unsigned k);

// Surviving vertices and edges after min(rounds, s) rounds, sorted ascending.
CoreSets graph_after_rounds(const PeelingTrace& trace, std::size_t rounds);

// Size of the largest connected component of graph_after_rounds(trace, rounds).
std::size_t largest_component_after(const Hypergraph& h, const PeelingTrace& trace,
                                     std::size_t rounds);

// Per-round CSV with header
// round,removed_vertices,removed_edges,surviving_vertices,surviving_edges,deg_ge_k
// where deg_ge_k counts vertices of degree >= k at the start of the round.
void write_trace_csv(std::ostream& out, const PeelingTrace& trace);

}  // namespace hgpeel
