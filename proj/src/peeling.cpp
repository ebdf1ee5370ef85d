#include "hgpeel/peeling.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hgpeel/kernels.hpp"

namespace hgpeel {

namespace {

// Live degree of a removed vertex. Never below k, so scans skip it.
constexpr std::uint32_t kDead = std::numeric_limits<std::uint32_t>::max();

void require_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("peeling threshold k must be >= 1");
}

}  // namespace

PeelingTrace parallel_peel(const Hypergraph& h, unsigned k) {
  require_k(k);
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  const unsigned r = h.r();

  PeelingTrace trace;
  trace.r = r;
  trace.k = k;
  trace.num_vertices = n;
  trace.num_edges = m;
  trace.vertex_round.assign(n, 0);
  trace.edge_round.assign(m, 0);

  std::vector<std::uint32_t> live_degree(n);
  for (Vertex v = 0; v < n; ++v) live_degree[v] = static_cast<std::uint32_t>(h.degree(v));
  std::vector<std::uint8_t> edge_alive(m, 1);

  std::size_t alive_vertices = n;
  std::size_t alive_edges = m;
  std::vector<Vertex> frontier;

  for (std::uint32_t round = 1;; ++round) {
    frontier.clear();
    kernels::collect_below(live_degree, k, frontier);
    if (frontier.empty()) break;

    RoundRecord rec;
    rec.index = round;
    rec.vertices_before = alive_vertices;
    rec.edges_before = alive_edges;
    rec.deg_ge_k_before = alive_vertices - frontier.size();

    // Mark the whole frontier first so removals within the round never see
    // each other's degree updates.
    for (Vertex v : frontier) {
      live_degree[v] = kDead;
      trace.vertex_round[v] = round;
    }
    for (Vertex v : frontier) {
      for (EdgeIndex e : h.incident(v)) {
        if (!edge_alive[e]) continue;
        edge_alive[e] = 0;
        trace.edge_round[e] = round;
        rec.removed_edges.push_back(e);
        for (Vertex u : h.edge(e)) {
          if (live_degree[u] != kDead) --live_degree[u];
        }
      }
    }

    alive_vertices -= frontier.size();
    alive_edges -= rec.removed_edges.size();
    rec.removed_vertices = std::move(frontier);
    frontier = {};
    rec.surviving_vertex_count = alive_vertices;
    rec.surviving_edge_count = alive_edges;
    trace.rounds.push_back(std::move(rec));
  }

  trace.s = trace.rounds.size();
  for (Vertex v = 0; v < n; ++v) {
    if (live_degree[v] != kDead) trace.core_vertices.push_back(v);
  }
  for (EdgeIndex e = 0; e < m; ++e) {
    if (edge_alive[e]) trace.core_edges.push_back(e);
  }
  return trace;
}

CoreSets sequential_kcore(const Hypergraph& h, unsigned k) {
  require_k(k);
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();

  std::vector<std::size_t> degree(n);
  std::vector<std::uint8_t> vertex_alive(n, 1);
  std::vector<std::uint8_t> edge_alive(m, 1);
  // Buckets for degrees 0..k-1 with lazy deletion: an entry is current only
  // if the vertex is alive and its degree still matches the bucket.
  std::vector<std::vector<Vertex>> bucket(k);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = h.degree(v);
    if (degree[v] < k) bucket[degree[v]].push_back(v);
  }

  for (;;) {
    Vertex victim = 0;
    bool found = false;
    for (std::size_t d = 0; d < k && !found; ++d) {
      auto& b = bucket[d];
      while (!b.empty()) {
        const Vertex v = b.back();
        b.pop_back();
        if (vertex_alive[v] && degree[v] == d) {
          victim = v;
          found = true;
          break;
        }
      }
    }
    if (!found) break;

    vertex_alive[victim] = 0;
    for (EdgeIndex e : h.incident(victim)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      for (Vertex u : h.edge(e)) {
        if (u == victim || !vertex_alive[u]) continue;
        if (--degree[u] < k) bucket[degree[u]].push_back(u);
      }
    }
  }

  CoreSets core;
  for (Vertex v = 0; v < n; ++v) {
    if (vertex_alive[v]) core.vertices.push_back(v);
  }
  for (EdgeIndex e = 0; e < m; ++e) {
    if (edge_alive[e]) core.edges.push_back(e);
  }
  return core;
}

CoreSets graph_after_rounds(const PeelingTrace& trace, std::size_t rounds) {
  CoreSets out;
  for (Vertex v = 0; v < trace.vertex_round.size(); ++v) {
    const auto rv = trace.vertex_round[v];
    if (rv == 0 || rv > rounds) out.vertices.push_back(v);
  }
  for (EdgeIndex e = 0; e < trace.edge_round.size(); ++e) {
    const auto re = trace.edge_round[e];
    if (re == 0 || re > rounds) out.edges.push_back(e);
  }
  return out;
}

std::size_t largest_component_after(const Hypergraph& h, const PeelingTrace& trace,
                                     std::size_t rounds) {
  std::vector<std::uint8_t> alive_vertex(trace.vertex_round.size());
  std::vector<std::uint8_t> alive_edge(trace.edge_round.size());
  for (std::size_t v = 0; v < alive_vertex.size(); ++v) {
    const auto rv = trace.vertex_round[v];
    alive_vertex[v] = rv == 0 || rv > rounds;
  }
  for (std::size_t e = 0; e < alive_edge.size(); ++e) {
    const auto re = trace.edge_round[e];
    alive_edge[e] = re == 0 || re > rounds;
  }
  return largest_component(h, alive_vertex, alive_edge);
}

void write_trace_csv(std::ostream& out, const PeelingTrace& trace) {
  out << "round,removed_vertices,removed_edges,surviving_vertices,surviving_edges,deg_ge_k\n";
  for (const auto& rec : trace.rounds) {
    out << rec.index << ',' << rec.removed_vertices.size() << ',' << rec.removed_edges.size() << ','
        << rec.surviving_vertex_count << ',' << rec.surviving_edge_count << ','
        << rec.deg_ge_k_before << '\n';
  }
}

}  // namespace hgpeel
