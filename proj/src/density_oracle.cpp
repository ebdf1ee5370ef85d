#include "hgpeel/density_oracle.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "hgpeel/kernels.hpp"
#include "hgpeel/random_models.hpp"

namespace hgpeel {

namespace {

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

std::uint64_t subsets_of_size(std::uint64_t n, std::size_t s) {
  try {
    const Rank c = binomial(n, static_cast<unsigned>(s));
    return c > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(c);
  } catch (const CapacityError&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

// Visits every s-subset of [0, n) in lexicographic order. The visitor gets the
// sorted member list and, when n <= 64, the subset as a bitmask.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t s, Visit&& visit) {
  if (s > n) return;
  std::vector<Vertex> idx(s);
  std::vector<std::uint64_t> prefix(s + 1, 0);
  const bool use_mask = n <= 64;
  auto rebuild_from = [&](std::size_t i) {
    if (!use_mask) return;
    for (std::size_t j = i; j < s; ++j) prefix[j + 1] = prefix[j] | (std::uint64_t{1} << idx[j]);
  };
  for (std::size_t j = 0; j < s; ++j) idx[j] = static_cast<Vertex>(j);
  rebuild_from(0);
  for (;;) {
    visit(std::span<const Vertex>(idx), prefix[s]);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    rebuild_from(i - 1);
  }
}

// Counts induced edges of one subset. Bitmask path for n <= 64 (vectorized
// kernel), otherwise membership flags plus edges rooted at their minimum vertex.
class InducedCounter {
 public:
  explicit InducedCounter(const Hypergraph& h) : h_(h) {
    if (h.num_vertices() <= 64) {
      masks_.reserve(h.num_edges());
      for (std::size_t e = 0; e < h.num_edges(); ++e) {
        std::uint64_t m = 0;
        for (Vertex v : h.edge(static_cast<EdgeIndex>(e))) m |= std::uint64_t{1} << v;
        masks_.push_back(m);
      }
    } else {
      member_.assign(h.num_vertices(), 0);
    }
  }

  std::size_t operator()(std::span<const Vertex> subset, std::uint64_t mask) {
    if (h_.num_vertices() <= 64) return kernels::count_covered(masks_, mask);
    for (Vertex v : subset) member_[v] = 1;
    std::size_t count = 0;
    for (Vertex v : subset) {
      for (EdgeIndex e : h_.incident(v)) {
        auto edge = h_.edge(e);
        if (edge[0] != v) continue;
        bool inside = true;
        for (Vertex u : edge) inside = inside && member_[u];
        count += inside;
      }
    }
    for (Vertex v : subset) member_[v] = 0;
    return count;
  }

 private:
  const Hypergraph& h_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint8_t> member_;
};

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " subsets, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

double log_expected_count_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t, double c,
                                unsigned r, EdgeSlots slots) {
  if (s < 1 || s > n) throw std::domain_error("expected_count_bound: need 1 <= s <= n");
  if (r < 2) throw std::domain_error("expected_count_bound: need r >= 2");
  const double nn = static_cast<double>(n);
  const double log_p = std::log(c) - (r - 1.0) * std::log(nn);
  if (!(c >= 0) || log_p > 0) throw std::domain_error("expected_count_bound: p must lie in [0, 1]");
  const double ss = static_cast<double>(s);
  const double available = slots == EdgeSlots::kAsWritten ? std::pow(ss, static_cast<double>(r))
                                                          : std::exp(log_binomial(ss, r));
  const double tt = static_cast<double>(t);
  const double log_edges = t == 0 ? 0.0 : tt * log_p;
  return log_binomial(nn, ss) + log_binomial(std::round(available), tt) + log_edges;
}

double expected_count_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t, double c,
                            unsigned r, EdgeSlots slots) {
  return std::exp(log_expected_count_bound(n, s, t, c, r, slots));
}

std::uint64_t count_dense_subgraphs(const Hypergraph& h, std::size_t s, std::size_t t,
                                    std::uint64_t budget) {
  const std::size_t n = h.num_vertices();
  if (s > n) return 0;
  const std::uint64_t required = subsets_of_size(n, s);
  if (required > budget) throw BudgetExceeded(required, budget);
  if (s == 0) return t == 0 ? 1 : 0;

  InducedCounter induced(h);
  std::uint64_t count = 0;
  for_each_subset(n, s, [&](std::span<const Vertex> subset, std::uint64_t mask) {
    count += induced(subset, mask) >= t;
  });
  return count;
}

DensestSubset max_density_subgraph_bruteforce(const Hypergraph& h, std::size_t max_size,
                                              std::uint64_t budget) {
  const std::size_t n = h.num_vertices();
  max_size = std::min(max_size, n);
  std::uint64_t required = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    const std::uint64_t c = subsets_of_size(n, s);
    required = c > std::numeric_limits<std::uint64_t>::max() - required
                   ? std::numeric_limits<std::uint64_t>::max()
                   : required + c;
  }
  if (required > budget) throw BudgetExceeded(required, budget);

  DensestSubset best;
  best.avg_degree = {0, 1};
  InducedCounter induced(h);
  for (std::size_t s = 1; s <= max_size; ++s) {
    for_each_subset(n, s, [&](std::span<const Vertex> subset, std::uint64_t mask) {
      const std::size_t e = induced(subset, mask);
      const Rational d = Rational::make(static_cast<std::int64_t>(h.r() * e),
                                        static_cast<std::int64_t>(s));
      if (best.witness.empty() || best.avg_degree < d) {
        best.witness.assign(subset.begin(), subset.end());
        best.induced_edges = e;
        best.avg_degree = d;
      }
    });
  }
  return best;
}

ContractionReport contraction_check(const PeelingTrace& trace, unsigned r, unsigned k) {
  ContractionReport report;
  auto add = [&](ContractionRow row) {
    row.rho = Rational::make(static_cast<std::int64_t>(row.deg_ge_k),
                             static_cast<std::int64_t>(row.vertices_before));
    row.markov_ok = static_cast<std::uint64_t>(k) * row.deg_ge_k <=
                    static_cast<std::uint64_t>(r) * row.edges_before;
    row.survivor_ok = row.survivors_after <= row.deg_ge_k;
    report.violations += !row.markov_ok + !row.survivor_ok;
    report.rows.push_back(row);
  };
  for (const auto& rec : trace.rounds) {
    ContractionRow row;
    row.round = rec.index;
    row.vertices_before = rec.vertices_before;
    row.edges_before = rec.edges_before;
    row.deg_ge_k = rec.deg_ge_k_before;
    row.survivors_after = rec.surviving_vertex_count;
    add(row);
  }
  if (!trace.core_vertices.empty()) {
    ContractionRow row;
    row.round = trace.s + 1;
    row.vertices_before = trace.core_vertices.size();
    row.edges_before = trace.core_edges.size();
    row.deg_ge_k = trace.core_vertices.size();
    row.survivors_after = trace.core_vertices.size();
    add(row);
  }
  return report;
}

}  // namespace hgpeel
