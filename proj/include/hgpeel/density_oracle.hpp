#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hgpeel/hypergraph.hpp"
#include "hgpeel/peeling.hpp"

namespace hgpeel {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

enum class EdgeSlots {
  kAsWritten,  // C(s^r, t): counts ordered r-tuples as slots (loose)
  kTight,      // C(C(s, r), t): only the r-subsets of the chosen vertices
};

// Upper bound on E[X_{s,t}] for H_r(n, c/n^(r-1)):
//   C(n, s) * C(slots, t) * p^t,
// evaluated in log space. Throws std::domain_error on invalid arguments.
double log_expected_count_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t, double c,
                                unsigned r, EdgeSlots slots = EdgeSlots::kAsWritten);
double expected_count_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t, double c,
                            unsigned r, EdgeSlots slots = EdgeSlots::kAsWritten);

// Number of s-vertex subsets inducing at least t edges. Exact enumeration of
// all C(n, s) subsets; throws BudgetExceeded if C(n, s) > budget.
std::uint64_t count_dense_subgraphs(const Hypergraph& h, std::size_t s, std::size_t t,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

struct DensestSubset {
  std::vector<Vertex> witness;
  std::size_t induced_edges = 0;
  Rational avg_degree;  // r * induced_edges / |witness|
};

// Maximum of r * e(S) / |S| over non-empty S with |S| <= max_size. Ties go to
// the smaller subset, then to the lexicographically first. An empty vertex set
// yields an empty witness with average degree 0.
DensestSubset max_density_subgraph_bruteforce(const Hypergraph& h, std::size_t max_size,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

struct DensityReport {
  std::size_t s = 0;
  std::size_t t = 0;
  std::uint64_t exact_count = 0;
  double bound = 0;
  double bound_tight = 0;
  DensestSubset densest;
};

// One row per peeling round, plus a final row for the terminal graph when it
// is non-empty (the state whose check stops the algorithm).
struct ContractionRow {
  std::size_t round = 0;  // 1-based; s + 1 for the terminal row
  std::size_t vertices_before = 0;
  std::size_t edges_before = 0;
  std::size_t deg_ge_k = 0;
  Rational rho;
  std::size_t survivors_after = 0;
  bool markov_ok = true;    // k * deg_ge_k <= r * edges_before
  bool survivor_ok = true;  // survivors_after <= deg_ge_k
};

struct ContractionReport {
  std::vector<ContractionRow> rows;
  std::size_t violations = 0;
};

ContractionReport contraction_check(const PeelingTrace& trace, unsigned r, unsigned k);

}  // namespace hgpeel
