#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgpeel/hypergraph.hpp"

namespace hgpeel {

using Rank = unsigned __int128;

class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// splitmix64 finalizer applied to master + (index + 1) * golden gamma:
//   z = master + (index + 1) * 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept;

// The generator used everywhere. Its output sequence is fixed by the C++
// standard, so seeded runs are reproducible across platforms.
using Rng = std::mt19937_64;

// Uniform double in (0, 1], built from the top 53 bits of one draw.
double uniform_open_closed(Rng& rng) noexcept;

// Exact binomial coefficient; throws CapacityError if it does not fit.
Rank binomial(std::uint64_t n, unsigned k);

// Colex rank of a sorted subset: sum_j C(subset[j], j + 1).
// Throws std::invalid_argument unless subset is strictly increasing in [0, n).
Rank rank_subset(std::span<const Vertex> subset, std::uint64_t n);

// Inverse of rank_subset: the rank-th r-subset of [0, n) in colex order.
// Throws std::out_of_range if rank >= C(n, r).
std::vector<Vertex> unrank_subset(Rank rank, unsigned r, std::uint64_t n);

// Same, writing into out[0..r). Requires rank < C(n, r); no checks.
void unrank_subset_into(Rank rank, unsigned r, std::uint64_t n, Vertex* out);

// Indices of the successes among N independent Bernoulli(p) trials, in
// increasing order, drawn by jumping geometric gaps
//   G = floor(ln U / ln(1 - p)),  U uniform on (0, 1].
std::vector<Rank> skip_sample(Rank trials, double p, Rng& rng);

struct ModelParams {
  unsigned r = 2;
  std::optional<unsigned> k;  // peeling threshold; the generator ignores it
  double c = 1.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  // c / n^(r-1)
  double edge_probability() const;
};

// Validation for experiments keyed to the peeling results: r >= 2, k >= 2,
// (k, r) != (2, 2), c > 0. Throws ParameterError.
void validate_experiment_params(const ModelParams& params);

// Binomial random r-uniform hypergraph: each of the C(n, r) r-subsets is an
// edge independently with probability c / n^(r-1). Deterministic in seed.
// Throws ParameterError when p is outside [0, 1] and CapacityError when
// C(n, r) is too large for 128-bit ranks or n exceeds 32-bit vertex ids.
Hypergraph sample_binomial_hypergraph(const ModelParams& params);

}  // namespace hgpeel
