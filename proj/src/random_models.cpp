#include "hgpeel/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hgpeel {

namespace {

// C(v, j) by the multiplicative formula. Caller guarantees no overflow.
inline Rank binom_unchecked(std::uint64_t v, unsigned j) {
  if (j > v) return 0;
  switch (j) {
    case 0: return 1;
    case 1: return v;
    case 2: return (static_cast<Rank>(v) * (v - 1)) >> 1;
    default: break;
  }
  Rank result = 1;
  for (unsigned i = 0; i < j; ++i) result = result * (v - i) / (i + 1);
  return result;
}

// Largest v in [j - 1, upper] with C(v, j) <= rank.
inline std::uint64_t largest_fitting(Rank rank, unsigned j, std::uint64_t upper) {
  if (j == 1) return static_cast<std::uint64_t>(rank);
  std::uint64_t v;
  // Estimate from C(v, j) ~ (v - (j-1)/2)^j / j!, then correct exactly.
  long double est;
  if (j == 2) {
    est = 0.5L + std::sqrt(0.25L + 2.0L * static_cast<long double>(rank));
  } else {
    long double fact = 1;
    for (unsigned i = 2; i <= j; ++i) fact *= i;
    est = std::pow(static_cast<long double>(rank) * fact, 1.0L / j) + (j - 1) / 2.0L;
  }
  if (!(est >= static_cast<long double>(j - 1))) {
    v = j - 1;
  } else if (est >= static_cast<long double>(upper)) {
    v = upper;
  } else {
    v = static_cast<std::uint64_t>(est);
  }
  while (v < upper && binom_unchecked(v + 1, j) <= rank) ++v;
  while (v > j - 1 && binom_unchecked(v, j) > rank) --v;
  return v;
}

// Unranks a non-decreasing stream of ranks. The largest element only moves
// up, so it is tracked by a cursor (amortized O(n) over the whole stream);
// the remaining levels are located directly.
class ColexStreamUnranker {
 public:
  ColexStreamUnranker(unsigned r, std::uint64_t n)
      : r_(r), n_(n), top_(r - 1), top_binom_(0), next_binom_(1) {}

  void unrank(Rank rank, Vertex* out) {
    while (top_ + 1 < n_ && next_binom_ <= rank) {
      ++top_;
      top_binom_ = next_binom_;
      next_binom_ = binom_unchecked(top_ + 1, r_);
    }
    out[r_ - 1] = static_cast<Vertex>(top_);
    rank -= top_binom_;
    std::uint64_t upper = top_ - 1;
    for (unsigned j = r_ - 1; j >= 1; --j) {
      const std::uint64_t v = largest_fitting(rank, j, upper);
      out[j - 1] = static_cast<Vertex>(v);
      rank -= binom_unchecked(v, j);
      upper = v - (v > 0 ? 1 : 0);
    }
  }

 private:
  unsigned r_;
  std::uint64_t n_;
  std::uint64_t top_;
  Rank top_binom_;
  Rank next_binom_;
};

// Every C(v, j) with v <= n + 1, j <= r must be computable without the
// intermediate product overflowing; the largest intermediate is C(v, j) * j.
void ensure_rank_capacity(std::uint64_t n, unsigned r) {
  for (unsigned j = 1; j <= r; ++j) {
    const Rank c = binomial(n + 1, j);
    Rank scaled;
    if (__builtin_mul_overflow(c, Rank{j}, &scaled)) {
      throw CapacityError("C(" + std::to_string(n) + ", " + std::to_string(r) +
                          ") exceeds 128-bit rank arithmetic");
    }
  }
}

template <typename Visit>
void for_each_success(Rank trials, double p, Rng& rng, Visit&& visit) {
  if (!(p > 0.0) || trials == 0) return;
  if (p >= 1.0) {
    for (Rank i = 0; i < trials; ++i) visit(i);
    return;
  }
  const double log_q = std::log1p(-p);
  Rank pos = 0;
  while (pos < trials) {
    const double gap = std::floor(std::log(uniform_open_closed(rng)) / log_q);
    const Rank remaining = trials - pos;
    if (!(gap < static_cast<double>(remaining))) break;
    const Rank g = static_cast<Rank>(gap);
    if (g >= remaining) break;
    pos += g;
    visit(pos);
    ++pos;
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform_open_closed(Rng& rng) noexcept {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

Rank binomial(std::uint64_t n, unsigned k) {
  if (k > n) return 0;
  const std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  Rank result = 1;
  for (std::uint64_t i = 0; i < kk; ++i) {
    // result * (n - i) is divisible by (i + 1); divide out the gcd first so
    // the check is against the true magnitude.
    const std::uint64_t num = n - i;
    const std::uint64_t den = i + 1;
    const Rank g1 = std::gcd(static_cast<std::uint64_t>(result % den), den);
    const Rank reduced_result = result / g1;
    const std::uint64_t den2 = den / static_cast<std::uint64_t>(g1);
    // den2 divides num now.
    Rank next;
    if (__builtin_mul_overflow(reduced_result, Rank{num / den2}, &next)) {
      throw CapacityError("binomial coefficient C(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 128 bits");
    }
    result = next;
  }
  return result;
}

Rank rank_subset(std::span<const Vertex> subset, std::uint64_t n) {
  Rank rank = 0;
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (subset[j] >= n || (j > 0 && subset[j] <= subset[j - 1])) {
      throw std::invalid_argument("rank_subset: subset must be strictly increasing within [0, n)");
    }
    rank += binomial(subset[j], static_cast<unsigned>(j + 1));
  }
  return rank;
}

void unrank_subset_into(Rank rank, unsigned r, std::uint64_t n, Vertex* out) {
  std::uint64_t upper = n - 1;
  for (unsigned j = r; j >= 1; --j) {
    const std::uint64_t v = largest_fitting(rank, j, upper);
    out[j - 1] = static_cast<Vertex>(v);
    rank -= binom_unchecked(v, j);
    upper = v - (v > 0 ? 1 : 0);
  }
}

std::vector<Vertex> unrank_subset(Rank rank, unsigned r, std::uint64_t n) {
  if (r == 0 || r > n) throw std::out_of_range("unrank_subset: need 1 <= r <= n");
  ensure_rank_capacity(n, r);
  if (rank >= binomial(n, r)) throw std::out_of_range("unrank_subset: rank >= C(n, r)");
  std::vector<Vertex> out(r);
  unrank_subset_into(rank, r, n, out.data());
  return out;
}

std::vector<Rank> skip_sample(Rank trials, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("skip_sample: p must lie in [0, 1]");
  std::vector<Rank> out;
  for_each_success(trials, p, rng, [&](Rank i) { out.push_back(i); });
  return out;
}

double ModelParams::edge_probability() const {
  return c / std::pow(static_cast<double>(n), static_cast<double>(r) - 1.0);
}

void validate_experiment_params(const ModelParams& params) {
  if (params.r < 2) throw ParameterError("r must be >= 2");
  if (!params.k || *params.k < 2) throw ParameterError("k must be >= 2");
  if (params.r == 2 && *params.k == 2) throw ParameterError("(k, r) = (2, 2) is excluded");
  if (!(params.c > 0.0)) throw ParameterError("c must be > 0");
}

Hypergraph sample_binomial_hypergraph(const ModelParams& params) {
  if (params.r < 2) throw ParameterError("r must be >= 2");
  if (params.n > std::numeric_limits<Vertex>::max()) {
    throw CapacityError("n exceeds 32-bit vertex ids");
  }
  const double p = params.n == 0 ? 0.0 : params.edge_probability();
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability c/n^(r-1) = " + std::to_string(p) + " is outside [0, 1]");
  }
  if (params.n < params.r) return Hypergraph::from_flat(params.r, params.n, {});

  ensure_rank_capacity(params.n, params.r);
  const Rank trials = binomial(params.n, params.r);
  Rng rng(params.seed);
  std::vector<Vertex> flat;
  const double expected = static_cast<double>(trials) * p;
  if (expected < 1e9) flat.reserve(static_cast<std::size_t>(expected * 1.01 + 64) * params.r);
  const unsigned r = params.r;
  ColexStreamUnranker unranker(r, params.n);
  for_each_success(trials, p, rng, [&](Rank rank) {
    const std::size_t at = flat.size();
    flat.resize(at + r);
    unranker.unrank(rank, flat.data() + at);
  });
  return Hypergraph::from_flat(params.r, params.n, std::move(flat));
}

}  // namespace hgpeel
