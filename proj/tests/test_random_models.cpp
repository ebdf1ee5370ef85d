#include <cmath>
#include <map>

#include "doctest.h"
#include "hgpeel/random_models.hpp"

using namespace hgpeel;

namespace {

double mean_of(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance_of(const std::vector<double>& xs) {
  const double m = mean_of(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

}  // namespace

TEST_CASE("mix_seed matches the splitmix64 reference stream") {
  // First output of splitmix64 seeded with 0.
  CHECK(mix_seed(0, 0) == 0xE220A8397B1DCDAFULL);
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("uniform_open_closed stays in (0, 1]") {
  Rng rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = uniform_open_closed(rng);
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(1u << 22, 3) == Rank{12297820586381410304ULL});  // C(2^22, 3)
  CHECK_THROWS_AS(binomial(std::uint64_t{1} << 40, 8), CapacityError);
}

TEST_CASE("skip_sample: degenerate probabilities") {
  Rng rng(1);
  CHECK(skip_sample(7, 1.0, rng) == std::vector<Rank>{0, 1, 2, 3, 4, 5, 6});
  CHECK(skip_sample(7, 0.0, rng).empty());
  CHECK_THROWS_AS(skip_sample(7, 1.5, rng), ParameterError);
}

TEST_CASE("skip_sample: count moments match Binomial(1e6, 1e-3)") {
  std::vector<double> counts;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(mix_seed(42, seed));
    const auto s = skip_sample(1'000'000, 1e-3, rng);
    for (std::size_t i = 1; i < s.size(); ++i) REQUIRE(s[i - 1] < s[i]);
    counts.push_back(static_cast<double>(s.size()));
  }
  const double sigma2 = 1e6 * 1e-3 * (1 - 1e-3);
  CHECK(std::abs(mean_of(counts) - 1000.0) <= 3 * std::sqrt(sigma2) / 10);
  // Sample variance of 100 normal draws has sd ~ sigma2 * sqrt(2/99).
  CHECK(std::abs(variance_of(counts) - sigma2) <= 4 * sigma2 * std::sqrt(2.0 / 99));
}

TEST_CASE("skip_sample: exact outcome distribution (chi-square over 2^N patterns)") {
  struct Case {
    unsigned trials;
    double p;
    double critical;  // chi-square 0.999 quantile, df = 2^N - 1
  };
  for (const Case c : {Case{6, 0.3, 103.442}, Case{8, 0.5, 330.520}}) {
    CAPTURE(c.trials);
    const int samples = 200000;
    std::map<unsigned, int> observed;
    Rng rng(77 + c.trials);
    for (int i = 0; i < samples; ++i) {
      unsigned pattern = 0;
      for (Rank idx : skip_sample(c.trials, c.p, rng)) pattern |= 1u << static_cast<unsigned>(idx);
      ++observed[pattern];
    }
    double chi2 = 0;
    for (unsigned pattern = 0; pattern < (1u << c.trials); ++pattern) {
      const int ones = __builtin_popcount(pattern);
      const double prob = std::pow(c.p, ones) * std::pow(1 - c.p, c.trials - ones);
      const double expected = prob * samples;
      const double diff = observed[pattern] - expected;
      chi2 += diff * diff / expected;
    }
    CHECK(chi2 < c.critical);
  }
}

TEST_CASE("colex unranking and ranking") {
  CHECK(unrank_subset(0, 3, 5) == std::vector<Vertex>{0, 1, 2});
  CHECK(unrank_subset(2, 2, 4) == std::vector<Vertex>{1, 2});
  CHECK(unrank_subset(3, 2, 4) == std::vector<Vertex>{0, 3});
  CHECK(rank_subset(std::vector<Vertex>{0, 1, 2}, 3) == 0);
  CHECK(rank_subset(std::vector<Vertex>{1, 2}, 4) == 2);
  CHECK_THROWS_AS(unrank_subset(56, 3, 8), std::out_of_range);
  CHECK_THROWS_AS(rank_subset(std::vector<Vertex>{2, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(rank_subset(std::vector<Vertex>{1, 4}, 4), std::invalid_argument);

  SUBCASE("exhaustive bijection on C(8,3)") {
    std::vector<std::vector<Vertex>> seen;
    for (Rank rk = 0; rk < 56; ++rk) {
      const auto s = unrank_subset(rk, 3, 8);
      CHECK(rank_subset(s, 8) == rk);
      for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
      CHECK(s.back() < 8);
      seen.push_back(s);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
  }
  SUBCASE("random ranks at large n round-trip") {
    Rng rng(9);
    for (unsigned r : {2u, 3u, 4u, 5u}) {
      const std::uint64_t n = std::uint64_t{1} << 24;
      const Rank total = binomial(n, r);
      for (int i = 0; i < 2000; ++i) {
        const Rank rk = ((static_cast<Rank>(rng()) << 64) | rng()) % total;
        const auto s = unrank_subset(rk, r, n);
        REQUIRE(rank_subset(s, n) == rk);
      }
      CHECK(rank_subset(unrank_subset(total - 1, r, n), n) == total - 1);
    }
  }
}

TEST_CASE("sample_binomial_hypergraph: edge cases") {
  ModelParams p;
  p.r = 2;
  p.n = 5;
  p.c = 5.0;  // p = 5/5 = 1
  const auto k5 = sample_binomial_hypergraph(p);
  CHECK(k5.num_edges() == 10);

  p.r = 3;
  p.n = 100;
  p.c = 0.0;
  CHECK(sample_binomial_hypergraph(p).num_edges() == 0);

  p.r = 2;
  p.n = 5;
  p.c = 10.0;
  CHECK_THROWS_AS(sample_binomial_hypergraph(p), ParameterError);

  p.r = 9;
  p.n = std::uint64_t{1} << 24;
  p.c = 1.0;
  CHECK_THROWS_AS(sample_binomial_hypergraph(p), CapacityError);
}

TEST_CASE("sample_binomial_hypergraph: edges are the unranked skip sample, in rank order") {
  for (unsigned r : {2u, 3u, 4u}) {
    for (std::uint64_t n : {std::uint64_t{6}, std::uint64_t{9}, std::uint64_t{3000}}) {
      ModelParams p;
      p.r = r;
      p.n = n;
      // Dense at small n so rank 0 and the last rank are both exercised.
      p.c = n < 100 ? 0.9 * std::pow(static_cast<double>(n), r - 1.0) : 2.5;
      p.seed = 1234 + r;
      const auto h = sample_binomial_hypergraph(p);
      Rng rng(p.seed);
      const auto ranks = skip_sample(binomial(p.n, r), p.edge_probability(), rng);
      REQUIRE(ranks.size() == h.num_edges());
      for (std::size_t e = 0; e < ranks.size(); ++e) {
        const auto edge = h.edge(static_cast<EdgeIndex>(e));
        REQUIRE(std::vector<Vertex>(edge.begin(), edge.end()) == unrank_subset(ranks[e], r, p.n));
      }
    }
  }
}

TEST_CASE("sample_binomial_hypergraph: determinism") {
  ModelParams p;
  p.r = 3;
  p.n = 20000;
  p.c = 4.0;
  p.seed = 5;
  CHECK(sample_binomial_hypergraph(p) == sample_binomial_hypergraph(p));
  ModelParams q = p;
  q.seed = 6;
  CHECK_FALSE(sample_binomial_hypergraph(p) == sample_binomial_hypergraph(q));
}

TEST_CASE("sample_binomial_hypergraph: edge-count mean and variance (r=2, n=1e4, c=1)") {
  std::vector<double> counts;
  for (std::uint64_t t = 0; t < 200; ++t) {
    ModelParams p;
    p.r = 2;
    p.n = 10000;
    p.c = 1.0;
    p.seed = mix_seed(2024, t);
    counts.push_back(static_cast<double>(sample_binomial_hypergraph(p).num_edges()));
  }
  const double trials = 10000.0 * 9999.0 / 2.0;
  const double prob = 1e-4;
  const double mean = trials * prob;  // 4999.5
  const double var = trials * prob * (1 - prob);
  CHECK(mean == doctest::Approx(4999.5));
  CHECK(std::abs(mean_of(counts) - mean) <= 3 * std::sqrt(var / 200));
  CHECK(std::abs(variance_of(counts) - var) <= 4 * var * std::sqrt(2.0 / 199));
}

TEST_CASE("validate_experiment_params") {
  ModelParams p;
  p.r = 2;
  p.k = 2;
  p.c = 1;
  CHECK_THROWS_AS(validate_experiment_params(p), ParameterError);
  p.k = 3;
  CHECK_NOTHROW(validate_experiment_params(p));
  p.c = 0;
  CHECK_THROWS_AS(validate_experiment_params(p), ParameterError);
  p.c = 1;
  p.k.reset();
  CHECK_THROWS_AS(validate_experiment_params(p), ParameterError);
}
