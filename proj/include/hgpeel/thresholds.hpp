#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace hgpeel {

class ThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P(Poisson(x) >= j). Sums whichever tail is smaller and complements when
// needed; absolute error below 1e-12 for x <= 50, j <= 50.
double poisson_tail(double x, unsigned j);

// f(x) = x / P(Po(x) >= k - 1)^(r - 1). Its minimum over x > 0 is the
// critical expected vertex degree for a non-empty k-core. Returns +inf where
// the tail underflows to 0. Throws std::domain_error for x <= 0.
double threshold_objective(double x, unsigned r, unsigned k);

// How the critical expected degree maps to c in p = c / n^(r-1).
enum class DegreeMapping {
  kFactorial,  // expected degree = c / (r-1)!
  kIdentity,   // expected degree = c
};

struct AnalyticThreshold {
  double x_star = 0;
  double lambda_star = 0;
  double c_analytic = 0;
};

// Grid scan of 1000 log-spaced points on [1e-3, 50] to bracket the minimum,
// then golden-section refinement to bracket width tol. Throws ThresholdError
// when the grid minimum sits on the boundary (no interior minimum, e.g. the
// excluded (r, k) = (2, 2)) and std::domain_error for invalid (r, k).
AnalyticThreshold compute_threshold_analytic(unsigned r, unsigned k, double tol = 1e-9,
                                             DegreeMapping mapping = DegreeMapping::kFactorial);

// Minimum of threshold_objective over the same 1000-point grid alone.
double grid_minimum(unsigned r, unsigned k, double lo = 1e-3, double hi = 50.0,
                    std::size_t points = 1000);

struct EmpiricalOptions {
  std::uint64_t n = 100000;
  unsigned trials = 9;
  double tol = 0.01;  // final bracket width relative to its midpoint
  std::uint64_t seed = 1;
  // Initial bracket. When absent the lower end defaults to 0.5 and the upper
  // end is found by doubling until the supercritical phase is reached.
  std::optional<double> c_lo;
  std::optional<double> c_hi;
};

struct EmpiricalThreshold {
  double c_empirical = 0;
  double c_lo = 0;
  double c_hi = 0;
  std::size_t evaluations = 0;
};

// True when the median k-core size over the trials exceeds 0.01 * n.
bool is_supercritical(unsigned r, unsigned k, double c, std::uint64_t n, unsigned trials,
                      std::uint64_t seed);

// Median k-core size (vertices) over `trials` independent samples.
double median_core_size(unsigned r, unsigned k, double c, std::uint64_t n, unsigned trials,
                        std::uint64_t seed);

// Bisection on c between a subcritical and a supercritical endpoint. Throws
// ThresholdError when the endpoints do not separate the phases.
EmpiricalThreshold compute_threshold_empirical(unsigned r, unsigned k, const EmpiricalOptions& opt);

struct Coefficients {
  double a = 0;       // 1 / ln((r-1)(k-1))
  double a_star = 0;  // 1 / ln(k(r-1)/r)
};

// Natural logarithms. Throws std::domain_error for (r, k) = (2, 2) or r, k < 2.
Coefficients coefficients(unsigned r, unsigned k);

struct ThresholdResult {
  unsigned r = 0;
  unsigned k = 0;
  std::optional<AnalyticThreshold> analytic;
  std::optional<EmpiricalThreshold> empirical;
  Coefficients coeffs;
  DegreeMapping mapping = DegreeMapping::kFactorial;
  // Set once an empirical estimate has been compared against the analytic
  // value; false means c_analytic should be reported with a warning.
  bool mapping_validated = false;
};

// Compares the empirical estimate to c_analytic under the current mapping.
// Agreement within rel_tol validates the mapping; otherwise, if the estimate
// agrees with the other mapping, the mapping is switched and marked
// validated; otherwise it is left unvalidated.
void reconcile_mapping(ThresholdResult& result, double rel_tol = 0.05);

}  // namespace hgpeel
