#include "hgpeel/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hgpeel/peeling.hpp"
#include "hgpeel/random_models.hpp"

namespace hgpeel {

namespace {

void require_valid_pair(unsigned r, unsigned k) {
  if (r < 2 || k < 2) throw std::domain_error("need r >= 2 and k >= 2");
  if (r == 2 && k == 2) throw std::domain_error("(r, k) = (2, 2) is excluded");
}

double factorial(unsigned m) {
  double f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

double degree_to_c(double lambda, unsigned r, DegreeMapping mapping) {
  return mapping == DegreeMapping::kFactorial ? lambda * factorial(r - 1) : lambda;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  std::vector<double> xs(points);
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) xs[i] = lo * std::exp(step * static_cast<double>(i));
  xs.back() = hi;
  return xs;
}

}  // namespace

double poisson_tail(double x, unsigned j) {
  if (j == 0) return 1.0;
  if (x <= 0.0) return 0.0;
  const double log_x = std::log(x);
  auto term = [&](unsigned i) { return std::exp(-x + i * log_x - std::lgamma(i + 1.0)); };

  if (static_cast<double>(j) <= x) {
    // Lower tail P(X < j) is the smaller piece; sum it downward from j - 1.
    double sum = 0;
    double t = term(j - 1);
    for (unsigned i = j; i-- > 0;) {
      sum += t;
      if (i == 0) break;
      t *= static_cast<double>(i) / x;
      if (t < sum * 1e-18) break;
    }
    return std::max(0.0, 1.0 - sum);
  }
  // Upper tail summed directly; terms decrease once i > x.
  double sum = 0;
  double t = term(j);
  for (unsigned i = j; t > 0.0; ++i) {
    sum += t;
    t *= x / static_cast<double>(i + 1);
    if (t < sum * 1e-18) break;
  }
  return std::min(1.0, sum);
}

double threshold_objective(double x, unsigned r, unsigned k) {
  if (!(x > 0.0)) throw std::domain_error("threshold_objective: x must be > 0");
  const double tail = poisson_tail(x, k - 1);
  if (tail <= 0.0) return std::numeric_limits<double>::infinity();
  return x / std::pow(tail, static_cast<double>(r - 1));
}

double grid_minimum(unsigned r, unsigned k, double lo, double hi, std::size_t points) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : log_grid(lo, hi, points)) best = std::min(best, threshold_objective(x, r, k));
  return best;
}

AnalyticThreshold compute_threshold_analytic(unsigned r, unsigned k, double tol,
                                             DegreeMapping mapping) {
  if (r < 2 || k < 2) throw std::domain_error("need r >= 2 and k >= 2");
  const auto xs = log_grid(1e-3, 50.0, 1000);
  std::size_t best = 0;
  double best_f = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = threshold_objective(xs[i], r, k);
    if (f < best_f) {
      best_f = f;
      best = i;
    }
  }
  if (best == 0 || best + 1 == xs.size()) {
    throw ThresholdError("no interior minimum of the threshold objective for r=" +
                         std::to_string(r) + ", k=" + std::to_string(k));
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double a = xs[best - 1];
  double b = xs[best + 1];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = threshold_objective(c, r, k);
  double fd = threshold_objective(d, r, k);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = threshold_objective(c, r, k);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = threshold_objective(d, r, k);
    }
  }
  AnalyticThreshold out;
  out.x_star = 0.5 * (a + b);
  out.lambda_star = threshold_objective(out.x_star, r, k);
  out.c_analytic = degree_to_c(out.lambda_star, r, mapping);
  return out;
}

double median_core_size(unsigned r, unsigned k, double c, std::uint64_t n, unsigned trials,
                        std::uint64_t seed) {
  std::vector<double> sizes;
  sizes.reserve(trials);
  for (unsigned t = 0; t < trials; ++t) {
    ModelParams params;
    params.r = r;
    params.k = k;
    params.c = c;
    params.n = n;
    params.seed = mix_seed(seed, t);
    const auto h = sample_binomial_hypergraph(params);
    sizes.push_back(static_cast<double>(sequential_kcore(h, k).vertices.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  if (sizes.empty()) return 0;
  const std::size_t mid = sizes.size() / 2;
  return sizes.size() % 2 ? sizes[mid] : 0.5 * (sizes[mid - 1] + sizes[mid]);
}

bool is_supercritical(unsigned r, unsigned k, double c, std::uint64_t n, unsigned trials,
                      std::uint64_t seed) {
  return median_core_size(r, k, c, n, trials, seed) > 0.01 * static_cast<double>(n);
}

EmpiricalThreshold compute_threshold_empirical(unsigned r, unsigned k, const EmpiricalOptions& opt) {
  require_valid_pair(r, k);
  if (opt.trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("tol must be > 0");

  EmpiricalThreshold out;
  // Each evaluation gets its own seed stream so results do not depend on the
  // path bisection takes through earlier candidates.
  auto classify = [&](double c) {
    const std::uint64_t seed = mix_seed(opt.seed, out.evaluations++);
    return is_supercritical(r, k, c, opt.n, opt.trials, seed);
  };

  double lo = opt.c_lo.value_or(0.5);
  if (classify(lo)) {
    throw ThresholdError("lower bracket c=" + std::to_string(lo) + " is already supercritical");
  }
  double hi;
  if (opt.c_hi) {
    hi = *opt.c_hi;
    if (!classify(hi)) {
      throw ThresholdError("upper bracket c=" + std::to_string(hi) + " is not supercritical");
    }
  } else {
    hi = 2 * lo;
    for (int doublings = 0;; ++doublings) {
      if (classify(hi)) break;
      if (doublings == 16) throw ThresholdError("no supercritical c found while doubling");
      lo = hi;
      hi *= 2;
    }
  }

  while (hi - lo > opt.tol * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (classify(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.c_lo = lo;
  out.c_hi = hi;
  out.c_empirical = 0.5 * (lo + hi);
  return out;
}

Coefficients coefficients(unsigned r, unsigned k) {
  require_valid_pair(r, k);
  const double rr = r;
  const double kk = k;
  return {1.0 / std::log((rr - 1) * (kk - 1)), 1.0 / std::log(kk * (rr - 1) / rr)};
}

void reconcile_mapping(ThresholdResult& result, double rel_tol) {
  if (!result.analytic || !result.empirical) return;
  const double emp = result.empirical->c_empirical;
  auto agrees = [&](DegreeMapping m) {
    const double c = degree_to_c(result.analytic->lambda_star, result.r, m);
    return std::abs(emp - c) <= rel_tol * c;
  };
  if (agrees(result.mapping)) {
    result.mapping_validated = true;
    return;
  }
  const auto other = result.mapping == DegreeMapping::kFactorial ? DegreeMapping::kIdentity
                                                                 : DegreeMapping::kFactorial;
  if (agrees(other)) {
    result.mapping = other;
    result.analytic->c_analytic = degree_to_c(result.analytic->lambda_star, result.r, other);
    result.mapping_validated = true;
    return;
  }
  result.mapping_validated = false;
}

}  // namespace hgpeel
