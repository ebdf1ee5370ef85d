#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgpeel/random_models.hpp"

namespace hgpeel {

struct SweepConfig {
  unsigned r = 3;
  unsigned k = 2;
  double c = 1.0;
  std::uint64_t n_min = 1u << 12;
  std::uint64_t n_max = 1u << 22;
  std::size_t points = 11;
  unsigned trials = 20;
  std::uint64_t master_seed = 1;
  std::size_t i_probe = 30;
  // Worker threads; 0 means std::thread::hardware_concurrency(). Output does
  // not depend on this value.
  unsigned threads = 0;
};

struct TrialRecord {
  unsigned r = 0;
  unsigned k = 0;
  double c = 0;
  std::uint64_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  std::size_t core_vertices = 0;
  std::size_t core_edges = 0;
  std::size_t max_component_after_I = 0;
  std::vector<std::size_t> removed_per_round;  // not serialized to CSV
};

// Geometric grid n_min .. n_max with `points` entries, rounded to integers.
// Throws std::invalid_argument unless n_min >= 10, points >= 3, n_min < n_max.
std::vector<std::uint64_t> geometric_grid(std::uint64_t n_min, std::uint64_t n_max,
                                          std::size_t points);

// Seed of trial `trial` at size n: mix_seed(mix_seed(master, n), trial).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial) noexcept;

// Sample, peel to the k-core, and measure the largest component left after
// i_probe rounds. params.k must be set.
TrialRecord run_trial(const ModelParams& params, std::size_t i_probe);

// All trials of the sweep, ordered by (n, trial) regardless of scheduling.
std::vector<TrialRecord> run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "r,k,c,n,trial,seed,rounds,core_vertices,core_edges,max_component_after_I";

// Header, one row per record, then the "#done" footer.
void write_sweep_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<TrialRecord>& records);

// Throws std::runtime_error on a malformed file or a missing "#done" footer.
std::vector<TrialRecord> read_sweep_csv(std::istream& in);
std::vector<TrialRecord> read_sweep_csv(const std::filesystem::path& path);

struct SizeSummary {
  std::uint64_t n = 0;
  std::size_t trials = 0;
  double mean_rounds = 0;
  double stderr_rounds = 0;
};

// Per-n mean and standard error of the round count, ascending in n.
std::vector<SizeSummary> summarize_by_n(const std::vector<TrialRecord>& records);

enum class GrowthModel { kLogLog, kLog };

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FitResult {
  GrowthModel model = GrowthModel::kLogLog;
  double slope = 0;
  double intercept = 0;
  double residual_rms = 0;
  double correlation = 0;  // NaN when the mean round count is constant
  std::size_t points = 0;
};

const char* model_name(GrowthModel model) noexcept;
GrowthModel parse_model(const std::string& name);

// Least squares of mean s(n) on x = ln ln n (kLogLog) or x = ln n (kLog).
// The `drop_smallest` smallest n values are excluded first. Throws FitError
// with fewer than 3 distinct n, with n < 16 under kLogLog, or when the design
// is degenerate.
FitResult fit_growth(const std::vector<TrialRecord>& records, GrowthModel model,
                     std::size_t drop_smallest = 0);

struct ComponentCheck {
  struct PerSize {
    std::uint64_t n = 0;
    std::size_t max_component = 0;
    double fraction_within = 0;
    double limit = 0;  // C_const * ln n
  };
  bool pass = true;
  std::vector<PerSize> per_n;
};

// Passes iff, at every n, at least `required_fraction` of the trials have
// max_component_after_I <= c_const * ln n.
ComponentCheck component_growth_check(const std::vector<TrialRecord>& records, double c_const,
                                      double required_fraction = 0.95);

}  // namespace hgpeel
