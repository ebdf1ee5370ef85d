// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Sweep CSVs are left in --out-dir for inspection.
//
//   acceptance [--out-dir DIR] [--only 1,2,...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hgpeel/density_oracle.hpp"
#include "hgpeel/experiments.hpp"
#include "hgpeel/peeling.hpp"
#include "hgpeel/random_models.hpp"
#include "hgpeel/thresholds.hpp"

using namespace hgpeel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Critical c for the instance family of criterion 1. (2, 2) has no interior
// minimum; its 2-core (the first cycle) appears at c = 1.
double critical_c(unsigned r, unsigned k) {
  if (r == 2 && k == 2) return 1.0;
  return compute_threshold_analytic(r, k).c_analytic;
}

struct OracleTally {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::size_t nonempty_cores = 0;
};

OracleTally run_order_invariance() {
  OracleTally tally;
  std::mt19937_64 rng(20240601);
  for (std::size_t i = 0; i < 500; ++i) {
    const unsigned r = 2 + static_cast<unsigned>(i % 3);
    const unsigned k = 2 + static_cast<unsigned>((i / 3) % 2);
    const double factor = (i / 6) % 2 == 0 ? 0.5 : 1.5;
    ModelParams p;
    p.r = r;
    p.n = 10 + rng() % 191;
    p.c = factor * critical_c(r, k);
    p.seed = mix_seed(0xACCE, i);
    const auto h = sample_binomial_hypergraph(p);
    const auto trace = parallel_peel(h, k);
    const auto seq = sequential_kcore(h, k);
    ++tally.instances;
    if (trace.core_vertices != seq.vertices || trace.core_edges != seq.edges) ++tally.mismatches;
    tally.nonempty_cores += !seq.vertices.empty();
    const auto report = contraction_check(trace, r, k);
    tally.rows += report.rows.size();
    tally.violations += report.violations;
  }
  return tally;
}

Outcome criterion3() {
  EmpiricalOptions opt;
  opt.n = 100000;
  opt.trials = 9;
  opt.tol = 0.01;
  opt.seed = 3;

  std::string detail;
  bool pass = true;

  const auto a23 = compute_threshold_analytic(2, 3);
  const auto e23 = compute_threshold_empirical(2, 3, opt);
  const double rel23 = std::abs(e23.c_empirical - a23.c_analytic) / a23.c_analytic;
  pass = pass && rel23 <= 0.05;
  detail += "(2,3) empirical " + fmt(e23.c_empirical) + " vs analytic " + fmt(a23.c_analytic) +
            " rel " + fmt(rel23, 2);

  ThresholdResult res;
  res.r = 3;
  res.k = 2;
  res.analytic = compute_threshold_analytic(3, 2);
  res.empirical = compute_threshold_empirical(3, 2, opt);
  const double mapped = res.analytic->c_analytic;
  const double rel_mapped = std::abs(res.empirical->c_empirical - mapped) / mapped;
  reconcile_mapping(res, 0.05);
  const bool ok32 = rel_mapped <= 0.05 ||
                    (res.mapping == DegreeMapping::kIdentity && res.mapping_validated);
  pass = pass && ok32;
  detail += "; (3,2) empirical " + fmt(res.empirical->c_empirical) + " vs 2!*lambda " +
            fmt(mapped) + " rel " + fmt(rel_mapped, 2) + ", mapping " +
            (res.mapping == DegreeMapping::kFactorial ? "factorial" : "identity") +
            (res.mapping_validated ? " (validated)" : " (unvalidated)");
  return {pass, detail};
}

SweepConfig growth_config(double c, std::size_t i_probe) {
  SweepConfig cfg;
  cfg.r = 3;
  cfg.k = 2;
  cfg.c = c;
  cfg.n_min = std::uint64_t{1} << 12;
  cfg.n_max = std::uint64_t{1} << 22;
  cfg.points = 11;
  cfg.trials = 20;
  cfg.master_seed = 2022;
  cfg.i_probe = i_probe;
  cfg.threads = 0;
  return cfg;
}

std::string csv_bytes(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_sweep_csv(out, records);
  return out.str();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double mean_at(const std::vector<SizeSummary>& summary, std::uint64_t n) {
  for (const auto& s : summary) {
    if (s.n == n) return s.mean_rounds;
  }
  return std::nan("");
}

Outcome criterion4(const std::vector<TrialRecord>& records) {
  const auto loglog = fit_growth(records, GrowthModel::kLogLog);
  const auto log = fit_growth(records, GrowthModel::kLog);
  const auto summary = summarize_by_n(records);
  const double a_star = coefficients(3, 2).a_star;
  const double first = summary.front().mean_rounds;
  const double last = summary.back().mean_rounds;
  const bool a = loglog.slope <= a_star + 0.5;
  const bool b = last - first <= 4.0;
  const bool c = loglog.residual_rms <= log.residual_rms;
  std::string detail = "(a) loglog slope " + fmt(loglog.slope) + " <= " + fmt(a_star + 0.5) +
                       (a ? " ok" : " FAIL") + "; (b) mean s " + fmt(first) + " -> " + fmt(last) +
                       " delta " + fmt(last - first) + (b ? " ok" : " FAIL") +
                       "; (c) rms loglog " + fmt(loglog.residual_rms) + " vs log " +
                       fmt(log.residual_rms) + (c ? " ok" : " FAIL");
  return {a && b && c, detail};
}

Outcome criterion5(const std::vector<TrialRecord>& records) {
  const auto fit = fit_growth(records, GrowthModel::kLog, 2);
  const auto summary = summarize_by_n(records);
  const double ratio = summary.back().mean_rounds / summary.front().mean_rounds;
  const bool slope_ok = fit.slope >= 0.2 && fit.correlation >= 0.95;
  const bool ratio_ok = ratio >= 1.6;
  std::string detail = "log slope " + fmt(fit.slope) + " corr " + fmt(fit.correlation) +
                       (slope_ok ? " ok" : " FAIL") + "; mean s " +
                       fmt(summary.front().mean_rounds) + " -> " + fmt(summary.back().mean_rounds) +
                       " ratio " + fmt(ratio) + (ratio_ok ? " ok" : " FAIL");
  return {slope_ok && ratio_ok, detail};
}

Outcome criterion6() {
  const std::uint64_t n = 30;
  const int seeds = 300;
  bool pass = true;
  std::string detail;
  for (std::size_t s = 3; s <= 6; ++s) {
    const auto t = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(s)));
    double sum = 0;
    double sumsq = 0;
    for (int i = 0; i < seeds; ++i) {
      ModelParams p;
      p.r = 2;
      p.n = n;
      p.c = 1.0;
      p.seed = mix_seed(0xD0C5 + s, static_cast<std::uint64_t>(i));
      const auto x = static_cast<double>(count_dense_subgraphs(sample_binomial_hypergraph(p), s, t));
      sum += x;
      sumsq += x * x;
    }
    const double mean = sum / seeds;
    const double var = std::max(0.0, (sumsq - seeds * mean * mean) / (seeds - 1));
    const double se = std::sqrt(var / seeds);
    const double bound = expected_count_bound(n, s, t, 1.0, 2);
    const bool ok = mean <= bound + 3 * se;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += "X_{" + std::to_string(s) + "," + std::to_string(t) + "} mean " + fmt(mean) +
              " se " + fmt(se, 2) + " bound " + fmt(bound) + (ok ? "" : " FAIL");
  }
  return {pass, detail};
}

std::string component_detail(const ComponentCheck& check) {
  double worst = 1.0;
  std::size_t largest = 0;
  for (const auto& row : check.per_n) {
    worst = std::min(worst, row.fraction_within);
    largest = std::max(largest, row.max_component);
  }
  return "worst fraction within " + fmt(worst) + ", largest component " + std::to_string(largest);
}

void report(int id, const Outcome& o, double secs, bool& all_pass) {
  all_pass = all_pass && o.pass;
  std::printf("CRITERION %d %s (%.1fs): %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out_dir = "acceptance_out";
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out-dir" && i + 1 < argc) {
      out_dir = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      for (std::string item; std::getline(list, item, ',');) only.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--out-dir DIR] [--only 1,2,...]\n";
      return 2;
    }
  }
  auto wanted = [&](int id) { return only.empty() || only.count(id) > 0; };
  fs::create_directories(out_dir);
  bool all_pass = true;

  try {
    if (wanted(1) || wanted(2)) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto tally = run_order_invariance();
      const double secs = seconds_since(t0);
      if (wanted(1)) {
        report(1,
               {tally.mismatches == 0 && secs < 60.0,
                std::to_string(tally.instances) + " instances, " + std::to_string(tally.mismatches) +
                    " core mismatches, " + std::to_string(tally.nonempty_cores) + " non-empty cores"},
               secs, all_pass);
      }
      if (wanted(2)) {
        report(2,
               {tally.violations == 0, std::to_string(tally.rows) + " rounds checked, " +
                                           std::to_string(tally.violations) + " violations"},
               secs, all_pass);
      }
    }

    if (wanted(3)) {
      const auto t0 = std::chrono::steady_clock::now();
      auto o = criterion3();
      const double secs = seconds_since(t0);
      o.pass = o.pass && secs <= 600;
      report(3, o, secs, all_pass);
    }

    const double c_hat = compute_threshold_analytic(3, 2).c_analytic;
    const fs::path sub_csv = out_dir / "sweep_subcritical.csv";
    const fs::path super_csv = out_dir / "sweep_supercritical.csv";
    std::vector<TrialRecord> sub;

    if (wanted(4) || wanted(7) || wanted(8)) {
      const auto t0 = std::chrono::steady_clock::now();
      sub = run_sweep(growth_config(0.8 * c_hat, 30));
      write_sweep_csv(sub_csv, sub);
      const double secs = seconds_since(t0);
      if (wanted(4)) {
        auto o = criterion4(read_sweep_csv(sub_csv));
        o.pass = o.pass && secs <= 1800;
        report(4, o, secs, all_pass);
      }
    }

    std::vector<TrialRecord> sup;
    if (wanted(5) || wanted(8)) {
      const auto t0 = std::chrono::steady_clock::now();
      sup = run_sweep(growth_config(1.25 * c_hat, 30));
      write_sweep_csv(super_csv, sup);
      const double secs = seconds_since(t0);
      if (wanted(5)) {
        auto o = criterion5(read_sweep_csv(super_csv));
        o.pass = o.pass && secs <= 1800;
        report(5, o, secs, all_pass);
      }
      if (!sub.empty()) {
        const double ratio = summarize_by_n(sup).back().mean_rounds /
                             summarize_by_n(sub).back().mean_rounds;
        std::printf("  info: mean s at n=2^22, supercritical / subcritical = %.3g\n", ratio);
      }
    }

    if (wanted(6)) {
      const auto t0 = std::chrono::steady_clock::now();
      auto o = criterion6();
      const double secs = seconds_since(t0);
      o.pass = o.pass && secs <= 600;
      report(6, o, secs, all_pass);
    }

    if (wanted(7)) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto check = component_growth_check(sub, 10.0, 0.95);
      report(7, {check.pass, "I_probe 30, C 10: " + component_detail(check)}, seconds_since(t0),
             all_pass);
      for (std::size_t probe : {std::size_t{10}, std::size_t{50}}) {
        const auto records = run_sweep(growth_config(0.8 * c_hat, probe));
        const auto other = component_growth_check(records, 10.0, 0.95);
        std::printf("  info: I_probe %zu: %s, %s\n", probe, other.pass ? "pass" : "fail",
                    component_detail(other).c_str());
      }
    }

    if (wanted(8)) {
      const auto t0 = std::chrono::steady_clock::now();
      const fs::path sub_again = out_dir / "sweep_subcritical_rerun.csv";
      const fs::path super_again = out_dir / "sweep_supercritical_rerun.csv";
      write_sweep_csv(sub_again, run_sweep(growth_config(0.8 * c_hat, 30)));
      auto single = growth_config(1.25 * c_hat, 30);
      single.threads = 1;
      write_sweep_csv(super_again, run_sweep(single));
      const bool same_sub = slurp(sub_csv) == slurp(sub_again);
      const bool same_super = slurp(super_csv) == slurp(super_again);
      const bool same_mem = csv_bytes(sub) == slurp(sub_csv);
      report(8,
             {same_sub && same_super && same_mem,
              std::string("subcritical ") + (same_sub ? "identical" : "DIFFERENT") +
                  ", supercritical (single-threaded rerun) " +
                  (same_super ? "identical" : "DIFFERENT")},
             seconds_since(t0), all_pass);
    }
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }

  std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
