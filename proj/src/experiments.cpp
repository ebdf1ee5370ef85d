#include "hgpeel/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "hgpeel/peeling.hpp"

namespace hgpeel {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": bad field '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::uint64_t> geometric_grid(std::uint64_t n_min, std::uint64_t n_max,
                                          std::size_t points) {
  if (n_min < 10) throw std::invalid_argument("n_min must be >= 10");
  if (points < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (n_max <= n_min) throw std::invalid_argument("n_max must exceed n_min");
  std::vector<std::uint64_t> grid(points);
  const double ratio = std::log(static_cast<double>(n_max) / static_cast<double>(n_min));
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = static_cast<std::uint64_t>(std::llround(static_cast<double>(n_min) * std::exp(ratio * t)));
  }
  grid.front() = n_min;
  grid.back() = n_max;
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t trial) noexcept {
  return mix_seed(mix_seed(master, n), trial);
}

TrialRecord run_trial(const ModelParams& params, std::size_t i_probe) {
  if (!params.k) throw ParameterError("run_trial: k must be set");
  const auto h = sample_binomial_hypergraph(params);
  const auto trace = parallel_peel(h, *params.k);

  TrialRecord rec;
  rec.r = params.r;
  rec.k = *params.k;
  rec.c = params.c;
  rec.n = params.n;
  rec.seed = params.seed;
  rec.rounds = trace.s;
  rec.core_vertices = trace.core_vertices.size();
  rec.core_edges = trace.core_edges.size();
  rec.max_component_after_I = largest_component_after(h, trace, i_probe);
  rec.removed_per_round.reserve(trace.rounds.size());
  for (const auto& round : trace.rounds) rec.removed_per_round.push_back(round.removed_vertices.size());
  return rec;
}

std::vector<TrialRecord> run_sweep(const SweepConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be >= 1");
  const auto grid = geometric_grid(config.n_min, config.n_max, config.points);

  std::vector<ModelParams> jobs;
  for (std::uint64_t n : grid) {
    for (unsigned t = 0; t < config.trials; ++t) {
      ModelParams p;
      p.r = config.r;
      p.k = config.k;
      p.c = config.c;
      p.n = n;
      p.seed = trial_seed(config.master_seed, n, t);
      jobs.push_back(p);
    }
  }
  validate_experiment_params(jobs.front());

  std::vector<TrialRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        records[i] = run_trial(jobs[i], config.i_probe);
        records[i].trial = i % config.trials;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  std::string buf = std::string(kSweepCsvHeader) + "\n";
  for (const auto& rec : records) {
    buf += std::to_string(rec.r) + ',' + std::to_string(rec.k) + ',' + format_double(rec.c) + ',' +
           std::to_string(rec.n) + ',' + std::to_string(rec.trial) + ',' + std::to_string(rec.seed) +
           ',' + std::to_string(rec.rounds) + ',' + std::to_string(rec.core_vertices) + ',' +
           std::to_string(rec.core_edges) + ',' + std::to_string(rec.max_component_after_I) + '\n';
  }
  buf += "#done\n";
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_sweep_csv(out, records);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<TrialRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw std::runtime_error("sweep csv: missing or unexpected header");
  }
  ++line_no;
  std::vector<TrialRecord> records;
  bool done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == "#done") done = true;
      continue;
    }
    if (done) throw std::runtime_error("sweep csv: data after #done footer");
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 10) {
      throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": expected 10 fields");
    }
    TrialRecord rec;
    rec.r = parse_field<unsigned>(f[0], line_no);
    rec.k = parse_field<unsigned>(f[1], line_no);
    rec.c = parse_field<double>(f[2], line_no);
    rec.n = parse_field<std::uint64_t>(f[3], line_no);
    rec.trial = parse_field<std::uint64_t>(f[4], line_no);
    rec.seed = parse_field<std::uint64_t>(f[5], line_no);
    rec.rounds = parse_field<std::size_t>(f[6], line_no);
    rec.core_vertices = parse_field<std::size_t>(f[7], line_no);
    rec.core_edges = parse_field<std::size_t>(f[8], line_no);
    rec.max_component_after_I = parse_field<std::size_t>(f[9], line_no);
    records.push_back(std::move(rec));
  }
  if (!done) throw std::runtime_error("sweep csv: no #done footer, file is incomplete");
  return records;
}

std::vector<TrialRecord> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_sweep_csv(in);
}

std::vector<SizeSummary> summarize_by_n(const std::vector<TrialRecord>& records) {
  std::map<std::uint64_t, std::vector<double>> by_n;
  for (const auto& rec : records) by_n[rec.n].push_back(static_cast<double>(rec.rounds));
  std::vector<SizeSummary> out;
  for (const auto& [n, values] : by_n) {
    SizeSummary s;
    s.n = n;
    s.trials = values.size();
    double sum = 0;
    for (double v : values) sum += v;
    s.mean_rounds = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
      double ss = 0;
      for (double v : values) ss += (v - s.mean_rounds) * (v - s.mean_rounds);
      const double var = ss / static_cast<double>(values.size() - 1);
      s.stderr_rounds = std::sqrt(var / static_cast<double>(values.size()));
    }
    out.push_back(s);
  }
  return out;
}

const char* model_name(GrowthModel model) noexcept {
  return model == GrowthModel::kLogLog ? "loglog" : "log";
}

GrowthModel parse_model(const std::string& name) {
  if (name == "loglog") return GrowthModel::kLogLog;
  if (name == "log") return GrowthModel::kLog;
  throw std::invalid_argument("unknown growth model '" + name + "' (expected loglog or log)");
}

FitResult fit_growth(const std::vector<TrialRecord>& records, GrowthModel model,
                     std::size_t drop_smallest) {
  auto summary = summarize_by_n(records);
  if (drop_smallest >= summary.size()) throw FitError("nothing left after dropping smallest n");
  summary.erase(summary.begin(), summary.begin() + static_cast<std::ptrdiff_t>(drop_smallest));
  if (summary.size() < 3) throw FitError("fit needs at least 3 distinct n");

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& s : summary) {
    const double ln_n = std::log(static_cast<double>(s.n));
    if (model == GrowthModel::kLogLog) {
      if (s.n < 16) throw FitError("loglog fit requires n >= 16");
      xs.push_back(std::log(ln_n));
    } else {
      xs.push_back(ln_n);
    }
    ys.push_back(s.mean_rounds);
  }

  const double m = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0;
  double sxy = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (!(sxx > 0)) throw FitError("degenerate design: all x values coincide");

  FitResult fit;
  fit.model = model;
  fit.points = xs.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += res * res;
  }
  fit.residual_rms = std::sqrt(rss / m);
  fit.correlation = syy > 0 ? sxy / std::sqrt(sxx * syy) : std::numeric_limits<double>::quiet_NaN();
  return fit;
}

ComponentCheck component_growth_check(const std::vector<TrialRecord>& records, double c_const,
                                      double required_fraction) {
  std::map<std::uint64_t, std::vector<std::size_t>> by_n;
  for (const auto& rec : records) by_n[rec.n].push_back(rec.max_component_after_I);
  ComponentCheck check;
  for (const auto& [n, sizes] : by_n) {
    ComponentCheck::PerSize row;
    row.n = n;
    row.limit = c_const * std::log(static_cast<double>(n));
    std::size_t within = 0;
    for (std::size_t s : sizes) {
      row.max_component = std::max(row.max_component, s);
      within += static_cast<double>(s) <= row.limit;
    }
    row.fraction_within = static_cast<double>(within) / static_cast<double>(sizes.size());
    check.pass = check.pass && row.fraction_within >= required_fraction;
    check.per_n.push_back(row);
  }
  return check;
}

}  // namespace hgpeel
