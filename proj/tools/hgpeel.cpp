// hgpeel: command-line front end.
//
//   hgpeel gen       --r R --n N --c C --seed S --out FILE.hg
//   hgpeel peel      --input FILE.hg --k K [--trace FILE.csv]
//   hgpeel threshold --r R --k K [--method analytic|empirical|both] [--tol T]
//                    [--n N --trials T2 --seed S]
//   hgpeel verify    --input FILE.hg --k K [--max-size M] [--s S --t T] [--c C]
//   hgpeel sweep     --r R --k K --c C --n-min A --n-max B --points P --trials T
//                    --seed S --i-probe I --out FILE.csv [--threads W]
//   hgpeel fit       --in FILE.csv --model loglog|log [--drop-smallest D]

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hgpeel/density_oracle.hpp"
#include "hgpeel/experiments.hpp"
#include "hgpeel/hg_io.hpp"
#include "hgpeel/kernels.hpp"
#include "hgpeel/peeling.hpp"
#include "hgpeel/random_models.hpp"
#include "hgpeel/thresholds.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace hgpeel;

namespace {

json rational_json(const Rational& q) {
  return {{"num", q.num}, {"den", q.den}, {"value", q.value()}};
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

int cmd_gen(unsigned r, std::uint64_t n, double c, std::uint64_t seed, const std::string& out) {
  ModelParams p;
  p.r = r;
  p.n = n;
  p.c = c;
  p.seed = seed;
  write_hg(out, sample_binomial_hypergraph(p));
  return 0;
}

int cmd_peel(const std::string& input, unsigned k, const std::string& trace_path) {
  const auto h = read_hg(input);
  const auto trace = parallel_peel(h, k);
  std::cout << "s=" << trace.s << " core_vertices=" << trace.core_vertices.size()
            << " core_edges=" << trace.core_edges.size() << '\n';
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + trace_path);
    write_trace_csv(out, trace);
  }
  return 0;
}

int cmd_threshold(unsigned r, unsigned k, const std::string& method, double tol,
                  const EmpiricalOptions& emp) {
  if (method != "analytic" && method != "empirical" && method != "both") {
    throw std::invalid_argument("--method must be analytic, empirical or both");
  }
  ThresholdResult res;
  res.r = r;
  res.k = k;
  res.coeffs = coefficients(r, k);
  if (method != "empirical") res.analytic = compute_threshold_analytic(r, k, tol);
  if (method != "analytic") res.empirical = compute_threshold_empirical(r, k, emp);
  reconcile_mapping(res);

  json j;
  j["r"] = r;
  j["k"] = k;
  j["a"] = res.coeffs.a;
  j["a_star"] = res.coeffs.a_star;
  j["x_star"] = res.analytic ? json(res.analytic->x_star) : json(nullptr);
  j["lambda_star"] = res.analytic ? json(res.analytic->lambda_star) : json(nullptr);
  j["c_analytic"] = res.analytic ? json(res.analytic->c_analytic) : json(nullptr);
  if (res.empirical) {
    j["c_empirical"] = res.empirical->c_empirical;
    j["c_empirical_interval"] = {res.empirical->c_lo, res.empirical->c_hi};
  } else {
    j["c_empirical"] = nullptr;
    j["c_empirical_interval"] = nullptr;
  }
  j["mapping"] = res.mapping == DegreeMapping::kFactorial ? "factorial" : "identity";
  j["mapping_validated"] = res.mapping_validated;
  if (res.analytic && !res.mapping_validated) {
    j["warning"] = "c_analytic uses an unvalidated degree-to-c mapping";
  }
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_verify(const std::string& input, unsigned k, std::size_t max_size, std::optional<std::size_t> s,
               std::optional<std::size_t> t, std::optional<double> c) {
  const auto h = read_hg(input);
  json j;

  json density;
  const auto densest = max_density_subgraph_bruteforce(h, std::min(max_size, h.num_vertices()));
  density["max_avg_degree"] = rational_json(densest.avg_degree);
  density["witness"] = densest.witness;
  density["witness_edges"] = densest.induced_edges;
  if (s && t) {
    density["s"] = *s;
    density["t"] = *t;
    density["exact_count"] = count_dense_subgraphs(h, *s, *t);
    // Without --c, use the maximum-likelihood density m / C(n, r) rescaled.
    double cc;
    if (c) {
      cc = *c;
    } else {
      const double slots = static_cast<double>(binomial(h.num_vertices(), h.r()));
      cc = slots > 0 ? static_cast<double>(h.num_edges()) / slots *
                           std::pow(static_cast<double>(h.num_vertices()), h.r() - 1.0)
                     : 0.0;
    }
    density["c"] = cc;
    if (*s >= 1 && *s <= h.num_vertices()) {
      density["bound"] = number_or_null(expected_count_bound(h.num_vertices(), *s, *t, cc, h.r()));
      density["bound_tight"] = number_or_null(
          expected_count_bound(h.num_vertices(), *s, *t, cc, h.r(), EdgeSlots::kTight));
    }
  }
  j["density"] = density;

  const auto trace = parallel_peel(h, k);
  const auto report = contraction_check(trace, h.r(), k);
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"round", row.round},
                    {"vertices_before", row.vertices_before},
                    {"edges_before", row.edges_before},
                    {"deg_ge_k", row.deg_ge_k},
                    {"rho", rational_json(row.rho)},
                    {"survivors_after", row.survivors_after},
                    {"markov_ok", row.markov_ok},
                    {"survivor_ok", row.survivor_ok}});
  }
  j["contraction"] = {{"k", k}, {"s", trace.s}, {"rows", rows}, {"violations", report.violations}};
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_fit(const std::string& in, const std::string& model, std::size_t drop) {
  const auto records = read_sweep_csv(in);
  const auto fit = fit_growth(records, parse_model(model), drop);
  json j = {{"model", model_name(fit.model)},
            {"slope", fit.slope},
            {"intercept", fit.intercept},
            {"residual_rms", fit.residual_rms},
            {"correlation", number_or_null(fit.correlation)},
            {"points", fit.points}};
  json per_n = json::array();
  for (const auto& s : summarize_by_n(records)) {
    per_n.push_back({{"n", s.n}, {"trials", s.trials}, {"mean_rounds", s.mean_rounds},
                     {"stderr_rounds", s.stderr_rounds}});
  }
  j["per_n"] = per_n;
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel peeling of random r-uniform hypergraphs"};
  app.require_subcommand(1);

  unsigned r = 2;
  unsigned k = 2;
  std::uint64_t n = 0;
  double c = 1.0;
  std::uint64_t seed = 1;
  std::string out;
  std::string input;

  auto* gen = app.add_subcommand("gen", "sample H_r(n, c/n^(r-1)) to a .hg file");
  gen->add_option("--r", r)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--c", c)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out)->required();

  std::string trace_path;
  auto* peel = app.add_subcommand("peel", "parallel peeling to the k-core");
  peel->add_option("--input", input)->required();
  peel->add_option("--k", k)->required();
  peel->add_option("--trace", trace_path);

  std::string method = "analytic";
  double tol = 1e-9;
  EmpiricalOptions emp;
  auto* thr = app.add_subcommand("threshold", "k-core emergence threshold and round coefficients");
  thr->add_option("--r", r)->required();
  thr->add_option("--k", k)->required();
  thr->add_option("--method", method);
  thr->add_option("--tol", tol, "analytic bracket width, or relative bisection width for empirical");
  thr->add_option("--n", emp.n);
  thr->add_option("--trials", emp.trials);
  thr->add_option("--seed", emp.seed);

  std::size_t max_size = 6;
  std::optional<std::size_t> s_opt;
  std::optional<std::size_t> t_opt;
  std::optional<double> c_opt;
  auto* verify = app.add_subcommand("verify", "density and contraction checks on one hypergraph");
  verify->add_option("--input", input)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--max-size", max_size);
  auto* s_flag = verify->add_option("--s", s_opt);
  auto* t_flag = verify->add_option("--t", t_opt);
  s_flag->needs(t_flag);
  t_flag->needs(s_flag);
  verify->add_option("--c", c_opt, "density constant for the first-moment bound");

  SweepConfig sc;
  auto* sweep = app.add_subcommand("sweep", "seeded sweep over a geometric n grid, CSV output");
  sweep->add_option("--r", sc.r)->required();
  sweep->add_option("--k", sc.k)->required();
  sweep->add_option("--c", sc.c)->required();
  sweep->add_option("--n-min", sc.n_min)->required();
  sweep->add_option("--n-max", sc.n_max)->required();
  sweep->add_option("--points", sc.points)->required();
  sweep->add_option("--trials", sc.trials)->required();
  sweep->add_option("--seed", sc.master_seed)->required();
  sweep->add_option("--i-probe", sc.i_probe)->required();
  sweep->add_option("--out", out)->required();
  sweep->add_option("--threads", sc.threads);

  std::string model;
  std::size_t drop = 0;
  auto* fit = app.add_subcommand("fit", "least-squares growth fit of mean rounds");
  fit->add_option("--in", input)->required();
  fit->add_option("--model", model)->required();
  fit->add_option("--drop-smallest", drop);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(r, n, c, seed, out);
    if (*peel) return cmd_peel(input, k, trace_path);
    if (*thr) {
      // --tol applies to the bisection when one runs; the analytic
      // refinement then uses its default width.
      if (method != "analytic") emp.tol = thr->count("--tol") ? tol : 0.01;
      return cmd_threshold(r, k, method, method == "analytic" ? tol : 1e-9, emp);
    }
    if (*verify) return cmd_verify(input, k, max_size, s_opt, t_opt, c_opt);
    if (*sweep) {
      write_sweep_csv(out, run_sweep(sc));
      return 0;
    }
    if (*fit) return cmd_fit(input, model, drop);
  } catch (const std::exception& e) {
    std::cerr << "hgpeel: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
