/*
   Copyright 2026 The qsl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qsl/experiments.hpp"
#include "qsl/io.hpp"
#include "qsl/version.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  std::string out_dir = ".";
  int grid_points = qsl::kDefaultGridPoints;
  bool grid_points_set = false;
  double tol = 1e-8;
  bool plot = false;

  // Sweep experiments default to the coarser experiment grid (exact for
  // constant Hamiltonians) unless --grid-points was given explicitly.
  int sweep_grid_points() const {
    return grid_points_set ? grid_points : qsl::kExperimentGridPoints;
  }
};

int effective_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::filesystem::path out_path(const GlobalOptions& opts,
                               const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return std::filesystem::path(opts.out_dir) / name;
}

// "4" or "3..6" -> inclusive list of dimensions, with optional stride.
std::vector<int> parse_dim_range(const std::string& text, int step) {
  const auto dots = text.find("..");
  std::vector<int> dims;
  if (dots == std::string::npos) {
    dims.push_back(std::stoi(text));
    return dims;
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo < 2 || hi < lo) {
    throw qsl::DomainError("invalid dimension range: " + text);
  }
  for (int n = lo; n <= hi; n += step) {
    dims.push_back(n);
  }
  return dims;
}

std::string summary_line(const qsl::SweepSummary& s) {
  std::ostringstream os;
  os << "N=" << s.dim << " samples=" << s.samples
     << " violation_fraction=" << qsl::format_sig12(s.violation_fraction)
     << " max_relative_excess=" << qsl::format_sig12(s.max_relative_excess)
     << " mean_tightness=" << qsl::format_sig12(s.mean_tightness)
     << " median_tightness=" << qsl::format_sig12(s.median_tightness);
  if (s.pearson_r) {
    os << " pearson_r=" << qsl::format_sig12(*s.pearson_r);
  }
  os << " runtime_s=" << qsl::format_sig12(s.runtime_seconds);
  return os.str();
}

json summary_json(const qsl::SweepSummary& s) {
  json j;
  j["N"] = s.dim;
  j["samples"] = s.samples;
  j["violation_fraction"] = s.violation_fraction;
  j["max_relative_excess"] = s.max_relative_excess;
  j["mean_tightness"] = s.mean_tightness;
  j["median_tightness"] = s.median_tightness;
  j["pearson_r"] = s.pearson_r ? json(*s.pearson_r) : json();
  j["runtime_seconds"] = s.runtime_seconds;
  return j;
}

std::string svg_stamp(std::uint64_t seed, const json& config) {
  return "seed=" + std::to_string(seed) + " version=" + qsl::kVersion +
         " config_hash=" + qsl::fnv1a_hex(config.dump());
}

// ---------------------------------------------------------------------------

int run_bounds(const GlobalOptions& opts, const std::string& rho_path,
               const std::string& sigma_path, const std::string& h_path,
               double duration) {
  qsl::numerics().iso_spectral_tol = opts.tol;
  const qsl::DensityMatrix rho = qsl::load_state(rho_path);
  const qsl::DensityMatrix sigma = qsl::load_state(sigma_path);
  const qsl::cmat h = qsl::load_hermitian(h_path);
  const qsl::HamiltonianSchedule sched =
      qsl::HamiltonianSchedule::constant(h, duration);
  const qsl::BoundReport report =
      qsl::bounds(rho, sigma, sched, opts.grid_points);
  std::cout << qsl::bound_report_to_json(report).dump(2) << "\n";
  return report.pair_iso_spectral ? 0 : 2;
}

// ---------------------------------------------------------------------------

int run_experiment_qubit_curves(const GlobalOptions& opts, int lambdas,
                                int thetas, double phase) {
  const auto lambda_grid = qsl::qubit_lambda_grid(lambdas);
  const auto theta_grid = qsl::qubit_theta_grid(thetas);
  const qsl::QubitCurvesResult result = qsl::exp_qubit_curves(
      lambda_grid, theta_grid, phase, opts.grid_points);

  qsl::CsvWriter csv(out_path(opts, "qubit_curves.csv").string(),
                     {"lambda", "theta", "tL", "tTheta", "tPhi",
                      "tTheta_analytic", "tPhi_analytic", "tL_analytic",
                      "agree"});
  for (const qsl::QubitCurveRecord& r : result.records) {
    csv.add_row({qsl::format_sig12(r.lambda), qsl::format_sig12(r.theta),
                 qsl::format_sig12(r.t_bures), qsl::format_sig12(r.t_theta),
                 qsl::format_sig12(r.t_phi),
                 qsl::format_sig12(r.t_theta_analytic),
                 qsl::format_sig12(r.t_phi_analytic),
                 qsl::format_sig12(r.t_bures_analytic),
                 r.agree ? "true" : "false"});
  }
  csv.write();

  json config = {{"lambdas", lambdas},  {"thetas", thetas},
                 {"phase", phase},      {"grid_points", opts.grid_points},
                 {"seed", opts.seed},   {"plot", opts.plot}};
  json summary = {{"records", result.records.size()},
                  {"all_agree", result.all_agree},
                  {"max_mismatch", result.max_mismatch},
                  {"symmetric", result.symmetric}};
  qsl::write_sidecar(out_path(opts, "qubit_curves.meta.json").string(),
                     "experiment qubit-curves", opts.seed, config, summary);

  if (opts.plot) {
    // Bounds against lambda at the largest theta of the grid.
    qsl::SvgPlot plot;
    std::vector<double> xs, y_l, y_t, y_p;
    const double theta_star = theta_grid.back();
    for (const qsl::QubitCurveRecord& r : result.records) {
      if (r.theta == theta_star) {
        xs.push_back(r.lambda);
        y_l.push_back(r.t_bures);
        y_t.push_back(r.t_theta);
        y_p.push_back(r.t_phi);
      }
    }
    plot.add_polyline(xs, y_t, "#1f77b4");
    plot.add_polyline(xs, y_p, "#2ca02c");
    plot.add_polyline(xs, y_l, "#d62728");
    plot.set_labels("lambda", "bound");
    plot.write(out_path(opts, "qubit_curves.svg").string(),
               svg_stamp(opts.seed, config));
  }

  std::cout << "qubit-curves: " << result.records.size()
            << " records, all_agree="
            << (result.all_agree ? "true" : "false")
            << " symmetric=" << (result.symmetric ? "true" : "false")
            << " max_mismatch=" << qsl::format_sig12(result.max_mismatch)
            << "\n";
  return 0;
}

int run_experiment_qutrit_simplex(const GlobalOptions& opts, int resolution,
                                  const std::string& frame_path,
                                  const std::string& h_path) {
  const qsl::cmat frame = frame_path.empty() ? qsl::qutrit_default_frame()
                                             : qsl::load_matrix(frame_path);
  const qsl::cmat h = h_path.empty() ? qsl::qutrit_default_hamiltonian()
                                     : qsl::load_hermitian(h_path);
  const qsl::QutritSimplexResult result =
      qsl::exp_qutrit_simplex(frame, h, resolution, opts.grid_points);

  qsl::CsvWriter csv(out_path(opts, "qutrit_simplex.csv").string(),
                     {"lambda1", "lambda2", "lambda3", "purity", "tL", "tTheta",
                      "tPhi", "tightness", "region"});
  for (const qsl::ExperimentRecord& r : result.records) {
    csv.add_row({qsl::format_sig12(r.p1), qsl::format_sig12(r.p2),
                 qsl::format_sig12(r.p3), qsl::format_sig12(r.purity),
                 qsl::format_sig12(r.t_bures), qsl::format_sig12(r.t_theta),
                 qsl::format_sig12(r.t_phi), qsl::format_sig12(r.tightness),
                 qsl::region_name(r.region)});
  }
  csv.write();

  json config = {{"resolution", resolution},
                 {"frame", frame_path.empty() ? "default" : frame_path},
                 {"hamiltonian", h_path.empty() ? "default" : h_path},
                 {"grid_points", opts.grid_points},
                 {"seed", opts.seed},
                 {"plot", opts.plot}};
  int violations = 0;
  for (const qsl::ExperimentRecord& r : result.records) {
    if (r.t_bures - std::max(r.t_theta, r.t_phi) >
        qsl::numerics().violation_threshold) {
      ++violations;
    }
  }
  json summary = {{"records", result.records.size()},
                  {"skipped_center", result.skipped_center},
                  {"violations", violations}};
  qsl::write_sidecar(out_path(opts, "qutrit_simplex.meta.json").string(),
                     "experiment qutrit-simplex", opts.seed, config, summary);

  if (opts.plot) {
    qsl::SvgPlot plot;
    std::vector<double> xs_l, ys_l, xs_t, ys_t, xs_p, ys_p;
    for (const qsl::ExperimentRecord& r : result.records) {
      if (r.region == 'L') {
        xs_l.push_back(r.p1);
        ys_l.push_back(r.p2);
      } else if (r.region == 'T') {
        xs_t.push_back(r.p1);
        ys_t.push_back(r.p2);
      } else {
        xs_p.push_back(r.p1);
        ys_p.push_back(r.p2);
      }
    }
    plot.add_scatter(xs_t, ys_t, "#1f77b4", 2.5);
    plot.add_scatter(xs_p, ys_p, "#2ca02c", 2.5);
    plot.add_scatter(xs_l, ys_l, "#d62728", 2.5);
    plot.set_labels("lambda1", "lambda2");
    plot.write(out_path(opts, "qutrit_simplex.svg").string(),
               svg_stamp(opts.seed, config));
  }

  std::cout << "qutrit-simplex: " << result.records.size()
            << " records, skipped_center=" << result.skipped_center
            << " violations=" << violations << "\n";
  return 0;
}

int run_experiment_tightness(const GlobalOptions& opts,
                             const std::vector<int>& dims, int samples) {
  const qsl::TightnessSweepResult result =
      qsl::exp_tightness_sweep(dims, samples, opts.seed,
                               effective_threads(opts.threads),
                               opts.sweep_grid_points());

  qsl::CsvWriter csv(out_path(opts, "tightness_sweep.csv").string(),
                     {"N", "sample", "purity", "tL", "tTheta", "tPhi",
                      "tightness", "violation"});
  for (const qsl::ExperimentRecord& r : result.records) {
    const bool violation = r.t_bures - std::max(r.t_theta, r.t_phi) >
                           qsl::numerics().violation_threshold;
    csv.add_row({std::to_string(r.dim), qsl::format_sig12(r.p1),
                 qsl::format_sig12(r.purity), qsl::format_sig12(r.t_bures),
                 qsl::format_sig12(r.t_theta), qsl::format_sig12(r.t_phi),
                 qsl::format_sig12(r.tightness),
                 violation ? "true" : "false"});
  }
  csv.write();

  json config = {{"dims", dims},
                 {"samples", samples},
                 {"grid_points", opts.sweep_grid_points()},
                 {"seed", opts.seed},
                 {"plot", opts.plot}};
  json summaries = json::array();
  for (const qsl::SweepSummary& s : result.summaries) {
    summaries.push_back(summary_json(s));
    std::cout << summary_line(s) << "\n";
  }
  qsl::write_sidecar(out_path(opts, "tightness_sweep.meta.json").string(),
                     "experiment tightness-sweep", opts.seed, config,
                     summaries);

  if (opts.plot) {
    qsl::SvgPlot plot;
    std::vector<double> xs, ys;
    for (const qsl::ExperimentRecord& r : result.records) {
      xs.push_back(r.purity);
      ys.push_back(r.tightness);
    }
    plot.add_scatter(xs, ys, "#1f77b4", 1.0);
    plot.set_labels("purity", "tightness");
    plot.write(out_path(opts, "tightness_sweep.svg").string(),
               svg_stamp(opts.seed, config));
  }
  return 0;
}

int run_experiment_purity(const GlobalOptions& opts, int dim, int samples) {
  const qsl::PurityCorrelationResult result =
      qsl::exp_purity_correlation(dim, samples, opts.seed,
                                  effective_threads(opts.threads),
                                  opts.sweep_grid_points());

  qsl::CsvWriter csv(out_path(opts, "purity_correlation.csv").string(),
                     {"sample", "purity", "tL", "tTheta", "tPhi", "tightness"});
  for (const qsl::ExperimentRecord& r : result.records) {
    csv.add_row_numeric(
        {r.p1, r.purity, r.t_bures, r.t_theta, r.t_phi, r.tightness});
  }
  csv.write();

  json config = {{"N", dim},
                 {"samples", samples},
                 {"grid_points", opts.sweep_grid_points()},
                 {"seed", opts.seed},
                 {"plot", opts.plot}};
  json summary = summary_json(result.summary);
  summary["bin_mean_tightness"] = result.bin_mean_tightness;
  summary["bin_counts"] = result.bin_counts;
  qsl::write_sidecar(out_path(opts, "purity_correlation.meta.json").string(),
                     "experiment purity-correlation", opts.seed, config,
                     summary);
  std::cout << summary_line(result.summary) << "\n";

  if (opts.plot) {
    qsl::SvgPlot plot;
    std::vector<double> xs, ys;
    for (const qsl::ExperimentRecord& r : result.records) {
      xs.push_back(r.purity);
      ys.push_back(r.tightness);
    }
    plot.add_scatter(xs, ys, "#1f77b4", 1.0);
    plot.set_labels("purity", "tightness");
    plot.write(out_path(opts, "purity_correlation.svg").string(),
               svg_stamp(opts.seed, config));
  }
  return 0;
}

int run_experiment_complexity(const GlobalOptions& opts,
                              const std::vector<int>& dims, double target_se) {
  const std::vector<qsl::BenchResult> results =
      qsl::exp_complexity_bench(dims, opts.seed, target_se);

  qsl::CsvWriter csv(out_path(opts, "complexity_bench.csv").string(),
                     {"N", "cL_seconds", "cTheta_seconds", "eta", "rel_se"});
  for (const qsl::BenchResult& r : results) {
    csv.add_row({std::to_string(r.dim), qsl::format_sig12(r.bures_seconds),
                 qsl::format_sig12(r.theta_seconds), qsl::format_sig12(r.eta),
                 qsl::format_sig12(r.relative_se)});
    std::cout << "N=" << r.dim << " eta=" << qsl::format_sig12(r.eta)
              << " cL=" << qsl::format_sig12(r.bures_seconds)
              << "s cTheta=" << qsl::format_sig12(r.theta_seconds)
              << "s rel_se=" << qsl::format_sig12(r.relative_se) << "\n";
  }
  csv.write();

  json config = {{"dims", dims}, {"target_rel_se", target_se}, {"seed", opts.seed}};
  json summary = json::array();
  for (const qsl::BenchResult& r : results) {
    summary.push_back({{"N", r.dim},
                       {"eta", r.eta},
                       {"cL_seconds", r.bures_seconds},
                       {"cTheta_seconds", r.theta_seconds},
                       {"rel_se", r.relative_se}});
  }
  qsl::write_sidecar(out_path(opts, "complexity_bench.meta.json").string(),
                     "experiment complexity-bench", opts.seed, config, summary);

  if (opts.plot) {
    qsl::SvgPlot plot;
    std::vector<double> xs, ys;
    for (const qsl::BenchResult& r : results) {
      xs.push_back(r.dim);
      ys.push_back(r.eta);
    }
    plot.add_polyline(xs, ys, "#1f77b4");
    plot.set_labels("N", "eta");
    plot.write(out_path(opts, "complexity_bench.svg").string(),
               svg_stamp(opts.seed, config));
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_sample(const GlobalOptions& opts, const std::string& kind, int n,
               int count, const std::vector<double>& spectrum_values,
               std::optional<double> norm, const std::string& out_file) {
  std::vector<json> rows;
  rows.reserve(static_cast<std::size_t>(count));
  std::optional<qsl::Spectrum> spectrum;
  if (kind == "state-spectrum") {
    if (spectrum_values.empty()) {
      throw qsl::DomainError("sample state-spectrum requires --spectrum");
    }
    spectrum = qsl::Spectrum::from_values(spectrum_values);
    n = spectrum->dim();
  }

  for (int i = 0; i < count; ++i) {
    qsl::RngStream rng(opts.seed, static_cast<std::uint64_t>(i));
    if (kind == "unitary") {
      rows.push_back(qsl::matrix_to_json(qsl::haar_unitary(n, rng)));
    } else if (kind == "hamiltonian") {
      rows.push_back(qsl::matrix_to_json(qsl::random_hamiltonian(n, rng, norm)));
    } else if (kind == "state-hs") {
      rows.push_back(qsl::matrix_to_json(qsl::random_state_hs(n, rng).matrix()));
    } else if (kind == "state-spectrum") {
      rows.push_back(qsl::matrix_to_json(
          qsl::random_state_fixed_spectrum(*spectrum, rng).matrix()));
    } else {
      throw qsl::DomainError("unknown sample kind: " + kind);
    }
  }

  const std::string path =
      out_file.empty() ? out_path(opts, "samples.jsonl").string() : out_file;
  qsl::write_json_lines(rows, path);

  json config = {{"kind", kind}, {"n", n},       {"count", count},
                 {"seed", opts.seed}, {"norm", norm ? json(*norm) : json()},
                 {"spectrum", spectrum_values}};
  qsl::write_sidecar(path + ".meta.json", "sample " + kind, opts.seed, config,
                     json{{"rows", rows.size()}});
  std::cout << "wrote " << rows.size() << " draws to " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum speed limits for unitary evolution of mixed states"};
  app.set_version_flag("--version", qsl::kVersion);
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "RNG seed threaded into every sampler")
      ->capture_default_str();
  app.add_option("--threads", opts.threads,
                 "worker threads for experiments (0 = hardware)")
      ->capture_default_str();
  app.add_option("--out", opts.out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--grid-points", opts.grid_points,
                 "quadrature grid points per schedule segment")
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "iso-spectral comparison tolerance")
      ->capture_default_str();
  app.add_flag("--plot", opts.plot, "also emit a simple SVG plot");

  // bounds
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "compute all speed-limit bounds for one instance");
  std::string rho_path, sigma_path, h_path;
  double duration = 1.0;
  cmd_bounds->add_option("rho", rho_path, "initial state JSON file")->required();
  cmd_bounds->add_option("sigma", sigma_path, "target state JSON file")
      ->required();
  cmd_bounds->add_option("hamiltonian", h_path, "Hamiltonian JSON file")
      ->required();
  cmd_bounds->add_option("-T,--duration", duration, "evolution time")
      ->capture_default_str();

  // experiment
  auto* cmd_exp = app.add_subcommand("experiment", "run a study and write CSV");
  std::string exp_name;
  cmd_exp
      ->add_option("name", exp_name,
                   "one of: qubit-curves, qutrit-simplex, tightness-sweep, "
                   "purity-correlation, complexity-bench")
      ->required();
  int lambdas = 19, thetas = 16, resolution = 30, samples = 10000;
  double phase = 0.0, target_se = 1e-2;
  std::string dim_range = "3..6", frame_path, exp_h_path;
  int dim_step = 1, purity_dim = 3;
  cmd_exp->add_option("--lambdas", lambdas, "lambda grid size (qubit-curves)")
      ->capture_default_str();
  cmd_exp->add_option("--thetas", thetas, "theta grid size (qubit-curves)")
      ->capture_default_str();
  cmd_exp->add_option("--phase", phase, "Hamiltonian phase (qubit-curves)")
      ->capture_default_str();
  cmd_exp
      ->add_option("--resolution", resolution,
                   "simplex grid resolution (qutrit-simplex)")
      ->capture_default_str();
  cmd_exp->add_option("--frame", frame_path,
                      "eigenvector frame JSON (qutrit-simplex)");
  cmd_exp->add_option("--hamiltonian", exp_h_path,
                      "Hamiltonian JSON (qutrit-simplex)");
  cmd_exp->add_option("--n", dim_range, "dimension or range, e.g. 3..6")
      ->capture_default_str();
  cmd_exp->add_option("--n-step", dim_step, "stride for --n ranges")
      ->capture_default_str();
  cmd_exp->add_option("--samples", samples, "samples per dimension")
      ->capture_default_str();
  cmd_exp
      ->add_option("--target-se", target_se,
                   "relative standard error target (complexity-bench)")
      ->capture_default_str();

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "emit random draws as JSON lines");
  std::string kind, sample_out;
  int sample_n = 2, sample_count = 1;
  std::vector<double> spectrum_values;
  std::optional<double> norm;
  double norm_value = 0.0;
  cmd_sample
      ->add_option("kind", kind,
                   "one of: unitary, state-hs, state-spectrum, hamiltonian")
      ->required();
  cmd_sample->add_option("--n", sample_n, "dimension")->capture_default_str();
  cmd_sample->add_option("--count", sample_count, "number of draws")
      ->capture_default_str();
  cmd_sample->add_option("--spectrum", spectrum_values,
                         "eigenvalues for state-spectrum, e.g. 0.5,0.3,0.2")
      ->delimiter(',');
  auto* norm_opt = cmd_sample->add_option(
      "--norm", norm_value, "operator-norm rescale for hamiltonian draws");
  cmd_sample->add_option("--file", sample_out,
                         "output file (default <out>/samples.jsonl)");

  CLI11_PARSE(app, argc, argv);
  opts.grid_points_set = app.count("--grid-points") > 0;

  try {
    if (*cmd_bounds) {
      return run_bounds(opts, rho_path, sigma_path, h_path, duration);
    }
    if (*cmd_exp) {
      if (exp_name == "qubit-curves") {
        return run_experiment_qubit_curves(opts, lambdas, thetas, phase);
      }
      if (exp_name == "qutrit-simplex") {
        return run_experiment_qutrit_simplex(opts, resolution, frame_path,
                                             exp_h_path);
      }
      if (exp_name == "tightness-sweep") {
        return run_experiment_tightness(opts, parse_dim_range(dim_range, dim_step),
                                        samples);
      }
      if (exp_name == "purity-correlation") {
        purity_dim = parse_dim_range(dim_range, dim_step).front();
        return run_experiment_purity(opts, purity_dim, samples);
      }
      if (exp_name == "complexity-bench") {
        return run_experiment_complexity(
            opts, parse_dim_range(dim_range, dim_step), target_se);
      }
      std::cerr << "error: unknown experiment \"" << exp_name << "\"\n";
      return 1;
    }
    if (*cmd_sample) {
      if (norm_opt->count() > 0) {
        norm = norm_value;
      }
      return run_sample(opts, kind, sample_n, sample_count, spectrum_values,
                        norm, sample_out);
    }
  } catch (const qsl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
