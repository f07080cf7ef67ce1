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

#include "qsl/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace qsl {

namespace {

using steady_clock = std::chrono::steady_clock;

double seconds_since(steady_clock::time_point start) {
  return std::chrono::duration<double>(steady_clock::now() - start).count();
}

// Runs fn(i) for i in [0, count); each index owns its own RngStream, so the
// partition cannot change the results, only the wall time.  The first
// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < threads; ++t) {
    const int begin = static_cast<int>(static_cast<long long>(count) * t / threads);
    const int end =
        static_cast<int>(static_cast<long long>(count) * (t + 1) / threads);
    pool.emplace_back([begin, end, &fn, &failure, &failure_mutex] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) {
    std::rethrow_exception(failure);
  }
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

char argmax_region(double t_bures, double t_theta, double t_phi) {
  const double t_max = std::max(t_theta, t_phi);
  if (t_bures >= t_max) return 'L';
  return t_theta >= t_phi ? 'T' : 'P';
}

ExperimentRecord record_from_report(std::string experiment, int dim,
                                    const BoundReport& report) {
  ExperimentRecord rec;
  rec.experiment = std::move(experiment);
  rec.dim = dim;
  rec.t_bures = report.t_bures.value;
  rec.t_theta = report.t_theta ? report.t_theta->value : 0.0;
  rec.t_phi = report.t_phi ? report.t_phi->value : 0.0;
  const double t_max = std::max(rec.t_theta, rec.t_phi);
  rec.tightness = t_max > 0.0 ? 1.0 - rec.t_bures / t_max
                              : std::numeric_limits<double>::quiet_NaN();
  rec.region = argmax_region(rec.t_bures, rec.t_theta, rec.t_phi);
  return rec;
}

SweepSummary summarize(int dim, const std::vector<ExperimentRecord>& records,
                       double runtime_seconds) {
  SweepSummary sum;
  sum.dim = dim;
  sum.samples = static_cast<int>(records.size());
  sum.runtime_seconds = runtime_seconds;
  std::vector<double> tightness;
  tightness.reserve(records.size());
  int violations = 0;
  double max_excess = 0.0;
  for (const ExperimentRecord& rec : records) {
    tightness.push_back(rec.tightness);
    const double t_max = std::max(rec.t_theta, rec.t_phi);
    if (rec.t_bures - t_max > numerics().violation_threshold) {
      ++violations;
      max_excess = std::max(max_excess, rec.t_bures / t_max - 1.0);
    }
    sum.mean_tightness += rec.tightness;
  }
  sum.mean_tightness /= std::max<std::size_t>(records.size(), 1);
  sum.median_tightness = records.empty() ? 0.0 : median(std::move(tightness));
  sum.violation_fraction =
      records.empty() ? 0.0
                      : static_cast<double>(violations) / records.size();
  sum.max_relative_excess = max_excess;
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// Qubit curves

std::vector<double> qubit_lambda_grid(int count, double lo, double hi) {
  if (count < 1) {
    throw DomainError("qubit_lambda_grid: count must be >= 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = count > 1 ? (hi - lo) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) {
    double x = lo + i * step;
    if (std::abs(x - 0.5) < 1e-9) {
      // The maximally mixed eigenvalue is excluded; shift a quarter step so
      // the grid keeps its size.
      x -= step / 4.0;
    }
    grid[static_cast<std::size_t>(i)] = x;
  }
  return grid;
}

std::vector<double> qubit_theta_grid(int count, double lo, double hi) {
  if (count < 1) {
    throw DomainError("qubit_theta_grid: count must be >= 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = count > 1 ? (hi - lo) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + i * step;
  }
  return grid;
}

QubitCurvesResult exp_qubit_curves(const std::vector<double>& lambdas,
                                   const std::vector<double>& thetas,
                                   double phase, int grid_points,
                                   double agreement_tol) {
  cmat h(2, 2);
  h << 0.0, std::polar(1.0, phase), std::polar(1.0, -phase), 0.0;

  QubitCurvesResult result;
  result.records.reserve(lambdas.size() * thetas.size());
  result.all_agree = true;

  for (double lambda : lambdas) {
    cmat rho_m = cmat::Zero(2, 2);
    rho_m(0, 0) = lambda;
    rho_m(1, 1) = 1.0 - lambda;
    const DensityMatrix rho = DensityMatrix::from_matrix(rho_m);

    for (double theta : thetas) {
      QubitCurveRecord rec;
      rec.lambda = lambda;
      rec.theta = theta;
      const QubitBounds analytic = qubit_analytic_bounds(theta, lambda);
      rec.t_theta_analytic = analytic.t_theta;
      rec.t_phi_analytic = analytic.t_phi;
      rec.t_bures_analytic = analytic.t_bures;

      if (theta > 0.0) {
        // The transit time to the state at Fubini-Study angle theta equals
        // theta for this Hamiltonian, so sigma is the endpoint at T = theta.
        const HamiltonianSchedule sched = HamiltonianSchedule::constant(h, theta);
        const cmat u = hermitian_propagator(h, theta);
        cmat sig = u * rho.matrix() * u.adjoint();
        sig = 0.5 * (sig + sig.adjoint());
        const BoundReport report =
            bounds(rho, DensityMatrix::unchecked(std::move(sig)), sched,
                   grid_points);
        rec.t_bures = report.t_bures.value;
        rec.t_theta = report.t_theta->value;
        rec.t_phi = report.t_phi->value;
      }

      const double mismatch = std::max(
          {std::abs(rec.t_theta - rec.t_theta_analytic),
           std::abs(rec.t_phi - rec.t_phi_analytic),
           std::abs(rec.t_bures - rec.t_bures_analytic)});
      rec.agree = mismatch <= agreement_tol;
      result.all_agree = result.all_agree && rec.agree;
      result.max_mismatch = std::max(result.max_mismatch, mismatch);
      result.records.push_back(rec);
    }
  }

  // Verify the lambda -> 1 - lambda symmetry on every mirrored pair the grid
  // contains.
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
      if (std::abs(lambdas[i] + lambdas[j] - 1.0) > 1e-12) {
        continue;
      }
      for (std::size_t t = 0; t < thetas.size(); ++t) {
        const QubitCurveRecord& a = result.records[i * thetas.size() + t];
        const QubitCurveRecord& b = result.records[j * thetas.size() + t];
        result.symmetric = result.symmetric &&
                           std::abs(a.t_bures - b.t_bures) <= 1e-9 &&
                           std::abs(a.t_theta - b.t_theta) <= 1e-9 &&
                           std::abs(a.t_phi - b.t_phi) <= 1e-9;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Qutrit simplex

cmat qutrit_default_frame() {
  RngStream rng(42, 0);
  return haar_unitary(3, rng);
}

cmat qutrit_default_hamiltonian() {
  RngStream rng(42, 1);
  return random_hamiltonian(3, rng, 1.0);
}

QutritSimplexResult exp_qutrit_simplex(const cmat& eigvec_frame,
                                       const cmat& hamiltonian, int resolution,
                                       int grid_points) {
  if (eigvec_frame.rows() != 3 || eigvec_frame.cols() != 3 ||
      hamiltonian.rows() != 3 || hamiltonian.cols() != 3) {
    throw DimensionMismatch("exp_qutrit_simplex: frame and Hamiltonian must be 3x3");
  }
  if ((eigvec_frame.adjoint() * eigvec_frame - cmat::Identity(3, 3)).norm() >
      1e-9) {
    throw DomainError("exp_qutrit_simplex: eigenvector frame is not unitary");
  }
  require_hermitian(hamiltonian, "exp_qutrit_simplex");

  const HamiltonianSchedule sched =
      HamiltonianSchedule::constant(hamiltonian, 1.0);
  const cmat rotation = hermitian_propagator(hamiltonian, 1.0);

  QutritSimplexResult result;
  for (const SimplexPoint& p : qutrit_region1_grid(resolution)) {
    if (std::abs(p.l1 - 1.0 / 3.0) < 1e-12 &&
        std::abs(p.l2 - 1.0 / 3.0) < 1e-12) {
      ++result.skipped_center;  // Theta undefined at the maximally mixed state
      continue;
    }
    rvec lam(3);
    lam << p.l1, p.l2, p.l3;
    cmat rho_m = eigvec_frame * lam.asDiagonal() * eigvec_frame.adjoint();
    rho_m = 0.5 * (rho_m + rho_m.adjoint());
    const DensityMatrix rho = DensityMatrix::unchecked(std::move(rho_m));
    cmat sig_m = rotation * rho.matrix() * rotation.adjoint();
    sig_m = 0.5 * (sig_m + sig_m.adjoint());
    const DensityMatrix sigma = DensityMatrix::unchecked(std::move(sig_m));

    const BoundReport report = bounds(rho, sigma, sched, grid_points);
    ExperimentRecord rec = record_from_report("qutrit-simplex", 3, report);
    rec.p1 = p.l1;
    rec.p2 = p.l2;
    rec.p3 = p.l3;
    rec.purity = purity(rho);
    result.records.push_back(std::move(rec));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tightness sweep

TightnessSweepResult exp_tightness_sweep(const std::vector<int>& dims,
                                         int samples_per_dim,
                                         std::uint64_t seed, int threads,
                                         int grid_points) {
  if (samples_per_dim < 1) {
    throw DomainError("exp_tightness_sweep: samples must be >= 1");
  }
  TightnessSweepResult result;
  for (int dim : dims) {
    const auto start = steady_clock::now();
    std::vector<ExperimentRecord> records(
        static_cast<std::size_t>(samples_per_dim));
    parallel_for(samples_per_dim, threads, [&](int i) {
      RngStream rng(seed, (static_cast<std::uint64_t>(dim) << 32) |
                              static_cast<std::uint32_t>(i));
      const DensityMatrix rho = random_state_hs(dim, rng);
      const cmat h = random_hamiltonian(dim, rng, 1.0);
      const HamiltonianSchedule sched = HamiltonianSchedule::constant(h, 1.0);
      const cmat u = hermitian_propagator(h, 1.0);
      cmat sig_m = u * rho.matrix() * u.adjoint();
      sig_m = 0.5 * (sig_m + sig_m.adjoint());
      const BoundReport report = bounds(
          rho, DensityMatrix::unchecked(std::move(sig_m)), sched, grid_points);
      ExperimentRecord rec = record_from_report("tightness-sweep", dim, report);
      rec.p1 = i;
      rec.purity = purity(rho);
      records[static_cast<std::size_t>(i)] = std::move(rec);
    });
    result.summaries.push_back(
        summarize(dim, records, seconds_since(start)));
    result.records.insert(result.records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Purity correlation

PurityCorrelationResult exp_purity_correlation(int dim, int samples,
                                               std::uint64_t seed, int threads,
                                               int grid_points) {
  if (samples < 2) {
    throw DomainError("exp_purity_correlation: at least 2 samples required");
  }
  const auto start = steady_clock::now();
  RngStream state_rng(seed, 0);
  const std::vector<DensityMatrix> states =
      purity_stratified_states(dim, samples, state_rng);

  PurityCorrelationResult result;
  result.records.resize(static_cast<std::size_t>(samples));
  parallel_for(samples, threads, [&](int i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i) + 1);
    const DensityMatrix& rho = states[static_cast<std::size_t>(i)];
    const cmat h = random_hamiltonian(dim, rng, 1.0);
    const HamiltonianSchedule sched = HamiltonianSchedule::constant(h, 1.0);
    const cmat u = hermitian_propagator(h, 1.0);
    cmat sig_m = u * rho.matrix() * u.adjoint();
    sig_m = 0.5 * (sig_m + sig_m.adjoint());
    const BoundReport report = bounds(
        rho, DensityMatrix::unchecked(std::move(sig_m)), sched, grid_points);
    ExperimentRecord rec = record_from_report("purity-correlation", dim, report);
    rec.p1 = i;
    rec.purity = purity(rho);
    result.records[static_cast<std::size_t>(i)] = std::move(rec);
  });

  std::vector<double> tightness, mixedness;
  tightness.reserve(result.records.size());
  mixedness.reserve(result.records.size());
  const double lo = 1.0 / dim;
  for (const ExperimentRecord& rec : result.records) {
    tightness.push_back(rec.tightness);
    mixedness.push_back(1.0 - rec.purity);
    int bin = static_cast<int>((rec.purity - lo) / (1.0 - lo) * 10.0);
    bin = std::clamp(bin, 0, 9);
    result.bin_mean_tightness[static_cast<std::size_t>(bin)] += rec.tightness;
    ++result.bin_counts[static_cast<std::size_t>(bin)];
  }
  for (std::size_t b = 0; b < result.bin_counts.size(); ++b) {
    if (result.bin_counts[b] > 0) {
      result.bin_mean_tightness[b] /= result.bin_counts[b];
    }
  }
  result.summary = summarize(dim, result.records, seconds_since(start));
  result.summary.pearson_r = pearson(tightness, mixedness);
  return result;
}

// ---------------------------------------------------------------------------
// Complexity benchmark

namespace {

inline void do_not_optimize(double& value) {
  asm volatile("" : "+r,m"(value) : : "memory");
}

struct TimingStats {
  double mean_seconds = 0.0;
  double relative_se = 0.0;
};

// Median of means over fixed-size batches on the monotonic clock.
TimingStats time_callable(const std::function<double(int)>& call, int reps,
                          int batches) {
  std::vector<double> batch_means;
  batch_means.reserve(static_cast<std::size_t>(batches));
  double sink = 0.0;
  for (int b = 0; b < batches; ++b) {
    const auto start = steady_clock::now();
    for (int i = 0; i < reps; ++i) {
      sink += call(i);
    }
    batch_means.push_back(seconds_since(start) / reps);
  }
  do_not_optimize(sink);

  double mean = 0.0;
  for (double m : batch_means) mean += m;
  mean /= batches;
  double var = 0.0;
  for (double m : batch_means) var += (m - mean) * (m - mean);
  var /= std::max(batches - 1, 1);

  TimingStats stats;
  stats.mean_seconds = median(std::move(batch_means));
  stats.relative_se =
      stats.mean_seconds > 0.0
          ? std::sqrt(var / batches) / stats.mean_seconds
          : std::numeric_limits<double>::infinity();
  return stats;
}

TimingStats time_adaptive(const std::function<double(int)>& call,
                          double target_relative_se) {
  // Calibrate the batch size so one batch is comfortably above the clock
  // granularity, then grow it until the batch means stabilize.
  const auto probe_start = steady_clock::now();
  double sink = 0.0;
  constexpr int kProbe = 8;
  for (int i = 0; i < kProbe; ++i) sink += call(i);
  do_not_optimize(sink);
  const double per_call = std::max(seconds_since(probe_start) / kProbe, 1e-9);
  int reps = std::max(8, static_cast<int>(std::ceil(2e-4 / per_call)));

  constexpr int kBatches = 16;
  TimingStats stats;
  for (int attempt = 0; attempt < 6; ++attempt) {
    stats = time_callable(call, reps, kBatches);
    if (stats.relative_se <= target_relative_se) {
      break;
    }
    reps *= 2;
  }
  return stats;
}

}  // namespace

std::vector<BenchResult> exp_complexity_bench(const std::vector<int>& dims,
                                              std::uint64_t seed,
                                              double target_relative_se) {
  std::vector<BenchResult> results;
  results.reserve(dims.size());
  for (int dim : dims) {
    RngStream rng(seed, static_cast<std::uint64_t>(dim));
    // A small pool of iso-spectral pairs, cycled through so the cache state
    // does not pin a single input.
    constexpr int kPool = 8;
    std::vector<DensityMatrix> rhos, sigmas;
    for (int i = 0; i < kPool; ++i) {
      DensityMatrix rho = random_state_hs(dim, rng);
      const cmat u = haar_unitary(dim, rng);
      cmat sig = u * rho.matrix() * u.adjoint();
      sig = 0.5 * (sig + sig.adjoint());
      rhos.push_back(std::move(rho));
      sigmas.push_back(DensityMatrix::unchecked(std::move(sig)));
    }

    const auto bures_call = [&](int i) {
      const int j = i % kPool;
      return bures_angle(rhos[static_cast<std::size_t>(j)],
                         sigmas[static_cast<std::size_t>(j)]);
    };
    const auto theta_call = [&](int i) {
      const int j = i % kPool;
      return theta_angle(rhos[static_cast<std::size_t>(j)],
                         sigmas[static_cast<std::size_t>(j)]);
    };

    // Warm-up, excluded from timing.
    double sink = 0.0;
    for (int i = 0; i < kPool; ++i) sink += bures_call(i) + theta_call(i);
    do_not_optimize(sink);

    const TimingStats bures_stats = time_adaptive(bures_call, target_relative_se);
    const TimingStats theta_stats = time_adaptive(theta_call, target_relative_se);

    BenchResult res;
    res.dim = dim;
    res.bures_seconds = bures_stats.mean_seconds;
    res.theta_seconds = theta_stats.mean_seconds;
    res.eta = bures_stats.mean_seconds / theta_stats.mean_seconds;
    res.relative_se = std::max(bures_stats.relative_se, theta_stats.relative_se);
    results.push_back(res);
  }
  return results;
}

// ---------------------------------------------------------------------------

const char* region_name(char region) {
  switch (region) {
    case 'L':
      return "L";
    case 'T':
      return "Theta";
    case 'P':
      return "Phi";
    default:
      throw DomainError(std::string("region_name: unknown region '") + region +
                        "'");
  }
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw DimensionMismatch("pearson: input lengths " +
                            std::to_string(xs.size()) + " vs " +
                            std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw DegenerateData("pearson: at least two points required");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    throw DegenerateData("pearson: zero variance input");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace qsl
