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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsl/dynamics.hpp"
#include "qsl/sampling.hpp"

namespace qsl {

// Grid used by the sweep experiments.  For constant-Hamiltonian evolutions
// every integrand is an invariant of the flow, so the trapezoidal average is
// grid-independent; a modest grid keeps desk-scale sweeps fast.
inline constexpr int kExperimentGridPoints = 65;

// One row of a figure-style sweep.  The meaning of p1..p3 depends on the
// experiment: (lambda, theta, -) for qubit curves, (lambda1..lambda3) for the
// qutrit simplex, (sample index, -, -) for the Monte-Carlo sweeps.
struct ExperimentRecord {
  std::string experiment;
  int dim = 0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double purity = 0.0;
  double t_bures = 0.0;
  double t_theta = 0.0;
  double t_phi = 0.0;
  double tightness = 0.0;  // 1 - tL/max(tTheta, tPhi)
  char region = 'T';       // argmax bound: 'L', 'T' or 'P'
};

// Spelled-out region label for file output: "L", "Theta" or "Phi".
const char* region_name(char region);

struct SweepSummary {
  int dim = 0;
  int samples = 0;
  double violation_fraction = 0.0;   // tL > max(tTheta,tPhi) beyond threshold
  double max_relative_excess = 0.0;  // max over violations of tL/max - 1
  double mean_tightness = 0.0;
  double median_tightness = 0.0;
  std::optional<double> pearson_r;
  double runtime_seconds = 0.0;
};

// ---------------------------------------------------------------------------
// Qubit curves: analytic bounds against the full numeric pipeline on a
// (lambda, theta) grid, H = e^{i phase}|r1><r2| + h.c.

struct QubitCurveRecord {
  double lambda = 0.0;
  double theta = 0.0;
  double t_bures = 0.0, t_theta = 0.0, t_phi = 0.0;  // numeric pipeline
  double t_theta_analytic = 0.0, t_phi_analytic = 0.0, t_bures_analytic = 0.0;
  bool agree = false;  // analytic vs numeric within agreement_tol
};

struct QubitCurvesResult {
  std::vector<QubitCurveRecord> records;
  bool all_agree = false;
  double max_mismatch = 0.0;
  // Bounds at lambda and 1-lambda match to 1e-9 for every mirrored pair the
  // lambda grid contains (vacuously true without pairs).
  bool symmetric = true;
};

QubitCurvesResult exp_qubit_curves(const std::vector<double>& lambdas,
                                   const std::vector<double>& thetas,
                                   double phase = 0.0,
                                   int grid_points = kExperimentGridPoints,
                                   double agreement_tol = 1e-8);

// Uniform lambda grid of `count` points on [lo, hi]; a point colliding with
// the excluded value 1/2 is shifted a quarter step down so the grid size is
// preserved.
std::vector<double> qubit_lambda_grid(int count, double lo = 0.05,
                                      double hi = 0.95);
std::vector<double> qubit_theta_grid(int count, double lo = 0.1,
                                     double hi = 1.5707963267948966);

// ---------------------------------------------------------------------------
// Qutrit simplex: bounds over the fundamental spectral region with a fixed
// eigenvector frame, sigma = e^{-iH} rho e^{iH}.

struct QutritSimplexResult {
  std::vector<ExperimentRecord> records;  // p1..p3 = lambda1..lambda3
  int skipped_center = 0;                 // maximally mixed grid points
};

QutritSimplexResult exp_qutrit_simplex(const cmat& eigvec_frame,
                                       const cmat& hamiltonian, int resolution,
                                       int grid_points = kExperimentGridPoints);

// The documented default instance (fixed seeded draws, dimension 3).
cmat qutrit_default_frame();
cmat qutrit_default_hamiltonian();

// ---------------------------------------------------------------------------
// Tightness sweep: Hilbert-Schmidt states, unit-norm GUE Hamiltonians, T = 1,
// sigma = evolution endpoint.

struct TightnessSweepResult {
  std::vector<ExperimentRecord> records;  // p1 = sample index
  std::vector<SweepSummary> summaries;    // one per dimension
};

TightnessSweepResult exp_tightness_sweep(const std::vector<int>& dims,
                                         int samples_per_dim,
                                         std::uint64_t seed, int threads = 1,
                                         int grid_points = kExperimentGridPoints);

// ---------------------------------------------------------------------------
// Purity correlation: purity-stratified states, Pearson correlation between
// tightness and mixedness 1 - tr[rho^2].

struct PurityCorrelationResult {
  std::vector<ExperimentRecord> records;  // p1 = sample index
  SweepSummary summary;                   // pearson_r filled in
  std::array<double, 10> bin_mean_tightness{};  // 10 purity bins on [1/N, 1]
  std::array<int, 10> bin_counts{};
};

PurityCorrelationResult exp_purity_correlation(int dim, int samples,
                                               std::uint64_t seed,
                                               int threads = 1,
                                               int grid_points = kExperimentGridPoints);

// ---------------------------------------------------------------------------
// Complexity benchmark: wall time of bures_angle (eigendecomposition route)
// vs theta_angle (trace form) on identical iso-spectral pairs,
// eta = C(L)/C(Theta).  Median-of-means over batches on a monotonic clock;
// single-threaded.

struct BenchResult {
  int dim = 0;
  double bures_seconds = 0.0;   // mean time per bures_angle call
  double theta_seconds = 0.0;   // mean time per theta_angle call
  double eta = 0.0;             // bures_seconds / theta_seconds
  double relative_se = 0.0;     // worst relative standard error of the two
};

std::vector<BenchResult> exp_complexity_bench(const std::vector<int>& dims,
                                              std::uint64_t seed,
                                              double target_relative_se = 1e-2);

// ---------------------------------------------------------------------------

// Sample Pearson correlation coefficient; DegenerateData on zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace qsl
