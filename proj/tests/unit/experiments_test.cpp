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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "qsl/experiments.hpp"

using namespace qsl;

TEST_SUITE("experiments") {

TEST_CASE("pearson on simple data") {
  CHECK(pearson({1, 2, 3}, {3, 5, 7}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pearson({1, 2, 3}, {-1, -2, -3}) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pearson({1, 2, 3}, {1, 3, 2}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(pearson({1, 2}, {1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(pearson({1, 1, 1}, {1, 2, 3}), DegenerateData);
  CHECK_THROWS_AS(pearson({1}, {2}), DegenerateData);
}

TEST_CASE("lambda grid excludes the maximally mixed eigenvalue") {
  for (int count : {4, 10, 19, 21}) {
    const std::vector<double> grid = qubit_lambda_grid(count);
    REQUIRE(static_cast<int>(grid.size()) == count);
    for (double x : grid) {
      REQUIRE(std::abs(x - 0.5) > 1e-10);
      REQUIRE(x > 0.0);
      REQUIRE(x < 1.0);
    }
  }
}

TEST_CASE("qubit curves agree with the analytic forms") {
  const QubitCurvesResult result = exp_qubit_curves(
      {0.2, 0.8}, {0.3, 1.0, M_PI / 2}, 0.4, 33);
  REQUIRE(result.records.size() == 6);
  CHECK(result.all_agree);
  CHECK(result.max_mismatch <= 1e-8);
  for (const QubitCurveRecord& r : result.records) {
    // attainability: tTheta ties the Fubini-Study angle exactly
    REQUIRE(r.t_theta == doctest::Approx(r.theta).epsilon(1e-9));
    REQUIRE(r.t_theta >= r.t_phi - 1e-9);
    REQUIRE(r.t_phi >= r.t_bures - 1e-9);
  }
  // symmetry under lambda -> 1 - lambda, also verified by the experiment
  CHECK(result.symmetric);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(result.records[i].t_bures ==
            doctest::Approx(result.records[i + 3].t_bures).epsilon(1e-9));
    REQUIRE(result.records[i].t_phi ==
            doctest::Approx(result.records[i + 3].t_phi).epsilon(1e-9));
  }
}

TEST_CASE("region labels spell out the winning bound") {
  CHECK(std::string(region_name('L')) == "L");
  CHECK(std::string(region_name('T')) == "Theta");
  CHECK(std::string(region_name('P')) == "Phi");
  CHECK_THROWS_AS(region_name('x'), DomainError);
}

TEST_CASE("qutrit simplex experiment on a coarse grid") {
  const QutritSimplexResult result = exp_qutrit_simplex(
      qutrit_default_frame(), qutrit_default_hamiltonian(), 6, 33);
  REQUIRE(result.skipped_center == 1);
  REQUIRE(result.records.size() == 7 * 8 / 2 - 1);
  for (const ExperimentRecord& r : result.records) {
    REQUIRE(std::max(r.t_theta, r.t_phi) >= r.t_bures - 1e-9);
    REQUIRE((r.region == 'L' || r.region == 'T' || r.region == 'P'));
  }
}

TEST_CASE("qutrit simplex experiment validates its inputs") {
  const cmat h = qutrit_default_hamiltonian();
  CHECK_THROWS_AS(exp_qutrit_simplex(2.0 * qutrit_default_frame(), h, 4, 17),
                  DomainError);
  cmat skew = cmat::Zero(3, 3);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(exp_qutrit_simplex(qutrit_default_frame(), skew, 4, 17),
                  NotHermitian);
  CHECK_THROWS_AS(
      exp_qutrit_simplex(qutrit_default_frame(), cmat::Zero(2, 2), 4, 17),
      DimensionMismatch);
}

TEST_CASE("tightness sweep summaries and determinism") {
  const TightnessSweepResult a = exp_tightness_sweep({3}, 300, 5, 2, 33);
  const TightnessSweepResult b = exp_tightness_sweep({3}, 300, 5, 1, 33);
  REQUIRE(a.records.size() == 300);
  REQUIRE(a.summaries.size() == 1);
  CHECK(a.summaries[0].dim == 3);
  CHECK(a.summaries[0].samples == 300);
  CHECK(a.summaries[0].violation_fraction <= 0.02);
  CHECK(a.summaries[0].mean_tightness > 0.0);
  // thread count must not change a single record
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    REQUIRE(a.records[i].t_bures == b.records[i].t_bures);
    REQUIRE(a.records[i].tightness == b.records[i].tightness);
  }
  // bounds stay below the actual evolution time
  for (const ExperimentRecord& r : a.records) {
    REQUIRE(r.t_bures <= 1.0 + 1e-6);
    REQUIRE(r.t_theta <= 1.0 + 1e-6);
    REQUIRE(r.t_phi <= 1.0 + 1e-6);
  }
}

TEST_CASE("purity correlation trends positive") {
  const PurityCorrelationResult result =
      exp_purity_correlation(3, 500, 11, 2, 33);
  REQUIRE(result.records.size() == 500);
  REQUIRE(result.summary.pearson_r.has_value());
  CHECK(*result.summary.pearson_r > 0.3);
  int total = 0;
  for (int c : result.bin_counts) total += c;
  CHECK(total == 500);
  // mixed states show a bigger gap than nearly pure ones
  CHECK(result.bin_mean_tightness[0] > result.bin_mean_tightness[9]);
}

TEST_CASE("pure-spectrum control batch has no phi-vs-bures gap") {
  // Rank-one spectrum: tPhi and tL both reduce to the Mandelstam-Tamm bound,
  // so the control batch's tightness gap collapses.
  RngStream rng(19, 0);
  const Spectrum pure = Spectrum::from_values({1.0, 0.0, 0.0});
  std::vector<double> gaps;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_state_fixed_spectrum(pure, rng);
    const cmat h = random_hamiltonian(3, rng, 1.0);
    const HamiltonianSchedule sched = HamiltonianSchedule::constant(h, 1.0);
    const cmat u = hermitian_propagator(h, 1.0);
    cmat sig = u * rho.matrix() * u.adjoint();
    const BoundReport rep = bounds(
        rho, DensityMatrix::unchecked(0.5 * (sig + sig.adjoint())), sched, 33);
    gaps.push_back(std::abs(1.0 - rep.t_bures.value / rep.t_phi->value));
  }
  std::sort(gaps.begin(), gaps.end());
  CHECK(gaps[gaps.size() / 2] <= 1e-6);
}

TEST_CASE("complexity benchmark favors the trace form") {
  const std::vector<BenchResult> results = exp_complexity_bench({8, 16}, 3, 0.05);
  REQUIRE(results.size() == 2);
  for (const BenchResult& r : results) {
    REQUIRE(r.bures_seconds > 0.0);
    REQUIRE(r.theta_seconds > 0.0);
    REQUIRE(r.eta >= 1.0);
  }
}

}  // TEST_SUITE
