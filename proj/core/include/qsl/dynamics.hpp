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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qsl/metrics.hpp"
#include "qsl/state.hpp"

namespace qsl {

// Default number of grid points per schedule segment.
inline constexpr int kDefaultGridPoints = 257;

// One piece of a piecewise-constant Hamiltonian schedule.  The
// eigendecomposition and H^2 are cached at construction; ground_energy is the
// smallest eigenvalue.
struct Segment {
  double duration = 0.0;
  cmat hamiltonian;
  double ground_energy = 0.0;
  EigenDecomposition eig;
  cmat hamiltonian_sq;
};

// A time-dependent Hermitian generator H_t, restricted to constant and
// piecewise-constant schedules; total duration is the sum of the segments.
class HamiltonianSchedule {
 public:
  static HamiltonianSchedule constant(const cmat& h, double duration);
  static HamiltonianSchedule piecewise(
      const std::vector<std::pair<double, cmat>>& pieces);

  int dim() const { return dim_; }
  double duration() const { return duration_; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  HamiltonianSchedule() = default;
  int dim_ = 0;
  double duration_ = 0.0;
  std::vector<Segment> segments_;
};

// Discretized trajectory rho_t = U_t rho U_t^dag on a grid that is uniform
// within each segment.  segment_spans holds the inclusive [first,last] index
// range of each segment; consecutive segments share their boundary index.
struct EvolutionPath {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<cmat> unitaries;  // cumulative U_{t_k}
  std::vector<std::pair<std::size_t, std::size_t>> segment_spans;

  const DensityMatrix& initial_state() const { return states.front(); }
  const DensityMatrix& final_state() const { return states.back(); }
};

// Instantaneous speed functionals at one grid point:
//   q_theta = sqrt(2 tr[rho^2 H^2 - (rho H)^2] / tr[rho^2 - 1/N^2])
//   q_phi   = sqrt(tr[rho^2 H^2 - (rho H)^2] / tr[rho^2])
//   delta_e = sqrt(tr[rho H^2] - tr[rho H]^2)
//   mean_e  = tr[rho H] - ground energy
struct SpeedSample {
  double t = 0.0;
  double q_theta = 0.0;
  double q_phi = 0.0;
  double delta_e = 0.0;
  double mean_e = 0.0;
  int segment = 0;
};

struct SpeedAverages {
  double q_theta = 0.0;
  double q_phi = 0.0;
  double delta_e = 0.0;
  double mean_e = 0.0;
};

// A bound value; `unbounded` is set instead of producing infinities when the
// denominator is degenerate (below numerics().degenerate_denominator).
struct BoundValue {
  double value = 0.0;
  bool unbounded = false;
};

// Everything bounds() knows about one instance.  theta/phi entries are absent
// when the pair is not iso-spectral (the Bures bound is still reported).
struct BoundReport {
  int dim = 0;
  double duration = 0.0;  // actual evolution time T

  double bures_distance = 0.0;            // L
  std::optional<double> theta_distance;   // Theta
  std::optional<double> phi_distance;     // Phi

  SpeedAverages averages;          // time-averaged Q_Theta, Q_Phi, deltaE, E
  double bures_denominator = 0.0;  // deltaE, the denominator of t_bures

  BoundValue t_bures;
  std::optional<BoundValue> t_theta;
  std::optional<BoundValue> t_phi;
  std::optional<BoundValue> t_unified;  // max of the three when all defined

  bool pair_iso_spectral = false;
};

// Exact propagation of rho0 under the schedule, grid_points per segment
// (>= 2, endpoints included).
EvolutionPath evolve(const DensityMatrix& rho0, const HamiltonianSchedule& sched,
                     int grid_points = kDefaultGridPoints);

// Evaluates the four integrands at every grid point of every segment; the
// shared boundary point of adjacent segments is sampled once per segment with
// that segment's Hamiltonian.
std::vector<SpeedSample> speed_samples(const EvolutionPath& path,
                                       const HamiltonianSchedule& sched);

// Composite trapezoidal average of the samples over [0,T].
SpeedAverages time_average(const std::vector<SpeedSample>& samples,
                           const HamiltonianSchedule& sched);

// Full pipeline: evolve, average the speeds, evaluate the three distances and
// the bounds tL = L/deltaE, tTheta = Theta/Q_Theta, tPhi = Phi/Q_Phi and
// their maximum.  sigma does not have to be the endpoint of the schedule.
BoundReport bounds(const DensityMatrix& rho, const DensityMatrix& sigma,
                   const HamiltonianSchedule& sched,
                   int grid_points = kDefaultGridPoints);

// Closed-form qubit bounds for rho = diag(lambda, 1-lambda) evolving under
// H = e^{i phase}|r1><r2| + h.c. toward the state at Fubini-Study angle
// theta in [0, pi/2].  Independent of the phase.  lambda = 1/2 is a
// DomainError (the maximally mixed state has no Bloch direction).
struct QubitBounds {
  double t_theta = 0.0;
  double t_phi = 0.0;
  double t_bures = 0.0;
};

QubitBounds qubit_analytic_bounds(double theta, double lambda);

}  // namespace qsl
