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

#include "qsl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsl {

namespace {

Segment make_segment(double duration, const cmat& h) {
  if (!(duration > 0.0)) {
    throw DomainError("HamiltonianSchedule: segment duration must be > 0, got " +
                      std::to_string(duration));
  }
  require_hermitian(h, "HamiltonianSchedule");
  Segment seg;
  seg.duration = duration;
  seg.hamiltonian = 0.5 * (h + h.adjoint());
  seg.eig = hermitian_eig(seg.hamiltonian);
  seg.ground_energy = seg.eig.values(0);
  seg.hamiltonian_sq = seg.hamiltonian * seg.hamiltonian;
  return seg;
}

SpeedSample sample_at(double t, const cmat& rho, const Segment& seg,
                      int segment_index) {
  const double n = static_cast<double>(rho.rows());
  const cmat b = rho * seg.hamiltonian;  // rho_t H

  const double tr_rh = b.trace().real();
  const double tr_rh2 =
      rho.cwiseProduct(seg.hamiltonian_sq.conjugate()).sum().real();
  const double tr_r2h2 = b.squaredNorm();  // tr[rho^2 H^2] = ||rho H||_F^2
  const double tr_rhrh = b.cwiseProduct(b.transpose()).sum().real();
  const double numerator = std::max(tr_r2h2 - tr_rhrh, 0.0);
  const double pur = rho.squaredNorm();

  // tr[1/N^2] contributes 1/N to the q_theta denominator.
  const double radius = pur - 1.0 / n;
  if (radius < numerics().maximally_mixed_tol) {
    throw MaximallyMixed(
        "speed_samples: state is maximally mixed at t = " + std::to_string(t) +
        ", Q_Theta undefined");
  }

  SpeedSample s;
  s.t = t;
  s.segment = segment_index;
  s.q_theta = std::sqrt(2.0 * numerator / radius);
  s.q_phi = std::sqrt(numerator / pur);
  s.delta_e = std::sqrt(std::max(tr_rh2 - tr_rh * tr_rh, 0.0));
  s.mean_e = tr_rh - seg.ground_energy;
  return s;
}

// A bound x/d with the degenerate-denominator policy: a vanishing distance is
// 0 whatever the denominator, otherwise a denominator below tolerance flags
// the bound Unbounded instead of producing infinities.
BoundValue make_bound(double distance, double denominator) {
  const double tol = numerics().degenerate_denominator;
  if (denominator > tol) {
    return BoundValue{distance / denominator, false};
  }
  if (distance <= tol) {
    return BoundValue{0.0, false};
  }
  return BoundValue{0.0, true};
}

}  // namespace

HamiltonianSchedule HamiltonianSchedule::constant(const cmat& h,
                                                  double duration) {
  return piecewise({{duration, h}});
}

HamiltonianSchedule HamiltonianSchedule::piecewise(
    const std::vector<std::pair<double, cmat>>& pieces) {
  if (pieces.empty()) {
    throw DomainError("HamiltonianSchedule: at least one segment required");
  }
  HamiltonianSchedule sched;
  sched.dim_ = static_cast<int>(pieces.front().second.rows());
  for (const auto& [duration, h] : pieces) {
    if (h.rows() != sched.dim_ || h.cols() != sched.dim_) {
      throw DimensionMismatch(
          "HamiltonianSchedule: all segments must share the dimension");
    }
    sched.segments_.push_back(make_segment(duration, h));
    sched.duration_ += duration;
  }
  return sched;
}

EvolutionPath evolve(const DensityMatrix& rho0, const HamiltonianSchedule& sched,
                     int grid_points) {
  if (rho0.dim() != sched.dim()) {
    throw DimensionMismatch("evolve: state dimension " +
                            std::to_string(rho0.dim()) +
                            " vs schedule dimension " +
                            std::to_string(sched.dim()));
  }
  if (grid_points < 2) {
    throw DomainError("evolve: grid_points per segment must be >= 2, got " +
                      std::to_string(grid_points));
  }

  const int n = rho0.dim();
  const std::size_t total =
      sched.segments().size() * static_cast<std::size_t>(grid_points - 1) + 1;

  EvolutionPath path;
  path.times.reserve(total);
  path.states.reserve(total);
  path.unitaries.reserve(total);
  path.segment_spans.reserve(sched.segments().size());

  path.times.push_back(0.0);
  path.states.push_back(rho0);
  path.unitaries.push_back(cmat::Identity(n, n));

  double t_base = 0.0;
  for (std::size_t s = 0; s < sched.segments().size(); ++s) {
    const Segment& seg = sched.segments()[s];
    const std::size_t first = path.times.size() - 1;
    const cmat rho_start = path.states[first].matrix();
    const cmat u_start = path.unitaries[first];
    const double step = seg.duration / (grid_points - 1);

    for (int j = 1; j < grid_points; ++j) {
      // Endpoint hit exactly so segment boundaries line up.
      const double tau = (j == grid_points - 1) ? seg.duration : j * step;
      const cmat u_rel = hermitian_propagator(seg.eig, tau);
      cmat rho_t = u_rel * rho_start * u_rel.adjoint();
      rho_t = 0.5 * (rho_t + rho_t.adjoint());
      path.times.push_back(t_base + tau);
      path.states.push_back(DensityMatrix::unchecked(std::move(rho_t)));
      path.unitaries.push_back(u_rel * u_start);
    }
    path.segment_spans.emplace_back(first, path.times.size() - 1);
    t_base += seg.duration;
  }
  return path;
}

std::vector<SpeedSample> speed_samples(const EvolutionPath& path,
                                       const HamiltonianSchedule& sched) {
  if (path.segment_spans.size() != sched.segments().size()) {
    throw DimensionMismatch(
        "speed_samples: path and schedule have different segment counts");
  }
  if (!path.states.empty() && path.states.front().dim() != sched.dim()) {
    throw DimensionMismatch("speed_samples: state dimension " +
                            std::to_string(path.states.front().dim()) +
                            " vs schedule dimension " +
                            std::to_string(sched.dim()));
  }

  std::vector<SpeedSample> samples;
  for (std::size_t s = 0; s < sched.segments().size(); ++s) {
    const auto [first, last] = path.segment_spans[s];
    for (std::size_t k = first; k <= last; ++k) {
      samples.push_back(sample_at(path.times[k], path.states[k].matrix(),
                                  sched.segments()[s], static_cast<int>(s)));
    }
  }
  return samples;
}

SpeedAverages time_average(const std::vector<SpeedSample>& samples,
                           const HamiltonianSchedule& sched) {
  if (samples.size() < 2) {
    throw DomainError("time_average: at least two samples required");
  }
  double iq_theta = 0.0, iq_phi = 0.0, ide = 0.0, ie = 0.0;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const SpeedSample& a = samples[k];
    const SpeedSample& b = samples[k + 1];
    if (a.segment != b.segment) {
      continue;  // boundary between segments, no interval to integrate
    }
    const double dt = b.t - a.t;
    iq_theta += 0.5 * dt * (a.q_theta + b.q_theta);
    iq_phi += 0.5 * dt * (a.q_phi + b.q_phi);
    ide += 0.5 * dt * (a.delta_e + b.delta_e);
    ie += 0.5 * dt * (a.mean_e + b.mean_e);
  }
  const double t_total = sched.duration();
  return SpeedAverages{iq_theta / t_total, iq_phi / t_total, ide / t_total,
                       ie / t_total};
}

BoundReport bounds(const DensityMatrix& rho, const DensityMatrix& sigma,
                   const HamiltonianSchedule& sched, int grid_points) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("bounds: state dimensions " +
                            std::to_string(rho.dim()) + " vs " +
                            std::to_string(sigma.dim()));
  }

  const EvolutionPath path = evolve(rho, sched, grid_points);
  const SpeedAverages av = time_average(speed_samples(path, sched), sched);

  BoundReport report;
  report.dim = rho.dim();
  report.duration = sched.duration();
  report.averages = av;
  report.bures_distance = bures_angle(rho, sigma);
  // The Bures bound divides by the time-averaged energy standard deviation.
  // The mean-energy variant L/E is not a valid bound away from orthogonal
  // separations: mixed states with tr[rho H] close to the ground energy can
  // evolve a Bures distance larger than E*T (L/E > T), so min(E, deltaE)
  // would overshoot the actual evolution time.
  report.bures_denominator = av.delta_e;
  report.t_bures = make_bound(report.bures_distance, report.bures_denominator);

  report.pair_iso_spectral = iso_spectral(rho, sigma);
  if (report.pair_iso_spectral) {
    report.theta_distance = theta_angle(rho, sigma);
    report.phi_distance = phi_angle(rho, sigma);
    report.t_theta = make_bound(*report.theta_distance, av.q_theta);
    report.t_phi = make_bound(*report.phi_distance, av.q_phi);

    BoundValue unified;
    unified.unbounded = report.t_bures.unbounded ||
                        report.t_theta->unbounded || report.t_phi->unbounded;
    unified.value = std::max({report.t_bures.value, report.t_theta->value,
                              report.t_phi->value});
    report.t_unified = unified;
  }
  return report;
}

QubitBounds qubit_analytic_bounds(double theta, double lambda) {
  constexpr double half_pi = 1.5707963267948966;
  if (theta < -1e-12 || theta > half_pi + 1e-12) {
    throw DomainError("qubit_analytic_bounds: theta " + std::to_string(theta) +
                      " outside [0, pi/2]");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw DomainError("qubit_analytic_bounds: lambda " +
                      std::to_string(lambda) + " outside [0, 1]");
  }
  const double k = 1.0 - 2.0 * lambda;
  if (std::abs(k) < 1e-12) {
    throw DomainError(
        "qubit_analytic_bounds: lambda = 1/2 is the maximally mixed state");
  }
  theta = std::clamp(theta, 0.0, half_pi);
  const double k2 = k * k;
  const double c2 = std::cos(2.0 * theta);

  QubitBounds out;
  out.t_theta = theta;

  const double phi_dist =
      std::acos(std::sqrt(std::clamp((1.0 + k2 * c2) / (1.0 + k2), 0.0, 1.0)));
  const double q_phi = std::sqrt(2.0 * k2 / (1.0 + k2));
  out.t_phi = phi_dist / q_phi;

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double root = std::sqrt(std::max(1.0 - k2 * s * s, 0.0));
  const double f_plus =
      0.5 * std::sqrt(std::max(1.0 + k2 * c2 + 2.0 * k * c * root, 0.0));
  const double f_minus =
      0.5 * std::sqrt(std::max(1.0 + k2 * c2 - 2.0 * k * c * root, 0.0));
  out.t_bures = arccos_clamped(f_plus + f_minus);
  return out;
}

}  // namespace qsl
