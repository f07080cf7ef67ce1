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

#include "qsl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsl {

namespace {

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const char* what) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " +
                            std::to_string(rho.dim()) + " vs " +
                            std::to_string(sigma.dim()));
  }
}

// Theta and Phi are only distances between states of equal purity; this is
// the necessary condition checked here (O(N^2)).  Callers that already have
// the spectra perform the full iso-spectral check.
void require_same_purity(const DensityMatrix& rho, const DensityMatrix& sigma,
                         const char* what) {
  const double gap = std::abs(purity(rho) - purity(sigma));
  if (gap > numerics().iso_spectral_tol) {
    throw NotIsoSpectral(std::string(what) + ": purity gap " +
                         std::to_string(gap) +
                         " exceeds tolerance, states are not iso-spectral");
  }
}

}  // namespace

double arccos_clamped(double x, double lo, double hi) {
  const double slack = numerics().arccos_slack;
  if (x > hi + slack || x < lo - slack) {
    throw DomainError("arccos argument " + std::to_string(x) +
                      " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] beyond round-off slack");
  }
  return std::acos(std::clamp(x, lo, hi));
}

double root_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "root_fidelity");
  // tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the nuclear norm of
  // sqrt(rho) sqrt(sigma).  Summing singular values keeps round-off in the
  // null space linear instead of the sqrt(eps) blow-up of the direct
  // eigenvalue route on rank-deficient states.
  const cmat product = psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix());
  Eigen::JacobiSVD<cmat> svd(product);
  return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::acos(root_fidelity(rho, sigma));
}

double theta_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "theta_angle");
  require_same_purity(rho, sigma, "theta_angle");
  const int n = rho.dim();
  // Trace form arccos[(tr[rho sigma] - 1/N)/(tr[rho^2] - 1/N)], evaluated
  // cancellation-free: with the centered states A = rho - 1/N, B = sigma - 1/N
  // the same angle is tan(Theta/2) = ||A - B|| / ||A + B||, which stays
  // accurate at both ends of the arccos range.
  cmat a = rho.matrix();
  a.diagonal().array() -= 1.0 / n;
  if (a.squaredNorm() < numerics().maximally_mixed_tol) {
    throw MaximallyMixed(
        "theta_angle: state is maximally mixed, Bloch direction undefined");
  }
  cmat b = sigma.matrix();
  b.diagonal().array() -= 1.0 / n;
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

double phi_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "phi_angle");
  require_same_purity(rho, sigma, "phi_angle");
  // arccos(sqrt(tr[rho sigma]/tr[rho^2])) with the complement computed from
  // the Frobenius distance: tr[rho^2] - tr[rho sigma] = ||rho - sigma||^2 / 2
  // for equal purities, so tan(Phi) = ||rho - sigma|| / sqrt(2 tr[rho sigma]).
  const double overlap = state_overlap(rho, sigma);
  const double dist = (rho.matrix() - sigma.matrix()).norm();
  return std::atan2(dist / std::sqrt(2.0),
                    std::sqrt(std::max(overlap, 0.0)));
}

double fubini_study(const cvec& psi, const cvec& phi) {
  if (psi.size() != phi.size()) {
    throw DimensionMismatch("fubini_study: vector sizes " +
                            std::to_string(psi.size()) + " vs " +
                            std::to_string(phi.size()));
  }
  const double tol = numerics().norm_tol;
  if (std::abs(psi.norm() - 1.0) > tol || std::abs(phi.norm() - 1.0) > tol) {
    throw NotNormalized("fubini_study: inputs must be unit vectors");
  }
  return arccos_clamped(std::abs(psi.dot(phi)), 0.0, 1.0);
}

}  // namespace qsl
