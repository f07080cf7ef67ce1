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

#include "qsl/state.hpp"

namespace qsl {

// Distances between density matrices.  All angles are returned in radians:
// bures_angle in [0, pi/2], theta_angle in [0, pi], phi_angle in [0, pi/2].
//
// theta_angle and phi_angle are defined only between states with the same
// spectrum.  They verify the necessary (and cheap) condition that both states
// have the same purity and throw NotIsoSpectral otherwise; full spectral
// checks are performed where eigendecompositions are available anyway, e.g.
// in dynamics::bounds and in the CLI front end.

// Uhlmann root fidelity F = tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0,1].
double root_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// L = arccos(F).  Defined for any pair of same-dimension states.
double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

// Theta = arccos[(tr[rho sigma] - 1/N)/(tr[rho^2] - 1/N)], the angle between
// the generalized Bloch vectors.  Throws MaximallyMixed when the Bloch vector
// of rho has no direction (tr[rho^2] - 1/N below tolerance).
double theta_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

// Phi = arccos(sqrt(tr[rho sigma]/tr[rho^2])); reduces to the Fubini-Study
// distance for pure states in any dimension.
double phi_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

// arccos|<psi|phi>| between unit vectors.
double fubini_study(const cvec& psi, const cvec& phi);

// arccos with the round-off policy used by all metrics: arguments beyond
// [lo,hi] by more than numerics().arccos_slack are a hard DomainError,
// anything less is clamped.
double arccos_clamped(double x, double lo = -1.0, double hi = 1.0);

}  // namespace qsl
