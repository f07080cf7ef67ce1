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

#include <cmath>

#include "helpers.hpp"
#include "qsl/metrics.hpp"

using namespace qsl;
using qsl_test::pure_state;
using qsl_test::random_unit_vector;

namespace {

DensityMatrix diag_state(double a, double b) {
  cmat m = cmat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix::from_matrix(m);
}

const DensityMatrix kRho = diag_state(0.25, 0.75);
const DensityMatrix kSigma = diag_state(0.75, 0.25);

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("root fidelity endpoints and the commuting formula") {
  CHECK(root_fidelity(kRho, kRho) == doctest::Approx(1.0).epsilon(1e-12));

  cvec e0 = cvec::Zero(2), e1 = cvec::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  CHECK(root_fidelity(pure_state(e0), pure_state(e1)) <= 1e-12);

  // Commuting states: F = sum_i sqrt(p_i q_i) = 2 sqrt(0.25 * 0.75).
  CHECK(root_fidelity(kRho, kSigma) ==
        doctest::Approx(0.8660254037844386).epsilon(1e-12));

  RngStream rng(31, 0);
  CHECK_THROWS_AS(root_fidelity(kRho, random_state_hs(3, rng)),
                  DimensionMismatch);
}

TEST_CASE("bures angle endpoints and the antipodal example") {
  CHECK(bures_angle(kRho, kRho) <= 1e-6);
  cvec e0 = cvec::Zero(2), e1 = cvec::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  CHECK(bures_angle(pure_state(e0), pure_state(e1)) ==
        doctest::Approx(M_PI / 2).epsilon(1e-12));
  CHECK(bures_angle(kRho, kSigma) ==
        doctest::Approx(0.5235987755982989).epsilon(1e-12));  // pi/6
}

TEST_CASE("theta angle endpoints and the antipodal example") {
  CHECK(theta_angle(kRho, kRho) <= 1e-7);
  // arccos[(0.375 - 0.5)/(0.625 - 0.5)] = arccos(-1) = pi
  CHECK(theta_angle(kRho, kSigma) == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("theta angle refuses the maximally mixed state") {
  const DensityMatrix mixed =
      DensityMatrix::from_matrix(cmat::Identity(2, 2) / 2.0);
  CHECK_THROWS_AS(theta_angle(mixed, mixed), MaximallyMixed);
}

TEST_CASE("theta and phi refuse non-iso-spectral pairs") {
  const DensityMatrix other = diag_state(0.2, 0.8);
  CHECK_THROWS_AS(theta_angle(kRho, other), NotIsoSpectral);
  CHECK_THROWS_AS(phi_angle(kRho, other), NotIsoSpectral);
}

TEST_CASE("phi angle endpoints and the antipodal example") {
  CHECK(phi_angle(kRho, kRho) <= 1e-7);
  cvec e0 = cvec::Zero(2), e1 = cvec::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  CHECK(phi_angle(pure_state(e0), pure_state(e1)) ==
        doctest::Approx(M_PI / 2).epsilon(1e-12));
  // arccos(sqrt(0.375/0.625))
  CHECK(phi_angle(kRho, kSigma) ==
        doctest::Approx(0.6847192030022828).epsilon(1e-12));
}

TEST_CASE("ordering at the antipodal qubit example") {
  const double theta = theta_angle(kRho, kSigma);
  const double phi = phi_angle(kRho, kSigma);
  const double bures = bures_angle(kRho, kSigma);
  CHECK(theta > phi);
  CHECK(phi > bures);
}

TEST_CASE("fubini-study distance basics") {
  cvec e0 = cvec::Zero(2), e1 = cvec::Zero(2);
  e0(0) = 1.0;
  e1(1) = 1.0;
  CHECK(fubini_study(e0, e0) <= 1e-7);
  CHECK(fubini_study(e0, e1) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  cvec tilted(2);
  tilted << std::cos(M_PI / 8), std::sin(M_PI / 8);
  CHECK(fubini_study(e0, tilted) == doctest::Approx(M_PI / 8).epsilon(1e-12));

  CHECK_THROWS_AS(fubini_study(e0, 2.0 * e1), NotNormalized);
}

TEST_CASE("pure-state reductions of phi and theta") {
  RngStream rng(32, 0);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const cvec psi = random_unit_vector(n, rng);
      const cvec phi_vec = random_unit_vector(n, rng);
      const double d = fubini_study(psi, phi_vec);
      const DensityMatrix rho = pure_state(psi);
      const DensityMatrix sig = pure_state(phi_vec);
      REQUIRE(phi_angle(rho, sig) == doctest::Approx(d).epsilon(1e-9));
      const double theta = theta_angle(rho, sig);
      if (n == 2) {
        REQUIRE(theta == doctest::Approx(2.0 * d).epsilon(1e-9));
      } else {
        // Above two dimensions Theta does not reduce to the Fubini-Study
        // distance; it follows the trace-form identity instead.
        const double expected = arccos_clamped(
            (std::cos(d) * std::cos(d) - 1.0 / n) / (1.0 - 1.0 / n));
        REQUIRE(theta == doctest::Approx(expected).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("metric axioms on iso-spectral triples") {
  RngStream rng(33, 0);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 4;
    const DensityMatrix rho = random_state_hs(n, rng);
    const cmat u1 = haar_unitary(n, rng);
    const cmat u2 = haar_unitary(n, rng);
    const DensityMatrix sig =
        DensityMatrix::unchecked(u1 * rho.matrix() * u1.adjoint());
    const DensityMatrix tau =
        DensityMatrix::unchecked(u2 * rho.matrix() * u2.adjoint());

    REQUIRE(theta_angle(rho, sig) ==
            doctest::Approx(theta_angle(sig, rho)).epsilon(1e-9));
    REQUIRE(phi_angle(rho, sig) ==
            doctest::Approx(phi_angle(sig, rho)).epsilon(1e-9));
    REQUIRE(theta_angle(rho, rho) <= 1e-7);
    REQUIRE(theta_angle(rho, sig) <=
            theta_angle(rho, tau) + theta_angle(tau, sig) + 1e-8);
    REQUIRE(phi_angle(rho, sig) <=
            phi_angle(rho, tau) + phi_angle(tau, sig) + 1e-8);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("distances are invariant under simultaneous conjugation") {
  RngStream rng(34, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const DensityMatrix rho = random_state_hs(n, rng);
    const cmat v = haar_unitary(n, rng);
    const DensityMatrix sig =
        DensityMatrix::unchecked(v * rho.matrix() * v.adjoint());
    const cmat u = haar_unitary(n, rng);
    const DensityMatrix rho_u =
        DensityMatrix::unchecked(u * rho.matrix() * u.adjoint());
    const DensityMatrix sig_u =
        DensityMatrix::unchecked(u * sig.matrix() * u.adjoint());
    REQUIRE(bures_angle(rho_u, sig_u) ==
            doctest::Approx(bures_angle(rho, sig)).epsilon(1e-9));
    REQUIRE(theta_angle(rho_u, sig_u) ==
            doctest::Approx(theta_angle(rho, sig)).epsilon(1e-9));
    REQUIRE(phi_angle(rho_u, sig_u) ==
            doctest::Approx(phi_angle(rho, sig)).epsilon(1e-9));
  }
}

TEST_CASE("arccos clamp policy") {
  CHECK(arccos_clamped(1.0 + 1e-9) == 0.0);
  CHECK(arccos_clamped(-1.0 - 1e-9) == doctest::Approx(M_PI));
  CHECK_THROWS_AS(arccos_clamped(1.1), DomainError);
}

TEST_CASE("the global numerics config is one knob for all modules") {
  const DensityMatrix a = diag_state(0.3, 0.7);
  const DensityMatrix b = diag_state(0.31, 0.69);
  CHECK_THROWS_AS(theta_angle(a, b), NotIsoSpectral);

  const double saved = numerics().iso_spectral_tol;
  numerics().iso_spectral_tol = 0.1;
  CHECK_NOTHROW(theta_angle(a, b));
  CHECK(iso_spectral(a, b));
  numerics().iso_spectral_tol = saved;
  CHECK_FALSE(iso_spectral(a, b));
}

}  // TEST_SUITE
