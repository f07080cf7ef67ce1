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
#include "qsl/state.hpp"

using namespace qsl;
using qsl_test::max_abs_diff;

namespace {

DensityMatrix diag_state(double a, double b) {
  cmat m = cmat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix::from_matrix(m);
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("generator basis for N=2 is the Pauli set") {
  const GeneratorBasis& basis = GeneratorBasis::of(2);
  REQUIRE(basis.ops().size() == 3);
  cmat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, complex(0, -1), complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK(max_abs_diff(basis.ops()[0], sx) < 1e-15);
  CHECK(max_abs_diff(basis.ops()[1], sy) < 1e-15);
  CHECK(max_abs_diff(basis.ops()[2], sz) < 1e-15);
}

TEST_CASE("generator basis for N=3 matches the Gell-Mann set") {
  const GeneratorBasis& basis = GeneratorBasis::of(3);
  REQUIRE(basis.ops().size() == 8);
  // Sym(0,1) is lambda_1, antisym(0,1) is lambda_2, the diagonal pair are
  // lambda_3 and lambda_8.
  cmat l1 = cmat::Zero(3, 3), l2 = cmat::Zero(3, 3);
  l1(0, 1) = l1(1, 0) = 1.0;
  l2(0, 1) = complex(0, -1);
  l2(1, 0) = complex(0, 1);
  CHECK(max_abs_diff(basis.ops()[0], l1) < 1e-15);
  CHECK(max_abs_diff(basis.ops()[3], l2) < 1e-15);
  cmat l3 = cmat::Zero(3, 3), l8 = cmat::Zero(3, 3);
  l3(0, 0) = 1.0;
  l3(1, 1) = -1.0;
  const double s3 = 1.0 / std::sqrt(3.0);
  l8(0, 0) = s3;
  l8(1, 1) = s3;
  l8(2, 2) = -2.0 * s3;
  CHECK(max_abs_diff(basis.ops()[6], l3) < 1e-15);
  CHECK(max_abs_diff(basis.ops()[7], l8) < 1e-15);
}

TEST_CASE("generators are traceless and orthogonal for several N") {
  for (int n = 2; n <= 6; ++n) {
    const GeneratorBasis& basis = GeneratorBasis::of(n);
    REQUIRE(static_cast<int>(basis.ops().size()) == n * n - 1);
    for (std::size_t i = 0; i < basis.ops().size(); ++i) {
      REQUIRE(std::abs(basis.ops()[i].trace()) <= 1e-10);
      REQUIRE(hermiticity_error(basis.ops()[i]) <= 1e-15);
      for (std::size_t j = i; j < basis.ops().size(); ++j) {
        const complex inner = (basis.ops()[i] * basis.ops()[j]).trace();
        const double expected = i == j ? 2.0 : 0.0;
        REQUIRE(std::abs(inner - expected) <= 1e-9);
      }
    }
  }
}

TEST_CASE("generator basis rejects dimension below 2") {
  CHECK_THROWS_AS(GeneratorBasis::of(1), InvalidDimension);
}

TEST_CASE("to_bloch of the maximally mixed state vanishes") {
  for (int n : {2, 3, 5}) {
    const DensityMatrix rho =
        DensityMatrix::from_matrix(cmat::Identity(n, n) / n);
    CHECK(to_bloch(rho).norm() <= 1e-12);
  }
}

TEST_CASE("to_bloch of a diagonal qubit points along z") {
  // Direct trace against the Pauli basis: r_z = tr[diag(l, 1-l) sigma_z]
  // = 2l - 1, so lambda = 0.25 sits at -0.5 and its swap at +0.5.
  const BlochVector r = to_bloch(diag_state(0.25, 0.75));
  CHECK(std::abs(r.coords(0)) <= 1e-14);
  CHECK(std::abs(r.coords(1)) <= 1e-14);
  CHECK(r.coords(2) == doctest::Approx(-0.5).epsilon(1e-12));
  const BlochVector swapped = to_bloch(diag_state(0.75, 0.25));
  CHECK(swapped.coords(2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pure qubits sit on the Bloch sphere surface") {
  RngStream rng(21, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const cvec psi = qsl_test::random_unit_vector(2, rng);
    CHECK(to_bloch(qsl_test::pure_state(psi)).norm() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("from_bloch reconstructions") {
  BlochVector zero;
  zero.dim = 3;
  zero.coords = rvec::Zero(8);
  CHECK(max_abs_diff(from_bloch(zero).matrix(), cmat::Identity(3, 3) / 3.0) <
        1e-14);

  BlochVector north;
  north.dim = 2;
  north.coords = rvec::Zero(3);
  north.coords(2) = 1.0;
  cmat expected = cmat::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK(max_abs_diff(from_bloch(north).matrix(), expected) < 1e-12);
}

TEST_CASE("from_bloch rejects unit vectors that are not states for N=3") {
  // Along +lambda_8-ish diagonal direction the reconstruction picks up a
  // negative eigenvalue even though ||r|| = 1.
  BlochVector r;
  r.dim = 3;
  r.coords = rvec::Zero(8);
  r.coords(7) = 1.0;
  CHECK_THROWS_AS(from_bloch(r), NotAState);
}

TEST_CASE("bloch round-trip is the identity on random states") {
  RngStream rng(22, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    const DensityMatrix rho = random_state_hs(n, rng);
    const DensityMatrix back = from_bloch(to_bloch(rho));
    REQUIRE(max_abs_diff(back.matrix(), rho.matrix()) <= 1e-9);
  }
}

TEST_CASE("purity values") {
  CHECK(purity(DensityMatrix::from_matrix(cmat::Identity(4, 4) / 4.0)) ==
        doctest::Approx(0.25).epsilon(1e-13));
  RngStream rng(23, 0);
  const cvec psi = qsl_test::random_unit_vector(3, rng);
  CHECK(purity(qsl_test::pure_state(psi)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(diag_state(0.25, 0.75)) == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("iso_spectral detects unitary twins and spectral mismatches") {
  RngStream rng(24, 0);
  const DensityMatrix rho = random_state_hs(3, rng);
  const cmat u = haar_unitary(3, rng);
  const DensityMatrix twin =
      DensityMatrix::unchecked(u * rho.matrix() * u.adjoint());
  CHECK(iso_spectral(rho, twin));

  CHECK(iso_spectral(diag_state(0.3, 0.7), diag_state(0.7, 0.3)));
  CHECK_FALSE(iso_spectral(diag_state(0.3, 0.7), diag_state(0.2, 0.8)));
  CHECK_THROWS_AS(
      iso_spectral(rho, diag_state(0.3, 0.7)), DimensionMismatch);
}

TEST_CASE("spectrum type validates and orders") {
  const Spectrum s = Spectrum::from_values({0.2, 0.5, 0.3});
  CHECK(s.values()[0] == 0.5);
  CHECK(s.values()[2] == 0.2);
  CHECK_THROWS_AS(Spectrum::from_values({0.5, 0.4}), NotAState);
  CHECK_THROWS_AS(Spectrum::from_values({1.2, -0.2}), NotAState);
}

TEST_CASE("density matrix validation catches each invariant") {
  cmat bad(2, 2);
  bad << 0.5, 1.0, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), NotHermitian);

  cmat off_trace = 0.7 * cmat::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(off_trace), NotAState);

  cmat indefinite = cmat::Zero(2, 2);
  indefinite(0, 0) = 1.2;
  indefinite(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), NotAState);

  CHECK_THROWS_AS(DensityMatrix::from_matrix(cmat::Zero(2, 3)),
                  InvalidDimension);
}

TEST_CASE("overlap identity links purity and bloch vectors") {
  RngStream rng(25, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const DensityMatrix rho = random_state_hs(n, rng);
    const DensityMatrix sig = random_state_hs(n, rng);
    const BlochVector r = to_bloch(rho);
    const BlochVector s = to_bloch(sig);
    // tr[rho sigma] = (1 + (N-1) r.s)/N
    const double expected =
        (1.0 + (n - 1.0) * r.coords.dot(s.coords)) / n;
    REQUIRE(state_overlap(rho, sig) == doctest::Approx(expected).epsilon(1e-9));
    // purity = (1 + (N-1)||r||^2)/N
    REQUIRE(purity(rho) ==
            doctest::Approx((1.0 + (n - 1.0) * r.coords.squaredNorm()) / n)
                .epsilon(1e-9));
  }
}

TEST_CASE("iso-spectral states share their bloch norm") {
  RngStream rng(26, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const DensityMatrix rho = random_state_hs(n, rng);
    const cmat u = haar_unitary(n, rng);
    const DensityMatrix sig =
        DensityMatrix::unchecked(u * rho.matrix() * u.adjoint());
    REQUIRE(to_bloch(rho).norm() ==
            doctest::Approx(to_bloch(sig).norm()).epsilon(1e-9));
  }
}

}  // TEST_SUITE
