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

#include "qsl/linalg.hpp"

#include <cmath>
#include <string>

namespace qsl {

NumericsConfig& numerics() {
  static NumericsConfig config;
  return config;
}

double EigenDecomposition::reconstruction_error(const cmat& m) const {
  cmat rebuilt = vectors * values.asDiagonal() * vectors.adjoint();
  return (rebuilt - m).norm();
}

double hermiticity_error(const cmat& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const cmat& m, double tol) {
  return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

void require_hermitian(const cmat& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw NotHermitian(std::string(what) + ": matrix is not square (" +
                       std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ")");
  }
  const double err = hermiticity_error(m);
  if (err > numerics().hermiticity_tol) {
    throw NotHermitian(std::string(what) + ": max |M - M^dag| = " +
                       std::to_string(err) + " exceeds tolerance");
  }
}

EigenDecomposition hermitian_eig(const cmat& m) {
  require_hermitian(m, "hermitian_eig");
  // Work on the hermitized matrix so inputs at the edge of tolerance still
  // get an exactly real spectrum.
  cmat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<cmat> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian_eig: eigensolver did not converge");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

cmat psd_sqrt(const cmat& m) {
  EigenDecomposition eig = hermitian_eig(m);
  const double floor = numerics().psd_floor;
  rvec roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double w = eig.values(i);
    if (w < -floor) {
      throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(w) +
                   " below -" + std::to_string(floor));
    }
    roots(i) = w > 0.0 ? std::sqrt(w) : 0.0;
  }
  cmat r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

cmat hermitian_propagator(const cmat& h, double t) {
  require_hermitian(h, "hermitian_propagator");
  return hermitian_propagator(hermitian_eig(h), t);
}

cmat hermitian_propagator(const EigenDecomposition& h_eig, double t) {
  cvec phases(h_eig.values.size());
  for (Eigen::Index i = 0; i < h_eig.values.size(); ++i) {
    phases(i) = std::polar(1.0, -h_eig.values(i) * t);
  }
  return h_eig.vectors * phases.asDiagonal() * h_eig.vectors.adjoint();
}

}  // namespace qsl
