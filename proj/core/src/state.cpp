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

#include "qsl/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace qsl {

namespace {

// Clips eigenvalues in [-floor, 0) to zero; anything more negative is the
// caller's error.  Returns true if a clip happened.
bool clip_spectrum(rvec& values, double floor, const char* what) {
  bool clipped = false;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < -floor) {
      throw NotAState(std::string(what) + ": eigenvalue " +
                      std::to_string(values(i)) + " below -" +
                      std::to_string(floor));
    }
    if (values(i) < 0.0) {
      values(i) = 0.0;
      clipped = true;
    }
  }
  return clipped;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const cmat& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidDimension("DensityMatrix: matrix must be square, got " +
                           std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw NotAState("DensityMatrix: entries must be finite");
  }
  const double herm = hermiticity_error(m);
  if (herm > numerics().hermiticity_tol) {
    throw NotHermitian("DensityMatrix: max |M - M^dag| = " +
                       std::to_string(herm) + " exceeds tolerance");
  }
  cmat h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > numerics().trace_tol) {
    throw NotAState("DensityMatrix: trace = " + std::to_string(tr) +
                    " is not 1 within tolerance");
  }

  EigenDecomposition eig = hermitian_eig(h);
  rvec values = eig.values;
  if (clip_spectrum(values, numerics().psd_floor, "DensityMatrix")) {
    // Reproject onto the PSD cone and restore unit trace.
    h = eig.vectors * values.asDiagonal() * eig.vectors.adjoint();
    h = 0.5 * (h + h.adjoint());
    h /= h.trace().real();
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::unchecked(cmat m) {
  return DensityMatrix(std::move(m));
}

Spectrum Spectrum::from_values(std::vector<double> values) {
  if (values.empty()) {
    throw InvalidDimension("Spectrum: empty eigenvalue list");
  }
  double sum = 0.0;
  for (double& v : values) {
    if (v < -numerics().psd_floor || v > 1.0 + numerics().trace_tol) {
      throw NotAState("Spectrum: eigenvalue " + std::to_string(v) +
                      " outside [0,1]");
    }
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > numerics().trace_tol) {
    throw NotAState("Spectrum: eigenvalues sum to " + std::to_string(sum) +
                    ", not 1 within tolerance");
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return Spectrum(std::move(values));
}

Spectrum spectrum_of(const DensityMatrix& rho) {
  EigenDecomposition eig = hermitian_eig(rho.matrix());
  std::vector<double> v(eig.values.data(), eig.values.data() + eig.values.size());
  return Spectrum::from_values(std::move(v));
}

GeneratorBasis::GeneratorBasis(int dim) : dim_(dim) {
  ops_.reserve(static_cast<std::size_t>(dim) * dim - 1);
  const complex i_unit(0.0, 1.0);

  // Symmetric pairs: E_jk + E_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      cmat a = cmat::Zero(dim, dim);
      a(j, k) = 1.0;
      a(k, j) = 1.0;
      ops_.push_back(std::move(a));
    }
  }
  // Antisymmetric pairs: -i E_jk + i E_kj.
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      cmat a = cmat::Zero(dim, dim);
      a(j, k) = -i_unit;
      a(k, j) = i_unit;
      ops_.push_back(std::move(a));
    }
  }
  // Diagonal: sqrt(2/(l(l+1))) (sum_{m<=l} E_mm - l E_{l+1,l+1}).
  for (int l = 1; l < dim; ++l) {
    cmat a = cmat::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int m = 0; m < l; ++m) {
      a(m, m) = scale;
    }
    a(l, l) = -scale * l;
    ops_.push_back(std::move(a));
  }
}

const GeneratorBasis& GeneratorBasis::of(int dim) {
  if (dim < 2) {
    throw InvalidDimension("GeneratorBasis: dimension must be >= 2, got " +
                           std::to_string(dim));
  }
  static std::mutex mutex;
  static std::map<int, GeneratorBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dim);
  if (it == cache.end()) {
    it = cache.emplace(dim, GeneratorBasis(dim)).first;
  }
  return it->second;
}

BlochVector to_bloch(const DensityMatrix& rho) {
  const int n = rho.dim();
  const GeneratorBasis& basis = GeneratorBasis::of(n);
  const double scale = std::sqrt(n / (2.0 * (n - 1.0)));
  BlochVector r;
  r.dim = n;
  r.coords.resize(n * n - 1);
  for (std::size_t i = 0; i < basis.ops().size(); ++i) {
    // tr[rho A] as a Frobenius inner product; real for Hermitian pairs.
    r.coords(static_cast<Eigen::Index>(i)) =
        scale * rho.matrix().cwiseProduct(basis.ops()[i].conjugate()).sum().real();
  }
  return r;
}

DensityMatrix from_bloch(const BlochVector& r) {
  const int n = r.dim;
  const GeneratorBasis& basis = GeneratorBasis::of(n);
  if (r.coords.size() != static_cast<Eigen::Index>(n) * n - 1) {
    throw DimensionMismatch("from_bloch: expected " +
                            std::to_string(n * n - 1) + " coordinates, got " +
                            std::to_string(r.coords.size()));
  }
  cmat m = cmat::Identity(n, n);
  const double scale = std::sqrt(n * (n - 1.0) / 2.0);
  for (std::size_t i = 0; i < basis.ops().size(); ++i) {
    m += scale * r.coords(static_cast<Eigen::Index>(i)) * basis.ops()[i];
  }
  m /= static_cast<double>(n);
  return DensityMatrix::from_matrix(m);
}

double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();
}

double state_overlap(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("state_overlap: dimensions " +
                            std::to_string(rho.dim()) + " vs " +
                            std::to_string(sigma.dim()));
  }
  return rho.matrix().cwiseProduct(sigma.matrix().conjugate()).sum().real();
}

bool iso_spectral(const DensityMatrix& rho, const DensityMatrix& sigma,
                  double tol) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("iso_spectral: dimensions " +
                            std::to_string(rho.dim()) + " vs " +
                            std::to_string(sigma.dim()));
  }
  const rvec a = hermitian_eig(rho.matrix()).values;
  const rvec b = hermitian_eig(sigma.matrix()).values;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool iso_spectral(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return iso_spectral(rho, sigma, numerics().iso_spectral_tol);
}

}  // namespace qsl
