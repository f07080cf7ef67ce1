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

#include <vector>

#include "qsl/linalg.hpp"
#include "qsl/numerics.hpp"

namespace qsl {

// A density matrix: Hermitian, positive semidefinite, unit trace.
//
// from_matrix() validates all three invariants (eigenvalues within
// numerics().psd_floor of zero are clipped and the matrix reprojected);
// unchecked() skips validation and is meant for constructions that are valid
// by design, e.g. unitary conjugation of an already-valid state.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const cmat& m);
  static DensityMatrix unchecked(cmat m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const cmat& matrix() const { return mat_; }

 private:
  explicit DensityMatrix(cmat m) : mat_(std::move(m)) {}
  cmat mat_;
};

// Eigenvalues of a state, sorted descending, each in [0,1], summing to 1.
class Spectrum {
 public:
  // Sorts, clips round-off negatives, validates the sum.
  static Spectrum from_values(std::vector<double> values);

  int dim() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

 private:
  explicit Spectrum(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

Spectrum spectrum_of(const DensityMatrix& rho);

// The N^2-1 generalized Gell-Mann generators of SU(N): traceless, Hermitian,
// tr[A_i A_j] = 2 delta_ij.  Ordering is fixed: symmetric pairs (j<k
// lexicographic), then antisymmetric pairs, then diagonal.
class GeneratorBasis {
 public:
  // Memoized per dimension; the returned reference stays valid for the
  // lifetime of the program.
  static const GeneratorBasis& of(int dim);

  int dim() const { return dim_; }
  const std::vector<cmat>& ops() const { return ops_; }

 private:
  explicit GeneratorBasis(int dim);
  int dim_;
  std::vector<cmat> ops_;
};

// Generalized Bloch (coherence) vector of a state in the GeneratorBasis
// ordering; length N^2-1.
struct BlochVector {
  int dim = 0;
  rvec coords;

  double norm() const { return coords.norm(); }
};

// r_i = sqrt(N/(2(N-1))) tr[rho A_i]
BlochVector to_bloch(const DensityMatrix& rho);

// rho = (1/N)(1 + sqrt(N(N-1)/2) r.A).  Throws NotAState when the
// reconstruction has an eigenvalue below -numerics().psd_floor; note that
// ||r|| <= 1 does not guarantee positivity for N > 2.
DensityMatrix from_bloch(const BlochVector& r);

// tr[rho^2], in [1/N, 1].
double purity(const DensityMatrix& rho);

// Re tr[rho sigma]; exact trace is real for Hermitian pairs.
double state_overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

// True iff the sorted eigenvalue lists differ by at most tol entrywise.
bool iso_spectral(const DensityMatrix& rho, const DensityMatrix& sigma,
                  double tol);
bool iso_spectral(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qsl
