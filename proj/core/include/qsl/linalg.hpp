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

#include "qsl/numerics.hpp"

namespace qsl {

// Result of a Hermitian eigendecomposition: M = V diag(w) V^dag with the
// eigenvalues ascending and V unitary.
struct EigenDecomposition {
  rvec values;
  cmat vectors;

  // ||V diag(w) V^dag - M||_F
  double reconstruction_error(const cmat& m) const;
};

// Max entrywise |M - M^dag|; 0 for exactly Hermitian input.
double hermiticity_error(const cmat& m);

bool is_hermitian(const cmat& m, double tol);

// Throws NotHermitian with a message naming `what` if the check fails.
void require_hermitian(const cmat& m, const char* what);

// Full eigendecomposition of a Hermitian matrix.  Throws NotHermitian if the
// input fails the hermiticity tolerance and NumericalFailure if the solver
// does not converge.
EigenDecomposition hermitian_eig(const cmat& m);

// Principal square root of a Hermitian PSD matrix.  Eigenvalues within
// numerics().psd_floor of zero are clipped; anything more negative throws
// NotPSD.
cmat psd_sqrt(const cmat& m);

// U = exp(-i H t) via spectral decomposition.  H must be Hermitian.
cmat hermitian_propagator(const cmat& h, double t);

// Same, reusing an existing decomposition of H.
cmat hermitian_propagator(const EigenDecomposition& h_eig, double t);

}  // namespace qsl
