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

#include <doctest.h>

#include <cmath>

#include "qsl/sampling.hpp"

namespace qsl_test {

inline qsl::cmat random_hermitian(int n, qsl::RngStream& rng) {
  qsl::cmat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = rng.complex_gaussian();
    }
  }
  return 0.5 * (a + a.adjoint());
}

inline qsl::cvec random_unit_vector(int n, qsl::RngStream& rng) {
  qsl::cvec v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = rng.complex_gaussian();
  }
  return v / v.norm();
}

inline double max_abs_diff(const qsl::cmat& a, const qsl::cmat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline qsl::DensityMatrix pure_state(const qsl::cvec& psi) {
  return qsl::DensityMatrix::unchecked(psi * psi.adjoint());
}

}  // namespace qsl_test
