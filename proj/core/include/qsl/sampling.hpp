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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qsl/state.hpp"

namespace qsl {

// Seeded random stream.  Identical (seed, stream) always reproduces the same
// sequence; distinct stream ids give independent sub-streams, so parallel
// workers can each own one and results stay reproducible regardless of the
// thread count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double gaussian();          // N(0,1)
  double uniform();           // [0,1)
  double exponential();      // rate 1
  complex complex_gaussian();  // independent N(0,1) real and imaginary parts

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// R-diagonal phase correction.
cmat haar_unitary(int n, RngStream& rng);

// GUE draw H = (A + A^dag)/2, optionally rescaled to the given operator norm
// (largest absolute eigenvalue).
cmat random_hamiltonian(int n, RngStream& rng,
                        std::optional<double> op_norm = std::nullopt);

// Hilbert-Schmidt-measure mixed state rho = G G^dag / tr[G G^dag].
DensityMatrix random_state_hs(int n, RngStream& rng);

// U diag(spectrum) U^dag with U Haar; the spectrum is preserved exactly as
// constructed.
DensityMatrix random_state_fixed_spectrum(const Spectrum& spectrum,
                                          RngStream& rng);

// `count` states whose purities are uniform on [1/N, 1]: a uniform target
// purity is drawn, a Dirichlet(1,...,1) spectrum is moved along a straight
// line toward either the maximally mixed point or its dominant vertex until
// the purity matches (closed-form quadratic solve), then conjugated by a Haar
// unitary.
std::vector<DensityMatrix> purity_stratified_states(int n, int count,
                                                    RngStream& rng);

// Point of the qutrit spectral simplex, lambda3 = 1 - lambda1 - lambda2.
struct SimplexPoint {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;
};

// Uniform triangular grid over the fundamental region of the qutrit simplex
// with vertices (0,0,1), (1/2,0,1/2) and (1/3,1/3,1/3); every point satisfies
// lambda2 <= lambda1 <= lambda3.  Returns (resolution+1)(resolution+2)/2
// points including all three vertices.
std::vector<SimplexPoint> qutrit_region1_grid(int resolution);

}  // namespace qsl
