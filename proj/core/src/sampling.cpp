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

#include "qsl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qsl {

namespace {

cmat ginibre(int n, RngStream& rng) {
  cmat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  return g;
}

void require_dim(int n, const char* what) {
  if (n < 2) {
    throw InvalidDimension(std::string(what) +
                           ": dimension must be >= 2, got " +
                           std::to_string(n));
  }
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffu),
      static_cast<std::uint32_t>(stream >> 32),
      0x9e3779b9u,
  };
  engine_.seed(seq);
}

double RngStream::gaussian() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

double RngStream::uniform() {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

double RngStream::exponential() {
  std::exponential_distribution<double> dist(1.0);
  return dist(engine_);
}

complex RngStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return complex(re, im);
}

cmat haar_unitary(int n, RngStream& rng) {
  require_dim(n, "haar_unitary");
  const cmat g = ginibre(n, rng);
  Eigen::HouseholderQR<cmat> qr(g);
  cmat q = qr.householderQ();
  const cvec r_diag = qr.matrixQR().diagonal();
  // Fix the gauge: scale columns so R would have a positive diagonal, which
  // makes Q exactly Haar-distributed rather than merely unitary.
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r_diag(j));
    q.col(j) *= mag > 0.0 ? r_diag(j) / mag : complex(1.0, 0.0);
  }
  return q;
}

cmat random_hamiltonian(int n, RngStream& rng, std::optional<double> op_norm) {
  require_dim(n, "random_hamiltonian");
  const cmat a = ginibre(n, rng);
  cmat h = 0.5 * (a + a.adjoint());
  if (op_norm) {
    const rvec w = hermitian_eig(h).values;
    const double spread = std::max(std::abs(w(0)), std::abs(w(n - 1)));
    if (spread > 0.0) {
      h *= *op_norm / spread;
    }
  }
  return h;
}

DensityMatrix random_state_hs(int n, RngStream& rng) {
  require_dim(n, "random_state_hs");
  const cmat g = ginibre(n, rng);
  cmat m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix random_state_fixed_spectrum(const Spectrum& spectrum,
                                          RngStream& rng) {
  const int n = spectrum.dim();
  require_dim(n, "random_state_fixed_spectrum");
  const cmat u = haar_unitary(n, rng);
  rvec lam(n);
  for (int i = 0; i < n; ++i) {
    lam(i) = spectrum.values()[static_cast<std::size_t>(i)];
  }
  cmat m = u * lam.asDiagonal() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix::unchecked(std::move(m));
}

namespace {

// Moves the spectrum along the straight line (1-s) lam + s target until the
// purity equals p; both endpoints make it a quadratic in s with a closed-form
// root in [0, 1].
std::vector<double> spectrum_with_purity(std::vector<double> lam, double p) {
  const int n = static_cast<int>(lam.size());
  double pur = 0.0;
  for (double v : lam) pur += v * v;

  if (p <= pur) {
    // Mix toward 1/N: purity(s) = (1-s)^2 (pur - 1/N) + 1/N.
    const double base = pur - 1.0 / n;
    const double ratio = base > 0.0 ? std::max(p - 1.0 / n, 0.0) / base : 0.0;
    const double s = 1.0 - std::sqrt(ratio);
    for (double& v : lam) {
      v = (1.0 - s) * v + s / n;
    }
  } else {
    // Sharpen toward the dominant vertex e_m: purity(s) is the quadratic
    // A s^2 + B s + C with A = pur - 2 lam_m + 1, B = 2(lam_m - pur), C = pur,
    // increasing from pur to 1 on [0, 1].
    const std::size_t m = static_cast<std::size_t>(
        std::max_element(lam.begin(), lam.end()) - lam.begin());
    const double lm = lam[m];
    const double a = pur - 2.0 * lm + 1.0;
    const double b = 2.0 * (lm - pur);
    const double c = pur - p;
    double s = 1.0;
    if (a > 1e-15) {
      s = (-b + std::sqrt(std::max(b * b - 4.0 * a * c, 0.0))) / (2.0 * a);
    } else if (b > 1e-15) {
      s = -c / b;
    }
    s = std::clamp(s, 0.0, 1.0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
      lam[i] = (1.0 - s) * lam[i] + (i == m ? s : 0.0);
    }
  }
  // Renormalize round-off in the sum.
  const double sum = std::accumulate(lam.begin(), lam.end(), 0.0);
  for (double& v : lam) v /= sum;
  return lam;
}

}  // namespace

std::vector<DensityMatrix> purity_stratified_states(int n, int count,
                                                    RngStream& rng) {
  require_dim(n, "purity_stratified_states");
  if (count < 1) {
    throw DomainError("purity_stratified_states: count must be >= 1");
  }
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double target = 1.0 / n + rng.uniform() * (1.0 - 1.0 / n);
    // Dirichlet(1,...,1) spectrum from normalized exponentials.
    std::vector<double> lam(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : lam) {
      v = rng.exponential();
      sum += v;
    }
    for (double& v : lam) v /= sum;
    lam = spectrum_with_purity(std::move(lam), target);
    states.push_back(
        random_state_fixed_spectrum(Spectrum::from_values(std::move(lam)), rng));
  }
  return states;
}

std::vector<SimplexPoint> qutrit_region1_grid(int resolution) {
  if (resolution < 2) {
    throw DomainError("qutrit_region1_grid: resolution must be >= 2, got " +
                      std::to_string(resolution));
  }
  // Barycentric grid over the vertex triangle: pure state, the rank-2 state
  // with two eigenvalues 1/2, and the maximally mixed state.
  constexpr double v1[3] = {0.0, 0.0, 1.0};
  constexpr double v2[3] = {0.5, 0.0, 0.5};
  constexpr double v3[3] = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  std::vector<SimplexPoint> points;
  points.reserve(static_cast<std::size_t>(resolution + 1) * (resolution + 2) / 2);
  for (int a = resolution; a >= 0; --a) {
    for (int b = 0; b <= resolution - a; ++b) {
      const int c = resolution - a - b;
      SimplexPoint p;
      p.l1 = (a * v1[0] + b * v2[0] + c * v3[0]) / resolution;
      p.l2 = (a * v1[1] + b * v2[1] + c * v3[1]) / resolution;
      p.l3 = (a * v1[2] + b * v2[2] + c * v3[2]) / resolution;
      points.push_back(p);
    }
  }
  return points;
}

}  // namespace qsl
