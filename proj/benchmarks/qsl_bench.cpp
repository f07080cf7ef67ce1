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

#include <benchmark/benchmark.h>

#include "qsl/experiments.hpp"

namespace {

using namespace qsl;

struct PairFixture {
  DensityMatrix rho;
  DensityMatrix sigma;
};

PairFixture make_pair(int n) {
  RngStream rng(1234, static_cast<std::uint64_t>(n));
  DensityMatrix rho = random_state_hs(n, rng);
  const cmat u = haar_unitary(n, rng);
  cmat sig = u * rho.matrix() * u.adjoint();
  sig = 0.5 * (sig + sig.adjoint());
  return PairFixture{std::move(rho), DensityMatrix::unchecked(std::move(sig))};
}

void BM_BuresAngle(benchmark::State& state) {
  const PairFixture fx = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bures_angle(fx.rho, fx.sigma));
  }
}
BENCHMARK(BM_BuresAngle)->RangeMultiplier(2)->Range(4, 64);

void BM_ThetaAngle(benchmark::State& state) {
  const PairFixture fx = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_angle(fx.rho, fx.sigma));
  }
}
BENCHMARK(BM_ThetaAngle)->RangeMultiplier(2)->Range(4, 64);

void BM_PhiAngle(benchmark::State& state) {
  const PairFixture fx = make_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_angle(fx.rho, fx.sigma));
  }
}
BENCHMARK(BM_PhiAngle)->RangeMultiplier(2)->Range(4, 64);

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(77, static_cast<std::uint64_t>(n));
  const cmat h = random_hamiltonian(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(h));
  }
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 64);

void BM_PsdSqrt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(78, static_cast<std::uint64_t>(n));
  const DensityMatrix rho = random_state_hs(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_sqrt(rho.matrix()));
  }
}
BENCHMARK(BM_PsdSqrt)->RangeMultiplier(2)->Range(4, 64);

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(79, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(n, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(4, 64);

void BM_BoundsPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(80, static_cast<std::uint64_t>(n));
  const DensityMatrix rho = random_state_hs(n, rng);
  const cmat h = random_hamiltonian(n, rng, 1.0);
  const HamiltonianSchedule sched = HamiltonianSchedule::constant(h, 1.0);
  const cmat u = hermitian_propagator(h, 1.0);
  cmat sig = u * rho.matrix() * u.adjoint();
  const DensityMatrix sigma =
      DensityMatrix::unchecked(0.5 * (sig + sig.adjoint()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds(rho, sigma, sched, kExperimentGridPoints));
  }
}
BENCHMARK(BM_BoundsPipeline)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
