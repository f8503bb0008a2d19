// Copyright 2026 The cavity-udw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "cavity_udw/derivative_response.hpp"
#include "cavity_udw/evolution.hpp"

using namespace cavity_udw;

namespace {

void BM_EstimatorOsc(benchmark::State& state) {
  const DetectorParams det(1.0, 1.0);
  const auto sw = SwitchingFunction::gaussian(0.01 * static_cast<double>(state.range(0)));
  const CavityParams cavity(2.0 * kPi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimator_E_osc(Sign::plus, det, sw, cavity));
  }
}
BENCHMARK(BM_EstimatorOsc)->Arg(20)->Arg(100)->Arg(500);

void BM_EstimatorZm(benchmark::State& state) {
  const DetectorParams det(1.0, 1.0);
  const auto sw = SwitchingFunction::gaussian(0.5);
  const CavityParams cavity(2.0 * kPi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimator_E_zm(Sign::plus, 1.0, det, sw, cavity));
  }
}
BENCHMARK(BM_EstimatorZm);

void BM_CouplingGQuadrature(benchmark::State& state) {
  const DetectorParams det(1.0, 0.1);
  const auto sw = SwitchingFunction::gaussian(1.0);
  const CavityParams cavity(2.0 * kPi);
  const auto traj = Trajectory::inertial(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_G(state.range(0), Sign::plus, det, traj, sw, cavity));
  }
}
BENCHMARK(BM_CouplingGQuadrature)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EvolveDensity(benchmark::State& state) {
  const DetectorParams det(1.0, 0.1);
  const auto sw = SwitchingFunction::gaussian(1.0);
  const CavityParams cavity(2.0 * kPi);
  const auto zm = gaussian_zero_mode(1.0);
  const auto rho0 = DetectorState(0.7, Complex(0.2, 0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evolve_density(rho0, det, zm, Trajectory::inertial(0.0), sw, cavity));
  }
}
BENCHMARK(BM_EvolveDensity)->Unit(benchmark::kMillisecond);

void BM_ResponseInertial(benchmark::State& state) {
  const CavityParams cavity(2.0 * kPi);
  const auto sw = SwitchingFunction::gaussian(static_cast<double>(state.range(0)));
  const auto zm = gaussian_zero_mode(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(response_inertial(1.0, 0.5, cavity, sw, zm));
  }
}
BENCHMARK(BM_ResponseInertial)->Arg(1)->Arg(10);

void BM_ModeIntegral(benchmark::State& state) {
  const auto sw = SwitchingFunction::gaussian(1.0);
  const auto route = state.range(0) == 0 ? ModeIntegralRoute::shifted_contour
                                         : ModeIntegralRoute::real_axis;
  for (auto _ : state) {
    benchmark::DoNotOptimize(accelerated_mode_integral(3.0, 1, 1.0, 1.0, 2.0, sw, route));
  }
}
BENCHMARK(BM_ModeIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ResponseAccelerated(benchmark::State& state) {
  const CavityParams cavity(1.0);
  const auto sw = SwitchingFunction::gaussian(0.5);
  const auto zm = gaussian_zero_mode(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(response_accelerated(1.0, 2.0, cavity, sw, zm));
  }
}
BENCHMARK(BM_ResponseAccelerated)->Unit(benchmark::kMillisecond);

void BM_MinkowskiAccelerated(benchmark::State& state) {
  const auto sw = SwitchingFunction::gaussian(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(response_mink_accel(1.0, 1.0, sw));
  }
}
BENCHMARK(BM_MinkowskiAccelerated);

}  // namespace

BENCHMARK_MAIN();
