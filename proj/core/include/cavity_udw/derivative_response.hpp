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

#pragma once

#include <vector>

#include "cavity_udw/model.hpp"
#include "cavity_udw/numerics.hpp"

namespace cavity_udw {

// Response functions of the derivative-coupling detector, lambda^2 dropped.

struct ResponseMeta {
  double omega;
  Trajectory trajectory;
  double sigma;
  double tau0;
  double L;
  double pp;
};

struct ResponseBreakdown {
  double f_osc;
  double f_zm;
  ResponseMeta meta;
  long terms_used = 0;
  double tail_estimate = 0.0;

  double total() const { return f_osc + f_zm; }
};

enum class PeakSource { osc, zm };

struct SpectralPeak {
  double omega;
  double weight;
  PeakSource source;
  int chirality = 0;  // +1 right movers, -1 left movers, 0 zero mode
  long n = 0;
};

// (<P^2>/L^2) |int chi e^{-i Omega tau} dt/dtau dtau|^2 by quadrature.
double response_zm_general(const ZeroModeState& zm, const Trajectory& traj,
                           const SwitchingFunction& sw,
                           const CavityParams& cavity, double omega,
                           const WindowSpec& window = {});

// Inertial worldline with rapidity beta, Gaussian window.
ResponseBreakdown response_inertial(double omega, double beta,
                                    const CavityParams& cavity,
                                    const SwitchingFunction& sw,
                                    const ZeroModeState& zm,
                                    const SumSpec& sum = {});

// Long-detection transition-rate spectrum as weighted delta peaks.
std::vector<SpectralPeak> longtime_peaks(double beta,
                                         const CavityParams& cavity,
                                         const ZeroModeState& zm,
                                         double omega_max);

// |beta| -> infinity limit of the oscillator response.
double response_ultrarel(double omega, const SwitchingFunction& sw);

enum class ModeIntegralRoute { shifted_contour, real_axis };

// J_n^eta for the uniformly accelerated worldline; n may be non-integer
// (continuous extension used by tail estimates).
Complex accelerated_mode_integral(
    double n, int eta, double omega, double accel, double L,
    const SwitchingFunction& sw,
    ModeIntegralRoute route = ModeIntegralRoute::shifted_contour,
    double rel_tol = 1e-12);

ResponseBreakdown response_accelerated(double omega, double accel,
                                       const CavityParams& cavity,
                                       const SwitchingFunction& sw,
                                       const ZeroModeState& zm,
                                       const SumSpec& sum = {});

double response_zm_accelerated(double omega, double accel,
                               const CavityParams& cavity,
                               const SwitchingFunction& sw,
                               const ZeroModeState& zm);

enum class MinkowskiRoute { shifted_contour, real_axis };

// Accelerated detector in the Minkowski vacuum. Throws ConsistencyError if
// the imaginary part does not vanish.
double response_mink_accel(double omega, double accel,
                           const SwitchingFunction& sw,
                           MinkowskiRoute route = MinkowskiRoute::shifted_contour);

// Complex value of the Minkowski integral before the reality check.
Complex response_mink_accel_complex(
    double omega, double accel, const SwitchingFunction& sw,
    MinkowskiRoute route = MinkowskiRoute::shifted_contour);

double planck_rate(double omega, double accel);

double ratio_zm_osc(double omega, double accel, const CavityParams& cavity,
                    const SwitchingFunction& sw, const ZeroModeState& zm,
                    const SumSpec& sum = {});

}  // namespace cavity_udw
