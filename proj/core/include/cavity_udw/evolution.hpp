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

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

struct CouplingI {
  long n;
  Sign sign;
  Complex value;
};

struct CouplingG {
  long n;
  Sign sign;
  Complex value;
};

enum class Order { lambda1, lambda2 };
enum class Source { osc, zm };

struct DensityContribution {
  Matrix2 matrix;
  Order order;
  Source source;
};

// Evaluation route for quantities that have both a closed form and a
// defining integral.
enum class EvalPath { closed_form, integral };

// Doppler-shifted frequency (2 pi |n| / L) exp(-sgn(n) beta) of mode n seen
// by an inertial detector.
double doppler_frequency(long n, double beta, double L);

// I_{n,s} = -i lambda int chi(tau) e^{s i Omega tau} u_n^*(tau) dtau.
CouplingI coupling_I(long n, Sign sign, const DetectorParams& det,
                     const Trajectory& traj, const SwitchingFunction& sw,
                     const CavityParams& cavity, const WindowSpec& window = {});

// G_{n,s} = -lambda^2 int int_{tau' < tau} chi chi' e^{s i Omega (tau - tau')}
//           u_n(tau) u_n^*(tau').
CouplingG coupling_G(long n, Sign sign, const DetectorParams& det,
                     const Trajectory& traj, const SwitchingFunction& sw,
                     const CavityParams& cavity, const WindowSpec& window = {});

// Gaussian window, inertial worldline: closed forms of the two couplings.
Complex coupling_I_gaussian(long n, Sign sign, const DetectorParams& det,
                            double beta, const SwitchingFunction& sw,
                            double L);
Complex coupling_G_gaussian(long n, Sign sign, const DetectorParams& det,
                            double beta, const SwitchingFunction& sw,
                            double L);

// Oscillator-mode order lambda^2 correction (Fock vacuum initial state).
DensityContribution rho_osc_second(const DetectorState& rho0,
                                   const DetectorParams& det,
                                   const Trajectory& traj,
                                   const SwitchingFunction& sw,
                                   const CavityParams& cavity,
                                   const SumSpec& sum = {},
                                   const WindowSpec& window = {});

DensityContribution rho_zm_first(const DetectorState& rho0,
                                 const DetectorParams& det,
                                 const ZeroModeState& zm,
                                 const Trajectory& traj,
                                 const SwitchingFunction& sw,
                                 const CavityParams& cavity,
                                 const WindowSpec& window = {});

// The three blocks of the zero-mode order lambda^2 correction.
struct ZeroModeSecondBlocks {
  Matrix2 sandwich;      // U1 rho U1^dagger, full square
  Matrix2 left;          // U2 rho, time ordered
  Matrix2 right;         // rho U2^dagger, time ordered
};

ZeroModeSecondBlocks rho_zm_second_blocks(const DetectorState& rho0,
                                          const DetectorParams& det,
                                          const ZeroModeState& zm,
                                          const Trajectory& traj,
                                          const SwitchingFunction& sw,
                                          const CavityParams& cavity,
                                          const WindowSpec& window = {});

DensityContribution rho_zm_second(const DetectorState& rho0,
                                  const DetectorParams& det,
                                  const ZeroModeState& zm,
                                  const Trajectory& traj,
                                  const SwitchingFunction& sw,
                                  const CavityParams& cavity,
                                  const WindowSpec& window = {});

struct Evolution {
  Matrix2 rho;
  std::vector<DensityContribution> parts;  // zm lambda1, osc lambda2, zm lambda2
};

Evolution evolve_density(const DetectorState& rho0, const DetectorParams& det,
                         const ZeroModeState& zm, const Trajectory& traj,
                         const SwitchingFunction& sw,
                         const CavityParams& cavity, const SumSpec& sum = {},
                         const WindowSpec& window = {});

// Static-detector estimators of the zero-mode and oscillator contributions.
double estimator_E_zm(Sign sign, double gamma, const DetectorParams& det,
                      const SwitchingFunction& sw, const CavityParams& cavity,
                      EvalPath path = EvalPath::closed_form,
                      const WindowSpec& window = {});

double estimator_E_osc(Sign sign, const DetectorParams& det,
                       const SwitchingFunction& sw, const CavityParams& cavity,
                       const SumSpec& sum = {},
                       EvalPath path = EvalPath::closed_form,
                       const WindowSpec& window = {});

double relative_strength_S(Sign sign, double gamma, const DetectorParams& det,
                           const SwitchingFunction& sw,
                           const CavityParams& cavity, const SumSpec& sum = {},
                           EvalPath path = EvalPath::closed_form);

struct GammaZeros {
  double gamma_plus;
  double gamma_minus;
};

GammaZeros gamma_zeros(const CavityParams& cavity, const SwitchingFunction& sw,
                       const DetectorParams& det);

}  // namespace cavity_udw
