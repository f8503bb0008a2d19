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

#include <functional>
#include <vector>

#include "cavity_udw/model.hpp"

namespace cavity_udw {

// du = dt - dx, dv = dt + dx, eps > 0 the i*eps regulator.
struct NullSeparation {
  double du;
  double dv;
  double eps;

  static NullSeparation from_dt_dx(double dt, double dx, double eps) {
    return {dt - dx, dt + dx, eps};
  }
  void validate() const;
};

struct StressEnergy {
  double tt_osc, xx_osc, tx_osc;
  double tt_zm, xx_zm, tx_zm;
};

// (4 pi |n|)^(-1/2) exp(-i 2 pi |n| t / L + i 2 pi n x / L).
Complex mode_function(long n, double L, double t, double x);

Complex wightman_osc_partial(const NullSeparation& sep, double L, long nmax);
Complex wightman_osc_closed(const NullSeparation& sep, double L);

// <phi_zm(t) phi_zm(t')> from raw (non-central) moments.
Complex wightman_zm(const ZeroModeState& zm, double L, double t, double tprime);

Complex wightman_mink(const NullSeparation& sep);

StressEnergy stress_energy(const ZeroModeState& zm, double L);

// <P^2>/L^2, the zero-mode prefactor of the derivative-coupling response.
double zero_mode_response_coefficient(const ZeroModeState& zm, double L);

struct EpsLadder {
  std::vector<double> eps_over_L{1e-2, 5e-3, 2.5e-3};
  int order = 1;
};

// Least-squares polynomial fit of value(eps) on the ladder, evaluated at 0.
Complex extrapolate_eps(const std::function<Complex(double)>& value, double L,
                        const EpsLadder& ladder = {});

}  // namespace cavity_udw
