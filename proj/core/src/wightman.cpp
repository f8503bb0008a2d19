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

#include "cavity_udw/wightman.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace cavity_udw {
namespace {

void require_length(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("L must be > 0");
}

// 1 - exp(w) without cancellation for small |w|.
Complex one_minus_exp(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return -Complex(re, im);
}

}  // namespace

void NullSeparation::validate() const {
  if (!std::isfinite(du) || !std::isfinite(dv)) {
    throw DomainError("null separation must be finite");
  }
  if (!(eps > 0.0)) throw DomainError("eps must be > 0");
}

Complex mode_function(long n, double L, double t, double x) {
  if (n == 0) throw DomainError("n = 0 is the zero mode, not a mode function");
  require_length(L);
  const double an = static_cast<double>(std::labs(n));
  const double phase =
      2.0 * kPi * (-an * t + static_cast<double>(n) * x) / L;
  return std::polar(1.0 / std::sqrt(4.0 * kPi * an), phase);
}

Complex wightman_osc_partial(const NullSeparation& sep, double L, long nmax) {
  if (nmax < 1) throw DomainError("nmax must be >= 1");
  require_length(L);
  const Complex iu(0.0, 1.0);
  const Complex zu = -iu * 2.0 * kPi * Complex(sep.du, -sep.eps) / L;
  const Complex zv = -iu * 2.0 * kPi * Complex(sep.dv, -sep.eps) / L;
  Complex sum(0.0, 0.0);
  for (long n = nmax; n >= 1; --n) {
    const double dn = static_cast<double>(n);
    sum += (std::exp(dn * zu) + std::exp(dn * zv)) / (4.0 * kPi * dn);
  }
  return sum;
}

Complex wightman_osc_closed(const NullSeparation& sep, double L) {
  sep.validate();
  require_length(L);
  const Complex iu(0.0, 1.0);
  const Complex zu = -iu * 2.0 * kPi * Complex(sep.du, -sep.eps) / L;
  const Complex zv = -iu * 2.0 * kPi * Complex(sep.dv, -sep.eps) / L;
  return -(std::log(one_minus_exp(zu)) + std::log(one_minus_exp(zv))) /
         (4.0 * kPi);
}

Complex wightman_zm(const ZeroModeState& zm, double L, double t,
                    double tprime) {
  require_length(L);
  return zm.qq() + zm.pq() * (t / L) + zm.qp() * (tprime / L) +
         zm.pp() * (t * tprime / (L * L));
}

Complex wightman_mink(const NullSeparation& sep) {
  sep.validate();
  const Complex a(sep.eps, sep.du);
  const Complex b(sep.eps, sep.dv);
  return -(std::log(a) + std::log(b)) / (4.0 * kPi);
}

StressEnergy stress_energy(const ZeroModeState& zm, double L) {
  require_length(L);
  const double l2 = L * L;
  const double osc = -kPi / (6.0 * l2);
  const double zero = zm.pp() / (2.0 * l2);
  return {osc, osc, 0.0, zero, zero, 0.0};
}

double zero_mode_response_coefficient(const ZeroModeState& zm, double L) {
  require_length(L);
  return zm.pp() / (L * L);
}

Complex extrapolate_eps(const std::function<Complex(double)>& value, double L,
                        const EpsLadder& ladder) {
  require_length(L);
  const auto m = static_cast<Eigen::Index>(ladder.eps_over_L.size());
  if (ladder.order < 0 || m < ladder.order + 1) {
    throw DomainError("eps ladder too short for the extrapolation order");
  }
  Eigen::MatrixXd design(m, ladder.order + 1);
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double e = ladder.eps_over_L[static_cast<std::size_t>(i)];
    if (!(e > 0.0)) throw DomainError("eps ladder entries must be > 0");
    double p = 1.0;
    for (int k = 0; k <= ladder.order; ++k) {
      design(i, k) = p;
      p *= e;
    }
    rhs(i) = value(e * L);
  }
  const Eigen::MatrixXcd dc = design.cast<Complex>();
  const Eigen::VectorXcd coef = dc.colPivHouseholderQr().solve(rhs);
  return coef(0);
}

}  // namespace cavity_udw
