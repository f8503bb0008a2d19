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

#include "cavity_udw/model.hpp"

#include <cmath>
#include <string>

namespace cavity_udw {
namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

}  // namespace

CavityParams::CavityParams(double circumference) : length_(circumference) {
  require_finite(circumference, "L");
  if (!(circumference > 0.0)) throw DomainError("L must be > 0");
}

DetectorParams::DetectorParams(double gap, double coupling)
    : gap_(gap), coupling_(coupling) {
  require_finite(gap, "Omega");
  require_finite(coupling, "lambda");
  if (coupling < 0.0) throw DomainError("lambda must be >= 0");
}

ZeroModeState::ZeroModeState(double mean_q, double mean_p, double qq,
                             double pp, Complex qp)
    : mean_q_(mean_q), mean_p_(mean_p), qq_(qq), pp_(pp), qp_(qp) {
  require_finite(mean_q, "meanQ");
  require_finite(mean_p, "meanP");
  require_finite(qq, "qq");
  require_finite(pp, "pp");
  require_finite(qp.real(), "Re(qp)");
  require_finite(qp.imag(), "Im(qp)");
  if (!(qq > 0.0)) throw DomainError("qq must be > 0");
  if (!(pp > 0.0)) throw DomainError("pp must be > 0");
  if (std::abs(qp.imag() - 0.5) > kTolerance) {
    throw DomainError("Im(qp) must equal 1/2 (canonical commutator)");
  }
  const double var_q = qq - mean_q * mean_q;
  const double var_p = pp - mean_p * mean_p;
  const double cov = qp.real() - mean_q * mean_p;
  if (var_q * var_p - cov * cov < 0.25 - kTolerance) {
    throw DomainError("zero-mode moments violate the uncertainty bound");
  }
}

ZeroModeState gaussian_zero_mode(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must be finite and > 0");
  }
  return {0.0, 0.0, 0.5 / gamma, 0.5 * gamma, Complex(0.0, 0.5)};
}

double zero_mode_energy(const ZeroModeState& zm, const CavityParams& cavity) {
  return zm.pp() / (2.0 * cavity.circumference());
}

DetectorState::DetectorState(double a, Complex b) : a_(a), b_(b) {
  require_finite(a, "a");
  require_finite(b.real(), "Re(b)");
  require_finite(b.imag(), "Im(b)");
  const double d = a - 0.5;
  if (d * d + std::norm(b) > 0.25 + kTolerance) {
    throw DomainError("detector state is not positive semidefinite");
  }
}

Matrix2 DetectorState::matrix() const {
  Matrix2 m;
  m << Complex(a_, 0.0), b_, std::conj(b_), Complex(1.0 - a_, 0.0);
  return m;
}

SwitchingFunction SwitchingFunction::gaussian(double sigma, double tau0) {
  require_finite(sigma, "sigma");
  require_finite(tau0, "tau0");
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
  return SwitchingFunction(sigma, tau0, nullptr);
}

SwitchingFunction SwitchingFunction::custom(ValueFn value, FourierFn fourier,
                                            double center, double width) {
  require_finite(center, "center");
  require_finite(width, "width");
  if (!(width > 0.0)) throw DomainError("window width must be > 0");
  if (!value || !fourier) {
    throw DomainError("custom window needs value and Fourier functions");
  }
  return SwitchingFunction(
      width, center,
      std::make_shared<const Custom>(Custom{std::move(value), std::move(fourier)}));
}

double SwitchingFunction::value(double tau) const {
  if (custom_) return custom_->value(tau);
  const double s = (tau - tau0_) / sigma_;
  return std::exp(-0.5 * s * s) / std::sqrt(std::sqrt(kPi) * sigma_);
}

Complex SwitchingFunction::value(Complex tau) const {
  if (custom_) {
    throw DomainError("complex argument requires the Gaussian window");
  }
  const Complex s = (tau - tau0_) / sigma_;
  return std::exp(-0.5 * s * s) / std::sqrt(std::sqrt(kPi) * sigma_);
}

Complex SwitchingFunction::fourier(double omega) const {
  if (custom_) return custom_->fourier(omega);
  const double x = sigma_ * omega;
  const double mag = std::sqrt(2.0 * sigma_ * std::sqrt(kPi)) * std::exp(-0.5 * x * x);
  return std::polar(mag, -omega * tau0_);
}

double switching_value(const SwitchingFunction& sw, double tau) {
  return sw.value(tau);
}

Complex switching_fourier(const SwitchingFunction& sw, double omega) {
  return sw.fourier(omega);
}

Trajectory Trajectory::inertial(double rapidity) {
  require_finite(rapidity, "beta");
  return Trajectory(Inertial{rapidity});
}

Trajectory Trajectory::accelerated(double acceleration) {
  require_finite(acceleration, "accel");
  if (!(acceleration > 0.0)) throw DomainError("accel must be > 0");
  return Trajectory(Accelerated{acceleration});
}

double Trajectory::rapidity() const noexcept {
  if (const auto* in = std::get_if<Inertial>(&kind_)) return in->rapidity;
  return 0.0;
}

double Trajectory::acceleration() const {
  if (const auto* ac = std::get_if<Accelerated>(&kind_)) return ac->acceleration;
  throw DomainError("inertial trajectory has no proper acceleration");
}

WorldlinePoint worldline_eval(const Trajectory& traj, double tau) {
  if (const auto* in = std::get_if<Inertial>(&traj.kind())) {
    const double ch = std::cosh(in->rapidity);
    return {tau * ch, tau * std::sinh(in->rapidity), ch};
  }
  const double a = std::get<Accelerated>(traj.kind()).acceleration;
  const double ch = std::cosh(a * tau);
  return {std::sinh(a * tau) / a, ch / a, ch};
}

}  // namespace cavity_udw
