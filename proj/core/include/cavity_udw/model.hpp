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

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <memory>
#include <variant>

#include "cavity_udw/errors.hpp"

namespace cavity_udw {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

class CavityParams {
 public:
  explicit CavityParams(double circumference);
  double circumference() const noexcept { return length_; }

 private:
  double length_;
};

class DetectorParams {
 public:
  DetectorParams(double gap, double coupling);
  double gap() const noexcept { return gap_; }
  double coupling() const noexcept { return coupling_; }

 private:
  double gap_;
  double coupling_;
};

// First and second moments of the zero-mode pair (Q, P). <PQ> is conj(<QP>).
class ZeroModeState {
 public:
  static constexpr double kTolerance = 1e-12;

  ZeroModeState(double mean_q, double mean_p, double qq, double pp,
                Complex qp);

  double mean_q() const noexcept { return mean_q_; }
  double mean_p() const noexcept { return mean_p_; }
  double qq() const noexcept { return qq_; }
  double pp() const noexcept { return pp_; }
  Complex qp() const noexcept { return qp_; }
  Complex pq() const noexcept { return std::conj(qp_); }
  bool centered() const noexcept { return mean_q_ == 0.0 && mean_p_ == 0.0; }

  bool operator==(const ZeroModeState&) const = default;

 private:
  double mean_q_, mean_p_, qq_, pp_;
  Complex qp_;
};

// Minimum-uncertainty Gaussian with <Q^2> = 1/(2 gamma), <P^2> = gamma/2.
ZeroModeState gaussian_zero_mode(double gamma);

// <H_zm> = <P^2>/(2L).
double zero_mode_energy(const ZeroModeState& zm, const CavityParams& cavity);

// Qubit density matrix [[a, b], [b*, 1-a]].
class DetectorState {
 public:
  static constexpr double kTolerance = 1e-12;

  DetectorState(double a, Complex b);
  static DetectorState ground() { return {1.0, 0.0}; }
  static DetectorState excited() { return {0.0, 0.0}; }

  double a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Matrix2 matrix() const;

  bool operator==(const DetectorState&) const = default;

 private:
  double a_;
  Complex b_;
};

// Smooth switching window. The built-in Gaussian has unit L2 norm; custom
// windows supply their own value and Fourier transform.
class SwitchingFunction {
 public:
  using ValueFn = std::function<double(double)>;
  using FourierFn = std::function<Complex(double)>;

  static SwitchingFunction gaussian(double sigma, double tau0 = 0.0);
  // `width` sets quadrature panel scale and the window half-width unit.
  static SwitchingFunction custom(ValueFn value, FourierFn fourier,
                                  double center, double width);

  bool is_gaussian() const noexcept { return !custom_; }
  double sigma() const noexcept { return sigma_; }
  double tau0() const noexcept { return tau0_; }

  double value(double tau) const;
  // Analytic continuation, Gaussian only.
  Complex value(Complex tau) const;
  Complex fourier(double omega) const;

 private:
  struct Custom {
    ValueFn value;
    FourierFn fourier;
  };
  SwitchingFunction(double sigma, double tau0, std::shared_ptr<const Custom> c)
      : sigma_(sigma), tau0_(tau0), custom_(std::move(c)) {}

  double sigma_;
  double tau0_;
  std::shared_ptr<const Custom> custom_;
};

double switching_value(const SwitchingFunction& sw, double tau);
Complex switching_fourier(const SwitchingFunction& sw, double omega);

struct Inertial {
  double rapidity = 0.0;
  bool operator==(const Inertial&) const = default;
};

struct Accelerated {
  double acceleration = 1.0;
  bool operator==(const Accelerated&) const = default;
};

class Trajectory {
 public:
  static Trajectory inertial(double rapidity = 0.0);
  static Trajectory accelerated(double acceleration);

  bool is_inertial() const noexcept {
    return std::holds_alternative<Inertial>(kind_);
  }
  // Zero for accelerated worldlines.
  double rapidity() const noexcept;
  // Throws DomainError for inertial worldlines.
  double acceleration() const;
  const std::variant<Inertial, Accelerated>& kind() const noexcept {
    return kind_;
  }

  bool operator==(const Trajectory&) const = default;

 private:
  explicit Trajectory(std::variant<Inertial, Accelerated> k) : kind_(k) {}
  std::variant<Inertial, Accelerated> kind_;
};

struct WorldlinePoint {
  double t;
  double x;
  double dtdtau;
};

WorldlinePoint worldline_eval(const Trajectory& traj, double tau);

}  // namespace cavity_udw
