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

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "cavity_udw/model.hpp"
#include "cavity_udw/numerics.hpp"

using namespace cavity_udw;

namespace {

// Trapezoid rule on a dense grid; spectrally accurate for Gaussians.
Complex trapezoid_fourier(const SwitchingFunction& sw, double omega) {
  const double h = 1e-3;
  const double lo = sw.tau0() - 12.0 * sw.sigma();
  const long n = static_cast<long>(24.0 * sw.sigma() / h);
  Complex acc(0.0, 0.0);
  for (long k = 0; k <= n; ++k) {
    const double tau = lo + h * static_cast<double>(k);
    acc += sw.value(tau) * std::polar(1.0, -omega * tau);
  }
  return h * acc;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CavityParams(0.0), DomainError);
  CHECK_THROWS_AS(CavityParams(-1.0), DomainError);
  CHECK_NOTHROW(DetectorParams(0.0, 0.0));
  CHECK_THROWS_AS(DetectorParams(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(SwitchingFunction::gaussian(0.0), DomainError);
  CHECK_THROWS_AS(Trajectory::accelerated(0.0), DomainError);
  CHECK_THROWS_AS(Trajectory::inertial(0.3).acceleration(), DomainError);
}

TEST_CASE("squeezed vacuum moments") {
  const ZeroModeState z = gaussian_zero_mode(2.0);
  CHECK(z.qq() == doctest::Approx(0.25));
  CHECK(z.pp() == doctest::Approx(1.0));
  CHECK(z.qp() == Complex(0.0, 0.5));
  CHECK(z.pq() == Complex(0.0, -0.5));

  const ZeroModeState one = gaussian_zero_mode(1.0);
  CHECK(one.qq() * one.pp() == doctest::Approx(0.25).epsilon(1e-15));

  for (double g : {1e-6, 0.3, 7.0, 1e5}) CHECK(gaussian_zero_mode(g).qp().imag() == 0.5);
  CHECK_THROWS_AS(gaussian_zero_mode(0.0), DomainError);
  CHECK_THROWS_AS(gaussian_zero_mode(-2.0), DomainError);
}

TEST_CASE("zero-mode state rejects unphysical moments") {
  CHECK_THROWS_AS(ZeroModeState(0, 0, 0.5, 0.5, Complex(0.0, 0.4)), DomainError);
  CHECK_THROWS_AS(ZeroModeState(0, 0, 0.1, 0.5, Complex(0.0, 0.5)), DomainError);
  CHECK_THROWS_AS(ZeroModeState(0, 0, -1.0, 0.5, Complex(0.0, 0.5)), DomainError);
  // the bound uses central moments: shifting the mean must be paid for in qq
  CHECK_THROWS_AS(ZeroModeState(1.0, 0, 1.2, 0.5, Complex(0.0, 0.5)), DomainError);
  CHECK_NOTHROW(ZeroModeState(1.0, 0, 1.5, 0.5, Complex(0.0, 0.5)));
  // saturated within tolerance
  CHECK_NOTHROW(ZeroModeState(0, 0, 0.5, 0.5 - 1e-14, Complex(0.0, 0.5)));
}

TEST_CASE("detector state is a density matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = u(rng);
    const double rmax = std::sqrt(a * (1.0 - a));
    const Complex b = std::polar(rmax * u(rng), 2.0 * kPi * u(rng));
    const Matrix2 m = DetectorState(a, b).matrix();
    CHECK(std::abs(m.trace() - 1.0) < 1e-15);
    CHECK((m - m.adjoint()).norm() == 0.0);
    const Eigen::SelfAdjointEigenSolver<Matrix2> es(m);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12);
    CHECK(es.eigenvalues().maxCoeff() <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(DetectorState(1.0, 0.1), DomainError);
  CHECK_THROWS_AS(DetectorState(1.2, 0.0), DomainError);
  CHECK(DetectorState::ground().a() == 1.0);
}

TEST_CASE("worldlines") {
  const auto rest = worldline_eval(Trajectory::inertial(0.0), 3.0);
  CHECK(rest.t == 3.0);
  CHECK(rest.x == 0.0);
  CHECK(rest.dtdtau == 1.0);

  const auto acc = worldline_eval(Trajectory::accelerated(1.0), 0.0);
  CHECK(acc.t == 0.0);
  CHECK(acc.x == 1.0);
  CHECK(acc.dtdtau == 1.0);

  for (double beta : {-2.0, 0.4, 3.0}) {
    for (double tau = -10.0; tau <= 10.0; tau += 0.5) {
      const auto p = worldline_eval(Trajectory::inertial(beta), tau);
      CHECK(p.t * p.t - p.x * p.x == doctest::Approx(tau * tau).epsilon(1e-12).scale(1.0));
    }
  }
  for (double a : {0.5, 1.0, 2.0}) {
    for (double tau = -10.0; tau <= 10.0; tau += 0.25) {
      const auto p = worldline_eval(Trajectory::accelerated(a), tau);
      const double interval = (p.x - p.t) * (p.x + p.t);
      CHECK(std::abs(interval - 1.0 / (a * a)) <= 1e-12 * std::max(1.0, p.x * p.x));
    }
  }
}

TEST_CASE("gaussian window") {
  const auto sw = SwitchingFunction::gaussian(1.0);
  CHECK(switching_value(sw, 0.0) == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));

  const auto norm = integrate_window([&](double t) { return Complex(sw.value(t), 0.0); },
                                     sw, WindowSpec{}, 0.0);
  CHECK(std::abs(norm.value - 1.0) < 1e-10);

  const auto shifted = SwitchingFunction::gaussian(0.7, 2.3);
  for (double s : {0.1, 0.9, 2.5}) {
    CHECK(shifted.value(2.3 + s) == shifted.value(2.3 - s));
  }
}

TEST_CASE("gaussian window fourier transform") {
  const auto sw = SwitchingFunction::gaussian(1.0);
  CHECK(std::abs(switching_fourier(sw, 0.0) - std::pow(kPi, 0.25) * std::sqrt(2.0)) < 1e-14);

  const auto moved = SwitchingFunction::gaussian(1.0, 1.7);
  for (double w : {0.3, 2.0}) {
    const Complex ref = sw.fourier(w) * std::polar(1.0, -w * 1.7);
    CHECK(std::abs(moved.fourier(w) - ref) < 1e-14);
    CHECK(std::abs(moved.fourier(w)) == doctest::Approx(std::abs(sw.fourier(w))));
  }

  for (double w : {0.5, 2.0, 5.0}) {
    CHECK(std::abs(sw.fourier(w) - trapezoid_fourier(sw, w)) < 1e-9);
    CHECK(std::abs(moved.fourier(w) - trapezoid_fourier(moved, w)) < 1e-9);
  }
}

TEST_CASE("custom window delegates to its callbacks") {
  const auto g = SwitchingFunction::gaussian(1.3, 0.2);
  const auto c = SwitchingFunction::custom([&](double t) { return g.value(t); },
                                           [&](double w) { return g.fourier(w); }, 0.2, 1.3);
  CHECK_FALSE(c.is_gaussian());
  CHECK(c.value(0.9) == g.value(0.9));
  CHECK(c.fourier(1.1) == g.fourier(1.1));
}
