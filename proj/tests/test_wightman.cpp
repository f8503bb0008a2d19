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

#include <cmath>
#include <random>

#include "cavity_udw/wightman.hpp"

using namespace cavity_udw;

namespace {

// Klein-Gordon product at t = 0 with a central time difference.
Complex kg_product(long m, long n, double L) {
  const int points = 512;
  const double h = L / points, dt = 1e-5;
  Complex acc(0.0, 0.0);
  for (int k = 0; k < points; ++k) {
    const double x = h * k;
    const Complex f = mode_function(m, L, 0.0, x);
    const Complex g = mode_function(n, L, 0.0, x);
    const Complex df = (mode_function(m, L, dt, x) - mode_function(m, L, -dt, x)) / (2 * dt);
    const Complex dg = (mode_function(n, L, dt, x) - mode_function(n, L, -dt, x)) / (2 * dt);
    acc += std::conj(f) * dg - std::conj(df) * g;
  }
  return Complex(0.0, 1.0) * h * acc;
}

Complex n1_summand(const NullSeparation& s, double L) {
  const Complex zu(-2.0 * kPi * s.eps / L, -2.0 * kPi * s.du / L);
  const Complex zv(-2.0 * kPi * s.eps / L, -2.0 * kPi * s.dv / L);
  return (std::exp(zu) + std::exp(zv)) / (4.0 * kPi);
}

std::vector<ZeroModeState> sample_states() {
  return {gaussian_zero_mode(2.0), gaussian_zero_mode(0.03),
          ZeroModeState(0.4, -1.1, 2.0, 3.5, Complex(0.7, 0.5)),
          ZeroModeState(-2.0, 0.3, 5.5, 0.6, Complex(-0.2, 0.5))};
}

}  // namespace

TEST_CASE("mode functions") {
  CHECK(std::abs(mode_function(1, 2 * kPi, 0, 0) - 1.0 / std::sqrt(4 * kPi)) < 1e-15);
  CHECK(std::abs(mode_function(1, 2 * kPi, 0, 0)) == doctest::Approx(0.28209479177387814));
  CHECK_THROWS_AS(mode_function(0, 1.0, 0, 0), DomainError);
  for (double t : {-3.0, 0.2, 5.0}) {
    for (double x : {0.0, 0.7}) {
      CHECK(std::abs(mode_function(3, 1.3, t, x)) ==
            doctest::Approx(1.0 / std::sqrt(12 * kPi)).epsilon(1e-14));
    }
  }
  for (long m : {1L, 2L, -1L}) {
    for (long n : {1L, 2L, -1L}) {
      const double expect = m == n ? 1.0 : 0.0;
      CHECK(std::abs(kg_product(m, n, 2.5) - expect) < 1e-8);
    }
  }
}

TEST_CASE("oscillator Wightman partial sums") {
  const double L = 1.7;
  const NullSeparation coincident{0.0, 0.0, L};
  double ref = 0.0;
  for (int n = 30; n >= 1; --n) ref += std::exp(-2 * kPi * n) / (2 * kPi * n);
  const Complex p = wightman_osc_partial(coincident, L, 200);
  CHECK(std::abs(p.imag()) < 1e-18);
  CHECK(std::abs(p.real() - ref) < 1e-15);
  CHECK(std::abs(p - wightman_osc_closed(coincident, L)) < 1e-12);

  const NullSeparation s{0.2, -0.45, 0.05};
  CHECK(wightman_osc_partial(s, L, 1) == n1_summand(s, L));

  for (double e : {0.2, 0.5, 1.0}) {
    const NullSeparation t{0.3 * L, 0.1 * L, e * L};
    for (long N : {1L, 4L, 16L}) {
      const double change =
          std::abs(wightman_osc_partial(t, L, N) - wightman_osc_partial(t, L, 2 * N));
      CHECK(change <= std::exp(-2 * kPi * N * e) / (2 * kPi * N));
    }
  }
}

TEST_CASE("oscillator Wightman closed form") {
  const double L = 2.0;
  const NullSeparation s{0.3 * L, -0.7 * L, 0.05 * L};
  CHECK(std::abs(wightman_osc_closed(s, L) - wightman_osc_partial(s, L, 10000)) < 1e-10);

  const NullSeparation shifted{s.du + L, s.dv, s.eps};
  CHECK(std::abs(wightman_osc_closed(shifted, L) - wightman_osc_closed(s, L)) < 1e-12);

  CHECK_THROWS_AS(wightman_osc_closed({0.1, 0.1, 0.0}, L), DomainError);
  CHECK_THROWS_AS(wightman_osc_closed({0.1, 0.1, -1e-3}, L), DomainError);

  // hermiticity: swapping the events conjugates
  for (double du : {-0.6, 0.1, 0.9}) {
    for (double dv : {-0.2, 0.5}) {
      const NullSeparation a{du, dv, 0.03};
      const NullSeparation b{-du, -dv, 0.03};
      CHECK(std::abs(wightman_osc_closed(a, L) - std::conj(wightman_osc_closed(b, L))) <
            1e-13);
    }
  }
}

TEST_CASE("equal-time oscillator commutator vanishes") {
  const double L = 1.0;
  auto commutator = [&](double eps) {
    const auto fwd = NullSeparation::from_dt_dx(0.0, 0.3 * L, eps);
    const auto back = NullSeparation::from_dt_dx(0.0, -0.3 * L, eps);
    return wightman_osc_closed(fwd, L) - wightman_osc_closed(back, L);
  };
  CHECK(std::abs(extrapolate_eps(commutator, L)) < 1e-12);

  // a timelike separation keeps a finite commutator
  auto timelike = [&](double eps) {
    const auto fwd = NullSeparation::from_dt_dx(0.3 * L, 0.1 * L, eps);
    const auto back = NullSeparation::from_dt_dx(-0.3 * L, -0.1 * L, eps);
    return wightman_osc_closed(fwd, L) - wightman_osc_closed(back, L);
  };
  CHECK(std::abs(extrapolate_eps(timelike, L)) > 1e-3);
}

TEST_CASE("eps extrapolation recovers the intercept") {
  const Complex c(0.3, -1.2);
  const auto v = extrapolate_eps([&](double e) { return c + Complex(4.0, 1.0) * e; }, 2.0);
  CHECK(std::abs(v - c) < 1e-13);
  EpsLadder quad;
  quad.order = 2;
  const auto w =
      extrapolate_eps([&](double e) { return c + 3.0 * e - 50.0 * e * e; }, 1.0, quad);
  CHECK(std::abs(w - c) < 1e-12);
}

TEST_CASE("zero-mode Wightman") {
  const ZeroModeState centred(0, 0, 0.8, 0.9, Complex(0.1, 0.5));
  CHECK(wightman_zm(centred, 1.3, 0.0, 0.0) == Complex(0.8, 0.0));

  const Complex v = wightman_zm(gaussian_zero_mode(2.0), 1.0, 1.0, 2.0);
  CHECK(std::abs(v - Complex(2.25, 0.5)) < 1e-15);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (const auto& z : sample_states()) {
    for (int k = 0; k < 20; ++k) {
      const double t = u(rng), tp = u(rng), L = 0.5 + std::abs(u(rng));
      const Complex anti = wightman_zm(z, L, t, tp) - wightman_zm(z, L, tp, t);
      CHECK(std::abs(anti - Complex(0.0, -(t - tp) / L)) < 1e-12);
      CHECK(std::abs(wightman_zm(z, L, t, tp) - std::conj(wightman_zm(z, L, tp, t))) < 1e-12);
    }
  }
}

TEST_CASE("Minkowski Wightman") {
  const double eps = 0.01;
  CHECK(std::abs(wightman_mink({0, 0, eps}) - (-2.0 * std::log(eps) / (4 * kPi))) < 1e-15);
  CHECK(wightman_mink({0.3, -0.8, eps}) == wightman_mink({-0.8, 0.3, eps}));
  CHECK_THROWS_AS(wightman_mink({0.1, 0.2, 0.0}), DomainError);
}

TEST_CASE("large cavity approaches Minkowski up to a constant") {
  const NullSeparation a{0.3, 0.5, 0.01};
  const NullSeparation b{-0.7, 1.1, 0.01};
  auto dd = [&](double L) {
    return (wightman_osc_closed(a, L) - wightman_mink(a)) -
           (wightman_osc_closed(b, L) - wightman_mink(b));
  };
  CHECK(std::abs(dd(1e6) - dd(1e5)) < 1e-6);
  CHECK(std::abs(dd(1e6)) < 1e-5);
  const double L = 1e6;
  const Complex offset = wightman_osc_closed(a, L) - wightman_mink(a);
  CHECK(std::abs(offset - (-std::log(2 * kPi / L) / (2 * kPi))) < 1e-5);
}

TEST_CASE("stress-energy") {
  const auto se = stress_energy(gaussian_zero_mode(2.0), 1.0);
  CHECK(se.tt_osc == doctest::Approx(-kPi / 6.0).epsilon(1e-15));
  CHECK(se.xx_osc == se.tt_osc);
  CHECK(se.tt_zm == doctest::Approx(0.5).epsilon(1e-15));

  const ZeroModeState balanced(0, 0, 3.0 / (4.0 * kPi), kPi / 3.0, Complex(0.0, 0.5));
  const auto zero = stress_energy(balanced, 1.0);
  CHECK(std::abs(zero.tt_osc + zero.tt_zm) < 1e-15);

  for (const auto& z : sample_states()) {
    for (double L : {0.3, 1.0, 7.0}) {
      const auto s = stress_energy(z, L);
      CHECK(s.tt_zm > 0.0);
      CHECK(zero_mode_response_coefficient(z, L) == 2.0 * s.tt_zm);
    }
  }
}
