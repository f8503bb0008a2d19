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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "cavity_udw/errors.hpp"
#include "cavity_udw/model.hpp"

namespace cavity_udw {

struct WindowSpec {
  std::optional<double> center;  // defaults to the switching peak
  double halfwidth_sigmas = 8.0;
  double target_tol = 1e-10;
  int max_refinements = 10;

  void validate() const;
};

template <class T>
struct Integral {
  T value;
  double error;
  long evaluations;
};

using QuadratureResult = Integral<Complex>;

enum class TailMode { geometric_bound, integral_comparison };

struct SumSpec {
  double abs_tol = 1e-10;
  long max_terms = 100000;
  TailMode tail_mode = TailMode::geometric_bound;
  // Stop once the tail is below max(abs_tol, rel_tol * |partial sum|).
  double rel_tol = 0.0;
  // The tail bound is not trusted before this index (peaked families).
  long min_terms = 1;

  double tolerance(double magnitude) const {
    return std::max(abs_tol, rel_tol * magnitude);
  }

  void validate() const;
};

struct SumResult {
  Complex value;
  long terms_used;
  double tail_estimate;
};

// Continuous extension of a term family, used by integral_comparison.
// `integral_from(x)` returns the integral of term over [x, inf) when known
// analytically; otherwise it is computed numerically in log(x).
struct ContinuousTail {
  std::function<Complex(double)> term;
  std::function<Complex(double)> integral_from;
};

SumResult mode_sum(const std::function<Complex(long)>& term,
                   const SumSpec& spec);
SumResult mode_sum(const std::function<Complex(long)>& term,
                   const SumSpec& spec, const ContinuousTail& tail);

double erfc(double x);
// F(x) = exp(-x^2) * integral_0^x exp(y^2) dy.
double dawson(double x);

// Integral of f over [a, inf) for a unimodal, eventually decaying f, by
// adaptive Gauss-Legendre panels of width `step` until panels are negligible.
Integral<Complex> integrate_to_infinity(const std::function<Complex(double)>& f,
                                       double a, double step, double abs_tol);

// Adaptive bisection on [a, b] with a 10/20-point Gauss-Legendre pair.
Integral<Complex> integrate_adaptive(const std::function<Complex(double)>& f,
                                     double a, double b, double abs_tol,
                                     int max_depth = 40);

namespace detail {

struct GaussRule {
  std::array<double, 10> nodes;
  std::array<double, 10> weights;
};
const GaussRule& gauss10();

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

template <class T>
T zero() {
  if constexpr (std::is_same_v<T, Complex>) {
    return Complex(0.0, 0.0);
  } else {
    return T::Zero();
  }
}

template <class T>
auto evaluate(T&& v) {
  if constexpr (std::is_same_v<std::decay_t<T>, Complex>) {
    return Complex(v);
  } else {
    return Matrix2(v);
  }
}

// Composite Gauss-Legendre sum of g over `panels` equal panels of [lo, hi].
template <class G>
auto composite(G& g, double lo, double hi, long panels) {
  using T = decltype(evaluate(g(lo)));
  const GaussRule& r = gauss10();
  const double h = (hi - lo) / static_cast<double>(panels);
  T acc = zero<T>();
  for (long p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * h;
    T part = zero<T>();
    for (int j = 0; j < 10; ++j) {
      part += r.weights[j] * evaluate(g(mid + 0.5 * h * r.nodes[j]));
    }
    acc += (0.5 * h) * part;
  }
  return acc;
}

// Quadrature nodes/weights for all panels of [lo, hi].
struct Grid {
  std::vector<double> x;
  std::vector<double> w;
  long panels;
  double lo;
  double h;
};
Grid make_grid(double lo, double hi, long panels);

}  // namespace detail

// Panel width for an integrand of scale `width` oscillating at `freq`.
double panel_width(double width, double osc_freq_hint);

// Panel-doubling Gauss-Legendre integration of g over [lo, hi]. The error is
// the difference between the last two refinements.
template <class G>
auto integrate_interval(G&& g, double lo, double hi, double max_panel_width,
                        double abs_tol, int max_refinements = 10) {
  using T = decltype(detail::evaluate(g(lo)));
  if (!(hi > lo)) return Integral<T>{detail::zero<T>(), 0.0, 0};
  long panels = std::max<long>(
      1, static_cast<long>(std::ceil((hi - lo) / max_panel_width - 1e-9)));
  constexpr long kMaxPanels = 1L << 23;
  if (!std::isfinite(max_panel_width) || panels > kMaxPanels / 2) {
    throw ConvergenceError("quadrature panel budget exceeded", detail::zero<Complex>(),
                           std::numeric_limits<double>::infinity(), 0);
  }
  T coarse = detail::composite(g, lo, hi, panels);
  long evals = 10 * panels;
  double err = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_refinements && panels <= kMaxPanels / 2; ++it) {
    panels *= 2;
    T fine = detail::composite(g, lo, hi, panels);
    evals += 10 * panels;
    err = detail::magnitude(T(fine - coarse));
    coarse = fine;
    if (err <= abs_tol) return Integral<T>{coarse, err, evals};
  }
  if constexpr (std::is_same_v<T, Complex>) {
    throw ConvergenceError("quadrature did not converge", coarse, err, evals);
  } else {
    throw ConvergenceError("quadrature did not converge", coarse(0, 0), err,
                           evals);
  }
}

struct WindowBounds {
  double lo;
  double hi;
  double panel;
};
WindowBounds window_bounds(const SwitchingFunction& sw, const WindowSpec& spec,
                           double osc_freq_hint);

// Integral of chi(tau) f(tau) over the switching window.
template <class F>
auto integrate_window_t(F&& f, const SwitchingFunction& sw,
                        const WindowSpec& spec, double osc_freq_hint) {
  spec.validate();
  const WindowBounds b = window_bounds(sw, spec, osc_freq_hint);
  auto g = [&](double tau) {
    return detail::evaluate(sw.value(tau) * detail::evaluate(f(tau)));
  };
  return integrate_interval(g, b.lo, b.hi, b.panel, spec.target_tol,
                            spec.max_refinements);
}

namespace detail {

template <class F2>
auto triangle_once(F2& f2, const SwitchingFunction& sw, double lo, double hi,
                   long panels) {
  using T = decltype(evaluate(f2(lo, lo)));
  const Grid grid = make_grid(lo, hi, panels);
  const GaussRule& r = gauss10();
  const std::size_t n = grid.x.size();
  std::vector<double> chi(n);
  for (std::size_t i = 0; i < n; ++i) chi[i] = sw.value(grid.x[i]);
  T acc = zero<T>();
  for (std::size_t i = 0; i < n; ++i) {
    const double tau = grid.x[i];
    const std::size_t p = i / 10;
    T inner = zero<T>();
    for (std::size_t j = 0; j < p * 10; ++j) {
      inner += (grid.w[j] * chi[j]) * evaluate(f2(tau, grid.x[j]));
    }
    const double a = grid.lo + static_cast<double>(p) * grid.h;
    const double half = 0.5 * (tau - a);
    if (half > 0.0) {
      T part = zero<T>();
      for (int k = 0; k < 10; ++k) {
        const double tp = a + half * (1.0 + r.nodes[k]);
        part += (r.weights[k] * sw.value(tp)) * evaluate(f2(tau, tp));
      }
      inner += half * part;
    }
    acc += (grid.w[i] * chi[i]) * inner;
  }
  return acc;
}

template <class F2>
auto square_once(F2& f2, const SwitchingFunction& sw, double lo, double hi,
                 long panels) {
  using T = decltype(evaluate(f2(lo, lo)));
  const Grid grid = make_grid(lo, hi, panels);
  const std::size_t n = grid.x.size();
  std::vector<double> wchi(n);
  for (std::size_t i = 0; i < n; ++i) wchi[i] = grid.w[i] * sw.value(grid.x[i]);
  T acc = zero<T>();
  for (std::size_t i = 0; i < n; ++i) {
    T row = zero<T>();
    for (std::size_t j = 0; j < n; ++j) {
      row += wchi[j] * evaluate(f2(grid.x[i], grid.x[j]));
    }
    acc += wchi[i] * row;
  }
  return acc;
}

template <class Once>
auto refine_2d(Once&& once, double lo, double hi, double panel,
               const WindowSpec& spec) {
  using T = decltype(once(lo, hi, 1L));
  long panels = std::max<long>(
      1, static_cast<long>(std::ceil((hi - lo) / panel - 1e-9)));
  T coarse = once(lo, hi, panels);
  long evals = 100 * panels * panels;
  double err = std::numeric_limits<double>::infinity();
  constexpr long kMaxEvals = 1L << 28;
  for (int it = 0; it < spec.max_refinements; ++it) {
    panels *= 2;
    if (100 * panels * panels > kMaxEvals) break;
    T fine = once(lo, hi, panels);
    evals += 100 * panels * panels;
    err = magnitude(T(fine - coarse));
    coarse = fine;
    if (err <= spec.target_tol) return Integral<T>{coarse, err, evals};
  }
  if constexpr (std::is_same_v<T, Complex>) {
    throw ConvergenceError("cubature did not converge", coarse, err, evals);
  } else {
    throw ConvergenceError("cubature did not converge", coarse(0, 0), err,
                           evals);
  }
}

}  // namespace detail

// Integral of chi(tau) chi(tau') f2(tau, tau') over tau' <= tau.
template <class F2>
auto integrate_triangle_t(F2&& f2, const SwitchingFunction& sw,
                          const WindowSpec& spec, double osc_freq_hint) {
  spec.validate();
  const WindowBounds b = window_bounds(sw, spec, osc_freq_hint);
  return detail::refine_2d(
      [&](double lo, double hi, long p) {
        return detail::triangle_once(f2, sw, lo, hi, p);
      },
      b.lo, b.hi, b.panel, spec);
}

// Integral of chi(tau) chi(tau') f2(tau, tau') over the full window square.
template <class F2>
auto integrate_square_t(F2&& f2, const SwitchingFunction& sw,
                        const WindowSpec& spec, double osc_freq_hint) {
  spec.validate();
  const WindowBounds b = window_bounds(sw, spec, osc_freq_hint);
  return detail::refine_2d(
      [&](double lo, double hi, long p) {
        return detail::square_once(f2, sw, lo, hi, p);
      },
      b.lo, b.hi, b.panel, spec);
}

using RealToComplex = std::function<Complex(double)>;
using PairToComplex = std::function<Complex(double, double)>;

QuadratureResult integrate_window(const RealToComplex& f,
                                  const SwitchingFunction& sw,
                                  const WindowSpec& spec,
                                  double osc_freq_hint);
QuadratureResult integrate_triangle(const PairToComplex& f2,
                                    const SwitchingFunction& sw,
                                    const WindowSpec& spec,
                                    double osc_freq_hint);
QuadratureResult integrate_square(const PairToComplex& f2,
                                  const SwitchingFunction& sw,
                                  const WindowSpec& spec,
                                  double osc_freq_hint);

}  // namespace cavity_udw
