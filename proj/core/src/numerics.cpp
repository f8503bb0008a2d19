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

#include "cavity_udw/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

namespace cavity_udw {

void WindowSpec::validate() const {
  if (!(halfwidth_sigmas >= 5.0)) {
    throw DomainError("halfwidth_sigmas must be >= 5");
  }
  if (!(target_tol > 0.0)) throw DomainError("target_tol must be > 0");
  if (max_refinements < 1) throw DomainError("max_refinements must be >= 1");
  if (center && !std::isfinite(*center)) {
    throw DomainError("window center must be finite");
  }
}

void SumSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be > 0");
  if (!(rel_tol >= 0.0)) throw DomainError("rel_tol must be >= 0");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (min_terms < 1) throw DomainError("min_terms must be >= 1");
}

namespace detail {

const GaussRule& gauss10() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<double, 10>;
    GaussRule r{};
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (int i = 0; i < 5; ++i) {
      r.nodes[4 - i] = -x[i];
      r.weights[4 - i] = w[i];
      r.nodes[5 + i] = x[i];
      r.weights[5 + i] = w[i];
    }
    return r;
  }();
  return rule;
}

Grid make_grid(double lo, double hi, long panels) {
  const GaussRule& r = gauss10();
  Grid g;
  g.panels = panels;
  g.lo = lo;
  g.h = (hi - lo) / static_cast<double>(panels);
  g.x.resize(static_cast<std::size_t>(panels) * 10);
  g.w.resize(g.x.size());
  for (long p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * g.h;
    for (int j = 0; j < 10; ++j) {
      const std::size_t k = static_cast<std::size_t>(p) * 10 + j;
      g.x[k] = mid + 0.5 * g.h * r.nodes[j];
      g.w[k] = 0.5 * g.h * r.weights[j];
    }
  }
  return g;
}

}  // namespace detail

double panel_width(double width, double osc_freq_hint) {
  double w = 0.25 * width;
  const double f = std::abs(osc_freq_hint);
  if (f > 0.0) w = std::min(w, kPi / (4.0 * f));
  return w;
}

WindowBounds window_bounds(const SwitchingFunction& sw, const WindowSpec& spec,
                           double osc_freq_hint) {
  const double c = spec.center.value_or(sw.tau0());
  const double half = spec.halfwidth_sigmas * sw.sigma();
  return {c - half, c + half, panel_width(sw.sigma(), osc_freq_hint)};
}

QuadratureResult integrate_window(const RealToComplex& f,
                                  const SwitchingFunction& sw,
                                  const WindowSpec& spec,
                                  double osc_freq_hint) {
  return integrate_window_t(f, sw, spec, osc_freq_hint);
}

QuadratureResult integrate_triangle(const PairToComplex& f2,
                                    const SwitchingFunction& sw,
                                    const WindowSpec& spec,
                                    double osc_freq_hint) {
  return integrate_triangle_t(f2, sw, spec, osc_freq_hint);
}

QuadratureResult integrate_square(const PairToComplex& f2,
                                  const SwitchingFunction& sw,
                                  const WindowSpec& spec,
                                  double osc_freq_hint) {
  return integrate_square_t(f2, sw, spec, osc_freq_hint);
}

namespace {

Complex gl10(const std::function<Complex(double)>& f, double a, double b) {
  const detail::GaussRule& r = detail::gauss10();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex acc(0.0, 0.0);
  for (int j = 0; j < 10; ++j) acc += r.weights[j] * f(mid + half * r.nodes[j]);
  return half * acc;
}

Integral<Complex> adaptive_step(const std::function<Complex(double)>& f,
                                double a, double b, Complex whole,
                                double tol, int depth, long& evals) {
  const double m = 0.5 * (a + b);
  const Complex left = gl10(f, a, m);
  const Complex right = gl10(f, m, b);
  evals += 20;
  const double err = std::abs(left + right - whole);
  if (err <= tol) return {left + right, err, evals};
  if (depth <= 0) {
    throw ConvergenceError("adaptive quadrature exceeded depth", left + right,
                           err, evals);
  }
  const auto l = adaptive_step(f, a, m, left, 0.5 * tol, depth - 1, evals);
  const auto r = adaptive_step(f, m, b, right, 0.5 * tol, depth - 1, evals);
  return {l.value + r.value, l.error + r.error, evals};
}

}  // namespace

Integral<Complex> integrate_adaptive(const std::function<Complex(double)>& f,
                                     double a, double b, double abs_tol,
                                     int max_depth) {
  if (!(b > a)) return {Complex(0.0, 0.0), 0.0, 0};
  long evals = 10;
  const Complex whole = gl10(f, a, b);
  return adaptive_step(f, a, b, whole, abs_tol, max_depth, evals);
}

Integral<Complex> integrate_to_infinity(const std::function<Complex(double)>& f,
                                       double a, double step, double abs_tol) {
  constexpr int kMaxPanels = 4000;
  constexpr int kQuietPanels = 2;
  constexpr double kGrowth = 1.25;
  constexpr double kMaxWidthFactor = 64.0;
  const double panel_tol = 0.02 * abs_tol;
  Complex total(0.0, 0.0);
  double err = 0.0;
  long evals = 0;
  int quiet = 0;
  double width = step;
  double lo = a;
  double f_prev = std::abs(f(a));
  for (int p = 0; p < kMaxPanels; ++p) {
    const double hi = lo + width;
    const auto part = integrate_adaptive(f, lo, hi, panel_tol);
    total += part.value;
    err += part.error;
    evals += part.evaluations + 1;
    const double f_hi = std::abs(f(hi));
    const bool decaying = f_hi <= f_prev;
    f_prev = f_hi;
    if (std::abs(part.value) <= panel_tol && decaying) {
      if (++quiet >= kQuietPanels) return {total, err, evals};
    } else {
      quiet = 0;
    }
    lo = hi;
    width = std::min(width * kGrowth, kMaxWidthFactor * step);
  }
  throw ConvergenceError("tail integral did not decay", total,
                         std::abs(total), evals);
}

SumResult mode_sum(const std::function<Complex(long)>& term,
                   const SumSpec& spec) {
  spec.validate();
  if (spec.tail_mode == TailMode::integral_comparison) {
    throw DomainError("integral_comparison needs a continuous term extension");
  }
  Complex sum(0.0, 0.0);
  double prev = -1.0;
  double prev_ratio = std::numeric_limits<double>::infinity();
  double tail = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= spec.max_terms; ++n) {
    const Complex t = term(n);
    sum += t;
    const double m = std::abs(t);
    double ratio = std::numeric_limits<double>::infinity();
    if (prev > 0.0) ratio = m / prev;
    if (n >= spec.min_terms) {
      if (m == 0.0) return {sum, n, 0.0};
      if (ratio < 1.0 && ratio <= prev_ratio * (1.0 + 1e-12)) {
        tail = m * ratio / (1.0 - ratio);
        if (tail <= spec.tolerance(std::abs(sum))) return {sum, n, tail};
      }
    }
    prev_ratio = ratio;
    prev = m;
  }
  throw ConvergenceError("mode sum exhausted max_terms", sum, tail,
                         spec.max_terms);
}

namespace {

struct EulerMaclaurin {
  Complex value;
  double error;
};

// Sum_{n >= m} f(n) ~ int_m^inf f + f(m)/2 - f'(m)/12.
EulerMaclaurin em_tail(const ContinuousTail& tail, double m, double tol) {
  const auto& f = tail.term;
  constexpr double h = 0.25;
  const Complex f0 = f(m);
  const Complex fp1 = f(m + h), fm1 = f(m - h);
  const Complex fp2 = f(m + 2 * h), fm2 = f(m - 2 * h);
  const Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  const Complex d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
  Complex integral;
  double quad_err = 0.0;
  if (tail.integral_from) {
    integral = tail.integral_from(m);
  } else {
    const auto in_log = [&f](double u) {
      const double x = std::exp(u);
      return f(x) * x;
    };
    const auto r = integrate_to_infinity(in_log, std::log(m), 0.25, 0.1 * tol);
    integral = r.value;
    quad_err = r.error;
  }
  return {integral + 0.5 * f0 - d1 / 12.0, std::abs(d3) / 720.0 + quad_err};
}

}  // namespace

SumResult mode_sum(const std::function<Complex(long)>& term,
                   const SumSpec& spec, const ContinuousTail& tail) {
  spec.validate();
  if (spec.tail_mode == TailMode::geometric_bound) return mode_sum(term, spec);
  if (!tail.term) throw DomainError("continuous term extension is empty");

  Complex partial(0.0, 0.0);
  long next = 1;
  long m = std::max<long>(8, spec.min_terms);
  std::optional<Complex> prev_total;
  double estimate = std::numeric_limits<double>::infinity();
  Complex total(0.0, 0.0);
  while (m <= spec.max_terms) {
    for (; next < m; ++next) partial += term(next);
    const double tol = spec.tolerance(std::abs(prev_total ? *prev_total : partial));
    const EulerMaclaurin em = em_tail(tail, static_cast<double>(m), tol);
    total = partial + em.value;
    if (prev_total) {
      const double change = std::abs(total - *prev_total);
      estimate = std::max(change, em.error);
      if (change <= tol && em.error <= tol) {
        return {total, m - 1, estimate};
      }
    }
    prev_total = total;
    m *= 2;
  }
  throw ConvergenceError("mode sum exhausted max_terms", total, estimate,
                         spec.max_terms);
}

double erfc(double x) { return std::erfc(x); }

double dawson(double x) {
  const double ax = std::abs(x);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  if (ax < 0.5) {
    // F(x) = sum_k (-1)^k 2^k x^(2k+1) / (2k+1)!!
    double term = ax, sum = ax;
    const double x2 = ax * ax;
    for (int k = 1; k < 40; ++k) {
      term *= -2.0 * x2 / (2.0 * k + 1.0);
      sum += term;
      if (std::abs(term) < 1e-17 * sum) break;
    }
    return sign * sum;
  }
  if (ax > 10.0) {
    // 1/(2x) * sum_k (2k-1)!! / (2x^2)^k
    const double inv = 1.0 / (2.0 * ax * ax);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 14; ++k) {
      term *= (2.0 * k - 1.0) * inv;
      sum += term;
    }
    return sign * sum / (2.0 * ax);
  }
  // F(x) = int_0^x exp(-s (2x - s)) ds
  const double s_max =
      ax * ax <= 40.0 ? ax : ax - std::sqrt(ax * ax - 40.0);
  const double width = std::min(0.25, 0.25 / ax);
  const long panels = std::max<long>(1, static_cast<long>(std::ceil(s_max / width)));
  auto g = [ax](double s) { return Complex(std::exp(-s * (2.0 * ax - s)), 0.0); };
  return sign * detail::composite(g, 0.0, s_max, panels).real();
}

}  // namespace cavity_udw
