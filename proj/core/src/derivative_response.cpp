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

#include "cavity_udw/derivative_response.hpp"

#include <cmath>

#include "cavity_udw/wightman.hpp"

namespace cavity_udw {
namespace {

constexpr Complex kI(0.0, 1.0);
const double kSqrtPi = std::sqrt(kPi);

void require_gaussian(const SwitchingFunction& sw) {
  if (!sw.is_gaussian()) throw DomainError("closed form needs a Gaussian window");
}

void require_accel(double accel) {
  if (!(accel > 0.0) || !std::isfinite(accel)) {
    throw DomainError("accel must be > 0");
  }
}

// Root of a strictly decreasing function by bracketing and bisection.
template <class F>
double decreasing_root(F&& f, double start, double step) {
  double lo = start - step, hi = start + step;
  while (f(lo) < 0.0) {
    step *= 2.0;
    lo = start - step;
  }
  step = hi - start;
  while (f(hi) > 0.0) {
    step *= 2.0;
    hi = start + step;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Point on one side of `peak` where the concave function m drops by `depth`.
template <class F>
double level_crossing(F&& m, double peak, double m_peak, double depth,
                      double dir, double step) {
  double inner = peak, outer = peak + dir * step;
  while (m(outer) > m_peak - depth) {
    inner = outer;
    step *= 2.0;
    outer = peak + dir * step;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (inner + outer);
    if (std::abs(outer - inner) <= 1e-12 * (1.0 + std::abs(mid))) break;
    (m(mid) > m_peak - depth ? inner : outer) = mid;
  }
  return outer;
}

Complex mode_integral_shifted(double n, int eta, double omega, double a,
                              double L, const SwitchingFunction& sw,
                              double rel_tol) {
  const double sigma = sw.sigma();
  const double tau0 = sw.tau0();
  const double k = 2.0 * kPi * n / (a * L);
  const double de = static_cast<double>(eta);

  // Rotation angle of the contour tau = s - i theta / a.
  constexpr double kMaxGrowth = 6.0;
  const double w = std::max(0.0, -omega);
  auto growth = [&](double th) {
    return th * th / (2.0 * a * a * sigma * sigma) + w * th / a;
  };
  double theta = 0.5 * kPi;
  if (growth(theta) > kMaxGrowth) {
    const double x =
        sigma * sigma * (-w + std::sqrt(w * w + 2.0 * kMaxGrowth / (sigma * sigma)));
    theta = std::min(theta, a * x);
  }
  const double delta = theta / a;
  const double damp = k * std::sin(theta);

  auto m = [&](double s) {
    const double u = (s - tau0) / sigma;
    return -0.5 * u * u - de * a * s - damp * std::exp(-de * a * s);
  };
  auto dm = [&](double s) {
    return -(s - tau0) / (sigma * sigma) - de * a +
           de * a * damp * std::exp(-de * a * s);
  };
  const double s_star = decreasing_root(dm, tau0, sigma);
  const double m_star = m(s_star);
  constexpr double kDepth = 40.0;
  const double lo = level_crossing(m, s_star, m_star, kDepth, -1.0, sigma);
  const double hi = level_crossing(m, s_star, m_star, kDepth, +1.0, sigma);

  const double log_norm = -0.25 * std::log(kPi) - 0.5 * std::log(sigma);
  const Complex rate(-de * a, -omega);
  auto g = [&](double s) {
    const Complex tau(s, -delta);
    const Complex u = (tau - tau0) / sigma;
    const Complex e = std::exp(-de * a * tau);
    return std::exp(log_norm - 0.5 * u * u + rate * tau + kI * de * k * e);
  };

  const double edge = std::max(std::exp(-de * a * lo), std::exp(-de * a * hi));
  const double hint = std::abs(omega) + delta / (sigma * sigma) +
                      a * k * std::abs(std::cos(theta)) * edge;
  const double peak = std::abs(g(s_star));
  const double tol = std::max(rel_tol * peak * (hi - lo), 1e-300);
  const auto r = integrate_interval(g, lo, hi, panel_width(sigma, hint), tol);
  return std::sqrt(kPi * n) / L * r.value;
}

Complex mode_integral_real(double n, int eta, double omega, double a, double L,
                           const SwitchingFunction& sw, double rel_tol) {
  const double de = static_cast<double>(eta);
  const double k = 2.0 * kPi * n / (a * L);
  WindowSpec spec;
  const double reach = spec.halfwidth_sigmas * sw.sigma();
  const double hint =
      k * a * std::exp(-de * a * sw.tau0() + a * reach) + std::abs(omega) + a;
  auto f = [&](double tau) {
    return std::exp(Complex(-de * a * tau, -omega * tau) +
                    kI * de * k * std::exp(-de * a * tau));
  };
  // magnitude scale of chi e^{-eta a tau} over the window
  const double scale = std::exp(a * reach - de * a * sw.tau0()) /
                       std::sqrt(std::sqrt(kPi) * sw.sigma());
  spec.target_tol = std::max(rel_tol * scale * sw.sigma(), 1e-300);
  const auto r = integrate_window(f, sw, spec, hint);
  return std::sqrt(kPi * n) / L * r.value;
}

double osc_term_inertial(double n, double omega, double slope, double pref,
                         double sigma) {
  const double y = sigma * (omega + slope * n);
  return pref * n * std::exp(-y * y);
}

}  // namespace

double response_zm_general(const ZeroModeState& zm, const Trajectory& traj,
                           const SwitchingFunction& sw,
                           const CavityParams& cavity, double omega,
                           const WindowSpec& window) {
  const double L = cavity.circumference();
  auto f = [&](double tau) {
    return std::polar(worldline_eval(traj, tau).dtdtau, -omega * tau);
  };
  const auto r = integrate_window(f, sw, window, std::abs(omega));
  return zero_mode_response_coefficient(zm, L) * std::norm(r.value);
}

ResponseBreakdown response_inertial(double omega, double beta,
                                    const CavityParams& cavity,
                                    const SwitchingFunction& sw,
                                    const ZeroModeState& zm,
                                    const SumSpec& sum) {
  require_gaussian(sw);
  if (!std::isfinite(omega) || !std::isfinite(beta)) {
    throw DomainError("Omega and beta must be finite");
  }
  const double L = cavity.circumference();
  const double sigma = sw.sigma();
  const double ch = std::cosh(beta);

  ResponseBreakdown out{0.0, 0.0,
                        ResponseMeta{omega, Trajectory::inertial(beta), sigma,
                                     sw.tau0(), L, zm.pp()}};
  out.f_zm = 2.0 * kSqrtPi * ch * ch / (L * L) * zm.pp() * sigma *
             std::exp(-sigma * sigma * omega * omega);

  constexpr double kUltrarelativistic = 1e-4;
  for (int eta : {+1, -1}) {
    const double slope = 2.0 * kPi * std::exp(-eta * beta) / L;
    const double pref =
        2.0 * kPi * kSqrtPi * sigma / (L * L) * std::exp(-2.0 * eta * beta);
    auto term = [=](double n) {
      return Complex(osc_term_inertial(n, omega, slope, pref, sigma), 0.0);
    };
    SumSpec spec = sum;
    const double n_peak = std::max(0.0, -omega / slope);
    spec.min_terms = std::max<long>(
        spec.min_terms,
        static_cast<long>(std::min(n_peak + 2.0, static_cast<double>(spec.max_terms))));
    SumResult r;
    if (sigma * sigma * slope * slope < kUltrarelativistic) {
      spec.tail_mode = TailMode::integral_comparison;
      // pref * int_M^inf x exp(-sigma^2 (omega + slope x)^2) dx
      auto integral_from = [=](double m) {
        const double y0 = omega + slope * m;
        const double z = sigma * y0;
        const double v = std::exp(-z * z) / (2.0 * sigma * sigma) -
                         omega * kSqrtPi / (2.0 * sigma) * erfc(z);
        return Complex(pref * v / (slope * slope), 0.0);
      };
      r = mode_sum([&](long n) { return term(static_cast<double>(n)); }, spec,
                   ContinuousTail{term, integral_from});
    } else {
      spec.tail_mode = TailMode::geometric_bound;
      r = mode_sum([&](long n) { return term(static_cast<double>(n)); }, spec);
    }
    out.f_osc += r.value.real();
    out.terms_used += r.terms_used;
    out.tail_estimate += r.tail_estimate;
  }
  return out;
}

std::vector<SpectralPeak> longtime_peaks(double beta,
                                         const CavityParams& cavity,
                                         const ZeroModeState& zm,
                                         double omega_max) {
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) {
    throw DomainError("omega_max must be finite and > 0");
  }
  const double L = cavity.circumference();
  const double ch = std::cosh(beta);
  constexpr double kMaxPeaks = 5e7;
  std::vector<SpectralPeak> peaks;
  peaks.push_back({0.0, 2.0 * kPi * ch * ch * zm.pp() / (L * L), PeakSource::zm});
  for (int eta : {+1, -1}) {
    const double spacing = 2.0 * kPi * std::exp(-eta * beta) / L;
    const double count = std::floor(omega_max / spacing * (1.0 + 1e-15));
    if (count > kMaxPeaks) throw DomainError("too many spectral peaks requested");
    const double w = 2.0 * kPi * kPi / (L * L) * std::exp(-2.0 * eta * beta);
    for (long n = 1; n <= static_cast<long>(count); ++n) {
      const double dn = static_cast<double>(n);
      peaks.push_back({-spacing * dn, w * dn, PeakSource::osc, eta, n});
    }
  }
  return peaks;
}

double response_ultrarel(double omega, const SwitchingFunction& sw) {
  require_gaussian(sw);
  const double s = sw.sigma();
  const double z = s * omega;
  return (std::exp(-z * z) / kSqrtPi - z * erfc(z)) / (4.0 * s);
}

Complex accelerated_mode_integral(double n, int eta, double omega,
                                  double accel, double L,
                                  const SwitchingFunction& sw,
                                  ModeIntegralRoute route, double rel_tol) {
  require_accel(accel);
  if (!(n > 0.0)) throw DomainError("mode index must be > 0");
  if (eta != 1 && eta != -1) throw DomainError("eta must be +1 or -1");
  if (!(L > 0.0)) throw DomainError("L must be > 0");
  if (route == ModeIntegralRoute::shifted_contour && sw.is_gaussian()) {
    return mode_integral_shifted(n, eta, omega, accel, L, sw, rel_tol);
  }
  return mode_integral_real(n, eta, omega, accel, L, sw, rel_tol);
}

double response_zm_accelerated(double omega, double accel,
                               const CavityParams& cavity,
                               const SwitchingFunction& sw,
                               const ZeroModeState& zm) {
  require_accel(accel);
  if (!sw.is_gaussian()) {
    return response_zm_general(zm, Trajectory::accelerated(accel), sw, cavity,
                               omega);
  }
  const double L = cavity.circumference();
  const double s = sw.sigma();
  const double c = std::cos(s * s * accel * omega);
  const double sh = std::sinh(accel * sw.tau0());
  return 2.0 * kSqrtPi * s / (L * L) * zm.pp() *
         std::exp(s * s * (accel * accel - omega * omega)) * (c * c + sh * sh);
}

ResponseBreakdown response_accelerated(double omega, double accel,
                                       const CavityParams& cavity,
                                       const SwitchingFunction& sw,
                                       const ZeroModeState& zm,
                                       const SumSpec& sum) {
  require_accel(accel);
  const double L = cavity.circumference();
  ResponseBreakdown out{0.0, 0.0,
                        ResponseMeta{omega, Trajectory::accelerated(accel),
                                     sw.sigma(), sw.tau0(), L, zm.pp()}};
  out.f_zm = response_zm_accelerated(omega, accel, cavity, sw, zm);

  auto term = [&](double n) {
    const Complex jp = accelerated_mode_integral(n, +1, omega, accel, L, sw);
    const Complex jm = accelerated_mode_integral(n, -1, omega, accel, L, sw);
    return Complex(std::norm(jp) + std::norm(jm), 0.0);
  };
  SumSpec spec = sum;
  spec.tail_mode = TailMode::integral_comparison;
  try {
    const SumResult r =
        mode_sum([&](long n) { return term(static_cast<double>(n)); }, spec,
                 ContinuousTail{term, {}});
    out.f_osc = r.value.real();
    out.terms_used = r.terms_used;
    out.tail_estimate = r.tail_estimate;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(
        std::string("accelerated oscillator response: ") + e.what(),
        e.partial_value(), e.achieved_tolerance(), e.work());
  }
  return out;
}

Complex response_mink_accel_complex(double omega, double accel,
                                    const SwitchingFunction& sw,
                                    MinkowskiRoute route) {
  require_accel(accel);
  require_gaussian(sw);
  const double s = sw.sigma();
  const double as = accel * s;
  const double as2 = as * as;
  const double c = s * s * accel * omega - 0.5 * kPi;
  const double base = -s * s * omega * omega;
  const double reach = std::max(30.0, 12.0 * as);

  if (route == MinkowskiRoute::real_axis) {
    const double hint = 2.0 * std::abs(c) / as2;
    auto g = [&](double r) {
      const double ch = std::cosh(r);
      const Complex z(r, c);
      return std::exp(base - z * z / as2) / (ch * ch);
    };
    const double scale = std::exp(base + c * c / as2);
    const auto res = integrate_interval(g, -reach, reach,
                                        std::min(0.25, panel_width(as, hint)),
                                        std::max(1e-14 * scale, 1e-300));
    return accel / (4.0 * kPi) * res.value;
  }

  // Line Im r = h, kept at least d0 away from the poles i(pi/2 + k pi).
  const double d0 = std::min(0.5, as);
  double h = -c;
  const double k_near = std::round((h - 0.5 * kPi) / kPi);
  const double pole = 0.5 * kPi + k_near * kPi;
  if (std::abs(h - pole) < d0) h = h >= pole ? pole + d0 : pole - d0;
  const double eps = h + c;

  // Residues of the crossed double poles, combined in log space.
  Complex residues(0.0, 0.0);
  const double orient = h > 0.0 ? 1.0 : -1.0;
  const double k_first = std::ceil((std::min(0.0, h) - 0.5 * kPi) / kPi);
  const double k_last = std::floor((std::max(0.0, h) - 0.5 * kPi) / kPi);
  for (double k = k_first; k <= k_last; k += 1.0) {
    const double p = 0.5 * kPi + k * kPi;
    if (p <= std::min(0.0, h) || p >= std::max(0.0, h)) continue;
    const double q = p + c;
    // orient * 2 pi i * [2 i q / as2 * exp(q^2 / as2)] * exp(base)
    residues += -orient * 4.0 * kPi * q / as2 * std::exp(base + q * q / as2);
  }

  double dist = std::abs(h - (0.5 * kPi + std::round((h - 0.5 * kPi) / kPi) * kPi));
  const double hint = 2.0 * std::abs(eps) / as2;
  const double width = std::min({0.25 * dist, 0.25 * as, panel_width(as, hint)});
  auto g = [&](double x) {
    const Complex r(x, h);
    const Complex ch = std::cosh(r);
    const Complex z(x, eps);
    return std::exp(base - z * z / as2) / (ch * ch);
  };
  const double line_scale =
      std::exp(base + eps * eps / as2) * as / (dist * dist);
  const double tol =
      std::max(1e-14 * std::max(line_scale, std::abs(residues)), 1e-300);
  const auto line = integrate_interval(g, -reach, reach, width, tol);
  return accel / (4.0 * kPi) * (line.value + residues);
}

double response_mink_accel(double omega, double accel,
                           const SwitchingFunction& sw, MinkowskiRoute route) {
  const Complex v = response_mink_accel_complex(omega, accel, sw, route);
  if (std::abs(v.imag()) > 1e-6 * std::abs(v.real())) {
    throw ConsistencyError("Minkowski response has a non-vanishing imaginary part",
                           std::abs(v.imag()));
  }
  return v.real();
}

double planck_rate(double omega, double accel) {
  require_accel(accel);
  if (omega == 0.0) return accel / (2.0 * kPi);
  return omega / std::expm1(2.0 * kPi * omega / accel);
}

double ratio_zm_osc(double omega, double accel, const CavityParams& cavity,
                    const SwitchingFunction& sw, const ZeroModeState& zm,
                    const SumSpec& sum) {
  const ResponseBreakdown r =
      response_accelerated(omega, accel, cavity, sw, zm, sum);
  if (!(r.f_osc > 1e-300)) {
    throw UnderflowError("oscillator response underflows; ratio undefined");
  }
  return r.f_zm / r.f_osc;
}

}  // namespace cavity_udw
