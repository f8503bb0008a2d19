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

#include "cavity_udw/evolution.hpp"

#include <cmath>

#include "cavity_udw/wightman.hpp"

namespace cavity_udw {
namespace {

constexpr Complex kI(0.0, 1.0);

double require_inertial(const Trajectory& traj) {
  if (!traj.is_inertial()) {
    throw DomainError("oscillator couplings need an inertial trajectory");
  }
  return traj.rapidity();
}

// Mode |n| = an with chirality +-1 (sign of n), continuous in an.
double doppler(double an, int chirality, double beta, double L) {
  return 2.0 * kPi * an / L * std::exp(-chirality * beta);
}

Complex gaussian_I(double an, int chirality, double s, double gap,
                   double lambda, double beta, const SwitchingFunction& sw,
                   double L) {
  const double w = doppler(an, chirality, beta, L);
  return -kI * lambda / std::sqrt(4.0 * kPi * an) * sw.fourier(-(s * gap + w));
}

// int_0^inf e^{i nu D} e^{-D^2/(4 sigma^2)} dD
Complex half_transform(double nu, double sigma) {
  const double x = sigma * nu;
  return {sigma * std::sqrt(kPi) * std::exp(-x * x), 2.0 * sigma * dawson(x)};
}

Complex gaussian_G(double an, int chirality, double s, double gap,
                   double lambda, double beta, const SwitchingFunction& sw,
                   double L) {
  const double w = doppler(an, chirality, beta, L);
  return -lambda * lambda / (4.0 * kPi * an) *
         half_transform(s * gap - w, sw.sigma());
}

struct ModeTerms {
  double diag = 0.0;
  Complex off{0.0, 0.0};
};

// One mode pair (+an, -an) of the oscillator correction.
template <class IFn, class GFn>
ModeTerms mode_pair(double an, const DetectorState& rho0, bool with_off,
                    IFn&& coupling_i, GFn&& coupling_g) {
  ModeTerms out;
  const double a = rho0.a();
  const Complex b = rho0.b();
  for (int chirality : {+1, -1}) {
    const Complex ip = coupling_i(an, chirality, +1.0);
    const Complex im = coupling_i(an, chirality, -1.0);
    out.diag += (1.0 - a) * std::norm(im) - a * std::norm(ip);
    if (with_off) {
      const Complex gp = coupling_g(an, chirality, +1.0);
      const Complex gm = coupling_g(an, chirality, -1.0);
      out.off += std::conj(b) * im * std::conj(ip) + b * (gm + std::conj(gp));
    }
  }
  return out;
}

// Index past which Gaussian-in-n terms are smooth and decreasing.
long peak_clearance(double gap, double beta, double sigma, double L,
                    long max_terms) {
  const double spread = std::exp(std::abs(beta));
  const double n_peak = std::abs(gap) * L * spread / (2.0 * kPi);
  const double slope = sigma * 2.0 * kPi / (L * spread);
  double n = std::ceil(n_peak) + 2.0;
  if (slope >= 0.5) n += std::ceil(6.0 / slope);
  return static_cast<long>(std::min<double>(n, static_cast<double>(max_terms)));
}

Matrix2 hermitian_traceless(double diag, Complex off) {
  Matrix2 m;
  m << Complex(diag, 0.0), off, std::conj(off), Complex(-diag, 0.0);
  return m;
}

void require_centered_gaussian(const SwitchingFunction& sw) {
  if (!sw.is_gaussian() || sw.tau0() != 0.0) {
    throw DomainError("closed form needs a Gaussian window centred at 0");
  }
}

}  // namespace

double doppler_frequency(long n, double beta, double L) {
  if (n == 0) throw DomainError("n must be nonzero");
  return doppler(static_cast<double>(std::labs(n)), n > 0 ? 1 : -1, beta, L);
}

CouplingI coupling_I(long n, Sign sign, const DetectorParams& det,
                     const Trajectory& traj, const SwitchingFunction& sw,
                     const CavityParams& cavity, const WindowSpec& window) {
  const double beta = require_inertial(traj);
  const double L = cavity.circumference();
  const double s = sign_value(sign);
  const double w = doppler_frequency(n, beta, L);
  auto f = [&](double tau) {
    const WorldlinePoint p = worldline_eval(traj, tau);
    return std::polar(1.0, s * det.gap() * tau) *
           std::conj(mode_function(n, L, p.t, p.x));
  };
  const auto r = integrate_window(f, sw, window, w + std::abs(det.gap()));
  return {n, sign, -kI * det.coupling() * r.value};
}

CouplingG coupling_G(long n, Sign sign, const DetectorParams& det,
                     const Trajectory& traj, const SwitchingFunction& sw,
                     const CavityParams& cavity, const WindowSpec& window) {
  const double beta = require_inertial(traj);
  const double L = cavity.circumference();
  const double s = sign_value(sign);
  const double w = doppler_frequency(n, beta, L);
  auto f2 = [&](double tau, double taup) {
    const WorldlinePoint p = worldline_eval(traj, tau);
    const WorldlinePoint q = worldline_eval(traj, taup);
    return std::polar(1.0, s * det.gap() * (tau - taup)) *
           mode_function(n, L, p.t, p.x) *
           std::conj(mode_function(n, L, q.t, q.x));
  };
  const auto r = integrate_triangle(f2, sw, window, w + std::abs(det.gap()));
  const double lambda = det.coupling();
  return {n, sign, -lambda * lambda * r.value};
}

Complex coupling_I_gaussian(long n, Sign sign, const DetectorParams& det,
                            double beta, const SwitchingFunction& sw,
                            double L) {
  if (n == 0) throw DomainError("n must be nonzero");
  if (!sw.is_gaussian()) throw DomainError("closed form needs a Gaussian window");
  return gaussian_I(static_cast<double>(std::labs(n)), n > 0 ? 1 : -1,
                    sign_value(sign), det.gap(), det.coupling(), beta, sw, L);
}

Complex coupling_G_gaussian(long n, Sign sign, const DetectorParams& det,
                            double beta, const SwitchingFunction& sw,
                            double L) {
  if (n == 0) throw DomainError("n must be nonzero");
  if (!sw.is_gaussian()) throw DomainError("closed form needs a Gaussian window");
  return gaussian_G(static_cast<double>(std::labs(n)), n > 0 ? 1 : -1,
                    sign_value(sign), det.gap(), det.coupling(), beta, sw, L);
}

DensityContribution rho_osc_second(const DetectorState& rho0,
                                   const DetectorParams& det,
                                   const Trajectory& traj,
                                   const SwitchingFunction& sw,
                                   const CavityParams& cavity,
                                   const SumSpec& sum,
                                   const WindowSpec& window) {
  const double beta = require_inertial(traj);
  const double L = cavity.circumference();
  const bool with_off = rho0.b() != Complex(0.0, 0.0);
  const double gap = det.gap();
  const double lambda = det.coupling();

  double diag = 0.0;
  Complex off(0.0, 0.0);
  if (sw.is_gaussian()) {
    auto ci = [&](double an, int c, double s) {
      return gaussian_I(an, c, s, gap, lambda, beta, sw, L);
    };
    auto cg = [&](double an, int c, double s) {
      return gaussian_G(an, c, s, gap, lambda, beta, sw, L);
    };
    SumSpec spec = sum;
    spec.tail_mode = TailMode::integral_comparison;
    spec.min_terms = std::max(
        spec.min_terms, peak_clearance(gap, beta, sw.sigma(), L, spec.max_terms));
    auto diag_at = [&](double an) {
      return Complex(mode_pair(an, rho0, false, ci, cg).diag, 0.0);
    };
    diag = mode_sum([&](long n) { return diag_at(static_cast<double>(n)); },
                    spec, ContinuousTail{diag_at, {}})
               .value.real();
    if (with_off) {
      auto off_at = [&](double an) { return mode_pair(an, rho0, true, ci, cg).off; };
      off = mode_sum([&](long n) { return off_at(static_cast<double>(n)); },
                     spec, ContinuousTail{off_at, {}})
                .value;
    }
  } else {
    auto ci = [&](double an, int c, double s) {
      const long n = c * static_cast<long>(an);
      return coupling_I(n, s > 0 ? Sign::plus : Sign::minus, det, traj, sw,
                        cavity, window)
          .value;
    };
    auto cg = [&](double an, int c, double s) {
      const long n = c * static_cast<long>(an);
      return coupling_G(n, s > 0 ? Sign::plus : Sign::minus, det, traj, sw,
                        cavity, window)
          .value;
    };
    SumSpec spec = sum;
    spec.tail_mode = TailMode::geometric_bound;
    spec.min_terms = std::max(
        spec.min_terms, peak_clearance(gap, beta, sw.sigma(), L, spec.max_terms));
    diag = mode_sum(
               [&](long n) {
                 return Complex(
                     mode_pair(static_cast<double>(n), rho0, false, ci, cg).diag,
                     0.0);
               },
               spec)
               .value.real();
    if (with_off) {
      off = mode_sum(
                [&](long n) {
                  return mode_pair(static_cast<double>(n), rho0, true, ci, cg).off;
                },
                spec)
                .value;
    }
  }
  return {hermitian_traceless(diag, off), Order::lambda2, Source::osc};
}

DensityContribution rho_zm_first(const DetectorState& rho0,
                                 const DetectorParams& det,
                                 const ZeroModeState& zm,
                                 const Trajectory& traj,
                                 const SwitchingFunction& sw,
                                 const CavityParams& cavity,
                                 const WindowSpec& window) {
  const double L = cavity.circumference();
  const double a = rho0.a();
  const Complex b = rho0.b();
  const double gap = det.gap();
  auto f = [&](double tau) {
    const double q = zm.mean_q() + zm.mean_p() * worldline_eval(traj, tau).t / L;
    const Complex e = std::polar(1.0, -gap * tau);
    Matrix2 m;
    m << 2.0 * (kI * std::conj(b) * e).real(), kI * (1.0 - 2.0 * a) * e,
        kI * (2.0 * a - 1.0) * std::conj(e), 2.0 * (kI * b * std::conj(e)).real();
    return Matrix2(q * m);
  };
  const auto r = integrate_window_t(f, sw, window, std::abs(gap));
  return {Matrix2(-det.coupling() * r.value), Order::lambda1, Source::zm};
}

ZeroModeSecondBlocks rho_zm_second_blocks(const DetectorState& rho0,
                                          const DetectorParams& det,
                                          const ZeroModeState& zm,
                                          const Trajectory& traj,
                                          const SwitchingFunction& sw,
                                          const CavityParams& cavity,
                                          const WindowSpec& window) {
  const double L = cavity.circumference();
  const double a = rho0.a();
  const Complex b = rho0.b();
  const Complex bc = std::conj(b);
  const double gap = det.gap();
  const double l2 = det.coupling() * det.coupling();
  auto wz = [&](double x, double y) {
    return wightman_zm(zm, L, worldline_eval(traj, x).t,
                       worldline_eval(traj, y).t);
  };

  auto sandwich = [&](double tau, double taup) {
    const Complex d = std::polar(1.0, -gap * (tau - taup));
    const Complex s = std::polar(1.0, -gap * (tau + taup));
    Matrix2 m;
    m << (1.0 - a) * d, bc * s, b * std::conj(s), a * std::conj(d);
    return Matrix2(wz(taup, tau) * m);
  };
  auto left = [&](double tau, double taup) {
    const Complex d = std::polar(1.0, -gap * (tau - taup));
    Matrix2 m;
    m << a * d, b * d, bc * std::conj(d), (1.0 - a) * std::conj(d);
    return Matrix2(wz(tau, taup) * m);
  };
  auto right = [&](double tau, double taup) {
    const Complex d = std::polar(1.0, gap * (tau - taup));
    Matrix2 m;
    m << a * d, b * std::conj(d), bc * d, (1.0 - a) * std::conj(d);
    return Matrix2(wz(taup, tau) * m);
  };
  const double hint = std::abs(gap);
  ZeroModeSecondBlocks out;
  out.sandwich = l2 * integrate_square_t(sandwich, sw, window, hint).value;
  out.left = -l2 * integrate_triangle_t(left, sw, window, hint).value;
  out.right = -l2 * integrate_triangle_t(right, sw, window, hint).value;
  return out;
}

DensityContribution rho_zm_second(const DetectorState& rho0,
                                  const DetectorParams& det,
                                  const ZeroModeState& zm,
                                  const Trajectory& traj,
                                  const SwitchingFunction& sw,
                                  const CavityParams& cavity,
                                  const WindowSpec& window) {
  const auto blocks =
      rho_zm_second_blocks(rho0, det, zm, traj, sw, cavity, window);
  return {Matrix2(blocks.sandwich + blocks.left + blocks.right),
          Order::lambda2, Source::zm};
}

Evolution evolve_density(const DetectorState& rho0, const DetectorParams& det,
                         const ZeroModeState& zm, const Trajectory& traj,
                         const SwitchingFunction& sw,
                         const CavityParams& cavity, const SumSpec& sum,
                         const WindowSpec& window) {
  Evolution ev;
  ev.parts.push_back(rho_zm_first(rho0, det, zm, traj, sw, cavity, window));
  ev.parts.push_back(rho_osc_second(rho0, det, traj, sw, cavity, sum, window));
  ev.parts.push_back(rho_zm_second(rho0, det, zm, traj, sw, cavity, window));
  ev.rho = rho0.matrix();
  for (const auto& p : ev.parts) ev.rho += p.matrix;
  return ev;
}

double estimator_E_zm(Sign sign, double gamma, const DetectorParams& det,
                      const SwitchingFunction& sw, const CavityParams& cavity,
                      EvalPath path, const WindowSpec& window) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be > 0");
  const double L = cavity.circumference();
  const double s = sign_value(sign);
  const double gap = det.gap();
  const double l2 = det.coupling() * det.coupling();
  if (path == EvalPath::closed_form) {
    require_centered_gaussian(sw);
    const double sg = sw.sigma();
    const double sg2 = sg * sg;
    const double bracket = gamma * sg2 * sg2 * sg * gap * gap / (2.0 * L * L) +
                           sg / gamma - s * 2.0 * sg2 * sg * gap / L;
    return l2 * std::sqrt(kPi) * std::exp(-sg2 * gap * gap) * bracket;
  }
  auto f2 = [&](double tau, double taup) {
    const Complex kernel(1.0 / gamma + gamma * tau * taup / (2.0 * L * L),
                         (tau - taup) / L);
    return kernel * std::polar(1.0, s * gap * (tau - taup));
  };
  const auto r = integrate_square(f2, sw, window, std::abs(gap));
  return 0.5 * l2 * r.value.real();
}

double estimator_E_osc(Sign sign, const DetectorParams& det,
                       const SwitchingFunction& sw, const CavityParams& cavity,
                       const SumSpec& sum, EvalPath path,
                       const WindowSpec& window) {
  const double L = cavity.circumference();
  const double s = sign_value(sign);
  const double gap = det.gap();
  const double l2 = det.coupling() * det.coupling();
  SumSpec spec = sum;
  spec.min_terms = std::max(
      spec.min_terms, peak_clearance(gap, 0.0, sw.sigma(), L, spec.max_terms));
  if (path == EvalPath::closed_form) {
    require_centered_gaussian(sw);
    const double sg = sw.sigma();
    auto term = [&](double n) {
      const double x = sg * (2.0 * kPi * n + s * L * gap) / L;
      return Complex(l2 * sg / (n * std::sqrt(kPi)) * std::exp(-x * x), 0.0);
    };
    spec.tail_mode = TailMode::integral_comparison;
    return mode_sum([&](long n) { return term(static_cast<double>(n)); }, spec,
                    ContinuousTail{term, {}})
        .value.real();
  }
  auto term = [&](long n) {
    const double k = 2.0 * kPi * static_cast<double>(n) / L + s * gap;
    const auto r = integrate_window(
        [k](double tau) { return std::polar(1.0, k * tau); }, sw, window, k);
    return Complex(l2 * std::norm(r.value) / (2.0 * kPi * static_cast<double>(n)),
                   0.0);
  };
  spec.tail_mode = TailMode::geometric_bound;
  return mode_sum(term, spec).value.real();
}

double relative_strength_S(Sign sign, double gamma, const DetectorParams& det,
                           const SwitchingFunction& sw,
                           const CavityParams& cavity, const SumSpec& sum,
                           EvalPath path) {
  WindowSpec window;
  if (path == EvalPath::integral) window.target_tol = 1e-14;
  const double ezm = estimator_E_zm(sign, gamma, det, sw, cavity, path, window);
  const double eosc = estimator_E_osc(sign, det, sw, cavity, sum, path, window);
  if (std::abs(eosc) < 1e-300) {
    throw UnderflowError("oscillator estimator underflows; ratio undefined");
  }
  return std::abs(ezm) / std::abs(eosc);
}

GammaZeros gamma_zeros(const CavityParams& cavity, const SwitchingFunction& sw,
                       const DetectorParams& det) {
  const double gap = det.gap();
  if (gap == 0.0) {
    throw DomainError("gapless detector has no cancellation point");
  }
  const double base = cavity.circumference() / (sw.sigma() * sw.sigma() * gap);
  const double r2 = std::sqrt(2.0);
  return {(2.0 + r2) * base, (2.0 - r2) * base};
}

}  // namespace cavity_udw
