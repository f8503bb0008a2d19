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

#include "cavity_udw/cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include "cavity_udw/derivative_response.hpp"
#include "cavity_udw/evolution.hpp"

namespace cavity_udw::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<double> kFig1Gaps = {1.0, 0.1};
const std::vector<double> kFig1Sigmas = {1e-5, 1e-3, 1e-2, 0.04, 0.07, 0.1, 0.2};
constexpr double kFig1Length = 1.0;
constexpr double kFig1GammaLo = 1e-2;
constexpr double kFig1GammaHi = 1e3;
constexpr int kFig1Points = 101;

const std::vector<double> kFig2Sigmas = {0.15, 0.25, 0.35, 0.45, 0.5};
constexpr double kFig2Gap = 1.0;
constexpr double kFig2Length = 1.0;
constexpr double kFig2Pp = 1e-6;
constexpr double kFig2AccelLo = 0.5;
constexpr double kFig2AccelHi = 10.0;
constexpr double kFig2AccelStep = 0.5;

const std::vector<double> kFig3Lengths = {0.01, 0.15, 0.2, 0.25, 0.3};
constexpr double kFig3Accel = 1.0;
constexpr double kFig3Sigma = 1.0;
constexpr double kFig3GapStep = 0.25;
constexpr int kFig3Points = 12;

SumSpec figure_sum(const RunOptions& opts, double default_rel) {
  SumSpec s;
  s.abs_tol = 1e-300;
  s.rel_tol = opts.tol.value_or(default_rel);
  s.max_terms = opts.max_terms.value_or(1000000);
  return s;
}

struct Point {
  Point(double x_, std::string series_, double gap_, double scale_)
      : x(x_), series(std::move(series_)), gap(gap_), scale(scale_) {}
  Point() = default;

  double x = 0.0;
  std::string series;
  double gap = 0.0;
  double scale = 0.0;  // sigma or L of the series
  double value = kNaN;
  bool ok = true;
  std::string message;
};

template <class F>
FigureResult tabulate(std::vector<Point> points, const std::string& axis,
                      const std::string& axis_unit, const std::string& quantity,
                      const RunOptions& opts, std::ostream& log, F&& eval) {
  const auto done = parallel_map(points.size(), opts.threads, [&](std::size_t i) {
    Point p = points[i];
    try {
      p.value = eval(p);
    } catch (const ConvergenceError& e) {
      p.ok = false;
      p.value = e.partial_value().real();
      p.message = std::string(e.what()) + " (tail estimate " +
                  format_number(e.achieved_tolerance()) + ")";
    } catch (const UnderflowError& e) {
      p.ok = false;
      p.message = e.what();
    }
    return p;
  });
  FigureResult out;
  out.table.columns = {axis, "series", quantity};
  out.table.units = {axis_unit, "label", "dimensionless"};
  for (const Point& p : done) {
    if (!p.ok) {
      out.converged = false;
      log << "error: " << p.series << ", " << axis << "=" << format_number(p.x)
          << ": " << p.message << '\n';
    }
    out.table.rows.push_back({format_number(p.x), p.series, format_number(p.value)});
  }
  return out;
}

std::string label(const char* name, double v) {
  return std::string(name) + "=" + format_number(v);
}

}  // namespace

std::vector<double> fig1_gamma_grid(double sigma, double omega, double L) {
  std::vector<double> g;
  const double step = std::log10(kFig1GammaHi / kFig1GammaLo) / (kFig1Points - 1);
  for (int k = 0; k < kFig1Points; ++k) {
    g.push_back(kFig1GammaLo * std::pow(10.0, step * k));
  }
  const GammaZeros z = gamma_zeros(CavityParams(L), SwitchingFunction::gaussian(sigma),
                                   DetectorParams(omega, 1.0));
  for (double v : {z.gamma_minus, z.gamma_plus}) {
    if (v >= kFig1GammaLo && v <= kFig1GammaHi) g.push_back(v);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::vector<double> fig2_accel_grid(double sigma, double omega) {
  std::vector<double> a;
  const int count =
      static_cast<int>(std::round((kFig2AccelHi - kFig2AccelLo) / kFig2AccelStep));
  for (int k = 0; k <= count; ++k) a.push_back(kFig2AccelLo + kFig2AccelStep * k);
  const double unit = 1.0 / (sigma * sigma * omega);
  for (int k = 0;; ++k) {
    const double zero = (0.5 * kPi + kPi * k) * unit;
    if (zero > kFig2AccelHi) break;
    if (zero >= kFig2AccelLo) a.push_back(zero);
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<double> fig3_gap_grid() {
  std::vector<double> w;
  for (int k = 1; k <= kFig3Points; ++k) w.push_back(kFig3GapStep * k);
  return w;
}

FigureResult figure1(const RunOptions& opts, std::ostream& log) {
  std::vector<Point> pts;
  for (double omega : kFig1Gaps) {
    for (double sigma : kFig1Sigmas) {
      const std::string series = label("Omega", omega) + ";" + label("sigma", sigma);
      for (double g : fig1_gamma_grid(sigma, omega, kFig1Length)) {
        pts.emplace_back(g, series, omega, sigma);
      }
    }
  }
  const SumSpec sum = figure_sum(opts, 1e-10);
  const CavityParams cavity(kFig1Length);
  return tabulate(pts, "gamma", "dimensionless", "S_plus", opts, log,
                  [&](const Point& p) {
                    return relative_strength_S(Sign::plus, p.x,
                                               DetectorParams(p.gap, 1.0),
                                               SwitchingFunction::gaussian(p.scale),
                                               cavity, sum);
                  });
}

FigureResult figure2(const RunOptions& opts, std::ostream& log) {
  std::vector<Point> pts;
  for (double sigma : kFig2Sigmas) {
    for (double a : fig2_accel_grid(sigma, kFig2Gap)) {
      pts.emplace_back(a, label("sigma", sigma), kFig2Gap, sigma);
    }
  }
  const SumSpec sum = figure_sum(opts, 1e-8);
  const ZeroModeState zm = gaussian_zero_mode(2.0 * kFig2Pp);
  const CavityParams cavity(kFig2Length);
  return tabulate(pts, "a", "1/length", "Z_zm", opts, log, [&](const Point& p) {
    const auto sw = SwitchingFunction::gaussian(p.scale, 0.0);
    try {
      return ratio_zm_osc(p.gap, p.x, cavity, sw, zm, sum);
    } catch (const ConvergenceError& e) {
      const double f_zm = response_zm_accelerated(p.gap, p.x, cavity, sw, zm);
      throw ConvergenceError(e.what(), f_zm / e.partial_value().real(),
                             e.achieved_tolerance(), e.work());
    }
  });
}

FigureResult figure3(const RunOptions& opts, std::ostream& log) {
  std::vector<Point> pts;
  for (double L : kFig3Lengths) {
    for (double w : fig3_gap_grid()) pts.emplace_back(w, label("L", L), w, L);
  }
  const SumSpec sum = figure_sum(opts, 1e-8);
  const ZeroModeState zm = gaussian_zero_mode(1.0);
  const auto sw = SwitchingFunction::gaussian(kFig3Sigma, 0.0);
  return tabulate(pts, "omega", "1/length", "rel_gap", opts, log, [&](const Point& p) {
    const double fm = response_mink_accel(p.x, kFig3Accel, sw);
    const double fo =
        response_accelerated(p.x, kFig3Accel, CavityParams(p.scale), sw, zm, sum).f_osc;
    return std::abs(fm - fo) / fm;
  });
}

ExitCode run_figure(Figure which, const std::string& dir, const RunOptions& opts,
                    std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("--out", "cannot create '" + dir + "': " + ec.message());
  FigureResult r;
  std::string name;
  switch (which) {
    case Figure::fig1:
      r = figure1(opts, log);
      name = "fig1.csv";
      break;
    case Figure::fig2:
      r = figure2(opts, log);
      name = "fig2.csv";
      break;
    case Figure::fig3:
      r = figure3(opts, log);
      name = "fig3.csv";
      break;
  }
  r.table.save((std::filesystem::path(dir) / name).string());
  return r.converged ? ExitCode::ok : ExitCode::numerical;
}

}  // namespace cavity_udw::cli
