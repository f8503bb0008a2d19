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

// Acceptance runner: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavity_udw/derivative_response.hpp"
#include "cavity_udw/evolution.hpp"
#include "cavity_udw/wightman.hpp"

using namespace cavity_udw;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

Outcome closed_form_cancellation() {
  struct Case {
    double L, sigma, omega;
  };
  double worst_closed = 0.0, worst_numeric = 0.0;
  for (const Case c : {Case{1, 1, 1}, Case{1, 0.1, 1}, Case{2, 0.5, 0.3}}) {
    const CavityParams cav(c.L);
    const auto sw = SwitchingFunction::gaussian(c.sigma);
    const DetectorParams det(c.omega, 1.0);
    const auto z = gamma_zeros(cav, sw, det);
    for (double g : {z.gamma_plus, z.gamma_minus}) {
      worst_closed = std::max(worst_closed, std::abs(estimator_E_zm(Sign::plus, g, det, sw, cav)));
      worst_numeric = std::max(
          worst_numeric,
          std::abs(estimator_E_zm(Sign::plus, g, det, sw, cav, EvalPath::integral)));
    }
  }
  return {worst_closed < 1e-12 && worst_numeric < 1e-7,
          "max |E| closed " + sci(worst_closed) + ", integral " + sci(worst_numeric)};
}

Outcome dual_path_equivalence() {
  const CavityParams cav(1.0);
  SumSpec sum;
  sum.abs_tol = 1e-300;
  sum.rel_tol = 1e-12;
  WindowSpec line;
  line.target_tol = 1e-14;
  const WindowSpec square;
  double worst = 0.0;
  for (double sigma : {0.2, 0.4, 0.6}) {
    const auto sw = SwitchingFunction::gaussian(sigma);
    for (double omega : {0.5, 1.0, 2.0}) {
      const DetectorParams det(omega, 1.0);
      for (Sign s : {Sign::plus, Sign::minus}) {
        const double cf = estimator_E_osc(s, det, sw, cav, sum);
        const double num = estimator_E_osc(s, det, sw, cav, sum, EvalPath::integral, line);
        worst = std::max(worst, rel_diff(cf, num));
        for (double gamma : {0.3, 1.0, 3.0}) {
          const double zc = estimator_E_zm(s, gamma, det, sw, cav);
          const double zn = estimator_E_zm(s, gamma, det, sw, cav, EvalPath::integral, square);
          worst = std::max(worst, rel_diff(zc, zn));
        }
      }
    }
  }
  return {worst < 1e-6, "max relative difference " + sci(worst)};
}

Outcome zero_mode_response_zeros() {
  const CavityParams cav(1.0);
  const auto zm = gaussian_zero_mode(2e-6);
  double worst = 0.0;
  for (double sigma : {0.45, 0.5}) {
    const auto sw = SwitchingFunction::gaussian(sigma);
    const double a = 0.5 * kPi / (sigma * sigma);
    const double rest = response_zm_accelerated(1.0, 1e-9, cav, sw, zm);
    worst = std::max(worst, response_zm_accelerated(1.0, a, cav, sw, zm) / rest);
  }
  return {worst < 1e-12, "max f_zm / f_zm(a->0) " + sci(worst)};
}

Outcome minkowski_convergence() {
  const auto sw = SwitchingFunction::gaussian(1.0);
  const auto zm = gaussian_zero_mode(2.0);
  const std::vector<double> lengths{0.01, 0.15, 0.2, 0.25, 0.3};
  bool monotone = true, halved = true;
  std::ostringstream detail;
  for (double omega : {0.5, 1.0, 2.0}) {
    const double mink = response_mink_accel(omega, 1.0, sw);
    std::vector<double> gaps;
    for (double L : lengths) {
      const double f = response_accelerated(omega, 1.0, CavityParams(L), sw, zm).f_osc;
      gaps.push_back(std::abs(mink - f) / mink);
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) monotone = monotone && gaps[i] < gaps[i - 1];
    halved = halved && gaps.back() <= 0.5 * gaps.front();
    detail << "Omega=" << omega << ": gap " << sci(gaps.front()) << " -> " << sci(gaps.back())
           << "; ";
  }
  detail << (monotone ? "monotone" : "not monotone") << ", "
         << (halved ? "halved" : "not halved");
  return {monotone && halved, detail.str()};
}

Outcome planckian_limit() {
  const double target = 0.5 / (std::exp(kPi) - 1.0);
  const double p = planck_rate(0.5, 1.0);
  const double f = response_mink_accel(0.5, 1.0, SwitchingFunction::gaussian(20.0));
  double balance = 0.0;
  for (double w : {0.1, 0.5, 2.0}) {
    for (double a : {0.5, 1.0, 3.0}) {
      balance = std::max(balance, rel_diff(planck_rate(-w, a) / planck_rate(w, a),
                                           std::exp(2.0 * kPi * w / a)));
    }
  }
  const double rel = std::abs(f - p) / p;
  return {rel_diff(p, target) < 1e-14 && rel < 0.02 && balance < 1e-12,
          "F_Mink/Planck - 1 = " + sci(rel) + ", detailed balance " + sci(balance)};
}

Outcome ultrarelativistic_half() {
  const auto zm = gaussian_zero_mode(2.0);
  const CavityParams cav(1.0);
  const auto sw = SwitchingFunction::gaussian(1.0);
  double worst_beta = 0.0;
  for (double omega : {0.0, 0.5, -0.5}) {
    const double f = response_inertial(omega, 12.0, cav, sw, zm).f_osc;
    worst_beta = std::max(worst_beta, rel_diff(f, response_ultrarel(omega, sw)));
  }
  // scale for the 2% comparisons: the step height at |Omega| = 1
  const double scale = 0.5;
  const auto wide = SwitchingFunction::gaussian(50.0);
  double worst_step = 0.0, worst_order = 0.0;
  for (double omega : {-1.0, 1.0}) {
    const double step = omega < 0.0 ? -0.5 * omega : 0.0;
    const double rapid_first = response_ultrarel(omega, wide);
    // long time first: peak weight per unit frequency around omega at beta = 12
    const double half = 0.05;
    double weight = 0.0;
    for (const auto& p : longtime_peaks(12.0, cav, zm, std::abs(omega) + half)) {
      if (p.source == PeakSource::osc && std::abs(p.omega - omega) <= half) weight += p.weight;
    }
    const double long_first = weight / (2.0 * half);
    worst_step = std::max(worst_step, std::abs(rapid_first - step) / scale);
    worst_order = std::max(worst_order, std::abs(rapid_first - long_first) / scale);
  }
  return {worst_beta < 0.01 && worst_step < 0.02 && worst_order < 0.02,
          "beta=12 vs limit " + sci(worst_beta) + ", step " + sci(worst_step) +
              ", limit orders " + sci(worst_order)};
}

bool traceless_hermitian(const Matrix2& m) {
  const double scale = std::max(1.0, m.norm());
  return std::abs(m.trace()) <= 1e-9 * scale && (m - m.adjoint()).norm() <= 1e-9 * scale;
}

Outcome density_matrix_suite() {
  std::mt19937_64 rng(20261017);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int structural = 0, centred = 0, diagonal = 0, decoupled = 0;
  const int trials = 50;
  for (int k = 0; k < trials; ++k) {
    const double a = u(rng);
    const DetectorState rho0(
        a, std::polar(std::sqrt(a * (1.0 - a)) * u(rng), 2.0 * kPi * u(rng)));
    const double mq = 2.0 * u(rng) - 1.0, mp = 2.0 * u(rng) - 1.0;
    const double c1 = 0.3 + 1.7 * u(rng), r = u(rng) - 0.5;
    const double c2 = (0.25 + r * r) / c1 * (1.0 + u(rng));
    const ZeroModeState zm(mq, mp, mq * mq + c1, mp * mp + c2, Complex(mq * mp + r, 0.5));
    const DetectorParams det(3.0 * u(rng), 0.1 + u(rng));
    const auto sw = SwitchingFunction::gaussian(0.5 + 1.5 * u(rng), 2.0 * u(rng) - 1.0);
    const CavityParams cav(0.5 + 4.5 * u(rng));
    const auto traj = Trajectory::inertial(2.0 * u(rng) - 1.0);

    const auto ev = evolve_density(rho0, det, zm, traj, sw, cav);
    bool ok = true;
    for (const auto& p : ev.parts) ok = ok && traceless_hermitian(p.matrix);
    structural += ok;

    const auto still = rho_zm_first(rho0, det, gaussian_zero_mode(0.5 + u(rng)), traj, sw, cav);
    centred += still.matrix.norm() == 0.0;

    const auto pop = rho_zm_first(DetectorState(a, 0.0), det, zm, traj, sw, cav);
    diagonal += pop.matrix(0, 0) == Complex(0.0, 0.0) && pop.matrix(1, 1) == Complex(0.0, 0.0);

    const auto other = rho_osc_second(rho0, det, traj, sw, cav);
    decoupled += other.matrix == ev.parts[1].matrix;
  }
  std::ostringstream d;
  d << structural << "/" << trials << " traceless hermitian, " << centred << "/" << trials
    << " centred zero, " << diagonal << "/" << trials << " diagonal zero, " << decoupled << "/"
    << trials << " decoupled";
  return {structural == trials && centred == trials && diagonal == trials && decoupled == trials,
          d.str()};
}

Outcome wightman_suite() {
  double partial = 0.0;
  for (double L : {1.0, 2.5}) {
    for (double du : {-0.4, 0.1, 0.7}) {
      for (double dv : {-0.3, 0.6}) {
        const NullSeparation s{du * L, dv * L, 0.05 * L};
        partial = std::max(partial, std::abs(wightman_osc_closed(s, L) -
                                             wightman_osc_partial(s, L, 2000)));
      }
    }
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  double anti = 0.0;
  const std::vector<ZeroModeState> states{gaussian_zero_mode(0.2), gaussian_zero_mode(5.0),
                                          ZeroModeState(0.4, -1.1, 2.0, 3.5, Complex(0.7, 0.5))};
  bool energy = true, coefficient = true;
  for (const auto& z : states) {
    for (int k = 0; k < 50; ++k) {
      const double t = u(rng), tp = u(rng), L = 0.5 + std::abs(u(rng));
      const Complex d = wightman_zm(z, L, t, tp) - wightman_zm(z, L, tp, t);
      anti = std::max(anti, std::abs(d - Complex(0.0, -(t - tp) / L)));
    }
    for (double L : {0.3, 1.0, 6.0}) {
      const auto se = stress_energy(z, L);
      energy = energy && se.tt_osc == -kPi / (6.0 * (L * L)) && se.tt_zm == z.pp() / (2.0 * (L * L));
      coefficient = coefficient && zero_mode_response_coefficient(z, L) == 2.0 * se.tt_zm;
    }
  }
  return {partial < 1e-10 && anti < 1e-12 && energy && coefficient,
          "closed vs partial " + sci(partial) + ", antisymmetric part " + sci(anti) +
              (energy ? ", energies exact" : ", energies differ") +
              (coefficient ? ", coefficient exact" : ", coefficient differs")};
}

Outcome resonance_growth() {
  const double L = 2.0 * kPi, omega = 2.0 * kPi / L;
  const CavityParams cav(L);
  const DetectorParams det(omega, 1.0);
  const std::vector<double> sigmas{5.0, 10.0, 20.0};
  std::vector<double> osc;
  for (double s : sigmas) {
    osc.push_back(estimator_E_osc(Sign::minus, det, SwitchingFunction::gaussian(s), cav));
  }
  const double r1 = osc[1] / osc[0], r2 = osc[2] / osc[0];
  const bool linear = std::abs(r1 / 2.0 - 1.0) < 1e-3 && std::abs(r2 / 4.0 - 1.0) < 1e-3;
  bool decays = true;
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
      const double prev = estimator_E_zm(s, 1.0, det, SwitchingFunction::gaussian(sigmas[i - 1]), cav);
      const double cur = estimator_E_zm(s, 1.0, det, SwitchingFunction::gaussian(sigmas[i]), cav);
      const double bound =
          std::exp(-0.5 * (sigmas[i] * sigmas[i] - sigmas[i - 1] * sigmas[i - 1]) * omega * omega);
      decays = decays && std::abs(cur) <= std::abs(prev) * bound;
    }
  }
  std::ostringstream d;
  d << "E_osc ratios 1:" << r1 << ":" << r2 << (decays ? ", E_zm decays" : ", E_zm too slow");
  return {linear && decays, d.str()};
}

struct Captured {
  int code;
  std::string output;
};

Captured capture(const std::string& cmd) {
  Captured c{-1, ""};
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return c;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) c.output += buf;
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_determinism(const std::string& exe) {
  if (exe.empty() || !fs::exists(exe)) return {false, "cli executable not found"};
  const fs::path dir = fs::current_path() / "acceptance_out";
  fs::create_directories(dir);
  const auto a = capture(exe + " --threads 1 fig 2 --out " + (dir / "run1").string());
  const auto b = capture(exe + " --threads 4 fig 2 --out " + (dir / "run2").string());
  const std::string first = slurp(dir / "run1" / "fig2.csv");
  const std::string second = slurp(dir / "run2" / "fig2.csv");
  const bool same = a.code == 0 && b.code == 0 && !first.empty() && first == second;

  const fs::path bad = dir / "invalid.json";
  std::ofstream(bad) << R"({"kind": "response", "physics": {"cavity": {"L": -1.0},)"
                     << R"( "detector": {"gap": 1.0}, "trajectory": {"kind": "inertial"},)"
                     << R"( "switching": {"sigma": 1.0}}, "output": {"path": ")"
                     << (dir / "invalid.csv").string() << R"("}})";
  const auto c = capture(exe + " run " + bad.string());
  const bool diagnosed = c.code == 2 && c.output.find("physics.cavity.L") != std::string::npos;
  return {same && diagnosed, std::string(same ? "fig2 byte-identical" : "fig2 runs differ") +
                                 ", invalid config exit " + std::to_string(c.code) +
                                 (diagnosed ? " with field diagnostic" : " without diagnostic")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string exe;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 10));
  app.add_option("--cli", exe, "path of the cavity-udw executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "closed-form cancellation", 1.0, closed_form_cancellation},
      {2, "estimator dual-path equivalence", 30.0, dual_path_equivalence},
      {3, "zero-mode response zeros", 1.0, zero_mode_response_zeros},
      {4, "cavity to Minkowski convergence", 300.0, minkowski_convergence},
      {5, "Planckian limit", 10.0, planckian_limit},
      {6, "ultrarelativistic half-Minkowski", 60.0, ultrarelativistic_half},
      {7, "density-matrix structure", 120.0, density_matrix_suite},
      {8, "Wightman and commutator suite", 10.0, wightman_suite},
      {9, "resonance growth", 1.0, resonance_growth},
      {10, "CLI determinism", 60.0, [&] { return cli_determinism(exe); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    if (!in_time) out.detail += ", over the time limit";
    const bool pass = out.pass && in_time;
    failures += !pass;
    char head[96];
    std::snprintf(head, sizeof head, "%s c%02d %s", pass ? "PASS" : "FAIL", c.id, c.title.c_str());
    std::cout << head << ": " << out.detail << " (" << sci(secs) << " s)\n";
  }
  return failures == 0 ? 0 : 1;
}
