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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cavity_udw/model.hpp"
#include "cavity_udw/numerics.hpp"

namespace cavity_udw::cli {

enum class ExitCode : int { ok = 0, invalid_config = 2, numerical = 3 };

// Bad input. `field` is a dotted JSON path, `line` is 1-based or 0 if unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message, int line = 0);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

enum class ScenarioKind { evolve, response, sweep };
enum class OutputFormat { csv, json };
enum class Quantity { response, relative_strength, minkowski_gap, density };
enum class TrajectoryKind { inertial, accelerated };

struct PhysicsBlock {
  double L = 1.0;
  double gap = 1.0;
  double coupling = 0.1;
  double rho_a = 1.0;
  Complex rho_b{0.0, 0.0};
  double mean_q = 0.0;
  double mean_p = 0.0;
  double qq = 0.5;
  double pp = 0.5;
  Complex qp{0.0, 0.5};
  TrajectoryKind trajectory = TrajectoryKind::inertial;
  double rapidity = 0.0;
  double acceleration = 1.0;
  double sigma = 1.0;
  double tau0 = 0.0;

  bool operator==(const PhysicsBlock&) const = default;

  CavityParams cavity() const { return CavityParams(L); }
  DetectorParams detector() const { return DetectorParams(gap, coupling); }
  DetectorState initial_state() const { return DetectorState(rho_a, rho_b); }
  ZeroModeState zero_mode() const {
    return ZeroModeState(mean_q, mean_p, qq, pp, qp);
  }
  Trajectory worldline() const;
  SwitchingFunction switching() const {
    return SwitchingFunction::gaussian(sigma, tau0);
  }
  // Constructs every module-level object; throws ConfigError on the first
  // rejected field.
  void validate(const std::string& prefix = "physics") const;
};

struct SweepSpec {
  std::string axis;
  std::vector<double> values;
  bool operator==(const SweepSpec&) const = default;
};

struct OutputSpec {
  std::string path;
  OutputFormat format = OutputFormat::csv;
  bool operator==(const OutputSpec&) const = default;
};

struct NumericsSpec {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  long max_terms = 100000;
  bool operator==(const NumericsSpec&) const = default;

  SumSpec sum_spec() const;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::response;
  PhysicsBlock physics;
  Quantity quantity = Quantity::response;
  std::optional<SweepSpec> sweep;
  NumericsSpec numerics;
  OutputSpec output;

  bool operator==(const Scenario&) const = default;
};

// Scalar parameters a sweep axis may name.
const std::vector<std::string>& sweep_axes();
void set_axis(PhysicsBlock& p, const std::string& axis, double value);

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
nlohmann::json to_json(const Scenario& s);
void validate(const Scenario& s);

struct RunOptions {
  std::optional<double> tol;
  std::optional<long> max_terms;
  int threads = 1;
};

// Evaluates the scenario and writes its output file. Returns the exit code;
// diagnostics go to `log`.
ExitCode run_scenario(Scenario s, const RunOptions& opts, std::ostream& log);

}  // namespace cavity_udw::cli
