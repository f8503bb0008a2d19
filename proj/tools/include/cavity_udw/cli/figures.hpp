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

#include <ostream>
#include <string>
#include <vector>

#include "cavity_udw/cli/scenario.hpp"
#include "cavity_udw/cli/table.hpp"

namespace cavity_udw::cli {

enum class Figure { fig1, fig2, fig3 };

// Sweep grids of each preset.
std::vector<double> fig1_gamma_grid(double sigma, double omega, double L);
std::vector<double> fig2_accel_grid(double sigma, double omega);
std::vector<double> fig3_gap_grid();

struct FigureResult {
  Table table;
  bool converged = true;
};

// S+ over gamma.
FigureResult figure1(const RunOptions& opts, std::ostream& log);
// F_zm / F_osc over the acceleration.
FigureResult figure2(const RunOptions& opts, std::ostream& log);
// |F_Mink - F_osc| / F_Mink over the gap.
FigureResult figure3(const RunOptions& opts, std::ostream& log);

// Writes <dir>/figN.csv and returns the exit code.
ExitCode run_figure(Figure which, const std::string& dir,
                    const RunOptions& opts, std::ostream& log);

}  // namespace cavity_udw::cli
