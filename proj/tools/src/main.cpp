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

#include <iostream>

#include <CLI11.hpp>

#include "cavity_udw/cli/figures.hpp"
#include "cavity_udw/cli/scenario.hpp"

namespace cli = cavity_udw::cli;

int main(int argc, char** argv) {
  CLI::App app{"Unruh-DeWitt detectors in a periodic (1+1)D cavity"};
  app.require_subcommand(1);

  cli::RunOptions opts;
  double tol = 0.0;
  long max_terms = 0;
  auto* tol_opt = app.add_option("--tol", tol, "relative tolerance of mode sums")
                      ->check(CLI::PositiveNumber);
  auto* terms_opt = app.add_option("--max-terms", max_terms, "mode sum term cap")
                        ->check(CLI::PositiveNumber);
  app.add_option("--threads", opts.threads, "parallel sweep workers")
      ->check(CLI::Range(1, 1024));

  std::string config;
  auto* run = app.add_subcommand("run", "evaluate a JSON scenario")->fallthrough();
  run->add_option("config", config, "scenario file")->required();

  int figure = 0;
  std::string out_dir;
  auto* fig = app.add_subcommand("fig", "write figure data")->fallthrough();
  fig->add_option("which", figure, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  fig->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(cli::ExitCode::invalid_config);
  }
  if (*tol_opt) opts.tol = tol;
  if (*terms_opt) opts.max_terms = max_terms;

  try {
    cli::ExitCode code;
    if (*run) {
      code = cli::run_scenario(cli::load_scenario(config), opts, std::cerr);
    } else {
      code = cli::run_figure(static_cast<cli::Figure>(figure - 1), out_dir, opts,
                             std::cerr);
    }
    return static_cast<int>(code);
  } catch (const cli::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return static_cast<int>(cli::ExitCode::invalid_config);
  } catch (const cavity_udw::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(cli::ExitCode::numerical);
  }
}
