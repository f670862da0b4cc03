// Copyright 2026 The qtrotter Authors
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
#include <string>

#include "CLI11.hpp"
#include "qtrotter/cli/commands.h"
#include "qtrotter/parallel.h"

namespace qtrotter::cli {

int main_entry(int argc, char** argv) {
  CLI::App app{"Trotterized open-quantum-system simulator"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  app.add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (overrides the config)");
  app.add_option("--seed", seed, "random seed (overrides the config)");
  app.add_option("--workers", workers, "worker threads (default: QTROTTER_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  std::vector<std::pair<CLI::App*, Mode>> modes;
  for (Mode m : {Mode::kEvolve, Mode::kTrotter, Mode::kScan, Mode::kDilateVerify, Mode::kFit,
                 Mode::kMitigate, Mode::kConverge}) {
    modes.emplace_back(app.add_subcommand(std::string(mode_name(m)), "run the " + std::string(mode_name(m)) + " experiment"), m);
  }
  std::string figure_name;
  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "emit the data bundle for fig2, fig3 or fig4");
  reproduce_cmd->add_option("figure", figure_name, "fig2 | fig3 | fig4")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    if (seed) config.seed = *seed;
    RunContext ctx;
    ctx.out_dir = out_dir.empty() ? config.output : out_dir;
    ctx.workers = workers ? *workers : default_worker_count();

    if (reproduce_cmd->parsed()) {
      reproduce(*parse_figure(figure_name), ctx);
      return 0;
    }
    std::optional<Mode> mode;
    for (const auto& [cmd, m] : modes)
      if (cmd->parsed()) mode = m;
    if (mode && config.mode && *mode != *config.mode) {
      throw ConfigError("config mode '" + std::string(mode_name(*config.mode)) +
                        "' does not match subcommand '" + std::string(mode_name(*mode)) + "'");
    }
    if (!mode) mode = config.mode;
    if (!mode) throw ConfigError("no subcommand given and the config names no mode");
    run_mode(*mode, config, ctx);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: invalid config: " << e.what() << "\n";
    return 1;
  } catch (const NumericalFailure& e) {
    std::cerr << "error: numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qtrotter::cli
