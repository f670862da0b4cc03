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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "qtrotter/cli/config.h"

namespace qtrotter::cli {

/// A run completed but its result failed a numerical check.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunContext {
  std::filesystem::path out_dir = ".";
  unsigned workers = 1;
};

/// Runs one experiment and writes its artifacts under ctx.out_dir. Throws
/// ConfigError for unusable input and NumericalFailure when a result check
/// fails (artifacts are written first).
void run_mode(Mode mode, const ExperimentConfig& config, const RunContext& ctx);

enum class Figure { kFig2, kFig3, kFig4 };
std::optional<Figure> parse_figure(std::string_view name);

/// Writes the data bundle for one figure under ctx.out_dir/<figure>.
void reproduce(Figure figure, const RunContext& ctx);

/// Command-line entry point. Exit status: 0 success, 1 invalid config or
/// usage, 2 numerical failure.
int main_entry(int argc, char** argv);

}  // namespace qtrotter::cli
