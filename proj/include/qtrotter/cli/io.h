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

#include <filesystem>
#include <ostream>
#include <string>

#include "qtrotter/evolution_trace.h"

namespace qtrotter::cli {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

/// Header "step,time_us,sx,sy,sz" followed by one row per point.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// Creates parent directories and replaces the file contents.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qtrotter::cli
