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

#include <cstddef>
#include <string>
#include <vector>

#include "qtrotter/linalg.h"

namespace qtrotter {

/// Per-step Pauli expectations of a qubit evolution. Point j is at times[j];
/// point 0 is the initial state.
struct EvolutionTrace {
  std::vector<double> times;  // us
  std::vector<double> sx;
  std::vector<double> sy;
  std::vector<double> sz;
  std::string initial_label;

  std::size_t size() const { return times.size(); }
  /// Number of steps, i.e. size() - 1.
  std::size_t steps() const { return times.empty() ? 0 : times.size() - 1; }

  /// Appends a point. Throws std::domain_error if the Bloch norm exceeds
  /// 1 + 1e-8.
  void push(double t, const BlochVector& b);
  BlochVector at(std::size_t j) const { return {sx[j], sy[j], sz[j]}; }
};

inline constexpr double kBlochNormSlack = 1e-8;

}  // namespace qtrotter
