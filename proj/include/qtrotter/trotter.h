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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtrotter/dilation.h"
#include "qtrotter/evolution_trace.h"
#include "qtrotter/liouvillian.h"

namespace qtrotter {

enum class GeneratorLabel { kDephasing, kDamping, kRotation };
using Permutation = std::array<GeneratorLabel, 3>;

/// "dph", "damp", "R".
std::string_view label_name(GeneratorLabel l);
GeneratorLabel parse_label(std::string_view name);
/// e.g. "dph-damp-R".
std::string permutation_name(const Permutation& p);
Permutation parse_permutation(std::string_view name);
/// The six orderings, lexicographic in (dph, damp, R) order.
std::vector<Permutation> all_permutations();

enum class Backend { kKraus, kDilation, kDilationNoisy };
std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

struct TrotterSchedule {
  Permutation permutation{GeneratorLabel::kDephasing, GeneratorLabel::kDamping,
                          GeneratorLabel::kRotation};
  int order = 1;
  std::size_t n_steps = 13;
  double dt = 3.56;  // us
  Backend backend = Backend::kKraus;
  NoiseParams noise;  // used by kDilationNoisy only

  void validate() const;
  std::string describe() const;
};

/// One elementary channel exp(L_label * dt), realised by the given backend.
Superoperator elementary_channel(GeneratorLabel label, const CanonicalRates& rates, double dt,
                                 Backend backend, const NoiseParams& noise = {});

/// The superoperator of a single Trotter step (order 1: the permutation once;
/// order 2: the permutation then its reverse, each with dt/2).
Superoperator trotter_step(const TrotterSchedule& s, const CanonicalRates& rates);

EvolutionTrace run_schedule(const TrotterSchedule& s, const CanonicalRates& rates,
                            const DensityMatrix& rho0);

struct AccuracyReport {
  double accuracy = 0.0;
  std::vector<double> step_residuals;  // Bloch-vector distance at steps 1..N
  std::string schedule;
};

/// sqrt(sum over x, y, z and j = 1..N of (x_j - x0_j)^2) / sqrt(N).
AccuracyReport accuracy(const EvolutionTrace& trace, const EvolutionTrace& target);

enum class ComparisonMode {
  kFixedSteps,   // both orders take N steps of dt
  kFixedBudget,  // order 1 takes 2N steps of dt/2, sampled at the order-2 times
};

struct OrderComparison {
  AccuracyReport first;
  AccuracyReport second;
};

OrderComparison compare_orders(const Permutation& first_order_perm,
                               const Permutation& second_order_perm, const CanonicalRates& rates,
                               const DensityMatrix& rho0, double dt, std::size_t n_steps,
                               ComparisonMode mode, Backend backend = Backend::kKraus);

struct ConvergenceResult {
  std::vector<std::size_t> n_steps;
  std::vector<double> accuracy;
  std::optional<double> slope;  // empty when saturated
  bool saturated = false;       // some accuracy fell below 1e-13
};

/// Least-squares slope of log A against log N at fixed total time. The
/// template's n_steps and dt are ignored. Requires >= 4 geometrically spaced
/// step counts.
ConvergenceResult convergence_order(const TrotterSchedule& schedule_template,
                                    const CanonicalRates& rates, const DensityMatrix& rho0,
                                    std::span<const std::size_t> n_list, double t_total);

struct PermutationScanEntry {
  std::size_t grid_index = 0;
  int order = 1;
  Permutation permutation{};
  AccuracyReport report;
};

/// All six permutations for every requested order at every grid point,
/// ordered by (grid index, order, permutation).
std::vector<PermutationScanEntry> permutation_scan(std::span<const CanonicalRates> grid,
                                                   std::size_t n_steps, double dt,
                                                   const DensityMatrix& rho0,
                                                   std::span<const int> orders = {},
                                                   Backend backend = Backend::kKraus,
                                                   unsigned workers = 1);

}  // namespace qtrotter
