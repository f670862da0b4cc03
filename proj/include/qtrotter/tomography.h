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


// Twelve-curve state tomography and the global (T1, T2, Omega) fit.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "qtrotter/evolution_trace.h"
#include "qtrotter/liouvillian.h"

namespace qtrotter {

enum class InitialState { kZero, kPlus, kPlusI, kOne };
enum class Observable { kX, kY, kZ };

inline constexpr std::array<InitialState, 4> kTomographyStates = {
    InitialState::kZero, InitialState::kPlus, InitialState::kPlusI, InitialState::kOne};
inline constexpr std::array<Observable, 3> kTomographyObservables = {Observable::kX, Observable::kY,
                                                                     Observable::kZ};

DensityMatrix initial_state(InitialState s);
std::string_view state_name(InitialState s);      // "0", "+", "+i", "1"
std::string_view observable_name(Observable o);   // "x", "y", "z"

/// One EvolutionTrace per initial state; each holds all three observables,
/// so the set carries 12 curves on a shared time grid.
struct TomographySet {
  std::array<EvolutionTrace, 4> traces;
  std::optional<std::uint64_t> shots;

  const EvolutionTrace& trace(InitialState s) const { return traces[static_cast<std::size_t>(s)]; }
  std::span<const double> curve(InitialState s, Observable o) const;
  std::span<const double> times() const { return traces[0].times; }
  /// Throws std::invalid_argument if times differ or a value leaves
  /// [-1 - eps, 1 + eps] (eps = 3/sqrt(shots), or 1e-8 when noiseless).
  void validate() const;
};

using TraceGenerator = std::function<EvolutionTrace(const DensityMatrix&)>;

/// Exact master-equation curves, optionally with binomial shot noise.
TomographySet generate_tomography(const CanonicalRates& rates, double tau0, std::size_t n_steps,
                                  std::optional<std::uint64_t> shots = std::nullopt,
                                  std::uint64_t seed = 0);

/// Same, with curves produced by an arbitrary simulator (e.g. a Trotter schedule).
TomographySet generate_tomography(const TraceGenerator& generator,
                                  std::optional<std::uint64_t> shots = std::nullopt,
                                  std::uint64_t seed = 0);

struct FitParameters {
  double t1 = 0.0;     // us
  double t2 = 0.0;     // us
  double omega = 0.0;  // MHz
};

struct FitResult {
  double t1 = 0.0;
  double t2 = 0.0;
  double omega = 0.0;
  double residual = 0.0;  // RMS over all 12 curves and points
  bool converged = false;
  std::size_t evaluations = 0;

  CanonicalRates rates() const;
};

struct FitOptions {
  std::size_t max_evaluations = 60000;
  std::size_t max_polish_rounds = 40;
  double relative_tolerance = 1e-8;
};

/// Unweighted least squares over all curves; the model propagates the exact
/// Liouvillian with rates (1/T1, 1/T2, Omega), each rate bounded below by 1e-6 /us
/// and 1/T2 >= 1/(2 T1).
FitResult global_fit(const TomographySet& ts, std::optional<FitParameters> init_guess = std::nullopt,
                     const FitOptions& options = {});

/// Sum of squared residuals for the given parameters (for diagnostics and tests).
double fit_cost(const TomographySet& ts, const FitParameters& p);

struct FitErrors {
  double t1 = 0.0;
  double t2 = 0.0;
  double omega = 0.0;
};

/// Linearised standard errors around a fit. With shots the per-point variance
/// is (1 - m^2)/shots from the fitted model m (sandwich estimator); without,
/// a pooled residual variance is used.
FitErrors fit_standard_errors(const TomographySet& ts, const FitResult& fit);

/// 1/(1/T2 - 1/(2 T1)); +inf when T2 == 2 T1. Throws std::domain_error when
/// T2 > 2 T1 (beyond 1e-9 relative) or inputs are not positive.
double dephasing_time(double t1, double t2);

}  // namespace qtrotter
