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


// Zero-noise Richardson extrapolation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <vector>

#include "qtrotter/liouvillian.h"
#include "qtrotter/tomography.h"
#include "qtrotter/trotter.h"

namespace qtrotter {

/// A measurement at noise intensity c * lambda. The first point of a series
/// must have c = 1.
struct NoisePoint {
  double c = 1.0;
  double value = 0.0;
  std::optional<double> sigma;
};

struct RichardsonSolution {
  std::vector<double> gammas;
  double condition = 0.0;  // infinity-norm condition number of the Vandermonde matrix
};

inline constexpr double kConditionWarning = 1e8;

/// Solves sum_i gamma_i c_i^k = delta_k0 for k = 0..n on the first n + 1
/// entries of c, via the Lagrange product formula. Throws
/// std::invalid_argument for too few or non-positive c and std::domain_error
/// for duplicate c.
RichardsonSolution richardson_solve(std::span<const double> c, std::size_t n);

/// Coefficients only; prints a warning to std::clog when the condition
/// estimate exceeds 1e8.
std::vector<double> richardson_coeffs(std::span<const double> c, std::size_t n);

/// max_k |sum_i gamma_i c_i^k - delta_k0| for k = 0..n.
double moment_residual(std::span<const double> c, std::span<const double> gammas);

struct ExtrapolationResult {
  std::size_t order = 0;
  std::vector<double> gammas;
  double estimate = 0.0;
  std::optional<double> sigma_est;  // present when every used point has a sigma
};

/// Order-n estimate from the first n + 1 points.
ExtrapolationResult extrapolate(std::span<const NoisePoint> points, std::size_t n);

struct MitigationTable {
  std::vector<NoisePoint> points;
  std::vector<ExtrapolationResult> results;  // orders 0..n_max
};

/// Measures value(c) for every c (in parallel, results kept in input order)
/// and extrapolates at orders 0..n_max.
MitigationTable zero_noise_study(std::span<const double> c_list,
                                 const std::function<NoisePoint(double c)>& measure,
                                 std::size_t n_max, unsigned workers = 1);

/// Maps a fit to the extrapolated quantity.
using FitExtractor = std::function<double(const FitResult&)>;
FitExtractor t2_star_extractor();
FitExtractor inverse_t2_star_extractor();

struct DampingStudySettings {
  TrotterSchedule schedule;  // order, permutation, steps, dt, backend
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Trotter experiment with damping rate c * base.gamma1 (other rates fixed),
/// tomography fit of every run, extraction and extrapolation to zero damping.
/// Sigma is the linearised standard error of T2 (propagated through the
/// extractor) when shots are set.
MitigationTable mitigation_study(const CanonicalRates& base, std::span<const double> c_list,
                                 const FitExtractor& extractor, std::size_t n_max,
                                 const DampingStudySettings& settings = {});

/// T2* with the damping removed: 1/gamma_phi (+inf without dephasing).
double zero_damping_t2(const CanonicalRates& base);

/// Rows of c,value[,sigma]; a header line and blank lines are skipped.
std::vector<NoisePoint> read_noise_points_csv(std::istream& in);

}  // namespace qtrotter
