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


// Experiment configuration for the command-line driver.
//
// A config is one JSON object. Every key is optional and unknown keys are
// rejected at every nesting level. Angles are in degrees, times in us.
//
//   mode           evolve | trotter | scan | dilate-verify | fit | mitigate | converge
//   angles_deg     {theta1, theta2, theta3}
//   tau0_us        step duration (3.56)
//   intrinsic_us   {t1, t2}; null means infinite (default)
//   n_steps        Trotter steps (13)
//   order          1 | 2
//   permutation    e.g. "dph-damp-R"
//   backend        kraus | dilation | dilation+noise
//   noise          {p_grape, p_ancilla_decay}
//   initial_state  "0" | "1" | "+" | "+i"   (evolve, trotter)
//   shots          positive integer or null (fit)
//   seed           unsigned integer
//   output         output directory
//   scan           {theta2_deg: [...], orders: [...]}
//   dilate_verify  {theta_deg: [...]}
//   fit            {source: "trotter" | "exact"}
//   converge       {n_list: [...], t_total_us}
//   mitigate       {c: [...], base_gamma1, max_order, quantity: "t2" | "inverse_t2", csv}

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtrotter/dilation.h"
#include "qtrotter/tomography.h"
#include "qtrotter/trotter.h"

namespace qtrotter::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { kEvolve, kTrotter, kScan, kDilateVerify, kFit, kMitigate, kConverge };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

struct ExperimentConfig {
  std::optional<Mode> mode;
  AngleParams angles;  // radians
  double t1_0 = kInfinity;
  double t2_0 = kInfinity;
  std::size_t n_steps = 13;
  int order = 1;
  Permutation permutation{GeneratorLabel::kDephasing, GeneratorLabel::kDamping,
                          GeneratorLabel::kRotation};
  Backend backend = Backend::kKraus;
  NoiseParams noise;
  InitialState initial_state = InitialState::kOne;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  std::string output = ".";

  std::vector<double> scan_theta2_deg{0, 10, 20, 30, 40, 50, 60};
  std::vector<int> scan_orders{1, 2};
  std::vector<double> verify_theta_deg;  // default 5, 10, ..., 85
  bool fit_from_trotter = true;
  std::vector<std::size_t> converge_n_list{4, 8, 16, 32, 64, 128};
  std::optional<double> converge_t_total;  // default n_steps * tau0
  std::vector<double> mitigate_c{1.0, 2.13, 4.93, 9.96};
  double mitigate_base_gamma1 = 0.009;
  std::size_t mitigate_max_order = 3;
  bool mitigate_inverse = false;
  std::string mitigate_csv;

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  TrotterSchedule schedule() const;
  /// Rates from the angles plus intrinsic decoherence.
  CanonicalRates rates() const;
};

/// Parses and validates; throws ConfigError with a message naming the key.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);

InitialState parse_initial_state(std::string_view name);

}  // namespace qtrotter::cli
