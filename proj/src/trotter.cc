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


#include "qtrotter/trotter.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtrotter/channels.h"
#include "qtrotter/parallel.h"

namespace qtrotter {

std::string_view label_name(GeneratorLabel l) {
  switch (l) {
    case GeneratorLabel::kDephasing: return "dph";
    case GeneratorLabel::kDamping: return "damp";
    case GeneratorLabel::kRotation: return "R";
  }
  return "?";
}

GeneratorLabel parse_label(std::string_view name) {
  if (name == "dph") return GeneratorLabel::kDephasing;
  if (name == "damp") return GeneratorLabel::kDamping;
  if (name == "R") return GeneratorLabel::kRotation;
  throw std::invalid_argument("unknown generator label '" + std::string(name) +
                              "' (expected dph, damp or R)");
}

std::string permutation_name(const Permutation& p) {
  return std::string(label_name(p[0])) + "-" + std::string(label_name(p[1])) + "-" +
         std::string(label_name(p[2]));
}

Permutation parse_permutation(std::string_view name) {
  Permutation p{};
  std::size_t count = 0;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t dash = name.find('-', start);
    const std::string_view token =
        name.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start);
    if (count == 3) throw std::invalid_argument("permutation has more than three labels");
    p[count++] = parse_label(token);
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  if (count != 3) throw std::invalid_argument("permutation needs three labels");
  if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) {
    throw std::invalid_argument("permutation must use each of dph, damp and R once");
  }
  return p;
}

std::vector<Permutation> all_permutations() {
  Permutation p{GeneratorLabel::kDephasing, GeneratorLabel::kDamping, GeneratorLabel::kRotation};
  std::vector<Permutation> out;
  std::sort(p.begin(), p.end());
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kKraus: return "kraus";
    case Backend::kDilation: return "dilation";
    case Backend::kDilationNoisy: return "dilation+noise";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  if (name == "kraus") return Backend::kKraus;
  if (name == "dilation") return Backend::kDilation;
  if (name == "dilation+noise") return Backend::kDilationNoisy;
  throw std::invalid_argument("unknown backend '" + std::string(name) +
                              "' (expected kraus, dilation or dilation+noise)");
}

void TrotterSchedule::validate() const {
  Permutation sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Permutation{GeneratorLabel::kDephasing, GeneratorLabel::kDamping,
                            GeneratorLabel::kRotation}) {
    throw std::invalid_argument("TrotterSchedule: permutation must contain dph, damp and R once");
  }
  if (order != 1 && order != 2) throw std::invalid_argument("TrotterSchedule: order must be 1 or 2");
  if (n_steps < 1) throw std::invalid_argument("TrotterSchedule: need at least one step");
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("TrotterSchedule: dt must be positive");
  }
  if (backend == Backend::kDilationNoisy) noise.validate();
}

std::string TrotterSchedule::describe() const {
  return "order" + std::to_string(order) + ":" + permutation_name(permutation) + ":N" +
         std::to_string(n_steps) + ":" + std::string(backend_name(backend));
}

Superoperator elementary_channel(GeneratorLabel label, const CanonicalRates& rates, double dt,
                                 Backend backend, const NoiseParams& noise) {
  rates.validate();
  if (backend == Backend::kKraus) {
    switch (label) {
      case GeneratorLabel::kDephasing: return to_superop(dephasing_channel(rates.gamma_phi, dt));
      case GeneratorLabel::kDamping: return to_superop(damping_channel(rates.gamma1, dt));
      case GeneratorLabel::kRotation:
        return to_superop(unitary_channel(rx(2.0 * std::numbers::pi * rates.omega * dt)));
    }
  }
  const AngleParams angles = rates_to_angles(rates, dt);
  std::optional<NoiseParams> injected;
  if (backend == Backend::kDilationNoisy) injected = noise;
  switch (label) {
    case GeneratorLabel::kDephasing:
      return induced_channel(dephasing_circuit(angles.theta1), injected);
    case GeneratorLabel::kDamping:
      return induced_channel(damping_circuit(angles.theta2), injected);
    case GeneratorLabel::kRotation:
      return induced_channel(rotation_circuit(angles.theta3), injected);
  }
  throw std::logic_error("elementary_channel: unknown label");
}

Superoperator trotter_step(const TrotterSchedule& s, const CanonicalRates& rates) {
  s.validate();
  Superoperator step = Superoperator::identity(2);
  if (s.order == 1) {
    for (GeneratorLabel l : s.permutation) {
      step = elementary_channel(l, rates, s.dt, s.backend, s.noise) * step;
    }
    return step;
  }
  const double half = s.dt / 2.0;
  for (GeneratorLabel l : s.permutation) {
    step = elementary_channel(l, rates, half, s.backend, s.noise) * step;
  }
  for (auto it = s.permutation.rbegin(); it != s.permutation.rend(); ++it) {
    step = elementary_channel(*it, rates, half, s.backend, s.noise) * step;
  }
  return step;
}

EvolutionTrace run_schedule(const TrotterSchedule& s, const CanonicalRates& rates,
                            const DensityMatrix& rho0) {
  return sample_trace(trotter_step(s, rates), rho0, s.dt, s.n_steps);
}

AccuracyReport accuracy(const EvolutionTrace& trace, const EvolutionTrace& target) {
  if (trace.size() != target.size() || trace.size() < 2) {
    throw std::invalid_argument("accuracy: traces must have equal length >= 2 (got " +
                                std::to_string(trace.size()) + " and " +
                                std::to_string(target.size()) + ")");
  }
  AccuracyReport r;
  double total = 0.0;
  for (std::size_t j = 1; j < trace.size(); ++j) {
    if (std::abs(trace.times[j] - target.times[j]) > 1e-9 * std::max(1.0, std::abs(target.times[j]))) {
      throw std::invalid_argument("accuracy: sample times differ at step " + std::to_string(j));
    }
    const double dx = trace.sx[j] - target.sx[j];
    const double dy = trace.sy[j] - target.sy[j];
    const double dz = trace.sz[j] - target.sz[j];
    const double sq = dx * dx + dy * dy + dz * dz;
    total += sq;
    r.step_residuals.push_back(std::sqrt(sq));
  }
  r.accuracy = std::sqrt(total) / std::sqrt(static_cast<double>(trace.steps()));
  return r;
}

OrderComparison compare_orders(const Permutation& first_order_perm,
                               const Permutation& second_order_perm, const CanonicalRates& rates,
                               const DensityMatrix& rho0, double dt, std::size_t n_steps,
                               ComparisonMode mode, Backend backend) {
  const EvolutionTrace target = target_trace(rates, rho0, dt, n_steps);

  TrotterSchedule second{second_order_perm, 2, n_steps, dt, backend, {}};
  OrderComparison out;
  out.second = accuracy(run_schedule(second, rates, rho0), target);
  out.second.schedule = second.describe();

  TrotterSchedule first{first_order_perm, 1, n_steps, dt, backend, {}};
  if (mode == ComparisonMode::kFixedSteps) {
    out.first = accuracy(run_schedule(first, rates, rho0), target);
  } else {
    first.n_steps = 2 * n_steps;
    first.dt = dt / 2.0;
    const EvolutionTrace fine = run_schedule(first, rates, rho0);
    EvolutionTrace coarse;
    for (std::size_t j = 0; j < fine.size(); j += 2) coarse.push(target.times[j / 2], fine.at(j));
    out.first = accuracy(coarse, target);
  }
  out.first.schedule = first.describe();
  return out;
}

ConvergenceResult convergence_order(const TrotterSchedule& schedule_template,
                                    const CanonicalRates& rates, const DensityMatrix& rho0,
                                    std::span<const std::size_t> n_list, double t_total) {
  if (n_list.size() < 4) throw std::invalid_argument("convergence_order: need >= 4 step counts");
  if (!(t_total > 0.0)) throw std::invalid_argument("convergence_order: t_total must be positive");
  const double ratio = static_cast<double>(n_list[1]) / static_cast<double>(n_list[0]);
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    const double r = static_cast<double>(n_list[i]) / static_cast<double>(n_list[i - 1]);
    if (!(ratio > 1.0) || std::abs(r - ratio) > 1e-9 * ratio) {
      throw std::invalid_argument("convergence_order: step counts must be geometrically spaced");
    }
  }

  ConvergenceResult out;
  for (std::size_t n : n_list) {
    TrotterSchedule s = schedule_template;
    s.n_steps = n;
    s.dt = t_total / static_cast<double>(n);
    const EvolutionTrace target = target_trace(rates, rho0, s.dt, n);
    out.n_steps.push_back(n);
    out.accuracy.push_back(accuracy(run_schedule(s, rates, rho0), target).accuracy);
  }
  out.saturated = std::any_of(out.accuracy.begin(), out.accuracy.end(),
                              [](double a) { return a < 1e-13; });
  if (out.saturated) return out;

  double mx = 0.0, my = 0.0;
  const double k = static_cast<double>(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    mx += std::log(static_cast<double>(out.n_steps[i])) / k;
    my += std::log(out.accuracy[i]) / k;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const double dx = std::log(static_cast<double>(out.n_steps[i])) - mx;
    sxy += dx * (std::log(out.accuracy[i]) - my);
    sxx += dx * dx;
  }
  out.slope = sxy / sxx;
  return out;
}

std::vector<PermutationScanEntry> permutation_scan(std::span<const CanonicalRates> grid,
                                                   std::size_t n_steps, double dt,
                                                   const DensityMatrix& rho0,
                                                   std::span<const int> orders, Backend backend,
                                                   unsigned workers) {
  static constexpr int kBothOrders[] = {1, 2};
  if (orders.empty()) orders = kBothOrders;
  const std::vector<Permutation> perms = all_permutations();

  std::vector<PermutationScanEntry> out;
  for (std::size_t g = 0; g < grid.size(); ++g)
    for (int order : orders)
      for (const Permutation& p : perms) out.push_back({g, order, p, {}});

  std::vector<EvolutionTrace> targets(grid.size());
  parallel_for(grid.size(), workers,
               [&](std::size_t g) { targets[g] = target_trace(grid[g], rho0, dt, n_steps); });
  parallel_for(out.size(), workers, [&](std::size_t i) {
    PermutationScanEntry& e = out[i];
    const TrotterSchedule s{e.permutation, e.order, n_steps, dt, backend, {}};
    e.report = accuracy(run_schedule(s, grid[e.grid_index], rho0), targets[e.grid_index]);
    e.report.schedule = s.describe();
  });
  return out;
}

}  // namespace qtrotter
