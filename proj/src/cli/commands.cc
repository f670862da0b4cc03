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


#include "qtrotter/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtrotter/channels.h"
#include "qtrotter/cli/io.h"
#include "qtrotter/mitigation.h"
#include "qtrotter/parallel.h"
#include "qtrotter/tomography.h"
#include "qtrotter/trotter.h"

namespace qtrotter::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDilationTolerance = 1e-10;
constexpr double kCptpTolerance = 1e-8;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rates_json(const CanonicalRates& r) {
  return {{"gamma1_per_us", r.gamma1}, {"gamma_phi_per_us", r.gamma_phi}, {"omega_mhz", r.omega}};
}

Json fit_json(const FitResult& f) {
  return {{"t1_us", f.t1},         {"t2_us", f.t2},           {"omega_mhz", f.omega},
          {"residual", f.residual}, {"converged", f.converged}, {"evaluations", f.evaluations}};
}

Json extrapolation_json(const ExtrapolationResult& r) {
  Json j = {{"order", r.order}, {"gammas", r.gammas}, {"estimate", r.estimate}};
  j["sigma"] = r.sigma_est ? Json(*r.sigma_est) : Json(nullptr);
  return j;
}

double relative_error(double fitted, double predicted) {
  return std::isfinite(predicted) ? std::abs(fitted - predicted) / predicted
                                  : std::numeric_limits<double>::quiet_NaN();
}

std::string tomography_csv(const TomographySet& ts) {
  std::ostringstream out;
  out << "state,observable,step,time_us,value\n";
  for (InitialState s : kTomographyStates)
    for (Observable o : kTomographyObservables) {
      const auto c = ts.curve(s, o);
      for (std::size_t j = 0; j < c.size(); ++j) {
        out << state_name(s) << ',' << observable_name(o) << ',' << j << ','
            << format_double(ts.times()[j]) << ',' << format_double(c[j]) << '\n';
      }
    }
  return out.str();
}

std::string trace_csv(const EvolutionTrace& t) {
  std::ostringstream out;
  write_trace_csv(out, t);
  return out.str();
}

CanonicalRates config_rates(const ExperimentConfig& c) {
  try {
    return c.rates();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

TomographySet tomography_for(const ExperimentConfig& c, const CanonicalRates& rates) {
  if (c.fit_from_trotter) {
    const TrotterSchedule s = c.schedule();
    return generate_tomography([&](const DensityMatrix& rho0) { return run_schedule(s, rates, rho0); },
                               c.shots, c.seed);
  }
  return generate_tomography(rates, c.angles.tau0, c.n_steps, c.shots, c.seed);
}

void run_evolve(const ExperimentConfig& c, const RunContext& ctx) {
  const CanonicalRates rates = config_rates(c);
  const EvolutionTrace t = target_trace(rates, initial_state(c.initial_state), c.angles.tau0, c.n_steps);
  write_text_file(ctx.out_dir / "trace.csv", trace_csv(t));
  Json j = {{"mode", "evolve"},
            {"initial_state", state_name(c.initial_state)},
            {"tau0_us", c.angles.tau0},
            {"n_steps", c.n_steps},
            {"rates", rates_json(rates)}};
  write_text_file(ctx.out_dir / "summary.json", dump(j));
}

void run_trotter(const ExperimentConfig& c, const RunContext& ctx) {
  const CanonicalRates rates = config_rates(c);
  const TrotterSchedule s = c.schedule();
  const DensityMatrix rho0 = initial_state(c.initial_state);
  const EvolutionTrace trace = run_schedule(s, rates, rho0);
  const EvolutionTrace target = target_trace(rates, rho0, c.angles.tau0, c.n_steps);
  const AccuracyReport acc = accuracy(trace, target);
  const CptpReport cptp = check_cptp(trotter_step(s, rates));
  write_text_file(ctx.out_dir / "trace.csv", trace_csv(trace));
  write_text_file(ctx.out_dir / "target.csv", trace_csv(target));
  Json j = {{"mode", "trotter"},
            {"schedule", s.describe()},
            {"initial_state", state_name(c.initial_state)},
            {"rates", rates_json(rates)},
            {"accuracy", acc.accuracy},
            {"step_residuals", acc.step_residuals},
            {"cptp", {{"trace_error", cptp.trace_error},
                      {"min_choi_eigenvalue", cptp.min_choi_eigenvalue},
                      {"choi_hermiticity", cptp.choi_hermiticity}}}};
  write_text_file(ctx.out_dir / "summary.json", dump(j));
  if (cptp.trace_error > kCptpTolerance || cptp.min_choi_eigenvalue < -kCptpTolerance) {
    throw NumericalFailure("Trotter step is not CPTP within " + format_double(kCptpTolerance));
  }
}

std::vector<PermutationScanEntry> theta2_scan(const ExperimentConfig& c, std::span<const double> theta2_deg,
                                              std::span<const int> orders, unsigned workers) {
  std::vector<CanonicalRates> grid;
  for (double t2 : theta2_deg) {
    ExperimentConfig point = c;
    point.angles.theta2 = t2 * std::numbers::pi / 180.0;
    grid.push_back(config_rates(point));
  }
  return permutation_scan(grid, c.n_steps, c.angles.tau0, initial_state(c.initial_state), orders,
                          c.backend, workers);
}

std::string scan_csv(const std::vector<PermutationScanEntry>& entries, std::span<const double> theta2_deg) {
  std::ostringstream out;
  out << "theta2_deg,order,permutation,accuracy\n";
  for (const auto& e : entries) {
    out << format_double(theta2_deg[e.grid_index]) << ',' << e.order << ','
        << permutation_name(e.permutation) << ',' << format_double(e.report.accuracy) << '\n';
  }
  return out.str();
}

void run_scan(const ExperimentConfig& c, const RunContext& ctx) {
  const auto entries = theta2_scan(c, c.scan_theta2_deg, c.scan_orders, ctx.workers);
  write_text_file(ctx.out_dir / "scan.csv", scan_csv(entries, c.scan_theta2_deg));
  Json rows = Json::array();
  for (const auto& e : entries) {
    rows.push_back({{"theta2_deg", c.scan_theta2_deg[e.grid_index]},
                    {"order", e.order},
                    {"permutation", permutation_name(e.permutation)},
                    {"accuracy", e.report.accuracy}});
  }
  Json j = {{"mode", "scan"}, {"n_steps", c.n_steps}, {"tau0_us", c.angles.tau0},
            {"initial_state", state_name(c.initial_state)}, {"backend", backend_name(c.backend)},
            {"entries", rows}};
  write_text_file(ctx.out_dir / "summary.json", dump(j));
}

void run_dilate_verify(const ExperimentConfig& c, const RunContext& ctx) {
  std::vector<double> thetas = c.verify_theta_deg;
  if (thetas.empty())
    for (int d = 5; d <= 85; d += 5) thetas.push_back(d);
  std::ostringstream csv;
  csv << "theta1_deg,theta2_deg,dephasing,damping,rotation\n";
  Json rows = Json::array();
  double worst = 0.0;
  for (double t1 : thetas)
    for (double t2 : thetas) {
      const AngleParams p = AngleParams::from_degrees(t1, t2, c.angles.theta3 * 180.0 / std::numbers::pi,
                                                      c.angles.tau0);
      const DilationCheck d = verify_dilation(p);
      worst = std::max(worst, d.max());
      csv << format_double(t1) << ',' << format_double(t2) << ',' << format_double(d.dephasing) << ','
          << format_double(d.damping) << ',' << format_double(d.rotation) << '\n';
      rows.push_back({{"theta1_deg", t1}, {"theta2_deg", t2}, {"dephasing", d.dephasing},
                      {"damping", d.damping}, {"rotation", d.rotation}});
    }
  write_text_file(ctx.out_dir / "dilation.csv", csv.str());
  Json j = {{"mode", "dilate-verify"}, {"tolerance", kDilationTolerance}, {"max_distance", worst},
            {"pass", worst < kDilationTolerance}, {"points", rows}};
  write_text_file(ctx.out_dir / "summary.json", dump(j));
  if (!(worst < kDilationTolerance)) {
    throw NumericalFailure("dilation Choi distance " + format_double(worst) + " exceeds tolerance");
  }
}

void run_fit(const ExperimentConfig& c, const RunContext& ctx) {
  const CanonicalRates rates = config_rates(c);
  const TomographySet ts = tomography_for(c, rates);
  const FitResult fit = global_fit(ts);
  const CoherenceTimes pred = predict_coherence(c.angles, c.t1_0, c.t2_0);
  write_text_file(ctx.out_dir / "tomography.csv", tomography_csv(ts));
  Json j = {{"mode", "fit"},
            {"source", c.fit_from_trotter ? c.schedule().describe() : std::string("exact")},
            {"shots", c.shots ? Json(*c.shots) : Json(nullptr)},
            {"seed", c.seed},
            {"fit", fit_json(fit)},
            {"predicted", {{"t1_us", pred.t1}, {"t2_us", pred.t2}, {"omega_mhz", rates.omega}}},
            {"relative_error",
             {{"t1", relative_error(fit.t1, pred.t1)},
              {"t2", relative_error(fit.t2, pred.t2)},
              {"omega", relative_error(fit.omega, rates.omega)}}}};
  if (c.shots) {
    const FitErrors se = fit_standard_errors(ts, fit);
    j["standard_errors"] = {{"t1_us", se.t1}, {"t2_us", se.t2}, {"omega_mhz", se.omega}};
  }
  try {
    j["dephasing_time_us"] = dephasing_time(fit.t1, fit.t2);
  } catch (const std::domain_error&) {
    j["dephasing_time_us"] = nullptr;
  }
  write_text_file(ctx.out_dir / "summary.json", dump(j));
  if (!fit.converged) throw NumericalFailure("global fit did not converge");
}

void run_mitigate(const ExperimentConfig& c, const RunContext& ctx) {
  Json j = {{"mode", "mitigate"}, {"quantity", c.mitigate_inverse ? "inverse_t2" : "t2"}};
  MitigationTable table;
  if (!c.mitigate_csv.empty()) {
    std::ifstream in(c.mitigate_csv);
    if (!in) throw ConfigError("mitigate.csv: cannot open '" + c.mitigate_csv + "'");
    try {
      table.points = read_noise_points_csv(in);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (table.points.empty()) throw ConfigError("mitigate.csv: no data rows");
    const std::size_t n_max = std::min(c.mitigate_max_order, table.points.size() - 1);
    try {
      for (std::size_t n = 0; n <= n_max; ++n) table.results.push_back(extrapolate(table.points, n));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    j["source"] = c.mitigate_csv;
  } else {
    CanonicalRates base = config_rates(c);
    base.gamma1 = c.mitigate_base_gamma1;
    DampingStudySettings settings;
    settings.schedule = c.schedule();
    settings.shots = c.shots;
    settings.seed = c.seed;
    settings.workers = ctx.workers;
    const FitExtractor ex = c.mitigate_inverse ? inverse_t2_star_extractor() : t2_star_extractor();
    try {
      table = mitigation_study(base, c.mitigate_c, ex, c.mitigate_max_order, settings);
    } catch (const std::domain_error& e) {
      throw NumericalFailure(e.what());
    }
    const double truth = zero_damping_t2(base);
    j["source"] = settings.schedule.describe();
    j["base_rates"] = rates_json(base);
    j["zero_damping_truth"] = c.mitigate_inverse ? 1.0 / truth : truth;
  }
  Json points = Json::array();
  std::ostringstream csv;
  csv << "order,estimate,sigma\n";
  for (const NoisePoint& p : table.points) {
    points.push_back({{"c", p.c}, {"value", p.value}, {"sigma", p.sigma ? Json(*p.sigma) : Json(nullptr)}});
  }
  Json results = Json::array();
  for (const auto& r : table.results) {
    results.push_back(extrapolation_json(r));
    csv << r.order << ',' << format_double(r.estimate) << ','
        << (r.sigma_est ? format_double(*r.sigma_est) : std::string()) << '\n';
  }
  j["points"] = points;
  j["results"] = results;
  write_text_file(ctx.out_dir / "extrapolation.csv", csv.str());
  write_text_file(ctx.out_dir / "summary.json", dump(j));
}

void run_converge(const ExperimentConfig& c, const RunContext& ctx) {
  const CanonicalRates rates = config_rates(c);
  const double t_total = c.converge_t_total.value_or(static_cast<double>(c.n_steps) * c.angles.tau0);
  ConvergenceResult r;
  try {
    r = convergence_order(c.schedule(), rates, initial_state(c.initial_state), c.converge_n_list, t_total);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream csv;
  csv << "n_steps,accuracy\n";
  for (std::size_t i = 0; i < r.n_steps.size(); ++i) {
    csv << r.n_steps[i] << ',' << format_double(r.accuracy[i]) << '\n';
  }
  write_text_file(ctx.out_dir / "convergence.csv", csv.str());
  Json j = {{"mode", "converge"},
            {"schedule", c.schedule().describe()},
            {"t_total_us", t_total},
            {"n_steps", r.n_steps},
            {"accuracy", r.accuracy},
            {"slope", r.slope ? Json(*r.slope) : Json(nullptr)},
            {"saturated", r.saturated}};
  write_text_file(ctx.out_dir / "summary.json", dump(j));
}

// Figure bundles.

TrotterSchedule figure_schedule(int order) {
  TrotterSchedule s;
  s.order = order;
  s.permutation = order == 1 ? parse_permutation("dph-damp-R") : parse_permutation("R-dph-damp");
  return s;
}

FitResult trotter_fit(const TrotterSchedule& s, const CanonicalRates& rates) {
  const TomographySet ts =
      generate_tomography([&](const DensityMatrix& rho0) { return run_schedule(s, rates, rho0); });
  return global_fit(ts);
}

void reproduce_fig2(const RunContext& ctx) {
  struct Row {
    char panel;
    double value_deg;
    AngleParams angles;
    int order;
    FitResult fit;
  };
  std::vector<Row> rows;
  for (int order : {1, 2})
    for (int d = 0; d <= 60; d += 10) {
      rows.push_back({'b', double(d), AngleParams::from_degrees(d, 20.0, 51.4, 3.56), order, {}});
      rows.push_back({'c', double(d), AngleParams::from_degrees(20.0, d, 38.6, 3.56), order, {}});
      rows.push_back({'d', double(d), AngleParams::from_degrees(20.0, 20.0, d, 3.56), order, {}});
    }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.panel, a.order, a.value_deg) < std::tie(b.panel, b.order, b.value_deg);
  });
  parallel_for(rows.size(), ctx.workers, [&](std::size_t i) {
    rows[i].fit = trotter_fit(figure_schedule(rows[i].order), angle_to_rates(rows[i].angles));
  });

  std::ostringstream csv;
  csv << "panel,variable_deg,order,permutation,t1_fit_us,t2_fit_us,omega_fit_khz,"
         "t1_pred_us,t2_pred_us,omega_pred_khz,converged\n";
  for (const Row& r : rows) {
    const CoherenceTimes pred = predict_coherence(r.angles, ExperimentConfig::kInfinity, ExperimentConfig::kInfinity);
    const CanonicalRates rates = angle_to_rates(r.angles);
    csv << r.panel << ',' << format_double(r.value_deg) << ',' << r.order << ','
        << permutation_name(figure_schedule(r.order).permutation) << ',' << format_double(r.fit.t1) << ','
        << format_double(r.fit.t2) << ',' << format_double(r.fit.omega * 1e3) << ','
        << format_double(pred.t1) << ',' << format_double(pred.t2) << ','
        << format_double(rates.omega * 1e3) << ',' << (r.fit.converged ? 1 : 0) << '\n';
  }
  write_text_file(ctx.out_dir / "fig2" / "coherence.csv", csv.str());
  Json j = {{"figure", "fig2"},
            {"n_steps", 13},
            {"tau0_us", 3.56},
            {"panels",
             {{"b", "theta1 swept, theta2 = 20 deg, theta3 = 51.4 deg"},
              {"c", "theta2 swept, theta1 = 20 deg, theta3 = 38.6 deg"},
              {"d", "theta3 swept, theta1 = 20 deg, theta2 = 20 deg"}}},
            {"schedules", {figure_schedule(1).describe(), figure_schedule(2).describe()}},
            {"files", {"coherence.csv"}}};
  write_text_file(ctx.out_dir / "fig2" / "summary.json", dump(j));
}

void reproduce_fig3(const RunContext& ctx) {
  constexpr double kBaseGamma1 = 0.009;
  const double t1_0 = 1.0 / kBaseGamma1;
  std::vector<double> theta2{0, 10, 20, 30, 40, 50, 60, 70};
  std::vector<FitResult> fits(theta2.size());
  const TrotterSchedule s = figure_schedule(1);
  parallel_for(theta2.size(), ctx.workers, [&](std::size_t i) {
    const AngleParams a = AngleParams::from_degrees(20.0, theta2[i], 0.0, 3.56);
    fits[i] = trotter_fit(s, with_intrinsic(angle_to_rates(a), t1_0, 2.0 * t1_0));
  });
  std::ostringstream csv;
  csv << "theta2_deg,t1_fit_us,t2_fit_us,t1_pred_us,t2_pred_us,converged\n";
  for (std::size_t i = 0; i < theta2.size(); ++i) {
    const CoherenceTimes pred = predict_coherence(AngleParams::from_degrees(20.0, theta2[i], 0.0, 3.56), t1_0, 2.0 * t1_0);
    csv << format_double(theta2[i]) << ',' << format_double(fits[i].t1) << ',' << format_double(fits[i].t2)
        << ',' << format_double(pred.t1) << ',' << format_double(pred.t2) << ','
        << (fits[i].converged ? 1 : 0) << '\n';
  }
  write_text_file(ctx.out_dir / "fig3" / "coherence.csv", csv.str());

  // Noise scale factors from the fitted decay rates of the first four points.
  std::vector<NoisePoint> measured;
  for (std::size_t i = 0; i < 4; ++i) {
    measured.push_back({fits[0].t1 / fits[i].t1, fits[i].t2, std::nullopt});
  }
  measured[0].c = 1.0;
  Json sweep_em = Json::array();
  for (std::size_t n = 0; n <= 3; ++n) sweep_em.push_back(extrapolation_json(extrapolate(measured, n)));

  const CanonicalRates dph = angle_to_rates(AngleParams::from_degrees(20.0, 0.0, 0.0, 3.56));
  const CanonicalRates base{kBaseGamma1, dph.gamma_phi, 0.0};
  const std::vector<double> c_list{1.0, 2.13, 4.93, 9.96};
  DampingStudySettings settings;
  settings.schedule = s;
  settings.workers = ctx.workers;
  const MitigationTable study = mitigation_study(base, c_list, t2_star_extractor(), 3, settings);
  Json study_points = Json::array();
  for (const NoisePoint& p : study.points) study_points.push_back({{"c", p.c}, {"t2_us", p.value}});
  Json study_em = Json::array();
  for (const auto& r : study.results) study_em.push_back(extrapolation_json(r));

  const std::vector<NoisePoint> reference{{1.0, 35.56, std::nullopt},
                                          {2.13, 29.63, std::nullopt},
                                          {4.93, 22.00, std::nullopt},
                                          {9.96, 14.15, std::nullopt}};
  Json reference_em = Json::array();
  for (std::size_t n = 0; n <= 3; ++n) reference_em.push_back(extrapolation_json(extrapolate(reference, n)));

  Json j = {{"figure", "fig3"},
            {"protocol", "theta1 = 20 deg, theta3 = 0, theta2 swept; intrinsic T1 = 1/0.009 us"},
            {"schedule", s.describe()},
            {"zero_damping_t2_us", zero_damping_t2(base)},
            {"dephasing_time_from_first_fit_us", dephasing_time(fits[0].t1, fits[0].t2)},
            {"sweep_extrapolation", {{"points", Json::array()}, {"results", sweep_em}}},
            {"scaled_damping_study", {{"base_rates", rates_json(base)}, {"points", study_points}, {"results", study_em}}},
            {"measured_reference", {{"c", {1.0, 2.13, 4.93, 9.96}}, {"t2_us", {35.56, 29.63, 22.00, 14.15}},
                                    {"results", reference_em}}},
            {"files", {"coherence.csv"}}};
  for (const NoisePoint& p : measured) j["sweep_extrapolation"]["points"].push_back({{"c", p.c}, {"t2_us", p.value}});
  write_text_file(ctx.out_dir / "fig3" / "summary.json", dump(j));
}

void reproduce_fig4(const RunContext& ctx) {
  ExperimentConfig c;
  c.angles = AngleParams::from_degrees(20.0, 30.0, 25.7, 3.56);
  c.initial_state = InitialState::kOne;
  std::vector<double> theta2;
  for (int d = 0; d <= 60; d += 5) theta2.push_back(d);
  const std::vector<int> orders{1, 2};
  const auto entries = theta2_scan(c, theta2, orders, ctx.workers);
  write_text_file(ctx.out_dir / "fig4" / "accuracy.csv", scan_csv(entries, theta2));

  const CanonicalRates rates = angle_to_rates(c.angles);
  const DensityMatrix rho0 = initial_state(c.initial_state);
  const EvolutionTrace target = target_trace(rates, rho0, 3.56, 13);
  const EvolutionTrace first = run_schedule(figure_schedule(1), rates, rho0);
  const EvolutionTrace second = run_schedule(figure_schedule(2), rates, rho0);
  std::ostringstream csv;
  csv << "step,time_us,target_sy,target_sz,first_sy,first_sz,second_sy,second_sz\n";
  for (std::size_t k = 0; k < target.size(); ++k) {
    csv << k << ',' << format_double(target.times[k]) << ',' << format_double(target.sy[k]) << ','
        << format_double(target.sz[k]) << ',' << format_double(first.sy[k]) << ','
        << format_double(first.sz[k]) << ',' << format_double(second.sy[k]) << ','
        << format_double(second.sz[k]) << '\n';
  }
  write_text_file(ctx.out_dir / "fig4" / "evolution.csv", csv.str());

  const std::vector<std::size_t> n_list{4, 8, 16, 32, 64, 128};
  Json slopes = Json::object();
  for (int order : orders) {
    const ConvergenceResult r = convergence_order(figure_schedule(order), rates, rho0, n_list, 13 * 3.56);
    slopes[figure_schedule(order).describe()] = r.slope ? Json(*r.slope) : Json(nullptr);
  }
  Json j = {{"figure", "fig4"},
            {"protocol", "theta1 = 20 deg, theta3 = 25.7 deg, theta2 swept; N = 13, tau0 = 3.56 us, initial state |1>"},
            {"evolution_at_theta2_deg", 30},
            {"convergence_slopes", slopes},
            {"files", {"accuracy.csv", "evolution.csv"}}};
  write_text_file(ctx.out_dir / "fig4" / "summary.json", dump(j));
}

}  // namespace

void run_mode(Mode mode, const ExperimentConfig& config, const RunContext& ctx) {
  switch (mode) {
    case Mode::kEvolve: return run_evolve(config, ctx);
    case Mode::kTrotter: return run_trotter(config, ctx);
    case Mode::kScan: return run_scan(config, ctx);
    case Mode::kDilateVerify: return run_dilate_verify(config, ctx);
    case Mode::kFit: return run_fit(config, ctx);
    case Mode::kMitigate: return run_mitigate(config, ctx);
    case Mode::kConverge: return run_converge(config, ctx);
  }
}

std::optional<Figure> parse_figure(std::string_view name) {
  if (name == "fig2") return Figure::kFig2;
  if (name == "fig3") return Figure::kFig3;
  if (name == "fig4") return Figure::kFig4;
  return std::nullopt;
}

void reproduce(Figure figure, const RunContext& ctx) {
  switch (figure) {
    case Figure::kFig2: return reproduce_fig2(ctx);
    case Figure::kFig3: return reproduce_fig3(ctx);
    case Figure::kFig4: return reproduce_fig4(ctx);
  }
}

}  // namespace qtrotter::cli
