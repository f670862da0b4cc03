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


#include "qtrotter/mitigation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

#include "qtrotter/parallel.h"

namespace qtrotter {

namespace {

double parse_double(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
    field.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw std::invalid_argument("noise point CSV line " + std::to_string(line) + ": bad number '" +
                                std::string(field) + "'");
  }
  return v;
}

}  // namespace

RichardsonSolution richardson_solve(std::span<const double> c, std::size_t n) {
  if (c.size() < n + 1) {
    throw std::invalid_argument("richardson_solve: order " + std::to_string(n) + " needs " +
                                std::to_string(n + 1) + " scale factors");
  }
  const std::size_t m = n + 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
      throw std::invalid_argument("richardson_solve: scale factors must be positive");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (c[i] == c[j]) throw std::domain_error("richardson_solve: duplicate scale factor (singular system)");
  }

  // Row i of the inverse Vandermonde holds the monomial coefficients of the
  // Lagrange basis polynomial l_i; gamma_i = l_i(0).
  RichardsonSolution sol;
  sol.gammas.resize(m);
  std::vector<double> row_sums(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> poly{1.0};
    double gamma = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const double denom = c[i] - c[j];
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k] / denom;
        next[k] -= poly[k] * c[j] / denom;
      }
      poly.swap(next);
      gamma *= c[j] / (c[j] - c[i]);
    }
    sol.gammas[i] = gamma;
    for (double a : poly) row_sums[i] += std::abs(a);
  }
  double v_norm = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::pow(c[i], static_cast<double>(k));
    v_norm = std::max(v_norm, s);
  }
  sol.condition = v_norm * *std::max_element(row_sums.begin(), row_sums.end());
  return sol;
}

std::vector<double> richardson_coeffs(std::span<const double> c, std::size_t n) {
  RichardsonSolution sol = richardson_solve(c, n);
  if (sol.condition > kConditionWarning) {
    std::clog << "warning: Richardson system of order " << n << " has condition estimate "
              << sol.condition << "\n";
  }
  return std::move(sol.gammas);
}

double moment_residual(std::span<const double> c, std::span<const double> gammas) {
  if (c.size() < gammas.size()) throw std::invalid_argument("moment_residual: too few scale factors");
  double worst = 0.0;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < gammas.size(); ++i) s += gammas[i] * std::pow(c[i], static_cast<double>(k));
    worst = std::max(worst, std::abs(s - (k == 0 ? 1.0 : 0.0)));
  }
  return worst;
}

ExtrapolationResult extrapolate(std::span<const NoisePoint> points, std::size_t n) {
  if (points.size() < n + 1) {
    throw std::invalid_argument("extrapolate: order " + std::to_string(n) + " needs " +
                                std::to_string(n + 1) + " points, got " + std::to_string(points.size()));
  }
  if (std::abs(points[0].c - 1.0) > 1e-12) {
    throw std::invalid_argument("extrapolate: the first point must have c = 1");
  }
  std::vector<double> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = points[i].c;

  ExtrapolationResult r;
  r.order = n;
  r.gammas = richardson_coeffs(c, n);
  bool have_sigma = true;
  double var = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    r.estimate += r.gammas[i] * points[i].value;
    if (points[i].sigma) {
      if (!(*points[i].sigma >= 0.0)) throw std::invalid_argument("extrapolate: sigma must be >= 0");
      var += r.gammas[i] * r.gammas[i] * *points[i].sigma * *points[i].sigma;
    } else {
      have_sigma = false;
    }
  }
  if (have_sigma) r.sigma_est = std::sqrt(var);
  return r;
}

MitigationTable zero_noise_study(std::span<const double> c_list,
                                 const std::function<NoisePoint(double c)>& measure,
                                 std::size_t n_max, unsigned workers) {
  if (c_list.size() < n_max + 1) throw std::invalid_argument("zero_noise_study: too few scale factors");
  MitigationTable table;
  table.points.resize(c_list.size());
  parallel_for(c_list.size(), workers, [&](std::size_t i) { table.points[i] = measure(c_list[i]); });
  for (std::size_t n = 0; n <= n_max; ++n) table.results.push_back(extrapolate(table.points, n));
  return table;
}

FitExtractor t2_star_extractor() {
  return [](const FitResult& f) { return f.t2; };
}

FitExtractor inverse_t2_star_extractor() {
  return [](const FitResult& f) { return 1.0 / f.t2; };
}

MitigationTable mitigation_study(const CanonicalRates& base, std::span<const double> c_list,
                                 const FitExtractor& extractor, std::size_t n_max,
                                 const DampingStudySettings& settings) {
  base.validate();
  settings.schedule.validate();
  auto measure = [&](double c) {
    CanonicalRates rates = base;
    rates.gamma1 = c * base.gamma1;
    const TomographySet ts = generate_tomography(
        [&](const DensityMatrix& rho0) { return run_schedule(settings.schedule, rates, rho0); },
        settings.shots, settings.seed);
    const FitResult fit = global_fit(ts);
    if (!fit.converged) {
      throw std::domain_error("mitigation_study: fit did not converge at c = " + std::to_string(c));
    }
    NoisePoint p{c, extractor(fit), std::nullopt};
    if (settings.shots) {
      const double se = fit_standard_errors(ts, fit).t2;
      const double h = 1e-6 * fit.t2;
      FitResult up = fit, down = fit;
      up.t2 += h;
      down.t2 -= h;
      p.sigma = std::abs(extractor(up) - extractor(down)) / (2.0 * h) * se;
    }
    return p;
  };
  return zero_noise_study(c_list, measure, n_max, settings.workers);
}

double zero_damping_t2(const CanonicalRates& base) {
  return base.gamma_phi > 0.0 ? 1.0 / base.gamma_phi : std::numeric_limits<double>::infinity();
}

std::vector<NoisePoint> read_noise_points_csv(std::istream& in) {
  std::vector<NoisePoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const auto first = line.find_first_not_of(" \t");
    if (line_no == 1 && std::isalpha(static_cast<unsigned char>(line[first]))) continue;  // header
    if (fields.size() < 2 || fields.size() > 3) {
      throw std::invalid_argument("noise point CSV line " + std::to_string(line_no) +
                                  ": expected c,value[,sigma]");
    }
    NoisePoint p{parse_double(fields[0], line_no), parse_double(fields[1], line_no), std::nullopt};
    if (fields.size() == 3 && fields[2].find_first_not_of(" \t\r") != std::string_view::npos) {
      p.sigma = parse_double(fields[2], line_no);
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace qtrotter
