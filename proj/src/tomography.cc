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


#include "qtrotter/tomography.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrotter/optimize.h"

namespace qtrotter {

namespace {

constexpr double kRateFloor = 1e-6;

struct UnitGenerators {
  ComplexMatrix damping;
  ComplexMatrix dephasing;
  ComplexMatrix rotation;
};

const UnitGenerators& unit_generators() {
  static const UnitGenerators g{
      lindblad_superop({damping_generator(1.0)}).matrix(),
      lindblad_superop({dephasing_generator(1.0)}).matrix(),
      lindblad_superop({rotation_generator(1.0)}).matrix(),
  };
  return g;
}

struct Grid {
  double tau0 = 0.0;
  std::size_t points = 0;  // per curve, including t = 0
};

Grid check_grid(const TomographySet& ts) {
  ts.validate();
  const auto t = ts.times();
  if (t.size() < 6) throw std::invalid_argument("global_fit: need at least 6 time points per trace");
  const double tau0 = t[1] - t[0];
  if (t[0] != 0.0 || !(tau0 > 0.0)) {
    throw std::invalid_argument("global_fit: time grid must start at 0 and increase");
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (std::abs(t[j] - static_cast<double>(j) * tau0) > 1e-9 * t.back()) {
      throw std::invalid_argument("global_fit: time grid must be uniform");
    }
  }
  return {tau0, t.size()};
}

// Model curves for signed rates (the generator is linear in each rate), laid
// out as [state][observable][step].
void model_curves(double gamma1, double gamma_phi, double omega, const Grid& grid,
                  std::vector<double>& out) {
  const auto& u = unit_generators();
  const ComplexMatrix l = Complex(gamma1) * u.damping + Complex(gamma_phi) * u.dephasing +
                          Complex(omega) * u.rotation;
  const ComplexMatrix p = expm(Complex(grid.tau0) * l);
  const auto pe = p.entries();
  out.resize(12 * grid.points);
  std::size_t s_index = 0;
  for (InitialState s : kTomographyStates) {
    const ComplexMatrix v0 = vectorize(initial_state(s).matrix());
    std::array<Complex, 4> v{v0(0, 0), v0(1, 0), v0(2, 0), v0(3, 0)};
    double* sx = &out[(s_index * 3 + 0) * grid.points];
    double* sy = &out[(s_index * 3 + 1) * grid.points];
    double* sz = &out[(s_index * 3 + 2) * grid.points];
    for (std::size_t j = 0; j < grid.points; ++j) {
      if (j > 0) {
        std::array<Complex, 4> w{};
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) w[r] += pe[r * 4 + c] * v[c];
        v = w;
      }
      sx[j] = 2.0 * v[2].real();
      sy[j] = -2.0 * v[2].imag();
      sz[j] = (v[0] - v[3]).real();
    }
    ++s_index;
  }
}

std::vector<double> data_vector(const TomographySet& ts) {
  std::vector<double> d;
  d.reserve(12 * ts.times().size());
  for (InitialState s : kTomographyStates)
    for (Observable o : kTomographyObservables) {
      const auto c = ts.curve(s, o);
      d.insert(d.end(), c.begin(), c.end());
    }
  return d;
}

struct Physical {
  double r1, r2, omega;
};

Physical to_physical(std::span<const double> x, double scale) {
  const double r1 = kRateFloor + std::abs(x[0]) / scale;
  const double r2 = std::max(r1 / 2.0 + std::abs(x[1]) / scale, kRateFloor);
  return {r1, r2, std::abs(x[2]) / scale};
}

double sum_squares(const std::vector<double>& model, const std::vector<double>& data) {
  double s = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double r = model[i] - data[i];
    s += r * r;
  }
  return s;
}

std::array<std::array<double, 3>, 3> invert3(const std::array<std::array<double, 3>, 3>& a) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (det == 0.0 || !std::isfinite(det)) {
    throw std::domain_error("fit_standard_errors: singular normal matrix");
  }
  std::array<std::array<double, 3>, 3> inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      inv[i][j] = (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]) / det;
    }
  return inv;
}

}  // namespace

DensityMatrix initial_state(InitialState s) {
  switch (s) {
    case InitialState::kZero: return DensityMatrix::zero();
    case InitialState::kPlus: return DensityMatrix::plus();
    case InitialState::kPlusI: return DensityMatrix::plus_i();
    case InitialState::kOne: return DensityMatrix::one();
  }
  throw std::invalid_argument("initial_state: unknown state");
}

std::string_view state_name(InitialState s) {
  switch (s) {
    case InitialState::kZero: return "0";
    case InitialState::kPlus: return "+";
    case InitialState::kPlusI: return "+i";
    case InitialState::kOne: return "1";
  }
  return "?";
}

std::string_view observable_name(Observable o) {
  switch (o) {
    case Observable::kX: return "x";
    case Observable::kY: return "y";
    case Observable::kZ: return "z";
  }
  return "?";
}

std::span<const double> TomographySet::curve(InitialState s, Observable o) const {
  const EvolutionTrace& t = trace(s);
  switch (o) {
    case Observable::kX: return t.sx;
    case Observable::kY: return t.sy;
    case Observable::kZ: return t.sz;
  }
  throw std::invalid_argument("TomographySet::curve: unknown observable");
}

void TomographySet::validate() const {
  const double eps = shots ? 3.0 / std::sqrt(static_cast<double>(*shots)) : kBlochNormSlack;
  for (const EvolutionTrace& t : traces) {
    if (t.times != traces[0].times) throw std::invalid_argument("TomographySet: traces must share times");
    for (const auto* c : {&t.sx, &t.sy, &t.sz}) {
      if (c->size() != t.times.size()) throw std::invalid_argument("TomographySet: ragged trace");
      for (double v : *c)
        if (!(std::abs(v) <= 1.0 + eps)) {
          throw std::invalid_argument("TomographySet: expectation " + std::to_string(v) +
                                      " out of range");
        }
    }
  }
}

TomographySet generate_tomography(const TraceGenerator& generator, std::optional<std::uint64_t> shots,
                                  std::uint64_t seed) {
  if (shots && *shots == 0) throw std::invalid_argument("generate_tomography: shots must be positive");
  TomographySet ts;
  ts.shots = shots;
  for (InitialState s : kTomographyStates) {
    EvolutionTrace t = generator(initial_state(s));
    t.initial_label = std::string(state_name(s));
    ts.traces[static_cast<std::size_t>(s)] = std::move(t);
  }
  if (shots) {
    std::mt19937_64 rng(seed);
    const double n = static_cast<double>(*shots);
    for (EvolutionTrace& t : ts.traces)
      for (auto* c : {&t.sx, &t.sy, &t.sz})
        for (double& v : *c) {
          const double p = std::clamp((1.0 + v) / 2.0, 0.0, 1.0);
          std::binomial_distribution<std::uint64_t> dist(*shots, p);
          v = 2.0 * static_cast<double>(dist(rng)) / n - 1.0;
        }
  }
  ts.validate();
  return ts;
}

TomographySet generate_tomography(const CanonicalRates& rates, double tau0, std::size_t n_steps,
                                  std::optional<std::uint64_t> shots, std::uint64_t seed) {
  if (n_steps < 1) throw std::invalid_argument("generate_tomography: need at least one step");
  rates.validate();
  const Superoperator step = propagator(qubit_liouvillian(rates), tau0);
  return generate_tomography(
      [&](const DensityMatrix& rho0) { return sample_trace(step, rho0, tau0, n_steps); }, shots, seed);
}

CanonicalRates FitResult::rates() const {
  const double g1 = 1.0 / t1;
  return {g1, std::max(1.0 / t2 - g1 / 2.0, 0.0), omega};
}

double fit_cost(const TomographySet& ts, const FitParameters& p) {
  const Grid grid = check_grid(ts);
  std::vector<double> model;
  model_curves(1.0 / p.t1, 1.0 / p.t2 - 0.5 / p.t1, p.omega, grid, model);
  return sum_squares(model, data_vector(ts));
}

FitResult global_fit(const TomographySet& ts, std::optional<FitParameters> init_guess,
                     const FitOptions& options) {
  const Grid grid = check_grid(ts);
  const std::vector<double> data = data_vector(ts);
  const double scale = grid.tau0 * static_cast<double>(grid.points - 1);

  std::size_t evaluations = 0;
  std::vector<double> model;
  const Objective cost = [&](std::span<const double> x) {
    ++evaluations;
    const Physical p = to_physical(x, scale);
    model_curves(p.r1, p.r2 - p.r1 / 2.0, p.omega, grid, model);
    return sum_squares(model, data);
  };

  struct Start {
    double value;
    std::vector<double> x;
  };
  std::vector<Start> starts;
  const double omega_max = 1.0 / (2.0 * grid.tau0);
  constexpr int kOmegaCells = 24;
  for (double a : {0.03, 0.3, 1.0, 3.0})
    for (double b : {0.03, 0.3, 1.0, 3.0})
      for (int k = 0; k <= kOmegaCells; ++k) {
        std::vector<double> x{a, b, omega_max * k / kOmegaCells * scale};
        const double v = cost(x);
        starts.push_back({v, std::move(x)});
      }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const Start& l, const Start& r) { return l.value < r.value; });
  starts.resize(5);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  for (Start& s : starts)
    for (double& xi : s.x) xi *= 1.0 + jitter(rng);
  if (init_guess) {
    const double r1 = 1.0 / init_guess->t1;
    starts.push_back({0.0, {(r1 - kRateFloor) * scale, std::max(1.0 / init_guess->t2 - r1 / 2.0, 0.0) * scale,
                            init_guess->omega * scale}});
  }

  auto run = [&](const std::vector<double>& x0, double step_fraction) {
    NelderMeadOptions nm;
    nm.initial_step.resize(3);
    for (std::size_t i = 0; i < 3; ++i) nm.initial_step[i] = step_fraction * std::max(std::abs(x0[i]), 0.05);
    nm.x_tol = 1e-12;
    nm.f_tol = 1e-28;
    nm.f_rel_tol = 1e-15;
    nm.max_evaluations = std::min<std::size_t>(8000, options.max_evaluations);
    return nelder_mead(cost, x0, nm);
  };

  NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const Start& s : starts) {
    NelderMeadResult r = run(s.x, 0.3);
    if (r.value < best.value) best = std::move(r);
  }

  bool converged = false;
  for (std::size_t round = 0; round < options.max_polish_rounds && evaluations < options.max_evaluations;
       ++round) {
    NelderMeadResult r = run(best.x, 0.01);
    double change = 0.0, size = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      change = std::max(change, std::abs(std::abs(r.x[i]) - std::abs(best.x[i])));
      size = std::max(size, std::abs(best.x[i]));
    }
    if (r.value <= best.value) best = std::move(r);
    if (change <= options.relative_tolerance * std::max(size, 1.0)) {
      converged = true;
      break;
    }
  }

  const Physical p = to_physical(best.x, scale);
  FitResult out;
  out.t1 = 1.0 / p.r1;
  out.t2 = 1.0 / p.r2;
  out.omega = p.omega;
  out.residual = std::sqrt(best.value / static_cast<double>(data.size()));
  out.converged = converged;
  out.evaluations = evaluations;
  return out;
}

FitErrors fit_standard_errors(const TomographySet& ts, const FitResult& fit) {
  const Grid grid = check_grid(ts);
  const std::vector<double> data = data_vector(ts);
  const std::array<double, 3> p0{1.0 / fit.t1, 1.0 / fit.t2, fit.omega};
  auto curves = [&](const std::array<double, 3>& p) {
    std::vector<double> m;
    model_curves(p[0], p[1] - p[0] / 2.0, p[2], grid, m);
    return m;
  };
  const std::vector<double> m0 = curves(p0);
  const std::size_t n = data.size();

  std::vector<std::array<double, 3>> jac(n);
  for (std::size_t k = 0; k < 3; ++k) {
    const double h = 1e-6 * std::max(std::abs(p0[k]), 1e-3);
    auto up = p0, down = p0;
    up[k] += h;
    down[k] -= h;
    const std::vector<double> mu = curves(up), md = curves(down);
    for (std::size_t i = 0; i < n; ++i) jac[i][k] = (mu[i] - md[i]) / (2.0 * h);
  }

  std::array<std::array<double, 3>, 3> a{}, b{};
  const double pooled = sum_squares(m0, data) / static_cast<double>(n - 3);
  for (std::size_t i = 0; i < n; ++i) {
    const double var = ts.shots ? std::max(1.0 - m0[i] * m0[i], 0.0) / static_cast<double>(*ts.shots) : pooled;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        a[r][c] += jac[i][r] * jac[i][c];
        b[r][c] += var * jac[i][r] * jac[i][c];
      }
  }
  const auto ai = invert3(a);
  std::array<std::array<double, 3>, 3> cov{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) cov[r][c] += ai[r][k] * b[k][l] * ai[l][c];

  return {std::sqrt(cov[0][0]) * fit.t1 * fit.t1, std::sqrt(cov[1][1]) * fit.t2 * fit.t2,
          std::sqrt(cov[2][2])};
}

double dephasing_time(double t1, double t2) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::domain_error("dephasing_time: times must be positive");
  const double rate = 1.0 / t2 - 1.0 / (2.0 * t1);
  if (rate < -1e-9 / t2) {
    throw std::domain_error("dephasing_time: T2 exceeds 2*T1 (negative dephasing rate)");
  }
  if (rate <= 1e-15 / t2) return std::numeric_limits<double>::infinity();
  return 1.0 / rate;
}

}  // namespace qtrotter
