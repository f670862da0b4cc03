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


#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "qtrotter/dilation.h"
#include "qtrotter/mitigation.h"

namespace qtrotter {
namespace {

const std::vector<NoisePoint> kReference = {
    {1.00, 35.56, {}}, {2.13, 29.63, {}}, {4.93, 22.00, {}}, {9.96, 14.15, {}}};

TEST(Richardson, CoefficientExamples) {
  const double c12[] = {1.0, 2.0};
  auto g = richardson_coeffs(c12, 1);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_NEAR(g[0], 2.0, 1e-14);
  EXPECT_NEAR(g[1], -1.0, 1e-14);

  const double c213[] = {1.0, 2.13};
  g = richardson_coeffs(c213, 1);
  EXPECT_NEAR(g[0], 1.88496, 1e-5);
  EXPECT_NEAR(g[1], -0.88496, 1e-5);

  g = richardson_coeffs(c213, 0);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], 1.0);
}

TEST(Richardson, RejectsBadNodes) {
  const double dup[] = {1.0, 2.0, 2.0};
  EXPECT_THROW(richardson_coeffs(dup, 2), std::domain_error);
  const double two[] = {1.0, 2.0};
  EXPECT_THROW(richardson_coeffs(two, 2), std::invalid_argument);
  const double neg[] = {1.0, -2.0};
  EXPECT_THROW(richardson_coeffs(neg, 1), std::invalid_argument);
}

TEST(Richardson, MomentConditions) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.2, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c{1.0};
    for (int i = 0; i < 4; ++i) c.push_back(c.back() + u(rng));
    for (std::size_t n = 0; n <= 4; ++n) {
      const RichardsonSolution s = richardson_solve(c, n);
      EXPECT_LT(moment_residual(std::span(c).first(n + 1), s.gammas), 1e-8);
      EXPECT_GE(s.condition, 1.0);
    }
  }
}

TEST(Richardson, ConditionGrowsForClusteredNodes) {
  const double spread[] = {1.0, 2.0, 3.0};
  const double close[] = {1.0, 1.001, 1.002};
  EXPECT_GT(richardson_solve(close, 2).condition, 1e3 * richardson_solve(spread, 2).condition);
}

TEST(Extrapolate, ReferenceSeries) {
  EXPECT_DOUBLE_EQ(extrapolate(kReference, 0).estimate, 35.56);
  EXPECT_NEAR(extrapolate(kReference, 1).estimate, 40.81, 0.01);
  double previous = 0.0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const ExtrapolationResult r = extrapolate(kReference, n);
    EXPECT_EQ(r.order, n);
    EXPECT_EQ(r.gammas.size(), n + 1);
    EXPECT_FALSE(r.sigma_est.has_value());
    EXPECT_GT(r.estimate, previous);
    previous = r.estimate;
  }
}

TEST(Extrapolate, EqualValuesAreFixed) {
  std::vector<NoisePoint> pts;
  for (double c : {1.0, 2.13, 4.93, 9.96}) pts.push_back({c, 17.5, {}});
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_NEAR(extrapolate(pts, n).estimate, 17.5, 1e-10);
}

TEST(Extrapolate, SigmaPropagation) {
  const std::vector<NoisePoint> pts = {{1.0, 3.0, 1.0}, {2.0, 2.0, 1.0}};
  const ExtrapolationResult r = extrapolate(pts, 1);
  ASSERT_TRUE(r.sigma_est.has_value());
  EXPECT_NEAR(*r.sigma_est, std::sqrt(5.0), 1e-14);
  EXPECT_NEAR(r.estimate, 4.0, 1e-14);

  const std::vector<NoisePoint> partial = {{1.0, 3.0, 1.0}, {2.0, 2.0, {}}};
  EXPECT_FALSE(extrapolate(partial, 1).sigma_est.has_value());
}

TEST(Extrapolate, Preconditions) {
  EXPECT_THROW(extrapolate(std::span(kReference).first(2), 2), std::invalid_argument);
  const std::vector<NoisePoint> shifted = {{2.0, 1.0, {}}, {3.0, 1.0, {}}};
  EXPECT_THROW(extrapolate(shifted, 1), std::invalid_argument);
}

TEST(Extrapolate, Linearity) {
  std::vector<NoisePoint> v = kReference, w = kReference, mix = kReference;
  const double a = 2.5, b = -0.75;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i].value = std::sin(static_cast<double>(i) + 0.3);
    mix[i].value = a * v[i].value + b * w[i].value;
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    const double lhs = extrapolate(mix, n).estimate;
    const double rhs = a * extrapolate(v, n).estimate + b * extrapolate(w, n).estimate;
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Extrapolate, PolynomialExactness) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c[] = {1.0, 1.7, 2.9, 4.1, 6.3};
  for (int trial = 0; trial < 50; ++trial) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<double> coef(n + 1);
      for (double& k : coef) k = u(rng);
      std::vector<NoisePoint> pts;
      double scale = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        double y = 0.0, p = 1.0;
        for (double k : coef) {
          y += k * p;
          scale = std::max(scale, std::abs(k * p));
          p *= c[i];
        }
        pts.push_back({c[i], y, {}});
      }
      EXPECT_NEAR(extrapolate(pts, n).estimate, coef[0], 1e-8 * std::max(1.0, scale));
    }
  }
}

TEST(ZeroNoiseStudy, ParallelMatchesSerial) {
  const double c[] = {1.0, 2.0, 3.5, 5.0};
  auto measure = [](double x) { return NoisePoint{x, 3.0 - 0.5 * x + 0.1 * x * x, {}}; };
  const MitigationTable serial = zero_noise_study(c, measure, 3, 1);
  const MitigationTable threaded = zero_noise_study(c, measure, 3, 4);
  ASSERT_EQ(serial.results.size(), 4u);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(serial.results[n].estimate, threaded.results[n].estimate);
  }
  EXPECT_NEAR(serial.results[2].estimate, 3.0, 1e-12);
  EXPECT_NEAR(serial.results[3].estimate, 3.0, 1e-12);
}

TEST(NoisePointsCsv, Parses) {
  std::istringstream in("c,value,sigma\n1,35.56,0.5\n\n2.13,29.63\n");
  const std::vector<NoisePoint> pts = read_noise_points_csv(in);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].c, 1.0);
  EXPECT_EQ(pts[0].value, 35.56);
  ASSERT_TRUE(pts[0].sigma.has_value());
  EXPECT_EQ(*pts[0].sigma, 0.5);
  EXPECT_FALSE(pts[1].sigma.has_value());

  std::istringstream bad("1,abc\n");
  EXPECT_THROW(read_noise_points_csv(bad), std::invalid_argument);
}

CanonicalRates study_base() {
  CanonicalRates r = angle_to_rates(AngleParams::from_degrees(20, 0, 0, 3.56));
  r.gamma1 = 0.009;
  return r;
}

TEST(MitigationStudy, FirstOrderWithinBand) {
  const CanonicalRates base = study_base();
  const double c[] = {1.0, 2.13, 4.93, 9.96};
  DampingStudySettings settings;
  settings.workers = 4;
  const MitigationTable t = mitigation_study(base, c, t2_star_extractor(), 3, settings);
  const double truth = zero_damping_t2(base);
  EXPECT_NEAR(t.results[0].estimate, t.points[0].value, 0.0);
  EXPECT_NEAR(t.results[0].estimate, 1.0 / (base.gamma_phi + base.gamma1 / 2), 1e-4 * truth);
  EXPECT_LT(std::abs(t.results[1].estimate - truth), 0.15 * truth);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_LT(std::abs(t.results[n].estimate - truth), std::abs(t.results[n - 1].estimate - truth));
  }
}

TEST(MitigationStudy, InverseT2IsLinearInDamping) {
  const CanonicalRates base = study_base();
  const double c[] = {1.0, 2.13, 4.93};
  const MitigationTable t = mitigation_study(base, c, inverse_t2_star_extractor(), 2);
  EXPECT_NEAR(t.results[1].estimate, base.gamma_phi, 1e-7);
  EXPECT_NEAR(t.results[2].estimate, base.gamma_phi, 1e-7);
}

TEST(MitigationStudy, ShotsGiveSigma) {
  const double c[] = {1.0, 2.0};
  DampingStudySettings settings;
  settings.shots = 2000;
  settings.seed = 5;
  const MitigationTable t = mitigation_study(study_base(), c, t2_star_extractor(), 1, settings);
  ASSERT_TRUE(t.results[1].sigma_est.has_value());
  EXPECT_GT(*t.results[1].sigma_est, 0.0);
}

}  // namespace
}  // namespace qtrotter
