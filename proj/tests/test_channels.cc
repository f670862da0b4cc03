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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qtrotter/channels.h"
#include "qtrotter/dilation.h"
#include "test_support.h"

namespace qtrotter {
namespace {

using testing::random_channel;
using testing::random_state;

const double kLn2 = std::log(2.0);

TEST(Kraus, CompletenessEnforced) {
  EXPECT_THROW(KrausChannel({ComplexMatrix::diagonal({1.0, 0.5})}), std::invalid_argument);
  EXPECT_THROW(KrausChannel({}), std::invalid_argument);
  EXPECT_LT(KrausChannel::identity(3).completeness_error(), 1e-15);
}

TEST(Dephasing, IdentityAtZeroAndDiagonalInvariance) {
  EXPECT_LT(channel_distance(dephasing_channel(0.3, 0.0), KrausChannel::identity(2)), 1e-15);
  EXPECT_LT(channel_distance(dephasing_channel(0.0, 5.0), KrausChannel::identity(2)), 1e-15);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_state(rng, 2);
    const DensityMatrix out = apply(dephasing_channel(0.2, 7.0), rho);
    EXPECT_NEAR(out.matrix()(0, 0).real(), rho.matrix()(0, 0).real(), 1e-15);
    EXPECT_NEAR(out.matrix()(1, 1).real(), rho.matrix()(1, 1).real(), 1e-15);
  }
}

TEST(Dephasing, HalvesCoherenceAtLn2) {
  const DensityMatrix out = apply(dephasing_channel(kLn2, 1.0), DensityMatrix::plus());
  EXPECT_LT(max_abs_diff(out.matrix(), ComplexMatrix{{0.5, 0.25}, {0.25, 0.5}}), 1e-15);
}

TEST(Damping, LimitsAndHalfLife) {
  EXPECT_LT(channel_distance(damping_channel(0.4, 0.0), KrausChannel::identity(2)), 1e-15);
  const DensityMatrix half = apply(damping_channel(kLn2, 1.0), DensityMatrix::one());
  EXPECT_LT(max_abs_diff(half.matrix(), ComplexMatrix::diagonal({0.5, 0.5})), 1e-15);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix out = apply(damping_channel(INFINITY, 1.0), random_state(rng, 2));
    EXPECT_LT(max_abs_diff(out.matrix(), DensityMatrix::zero().matrix()), 1e-15);
  }
  EXPECT_THROW(damping_channel(-1.0, 1.0), std::invalid_argument);
}

TEST(Unitary, Examples) {
  EXPECT_LT(channel_distance(unitary_channel(ComplexMatrix::identity(2)), KrausChannel::identity(2)), 1e-15);
  const DensityMatrix flipped = apply(unitary_channel(pauli::X()), DensityMatrix::zero());
  EXPECT_LT(max_abs_diff(flipped.matrix(), DensityMatrix::one().matrix()), 1e-15);
  const DensityMatrix half_cycle = apply(unitary_channel(rx(std::numbers::pi)), DensityMatrix::zero());
  EXPECT_LT(max_abs_diff(half_cycle.matrix(), DensityMatrix::one().matrix()), 1e-15);
  EXPECT_THROW(unitary_channel(ComplexMatrix::diagonal({1.0, 0.5})), std::invalid_argument);
}

TEST(Depolarizing, MixesTowardsIdentity) {
  std::mt19937_64 rng(33);
  const double p = 0.3;
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_state(rng, 2);
    const ComplexMatrix expected =
        Complex(1.0 - p) * rho.matrix() + Complex(p / 2.0) * ComplexMatrix::identity(2);
    EXPECT_LT(max_abs_diff(apply(depolarizing_channel(p), rho).matrix(), expected), 1e-15);
  }
}

TEST(Choi, IdentityIsMaximallyEntangledProjector) {
  const ChoiMatrix j = to_choi(KrausChannel::identity(2));
  const ComplexMatrix expected{{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}};
  EXPECT_LT(max_abs_diff(j.matrix(), expected), 1e-15);
  const auto eig = eigh(j.matrix());
  EXPECT_NEAR(eig.values[3], 2.0, 1e-14);
  EXPECT_NEAR(eig.values[2], 0.0, 1e-14);
}

TEST(Choi, CompleteDephasingHasRankTwo) {
  const ChoiMatrix j = to_choi(dephasing_channel(INFINITY, 1.0));
  const auto eig = eigh(j.matrix());
  int rank = 0;
  for (double l : eig.values) rank += l > 1e-12;
  EXPECT_EQ(rank, 2);
}

TEST(Choi, RejectsNonPositive) {
  // The transpose map is positive but not completely positive.
  const ComplexMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  EXPECT_THROW(ChoiMatrix(2, swap), std::invalid_argument);
  const CptpReport r = check_cptp(Superoperator(2, swap));
  EXPECT_FALSE(r.ok());
  EXPECT_NEAR(r.min_choi_eigenvalue, -1.0, 1e-12);
}

TEST(Choi, KrausRoundTrip) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const KrausChannel ch = random_channel(rng, 2, 1 + trial % 4);
    const KrausChannel back = choi_to_kraus(to_choi(ch));
    EXPECT_LT(max_abs_diff(to_superop(back).matrix(), to_superop(ch).matrix()), 1e-10);
    EXPECT_LE(back.operators().size(), 4u);
  }
}

TEST(Distance, Examples) {
  const KrausChannel id = KrausChannel::identity(2);
  const KrausChannel x = unitary_channel(pauli::X());
  EXPECT_EQ(channel_distance(id, id), 0.0);
  EXPECT_NEAR(choi_trace_distance(to_superop(id), to_superop(x)), 4.0, 1e-12);
  EXPECT_NEAR(channel_distance(id, x), std::sqrt(8.0), 1e-12);
  EXPECT_GT(channel_distance(dephasing_channel(kLn2, 1.0), damping_channel(kLn2, 1.0)), 0.1);
  EXPECT_THROW(channel_distance(id, KrausChannel::identity(3)), std::invalid_argument);
}

TEST(Families, AreCptp) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    for (const KrausChannel& ch :
         {dephasing_channel(u(rng), 10 * u(rng)), damping_channel(u(rng), 10 * u(rng)),
          amplitude_damping_channel(u(rng)), depolarizing_channel(u(rng)),
          unitary_channel(rx(6 * u(rng))), random_channel(rng, 2, 3)}) {
      EXPECT_LT(ch.completeness_error(), 1e-10);
      EXPECT_TRUE(check_cptp(to_superop(ch)).ok());
    }
  }
}

TEST(Families, PreserveStates) {
  std::mt19937_64 rng(36);
  const std::vector<KrausChannel> family{dephasing_channel(0.3, 2.0), damping_channel(0.2, 3.0),
                                         depolarizing_channel(0.4), unitary_channel(rx(1.1)),
                                         random_channel(rng, 2, 2)};
  for (const KrausChannel& ch : family) {
    for (int trial = 0; trial < 1000; ++trial) {
      const ComplexMatrix out = apply_to_operator(ch, random_state(rng, 2).matrix());
      ASSERT_LT(out.hermiticity_error(), 1e-12);
      ASSERT_NEAR(out.trace().real(), 1.0, 1e-12);
      ASSERT_GE(eigh(out).values.front(), -1e-12);
    }
  }
}

TEST(Families, DephasingAndDampingCommute) {
  for (double g : {0.01, 0.3, 2.0}) {
    const Superoperator a = to_superop(dephasing_channel(g, 3.56));
    const Superoperator b = to_superop(damping_channel(2 * g, 3.56));
    EXPECT_LT(max_abs_diff((a * b).matrix(), (b * a).matrix()), 1e-12);
  }
}

TEST(Families, MatchLiouvillianPropagators) {
  for (double g : {0.0, 0.017, 0.08, 0.5}) {
    for (double tau : {0.5, 3.56, 20.0}) {
      EXPECT_LT(channel_distance(propagator(lindblad_superop({dephasing_generator(g)}), tau),
                                 dephasing_channel(g, tau)),
                1e-10);
      EXPECT_LT(channel_distance(propagator(lindblad_superop({damping_generator(g)}), tau),
                                 damping_channel(g, tau)),
                1e-10);
    }
  }
}

}  // namespace
}  // namespace qtrotter
