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
#include "qtrotter/liouvillian.h"
#include "test_support.h"

namespace qtrotter {
namespace {

using testing::random_hermitian;
using testing::random_matrix;
using testing::random_state;

TEST(Vectorize, ColumnStackingRoundTrip) {
  const ComplexMatrix m{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix v = vectorize(m);
  EXPECT_EQ(v, ComplexMatrix(4, 1, {1.0, 3.0, 2.0, 4.0}));
  EXPECT_EQ(unvectorize(v, 2), m);
  EXPECT_THROW(unvectorize(v, 3), std::invalid_argument);
}

TEST(Superoperator, SandwichMatchesDirectProduct) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    const ComplexMatrix rho = random_matrix(rng, 3, 3);
    EXPECT_LT(max_abs_diff(Superoperator::sandwich(a, b).apply(rho), a * rho * b), 1e-12);
  }
}

TEST(Superoperator, CompositionOrder) {
  const Superoperator x = Superoperator::sandwich(pauli::X(), pauli::X());
  const Superoperator h = Superoperator::sandwich(pauli::Z(), ComplexMatrix::identity(2));
  const ComplexMatrix rho = DensityMatrix::zero().matrix();
  // (h * x)(rho) = h(x(rho)) = Z X rho X.
  EXPECT_LT(max_abs_diff((h * x).apply(rho), pauli::Z() * pauli::X() * rho * pauli::X()), 1e-15);
}

TEST(Lindblad, EmptyListIsZero) {
  const Superoperator s = lindblad_superop({});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.matrix(), ComplexMatrix::zeros(4, 4));
}

TEST(Lindblad, CoherentPartIsCommutator) {
  const Superoperator s = lindblad_superop({GeneratorSpec::coherent(pauli::Z() / Complex(2.0), "h")});
  // -i[sz/2, sx] = sy.
  EXPECT_LT(max_abs_diff(s.apply(pauli::X()), pauli::Y()), 1e-15);
  EXPECT_THROW(GeneratorSpec::coherent(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, "bad"), std::invalid_argument);
}

TEST(Lindblad, DephasingGeneratorIsDiagonal) {
  const double g = 0.37;
  const Superoperator s = lindblad_superop({dephasing_generator(g)});
  EXPECT_LT(max_abs_diff(s.matrix(), ComplexMatrix::diagonal({0.0, -g, -g, 0.0})), 1e-15);
}

TEST(Lindblad, MixedDimensionsRejected) {
  EXPECT_THROW(lindblad_superop({GeneratorSpec::coherent(pauli::Z(), "a"),
                                 GeneratorSpec::jump(ComplexMatrix::identity(3), "b")}),
               std::invalid_argument);
}

TEST(Lindblad, RandomGeneratorsAnnihilateTrace) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Superoperator s = lindblad_superop({GeneratorSpec::coherent(random_hermitian(rng, 3), "h"),
                                              GeneratorSpec::jump(random_matrix(rng, 3, 3), "l1"),
                                              GeneratorSpec::jump(random_matrix(rng, 3, 3), "l2")});
    EXPECT_LT(s.trace_annihilation_error(), 1e-12);
  }
}

TEST(CanonicalRates, Validation) {
  EXPECT_THROW((CanonicalRates{-1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((CanonicalRates{0.0, NAN, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((CanonicalRates{0.0, 0.0, INFINITY}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((CanonicalRates{0.1, 0.2, 0.3}.validate()));
}

TEST(Propagator, ZeroTimeIsIdentity) {
  const Superoperator l = qubit_liouvillian({0.1, 0.2, 0.03});
  EXPECT_LT(max_abs_diff(propagator(l, 0.0).matrix(), ComplexMatrix::identity(4)), 1e-15);
  EXPECT_THROW(propagator(l, -1.0), std::invalid_argument);
}

TEST(Propagator, PureDephasingClosedForm) {
  const double g = 0.2, t = 3.7;
  const Superoperator p = propagator(lindblad_superop({dephasing_generator(g)}), t);
  const ComplexMatrix out = p.apply(DensityMatrix::plus().matrix());
  EXPECT_NEAR(out(0, 1).real(), 0.5 * std::exp(-g * t), 1e-14);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
}

TEST(Propagator, DampingHalfLife) {
  const double g = 0.05;
  const Superoperator p = propagator(lindblad_superop({damping_generator(g)}), std::log(2.0) / g);
  EXPECT_LT(max_abs_diff(p.apply(DensityMatrix::one().matrix()), ComplexMatrix::diagonal({0.5, 0.5})), 1e-14);
}

TEST(Propagator, FullModelCoherenceDecay) {
  // Undriven: populations relax at gamma1, coherences at gamma1/2 + gamma_phi.
  const CanonicalRates r{0.04, 0.015, 0.0};
  const double t = 11.0;
  const Superoperator p = propagator(qubit_liouvillian(r), t);
  const BlochVector from_plus = DensityMatrix(p.apply(DensityMatrix::plus().matrix())).bloch();
  EXPECT_NEAR(from_plus.x, std::exp(-(r.gamma1 / 2 + r.gamma_phi) * t), 1e-13);
  const BlochVector from_one = DensityMatrix(p.apply(DensityMatrix::one().matrix())).bloch();
  EXPECT_NEAR(from_one.z, 1.0 - 2.0 * std::exp(-r.gamma1 * t), 1e-13);
}

TEST(Propagator, RabiRotation) {
  const double omega = 0.0301, t = 5.0;
  const BlochVector b =
      DensityMatrix(propagator(qubit_liouvillian({0, 0, omega}), t).apply(DensityMatrix::one().matrix())).bloch();
  const double phase = 2.0 * std::numbers::pi * omega * t;
  EXPECT_NEAR(b.z, -std::cos(phase), 1e-13);
  EXPECT_NEAR(b.y, std::sin(phase), 1e-13);
  EXPECT_NEAR(b.x, 0.0, 1e-14);
}

TEST(Propagator, Semigroup) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 0.2);
  for (int trial = 0; trial < 100; ++trial) {
    const Superoperator l = qubit_liouvillian({u(rng), u(rng), u(rng)});
    const double t1 = 10 * u(rng), t2 = 10 * u(rng);
    EXPECT_LT(max_abs_diff((propagator(l, t1) * propagator(l, t2)).matrix(), propagator(l, t1 + t2).matrix()), 1e-10);
  }
}

TEST(Propagator, PreservesStates) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Superoperator l = qubit_liouvillian({u(rng), u(rng), u(rng)});
    const ComplexMatrix out = propagator(l, 100.0 * u(rng)).apply(random_state(rng, 2).matrix());
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-8);
    EXPECT_LT(out.hermiticity_error(), 1e-8);
    EXPECT_GE(eigh(Complex(0.5) * (out + out.adjoint())).values.front(), -1e-8);
  }
}

TEST(Generators, CommutationStructure) {
  const Superoperator dph = lindblad_superop({dephasing_generator(0.3)});
  const Superoperator damp = lindblad_superop({damping_generator(0.7)});
  const Superoperator rot = lindblad_superop({rotation_generator(0.05)});
  EXPECT_LT(commutator(dph.matrix(), damp.matrix()).frobenius_norm(), 1e-14);
  EXPECT_GT(commutator(rot.matrix(), damp.matrix()).frobenius_norm(), 1e-3);
  EXPECT_GT(commutator(rot.matrix(), dph.matrix()).frobenius_norm(), 1e-3);
}

TEST(Trace, ZeroRatesConstant) {
  const EvolutionTrace t = target_trace({}, DensityMatrix::one(), 3.56, 13);
  ASSERT_EQ(t.size(), 14u);
  for (std::size_t j = 0; j < t.size(); ++j) {
    EXPECT_EQ(t.sz[j], -1.0);
    EXPECT_NEAR(t.times[j], 3.56 * j, 1e-12);
  }
}

TEST(Trace, GeometricRelaxation) {
  const double tau0 = 3.56;
  const EvolutionTrace t = target_trace({std::log(2.0) / tau0, 0.0, 0.0}, DensityMatrix::one(), tau0, 5);
  const double expected[] = {-1.0, 0.0, 0.5, 0.75, 0.875, 0.9375};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(t.sz[j], expected[j], 1e-13);
}

TEST(Trace, RabiPeriod) {
  // 30.1 kHz drive: sz returns to its start after 1/omega = 33.22 us.
  const double omega = 0.0301, tau0 = 3.56;
  const EvolutionTrace t = target_trace({0, 0, omega}, DensityMatrix::zero(), tau0, 40);
  for (std::size_t j = 0; j < t.size(); ++j) {
    EXPECT_NEAR(t.sz[j], std::cos(2 * std::numbers::pi * omega * t.times[j]), 1e-12);
  }
  EXPECT_NEAR(1.0 / omega, 33.22, 0.01);
}

TEST(Trace, Preconditions) {
  EXPECT_THROW(target_trace({}, DensityMatrix::one(), 3.56, 0), std::invalid_argument);
  EXPECT_THROW(target_trace({}, DensityMatrix::one(), 0.0, 3), std::invalid_argument);
  EvolutionTrace t;
  EXPECT_THROW(t.push(0.0, {1.0, 0.1, 0.0}), std::domain_error);
}

}  // namespace
}  // namespace qtrotter
