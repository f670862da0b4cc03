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

// Lindblad generators and their propagators.
//
// Vectorization stacks columns: vec(rho)[i + j*d] = rho(i, j). Under this
// convention the map rho -> A rho B has the matrix kron(B^T, A).
//
// Rate convention for the driven lossy qubit:
//   gamma1     population decay, P(1) ~ exp(-gamma1 t)
//   gamma_phi  pure dephasing, off-diagonals decay as exp(-(gamma1/2 + gamma_phi) t)
//   omega      Rabi rate in MHz; H = pi * omega * sigma_x, so a step of length
//              tau rotates by 2*pi*omega*tau about x.
// With the generator form 2 L rho L^dag - {L^dag L, rho} this fixes the jump
// operators to L_dph = (sqrt(gamma_phi)/2) sigma_z and
// L_damp = sqrt(gamma1/2) sigma_minus.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtrotter/evolution_trace.h"
#include "qtrotter/linalg.h"

namespace qtrotter {

ComplexMatrix vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const ComplexMatrix& v, std::size_t dim);

/// Linear map on d x d matrices, stored as a d^2 x d^2 matrix acting on
/// column-stacked vectors.
class Superoperator {
 public:
  Superoperator() = default;
  Superoperator(std::size_t dim, ComplexMatrix mat);

  static Superoperator identity(std::size_t dim);
  static Superoperator zero(std::size_t dim);
  /// rho -> left * rho * right.
  static Superoperator sandwich(const ComplexMatrix& left, const ComplexMatrix& right);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return mat_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;

  /// Largest deviation of the trace functional: max_k |sum_i S[(i,i), k] - [k is diagonal]|
  /// (zero for trace-preserving maps).
  double trace_preservation_error() const;
  /// Largest |sum_i S[(i,i), k]| (zero for generators that annihilate the trace).
  double trace_annihilation_error() const;

  /// (a * b)(rho) = a(b(rho)).
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator+(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator*(double s, const Superoperator& a);

 private:
  std::size_t dim_ = 0;
  ComplexMatrix mat_;
};

struct GeneratorSpec {
  enum class Kind { kCoherent, kJump };

  Kind kind = Kind::kCoherent;
  ComplexMatrix op;
  std::string label;

  /// Throws std::invalid_argument unless h is Hermitian within 1e-12.
  static GeneratorSpec coherent(ComplexMatrix h, std::string label);
  static GeneratorSpec jump(ComplexMatrix l, std::string label);
};

/// Rates of the driven lossy qubit; see the header comment for conventions.
struct CanonicalRates {
  double gamma1 = 0.0;     // 1/us
  double gamma_phi = 0.0;  // 1/us
  double omega = 0.0;      // MHz

  /// Throws std::invalid_argument on negative or non-finite fields.
  void validate() const;
};

/// sum_j -i[H_j, .] + sum_k (2 L_k . L_k^dag - {L_k^dag L_k, .}).
/// An empty list gives the zero superoperator on a qubit.
Superoperator lindblad_superop(const std::vector<GeneratorSpec>& generators);

Superoperator propagator(const Superoperator& generator, double t);

GeneratorSpec dephasing_generator(double gamma_phi);
GeneratorSpec damping_generator(double gamma1);
GeneratorSpec rotation_generator(double omega);

/// Full qubit Liouvillian for the given rates.
Superoperator qubit_liouvillian(const CanonicalRates& rates);

/// Exact evolution sampled at t = j * tau0, j = 0..n_steps.
EvolutionTrace target_trace(const CanonicalRates& rates, const DensityMatrix& rho0, double tau0,
                            std::size_t n_steps);

/// Repeatedly applies a one-step propagator to rho0, recording Bloch vectors.
EvolutionTrace sample_trace(const Superoperator& step, const DensityMatrix& rho0, double dt,
                            std::size_t n_steps);

}  // namespace qtrotter
