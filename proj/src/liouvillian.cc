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


#include "qtrotter/liouvillian.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtrotter {

void EvolutionTrace::push(double t, const BlochVector& b) {
  if (b.norm_squared() > 1.0 + kBlochNormSlack) {
    throw std::domain_error("EvolutionTrace: Bloch norm^2 " + std::to_string(b.norm_squared()) +
                            " exceeds 1 at t=" + std::to_string(t));
  }
  times.push_back(t);
  sx.push_back(b.x);
  sy.push_back(b.y);
  sz.push_back(b.z);
}

ComplexMatrix vectorize(const ComplexMatrix& rho) {
  const std::size_t r = rho.rows(), c = rho.cols();
  std::vector<Complex> v(r * c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) v[i + j * r] = rho(i, j);
  return {r * c, 1, std::move(v)};
}

ComplexMatrix unvectorize(const ComplexMatrix& v, std::size_t dim) {
  if (v.cols() != 1 || v.rows() != dim * dim) {
    throw std::invalid_argument("unvectorize: expected a column of length " +
                                std::to_string(dim * dim));
  }
  std::vector<Complex> e(dim * dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + j] = v(i + j * dim, 0);
  return {dim, dim, std::move(e)};
}

Superoperator::Superoperator(std::size_t dim, ComplexMatrix mat) : dim_(dim), mat_(std::move(mat)) {
  if (mat_.rows() != dim * dim || mat_.cols() != dim * dim) {
    throw std::invalid_argument("Superoperator: matrix must be " + std::to_string(dim * dim) +
                                "x" + std::to_string(dim * dim));
  }
}

Superoperator Superoperator::identity(std::size_t dim) {
  return {dim, ComplexMatrix::identity(dim * dim)};
}

Superoperator Superoperator::zero(std::size_t dim) {
  return {dim, ComplexMatrix::zeros(dim * dim, dim * dim)};
}

Superoperator Superoperator::sandwich(const ComplexMatrix& left, const ComplexMatrix& right) {
  if (!left.is_square() || !right.is_square() || left.rows() != right.rows()) {
    throw std::invalid_argument("Superoperator::sandwich: operands must be square and equal size");
  }
  return {left.rows(), kron(right.transpose(), left)};
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw std::invalid_argument("Superoperator::apply: operand dimension mismatch");
  }
  return unvectorize(mat_ * vectorize(rho), dim_);
}

double Superoperator::trace_preservation_error() const {
  double err = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += mat_(i + i * dim_, k);
    const bool diagonal = (k % dim_) == (k / dim_);
    err = std::max(err, std::abs(s - (diagonal ? 1.0 : 0.0)));
  }
  return err;
}

double Superoperator::trace_annihilation_error() const {
  double err = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += mat_(i + i * dim_, k);
    err = std::max(err, std::abs(s));
  }
  return err;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Superoperator composition: dim mismatch");
  return {a.dim_, a.mat_ * b.mat_};
}

Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Superoperator sum: dim mismatch");
  return {a.dim_, a.mat_ + b.mat_};
}

Superoperator operator*(double s, const Superoperator& a) { return {a.dim_, s * a.mat_}; }

GeneratorSpec GeneratorSpec::coherent(ComplexMatrix h, std::string label) {
  if (!h.is_hermitian(tol::kStructural)) {
    throw std::invalid_argument("GeneratorSpec::coherent: Hamiltonian '" + label +
                                "' is not Hermitian");
  }
  return {Kind::kCoherent, std::move(h), std::move(label)};
}

GeneratorSpec GeneratorSpec::jump(ComplexMatrix l, std::string label) {
  if (!l.is_square()) throw std::invalid_argument("GeneratorSpec::jump: non-square operator");
  return {Kind::kJump, std::move(l), std::move(label)};
}

void CanonicalRates::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string("CanonicalRates: ") + name +
                                  " must be finite and >= 0, got " + std::to_string(v));
    }
  };
  check(gamma1, "gamma1");
  check(gamma_phi, "gamma_phi");
  check(omega, "omega");
}

Superoperator lindblad_superop(const std::vector<GeneratorSpec>& generators) {
  if (generators.empty()) return Superoperator::zero(2);
  const std::size_t d = generators.front().op.rows();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix total = ComplexMatrix::zeros(d * d, d * d);
  for (const GeneratorSpec& g : generators) {
    if (g.op.rows() != d || g.op.cols() != d) {
      throw std::invalid_argument("lindblad_superop: generator '" + g.label +
                                  "' has dimension " + std::to_string(g.op.rows()) +
                                  ", expected " + std::to_string(d));
    }
    if (g.kind == GeneratorSpec::Kind::kCoherent) {
      // -i(H rho - rho H)
      const Complex minus_i(0.0, -1.0);
      total = total + minus_i * (kron(id, g.op) - kron(g.op.transpose(), id));
    } else {
      const ComplexMatrix ldl = g.op.adjoint() * g.op;
      total = total + 2.0 * kron(g.op.conj(), g.op) - kron(id, ldl) - kron(ldl.transpose(), id);
    }
  }
  return {d, total};
}

Superoperator propagator(const Superoperator& generator, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("propagator: t must be finite and >= 0, got " + std::to_string(t));
  }
  return {generator.dim(), expm(t * generator.matrix())};
}

GeneratorSpec dephasing_generator(double gamma_phi) {
  return GeneratorSpec::jump((std::sqrt(gamma_phi) / 2.0) * pauli::Z(), "dph");
}

GeneratorSpec damping_generator(double gamma1) {
  return GeneratorSpec::jump(std::sqrt(gamma1 / 2.0) * pauli::Minus(), "damp");
}

GeneratorSpec rotation_generator(double omega) {
  return GeneratorSpec::coherent((std::numbers::pi * omega) * pauli::X(), "R");
}

Superoperator qubit_liouvillian(const CanonicalRates& rates) {
  rates.validate();
  return lindblad_superop({dephasing_generator(rates.gamma_phi), damping_generator(rates.gamma1),
                           rotation_generator(rates.omega)});
}

EvolutionTrace sample_trace(const Superoperator& step, const DensityMatrix& rho0, double dt,
                            std::size_t n_steps) {
  if (step.dim() != 2 || rho0.dim() != 2) {
    throw std::invalid_argument("sample_trace: qubit superoperator and state required");
  }
  EvolutionTrace trace;
  ComplexMatrix v = vectorize(rho0.matrix());
  auto bloch_of = [](const ComplexMatrix& vec) {
    // vec = (rho00, rho10, rho01, rho11)
    const Complex r01 = vec(2, 0);
    return BlochVector{2.0 * r01.real(), -2.0 * r01.imag(), (vec(0, 0) - vec(3, 0)).real()};
  };
  trace.push(0.0, bloch_of(v));
  for (std::size_t j = 1; j <= n_steps; ++j) {
    v = step.matrix() * v;
    trace.push(static_cast<double>(j) * dt, bloch_of(v));
  }
  return trace;
}

EvolutionTrace target_trace(const CanonicalRates& rates, const DensityMatrix& rho0, double tau0,
                            std::size_t n_steps) {
  if (n_steps < 1) throw std::invalid_argument("target_trace: need at least one step");
  if (!(tau0 > 0.0)) throw std::invalid_argument("target_trace: tau0 must be positive");
  return sample_trace(propagator(qubit_liouvillian(rates), tau0), rho0, tau0, n_steps);
}

}  // namespace qtrotter
