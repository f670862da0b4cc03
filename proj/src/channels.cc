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


#include "qtrotter/channels.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qtrotter {

namespace {

void require_rate_and_time(double rate, double tau, const char* who) {
  if (std::isnan(rate) || rate < 0.0) {
    throw std::invalid_argument(std::string(who) + ": rate must be >= 0, got " +
                                std::to_string(rate));
  }
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument(std::string(who) + ": duration must be >= 0, got " +
                                std::to_string(tau));
  }
}

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": probability must be in [0, 1], got " +
                                std::to_string(p));
  }
}

// exp(-rate * tau) with the 0 * inf case resolved to "no evolution".
double decay_factor(double rate, double tau) {
  if (tau == 0.0) return 1.0;
  return std::exp(-rate * tau);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  const std::size_t d = kraus_.front().rows();
  for (const ComplexMatrix& e : kraus_) {
    if (e.rows() != d || e.cols() != d) {
      throw std::invalid_argument("KrausChannel: Kraus operators must all be " +
                                  std::to_string(d) + "x" + std::to_string(d));
    }
  }
  const double err = completeness_error();
  if (err > tol::kSpectral) {
    throw std::invalid_argument("KrausChannel: completeness violated by " + std::to_string(err));
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

double KrausChannel::completeness_error() const {
  const std::size_t d = dim();
  ComplexMatrix sum = ComplexMatrix::zeros(d, d);
  for (const ComplexMatrix& e : kraus_) sum = sum + e.adjoint() * e;
  return max_abs_diff(sum, ComplexMatrix::identity(d));
}

ChoiMatrix::ChoiMatrix(std::size_t dim, ComplexMatrix mat) : dim_(dim), mat_(std::move(mat)) {
  if (mat_.rows() != dim * dim || mat_.cols() != dim * dim) {
    throw std::invalid_argument("ChoiMatrix: expected a " + std::to_string(dim * dim) +
                                "-dimensional square matrix");
  }
  const double scale = std::max(1.0, mat_.max_abs());
  if (mat_.hermiticity_error() > tol::kSpectral * scale) {
    throw std::invalid_argument("ChoiMatrix: not Hermitian");
  }
  const double min_eig = eigh(hermitian_part(mat_)).values.front();
  if (min_eig < -tol::kPositivity) {
    throw std::invalid_argument("ChoiMatrix: not positive semidefinite (min eigenvalue " +
                                std::to_string(min_eig) + ")");
  }
  const ComplexMatrix out_traced = partial_trace(mat_, dim, dim, Subsystem::A);
  if (max_abs_diff(out_traced, ComplexMatrix::identity(dim)) > tol::kPositivity) {
    throw std::invalid_argument("ChoiMatrix: not trace preserving");
  }
}

KrausChannel dephasing_channel(double gamma_phi, double tau) {
  require_rate_and_time(gamma_phi, tau, "dephasing_channel");
  const double mu = decay_factor(gamma_phi, tau);
  return KrausChannel({ComplexMatrix::diagonal({1.0, mu}),
                       ComplexMatrix::diagonal({0.0, std::sqrt(std::max(0.0, 1.0 - mu * mu))})});
}

KrausChannel damping_channel(double gamma1, double tau) {
  require_rate_and_time(gamma1, tau, "damping_channel");
  return amplitude_damping_channel(1.0 - decay_factor(gamma1, tau));
}

KrausChannel amplitude_damping_channel(double p) {
  require_probability(p, "amplitude_damping_channel");
  return KrausChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - p)}),
                       ComplexMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}});
}

KrausChannel depolarizing_channel(double p) {
  require_probability(p, "depolarizing_channel");
  // (1-p) rho + p I/2 = (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z)
  const double a = std::sqrt(1.0 - 0.75 * p);
  const double b = std::sqrt(0.25 * p);
  return KrausChannel({a * pauli::I(), b * pauli::X(), b * pauli::Y(), b * pauli::Z()});
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (!u.is_unitary(tol::kSpectral)) throw std::invalid_argument("unitary_channel: not unitary");
  return KrausChannel({u});
}

ComplexMatrix apply_to_operator(const KrausChannel& ch, const ComplexMatrix& m) {
  if (m.rows() != ch.dim() || m.cols() != ch.dim()) {
    throw std::invalid_argument("apply: channel dimension " + std::to_string(ch.dim()) +
                                " does not match operand " + std::to_string(m.rows()));
  }
  ComplexMatrix out = ComplexMatrix::zeros(ch.dim(), ch.dim());
  for (const ComplexMatrix& e : ch.operators()) out = out + e * m * e.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_to_operator(ch, rho.matrix()));
}

Superoperator to_superop(const KrausChannel& ch) {
  const std::size_t d = ch.dim();
  ComplexMatrix total = ComplexMatrix::zeros(d * d, d * d);
  for (const ComplexMatrix& e : ch.operators()) total = total + kron(e.conj(), e);
  return {d, total};
}

ComplexMatrix choi_of(const Superoperator& s) {
  const std::size_t d = s.dim();
  const std::size_t n = d * d;
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          e[(i * d + a) * n + (j * d + b)] = s.matrix()(a + b * d, i + j * d);
  return {n, n, std::move(e)};
}

ChoiMatrix to_choi(const Superoperator& s) { return {s.dim(), choi_of(s)}; }

ChoiMatrix to_choi(const KrausChannel& ch) { return to_choi(to_superop(ch)); }

KrausChannel choi_to_kraus(const ChoiMatrix& j) {
  const std::size_t d = j.dim();
  const EigenDecomposition eig = eigh(hermitian_part(j.matrix()));
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda <= 1e-12) continue;
    const double scale = std::sqrt(lambda);
    std::vector<Complex> e(d * d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < d; ++i) e[a * d + i] = scale * eig.vectors(i * d + a, k);
    kraus.emplace_back(d, d, std::move(e));
  }
  return KrausChannel(std::move(kraus));
}

double channel_distance(const Superoperator& a, const Superoperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("channel_distance: dimension mismatch");
  return frobenius_distance(choi_of(a), choi_of(b));
}

double channel_distance(const KrausChannel& a, const KrausChannel& b) {
  return channel_distance(to_superop(a), to_superop(b));
}

double channel_distance(const Superoperator& a, const KrausChannel& b) {
  return channel_distance(a, to_superop(b));
}

double choi_trace_distance(const Superoperator& a, const Superoperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("choi_trace_distance: dimension mismatch");
  const ComplexMatrix diff = hermitian_part(choi_of(a) - choi_of(b));
  double sum = 0.0;
  for (double v : eigh(diff).values) sum += std::abs(v);
  return sum;
}

CptpReport check_cptp(const Superoperator& s) {
  CptpReport r;
  r.trace_error = s.trace_preservation_error();
  const ComplexMatrix j = choi_of(s);
  r.choi_hermiticity = j.hermiticity_error();
  r.min_choi_eigenvalue = eigh(hermitian_part(j)).values.front();
  return r;
}

}  // namespace qtrotter
