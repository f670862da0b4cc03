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


#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qtrotter/channels.h"
#include "qtrotter/linalg.h"

namespace qtrotter::testing {

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<Complex> e(rows * cols);
  for (auto& z : e) z = random_complex(rng);
  return {rows, cols, std::move(e)};
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t d) {
  const ComplexMatrix a = random_matrix(rng, d, d);
  return Complex(0.5) * (a + a.adjoint());
}

/// Ginibre-distributed mixed state.
inline DensityMatrix random_state(std::mt19937_64& rng, std::size_t d) {
  const ComplexMatrix g = random_matrix(rng, d, d);
  const ComplexMatrix p = g * g.adjoint();
  const ComplexMatrix rho = p / p.trace();
  return DensityMatrix(Complex(0.5) * (rho + rho.adjoint()));
}

/// Random CPTP map with k Kraus operators: an isometry from a Gaussian
/// matrix M, V = M (M^dag M)^{-1/2}, cut into d x d blocks.
inline KrausChannel random_channel(std::mt19937_64& rng, std::size_t d, std::size_t k) {
  const ComplexMatrix m = random_matrix(rng, k * d, d);
  const EigenDecomposition eig = eigh(m.adjoint() * m);
  std::vector<Complex> inv_sqrt;
  for (double l : eig.values) inv_sqrt.push_back(1.0 / std::sqrt(l));
  const ComplexMatrix v = m * (eig.vectors * ComplexMatrix::diagonal(inv_sqrt) * eig.vectors.adjoint());
  std::vector<ComplexMatrix> ops;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Complex> e;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) e.push_back(v(b * d + i, j));
    ops.emplace_back(d, d, std::move(e));
  }
  return KrausChannel(std::move(ops));
}

inline double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qtrotter::testing
