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

#include <cstddef>
#include <vector>

#include "qtrotter/linalg.h"
#include "qtrotter/liouvillian.h"

namespace qtrotter {

/// Channel rho -> sum_k E_k rho E_k^dag. Construction enforces
/// sum_k E_k^dag E_k = I within 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);

  static KrausChannel identity(std::size_t dim);

  std::size_t dim() const { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& operators() const { return kraus_; }
  /// max |sum_k E_k^dag E_k - I|.
  double completeness_error() const;

 private:
  std::vector<ComplexMatrix> kraus_;
};

/// J = sum_ij |i><j| (x) E(|i><j|), input factor first, Tr J = d.
/// Construction checks Hermiticity (1e-10), positivity (-1e-8) and
/// Tr_out J = I (1e-8).
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim, ComplexMatrix mat);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  std::size_t dim_ = 0;
  ComplexMatrix mat_;
};

/// E0 = diag(1, mu), E1 = diag(0, sqrt(1 - mu^2)), mu = exp(-gamma_phi * tau).
KrausChannel dephasing_channel(double gamma_phi, double tau);
/// E0 = diag(1, exp(-gamma1 tau / 2)), E1 = sqrt(1 - exp(-gamma1 tau)) |0><1|.
/// gamma1 may be +inf (full relaxation).
KrausChannel damping_channel(double gamma1, double tau);
/// Amplitude damping with decay probability p.
KrausChannel amplitude_damping_channel(double p);
/// rho -> (1 - p) rho + p I/d on a qubit.
KrausChannel depolarizing_channel(double p);
KrausChannel unitary_channel(const ComplexMatrix& u);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
/// Raw action on any operator (not just states).
ComplexMatrix apply_to_operator(const KrausChannel& ch, const ComplexMatrix& m);

Superoperator to_superop(const KrausChannel& ch);
/// Unvalidated Choi matrix of an arbitrary linear map.
ComplexMatrix choi_of(const Superoperator& s);
ChoiMatrix to_choi(const KrausChannel& ch);
ChoiMatrix to_choi(const Superoperator& s);
/// Keeps eigenvectors with eigenvalue > 1e-12.
KrausChannel choi_to_kraus(const ChoiMatrix& j);

/// Frobenius norm of the Choi difference.
double channel_distance(const Superoperator& a, const Superoperator& b);
double channel_distance(const KrausChannel& a, const KrausChannel& b);
double channel_distance(const Superoperator& a, const KrausChannel& b);
/// Trace norm of the Choi difference.
double choi_trace_distance(const Superoperator& a, const Superoperator& b);

struct CptpReport {
  double trace_error = 0.0;     // trace-preservation residual of the superoperator
  double min_choi_eigenvalue = 0.0;
  double choi_hermiticity = 0.0;
  bool ok(double trace_tol = tol::kSpectral, double psd_tol = tol::kPositivity) const {
    return trace_error <= trace_tol && min_choi_eigenvalue >= -psd_tol &&
           choi_hermiticity <= tol::kSpectral;
  }
};

CptpReport check_cptp(const Superoperator& s);

}  // namespace qtrotter
