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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qtrotter {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. Immutable after construction; every
/// constructor rejects non-finite entries, so a ComplexMatrix never holds NaN
/// or Inf.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// Column vector.
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// max |m_ij - conj(m_ji)|.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }
  friend ComplexMatrix operator/(const ComplexMatrix& a, Complex s) { return (1.0 / s) * a; }
  friend ComplexMatrix operator-(const ComplexMatrix& a) { return Complex(-1.0) * a; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise |a_ij - b_ij|. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Frobenius norm of a - b. Throws on shape mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on H_A (x) H_B, keeping the named factor.
/// Composite index is a * dim_b + b.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// Matrix exponential by scaling and squaring around a truncated Taylor series.
ComplexMatrix expm(const ComplexMatrix& m, double tol = 1e-12);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws std::invalid_argument unless m is Hermitian within 1e-10 (relative
/// to max(1, max|m_ij|)).
EigenDecomposition eigh(const ComplexMatrix& m);

/// Tolerances shared across modules.
namespace tol {
inline constexpr double kStructural = 1e-12;
inline constexpr double kSpectral = 1e-10;
inline constexpr double kPositivity = 1e-8;
}  // namespace tol

/// Pauli matrices in the |0>, |1> basis with <sigma_z>(|0>) = +1.
namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
/// sigma_minus = |0><1|, lowers |1> to |0>.
ComplexMatrix Minus();
}  // namespace pauli

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm_squared() const { return x * x + y * y + z * z; }
};

/// d x d density matrix: Hermitian within 1e-12, unit trace within 1e-10,
/// eigenvalues >= -1e-10. Construction validates and throws
/// std::invalid_argument on violation.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(std::span<const Complex> amplitudes);
  static DensityMatrix pure(std::initializer_list<Complex> amplitudes);
  static DensityMatrix maximally_mixed(std::size_t dim);

  // Qubit states used by tomography: |0>, |1>, |+>, |+i>.
  static DensityMatrix zero();
  static DensityMatrix one();
  static DensityMatrix plus();
  static DensityMatrix plus_i();

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Pauli expectations; requires dim() == 2.
  BlochVector bloch() const;

 private:
  ComplexMatrix mat_;
};

}  // namespace qtrotter
