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

#include "qtrotter/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtrotter {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

double one_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) col += std::abs(m(i, j));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::domain_error("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  *this = ComplexMatrix(rows_, cols_, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return {n, n, std::move(e)};
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return {n, n, std::move(e)};
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return {v.size(), 1, std::vector<Complex>(v.begin(), v.end())};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  std::vector<Complex> e(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = std::conj(data_[i * cols_ + j]);
  return {cols_, rows_, std::move(e)};
}

ComplexMatrix ComplexMatrix::transpose() const {
  std::vector<Complex> e(data_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = data_[i * cols_ + j];
  return {cols_, rows_, std::move(e)};
}

ComplexMatrix ComplexMatrix::conj() const {
  std::vector<Complex> e(data_.size());
  std::transform(data_.begin(), data_.end(), e.begin(), [](Complex z) { return std::conj(z); });
  return {rows_, cols_, std::move(e)};
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += data_[i * cols_ + i];
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  if (!is_square()) throw std::invalid_argument("hermiticity_error: non-square matrix");
  double err = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      err = std::max(err, std::abs(data_[i * cols_ + j] - std::conj(data_[j * cols_ + i])));
  return err;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return is_square() && hermiticity_error() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * *this, identity(rows_)) <= tol;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  std::vector<Complex> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.data_[k] + b.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  std::vector<Complex> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.data_[k] - b.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("operator*: inner dimensions differ (" + std::to_string(a.cols_) +
                                " vs " + std::to_string(b.rows_) + ")");
  }
  std::vector<Complex> e(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a.data_[i * a.cols_ + k];
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) e[i * b.cols_ + j] += aik * b.data_[k * b.cols_ + j];
    }
  }
  return {a.rows_, b.cols_, std::move(e)};
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  std::vector<Complex> e(a.data_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = s * a.data_[k];
  return {a.rows_, a.cols_, std::move(e)};
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> e(rows * cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex s = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          e[(i1 * b.rows() + i2) * cols + (j1 * b.cols() + j2)] = s * b(i2, j2);
    }
  return {rows, cols, std::move(e)};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  const std::size_t n = dim_a * dim_b;
  if (m.rows() != n || m.cols() != n) {
    throw std::invalid_argument("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(n) +
                                "x" + std::to_string(n));
  }
  if (keep == Subsystem::A) {
    std::vector<Complex> e(dim_a * dim_a);
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t ap = 0; ap < dim_a; ++ap)
        for (std::size_t b = 0; b < dim_b; ++b) e[a * dim_a + ap] += m(a * dim_b + b, ap * dim_b + b);
    return {dim_a, dim_a, std::move(e)};
  }
  std::vector<Complex> e(dim_b * dim_b);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t bp = 0; bp < dim_b; ++bp)
      for (std::size_t a = 0; a < dim_a; ++a) e[b * dim_b + bp] += m(a * dim_b + b, a * dim_b + bp);
  return {dim_b, dim_b, std::move(e)};
}

ComplexMatrix expm(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw std::invalid_argument("expm: non-square matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("expm: tol must be positive");
  const std::size_t n = m.rows();

  // Scale so that the series argument has 1-norm <= 1/2.
  const double norm = one_norm(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = std::ldexp(1.0, -squarings) * m;

  const double stop = std::min(tol * 1e-4, 1e-16);
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = (term * scaled) / Complex(static_cast<double>(k));
    sum = sum + term;
    if (term.frobenius_norm() <= stop * sum.frobenius_norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

EigenDecomposition eigh(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigh: non-square matrix");
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermiticity_error() > tol::kSpectral * scale) {
    throw std::invalid_argument("eigh: matrix is not Hermitian (error " +
                                std::to_string(m.hermiticity_error()) + ")");
  }
  const std::size_t n = m.rows();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = a[i * n + i].real();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a[i * n + j]);
    return std::sqrt(s);
  };
  const double frob = std::max(m.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * frob; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex z = a[p * n + q];
        const double g = std::abs(z);
        if (g <= 1e-300) continue;
        const Complex phase = z / g;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double theta = 0.5 * std::atan2(2.0 * g, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex gpp = c, gpq = s, gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = akp * gpp + akq * gqp;
          a[k * n + q] = akp * gpq + akq * gqq;
          const Complex vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = vkp * gpp + vkq * gqp;
          v[k * n + q] = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a[q * n + k] = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });
  EigenDecomposition out;
  out.values.reserve(n);
  std::vector<Complex> vs(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values.push_back(a[src * n + src].real());
    for (std::size_t k = 0; k < n; ++k) vs[k * n + col] = v[k * n + src];
  }
  out.vectors = ComplexMatrix(n, n, std::move(vs));
  return out;
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix Minus() { return {{0.0, 1.0}, {0.0, 0.0}}; }
}  // namespace pauli

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (!mat_.is_square() || mat_.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  }
  const double herm = mat_.hermiticity_error();
  if (herm > tol::kStructural) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (error " + std::to_string(herm) + ")");
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol::kSpectral) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto eig = eigh(mat_);
  if (eig.values.front() < -tol::kSpectral) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(eig.values.front()));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  double norm2 = 0.0;
  for (const Complex& z : amplitudes) norm2 += std::norm(z);
  if (!(norm2 > 0.0)) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  const ComplexMatrix psi = ComplexMatrix::column(amplitudes) / Complex(std::sqrt(norm2));
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::pure(std::initializer_list<Complex> amplitudes) {
  return pure(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) / Complex(static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::zero() { return pure({1.0, 0.0}); }
DensityMatrix DensityMatrix::one() { return pure({0.0, 1.0}); }
DensityMatrix DensityMatrix::plus() { return pure({1.0, 1.0}); }
DensityMatrix DensityMatrix::plus_i() { return pure({1.0, Complex(0.0, 1.0)}); }

BlochVector DensityMatrix::bloch() const {
  if (dim() != 2) throw std::invalid_argument("DensityMatrix::bloch: requires a qubit");
  const Complex r01 = mat_(0, 1);
  return {2.0 * r01.real(), -2.0 * r01.imag(), (mat_(0, 0) - mat_(1, 1)).real()};
}

}  // namespace qtrotter
