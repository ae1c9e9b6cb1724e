// Copyright 2025 Qilimanjaro Quantum Tech
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
#include <vector>

#include <Eigen/Dense>

namespace qgate {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared by the operator checks.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kDegeneracyTol = 1e-9;

// Dense square complex matrix. Immutable once built.
class Operator {
 public:
  explicit Operator(Matrix m);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim);
  static Operator diagonal(const std::vector<cplx>& entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  cplx operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& matrix() const { return m_; }

  Operator adjoint() const;
  // Relative to max(1, largest entry magnitude).
  bool is_hermitian(double tol = kHermitianTol) const;
  // Max-norm of U^dagger U - I.
  double unitarity_defect() const;
  bool is_unitary(double tol = kUnitaryTol) const { return unitarity_defect() <= tol; }
  // Max-norm distance to another operator of the same dimension.
  double max_abs_diff(const Operator& other) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(cplx s, const Operator& a);

 private:
  Matrix m_;
};

// Kronecker product; the first factor is the most significant index.
Operator tensor(const Operator& a, const Operator& b);

// exp(-i h t) by spectral decomposition. Throws std::invalid_argument if h is not Hermitian.
Operator unitary_exp(const Operator& h, double t);

struct Spectrum {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns paired with eigenvalues
  bool degenerate = false;
};

// Ascending spectrum of a Hermitian operator.
//
// Without gauge_ref each vector's largest component is made real and positive,
// and vectors inside a degenerate cluster are ordered lexicographically. With
// gauge_ref each vector is rephased so its overlap with the same-index column
// of gauge_ref is real and positive.
Spectrum eigensystem(const Operator& h, const Spectrum* gauge_ref = nullptr);

namespace detail {
// Unchecked exp(-i h t) for a Hermitian matrix; used on hot paths.
Matrix hermitian_exp(const Matrix& h, double t);
double hermitian_defect(const Matrix& h);
}  // namespace detail

}  // namespace qgate
