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

#include "qgate/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qgate {

Operator::Operator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("Operator: matrix must be square and non-empty");
  }
}

Operator Operator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Identity(d, d));
}

Operator Operator::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Zero(d, d));
}

Operator Operator::diagonal(const std::vector<cplx>& entries) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  }
  return Operator(std::move(m));
}

Operator Operator::adjoint() const { return Operator(m_.adjoint()); }

bool Operator::is_hermitian(double tol) const {
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  return detail::hermitian_defect(m_) <= tol * scale;
}

double Operator::unitarity_defect() const {
  const Matrix g = m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols());
  return g.cwiseAbs().maxCoeff();
}

double Operator::max_abs_diff(const Operator& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator+: dimension mismatch");
  return Operator(a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator-: dimension mismatch");
  return Operator(a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator*: dimension mismatch");
  return Operator(a.m_ * b.m_);
}

Operator operator*(cplx s, const Operator& a) { return Operator(s * a.m_); }

Operator tensor(const Operator& a, const Operator& b) {
  return Operator(Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval());
}

namespace detail {

double hermitian_defect(const Matrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitian_exp(const Matrix& h, double t) {
  if (h.rows() == 1) {
    return Matrix::Constant(1, 1, std::exp(cplx(0.0, -h(0, 0).real() * t)));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp().matrix();
  // One Newton-Schulz step pulls the eigenvectors back to orthonormal, so long
  // products of steps do not accumulate solver roundoff.
  const Matrix& v0 = es.eigenvectors();
  const auto n = v0.rows();
  const Matrix v = 0.5 * v0 * (3.0 * Matrix::Identity(n, n) - v0.adjoint() * v0);
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace detail

Operator unitary_exp(const Operator& h, double t) {
  if (!h.is_hermitian()) throw std::invalid_argument("unitary_exp: generator is not Hermitian");
  return Operator(detail::hermitian_exp(h.matrix(), t));
}

namespace {

// Rephase v so its largest-magnitude entry (first on ties) is real positive.
void default_gauge(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs * (1.0 + 1e-12)) {
      best = i;
      best_abs = a;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
}

bool lex_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  constexpr double eps = 1e-12;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i).real() - b(i).real()) > eps) return a(i).real() < b(i).real();
    if (std::abs(a(i).imag() - b(i).imag()) > eps) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

Spectrum eigensystem(const Operator& h, const Spectrum* gauge_ref) {
  if (!h.is_hermitian()) throw std::invalid_argument("eigensystem: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensystem: solver failed");
  Spectrum s;
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();
  const Eigen::Index n = s.eigenvalues.size();
  const double scale = std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());

  for (Eigen::Index a = 0; a < n; ++a) default_gauge(s.eigenvectors.col(a));

  // Order vectors inside each degenerate cluster by descending lexicographic order,
  // so an already diagonal operator keeps the basis order.
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && s.eigenvalues(end) - s.eigenvalues(end - 1) < kDegeneracyTol * scale) ++end;
    if (end - start > 1) {
      s.degenerate = true;
      std::vector<Eigen::VectorXcd> cols;
      for (Eigen::Index a = start; a < end; ++a) cols.emplace_back(s.eigenvectors.col(a));
      std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return lex_less(b, a); });
      for (Eigen::Index a = start; a < end; ++a) {
        s.eigenvectors.col(a) = cols[static_cast<std::size_t>(a - start)];
      }
    }
    start = end;
  }

  if (gauge_ref != nullptr && gauge_ref->eigenvectors.rows() == s.eigenvectors.rows() &&
      gauge_ref->eigenvectors.cols() == s.eigenvectors.cols()) {
    for (Eigen::Index a = 0; a < n; ++a) {
      const cplx ov = gauge_ref->eigenvectors.col(a).dot(s.eigenvectors.col(a));
      if (std::abs(ov) > 1e-14) s.eigenvectors.col(a) *= std::conj(ov) / std::abs(ov);
    }
  }
  return s;
}

}  // namespace qgate
