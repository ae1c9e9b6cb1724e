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
#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgate/hamiltonians.hpp"
#include "qgate/operator.hpp"

namespace qgate {
namespace {

TEST(OperatorTest, RejectsNonSquareAndEmpty) {
  EXPECT_THROW(Operator(Matrix::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(Operator(Matrix(0, 0)), std::invalid_argument);
}

TEST(OperatorTest, IdentityZeroDiagonal) {
  EXPECT_EQ(Operator::identity(3).dim(), 3u);
  EXPECT_EQ(Operator::identity(3).max_abs_diff(Operator(Matrix::Identity(3, 3))), 0.0);
  EXPECT_EQ(Operator::zero(2).matrix().cwiseAbs().maxCoeff(), 0.0);
  const auto d = Operator::diagonal({1.0, cplx(0.0, 2.0)});
  EXPECT_EQ(d(1, 1), cplx(0.0, 2.0));
  EXPECT_EQ(d(0, 1), cplx(0.0));
}

TEST(OperatorTest, ArithmeticAndAdjoint) {
  const Operator x = pauli_x();
  const Operator y = pauli_y();
  const Operator z = pauli_z();
  EXPECT_LT((x * y).max_abs_diff(cplx(0.0, 1.0) * z), 1e-15);
  EXPECT_LT((x + y - y).max_abs_diff(x), 1e-15);
  EXPECT_LT(sigma_plus().adjoint().max_abs_diff(sigma_minus()), 1e-15);
  EXPECT_THROW(x * Operator::identity(3), std::invalid_argument);
}

TEST(OperatorTest, HermitianAndUnitaryChecks) {
  EXPECT_TRUE(pauli_y().is_hermitian());
  EXPECT_FALSE(sigma_plus().is_hermitian());
  EXPECT_TRUE(pauli_x().is_unitary());
  EXPECT_FALSE((cplx(2.0) * pauli_x()).is_unitary());
  EXPECT_NEAR((cplx(2.0) * pauli_x()).unitarity_defect(), 3.0, 1e-15);
}

TEST(TensorTest, MatchesNaiveKroneckerAndOrdering) {
  std::mt19937_64 rng(7);
  const Matrix a = oracle::random_hermitian(2, rng);
  const Matrix b = oracle::random_hermitian(3, rng);
  EXPECT_LT((tensor(Operator(a), Operator(b)).matrix() - oracle::kron(a, b)).cwiseAbs().maxCoeff(), 1e-15);
  // First factor is the most significant index: sigma_z (x) I is -1 on |10>.
  const Operator zi = tensor(pauli_z(), Operator::identity(2));
  EXPECT_EQ(zi(1, 1), cplx(1.0));
  EXPECT_EQ(zi(2, 2), cplx(-1.0));
}

TEST(UnitaryExpTest, MatchesSeriesOracleForRandomHermitian) {
  std::mt19937_64 rng(11);
  for (Eigen::Index n = 1; n <= 8; ++n) {
    const Matrix h = oracle::random_hermitian(n, rng);
    for (double t : {0.0, 0.3, -1.7, 12.5}) {
      const Operator u = unitary_exp(Operator(h), t);
      EXPECT_LT((u.matrix() - oracle::series_exp(h, t)).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n << " t=" << t;
      EXPECT_LT(u.unitarity_defect(), 1e-12);
      const Operator back = unitary_exp(Operator(h), -t);
      EXPECT_LT((u * back).max_abs_diff(Operator::identity(static_cast<std::size_t>(n))), 1e-9);
    }
  }
}

TEST(UnitaryExpTest, QubitMatchesClosedForm) {
  const QubitParams p{0.3, 0.8, 0.4};
  const Matrix expect = oracle::bloch_exp(0.3, 0.8, 0.4, 2.1);
  EXPECT_LT((unitary_exp(h1(p), 2.1).matrix() - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(UnitaryExpTest, LargeNormStaysUnitary) {
  std::mt19937_64 rng(3);
  const Matrix h = oracle::random_hermitian(10, rng, 2e4);
  Matrix u = Matrix::Identity(10, 10);
  for (int i = 0; i < 20000; ++i) u = detail::hermitian_exp(h, 12.5) * u;
  EXPECT_LT(Operator(u).unitarity_defect(), 1e-10);
}

TEST(UnitaryExpTest, RejectsNonHermitian) {
  EXPECT_THROW(unitary_exp(sigma_plus(), 1.0), std::invalid_argument);
}

TEST(EigensystemTest, AscendingAndReconstructs) {
  std::mt19937_64 rng(5);
  const Matrix h = oracle::random_hermitian(6, rng);
  const Spectrum s = eigensystem(Operator(h));
  for (Eigen::Index i = 1; i < 6; ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
  const Matrix rebuilt = s.eigenvectors * s.eigenvalues.cast<cplx>().asDiagonal() * s.eigenvectors.adjoint();
  EXPECT_LT((rebuilt - h).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(s.degenerate);
}

TEST(EigensystemTest, DefaultGaugeMakesLargestComponentRealPositive) {
  std::mt19937_64 rng(9);
  const Spectrum s = eigensystem(Operator(oracle::random_hermitian(4, rng)));
  for (Eigen::Index k = 0; k < 4; ++k) {
    Eigen::Index best = 0;
    s.eigenvectors.col(k).cwiseAbs().maxCoeff(&best);
    EXPECT_NEAR(s.eigenvectors(best, k).imag(), 0.0, 1e-14);
    EXPECT_GT(s.eigenvectors(best, k).real(), 0.0);
  }
}

TEST(EigensystemTest, DegenerateClusterIsFlaggedAndOrdered) {
  const Spectrum s = eigensystem(Operator::identity(3));
  EXPECT_TRUE(s.degenerate);
  EXPECT_LT((s.eigenvectors - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(EigensystemTest, GaugeReferenceGivesPositiveOverlaps) {
  const Spectrum ref = eigensystem(h1({0.2, 1.0, 0.0}));
  const Spectrum s = eigensystem(h1({0.2, 1.0, 0.3}), &ref);
  for (Eigen::Index k = 0; k < 2; ++k) {
    const cplx ov = ref.eigenvectors.col(k).dot(s.eigenvectors.col(k));
    EXPECT_NEAR(ov.imag(), 0.0, 1e-14);
    EXPECT_GT(ov.real(), 0.0);
  }
}

}  // namespace
}  // namespace qgate
