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
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgate/hamiltonians.hpp"

namespace qgate {
namespace {

TEST(PauliTest, Conventions) {
  EXPECT_EQ(pauli_z()(0, 0), cplx(1.0));
  EXPECT_EQ(sigma_plus()(0, 1), cplx(1.0));
  EXPECT_EQ(sigma_plus()(1, 0), cplx(0.0));
  EXPECT_LT((sigma_plus() + sigma_minus()).max_abs_diff(pauli_x()), 1e-15);
  EXPECT_LT((pauli_x() * pauli_x()).max_abs_diff(Operator::identity(2)), 1e-15);
}

TEST(H1Test, MatrixElements) {
  const Operator h = h1({0.3, 0.8, 0.4});
  EXPECT_NEAR(h(0, 0).real(), 0.15, 1e-15);
  EXPECT_NEAR(h(1, 1).real(), -0.15, 1e-15);
  EXPECT_NEAR(std::abs(h(0, 1) - 0.4 * std::polar(1.0, 0.4)), 0.0, 1e-15);
  EXPECT_TRUE(h.is_hermitian());
}

TEST(H1Test, EigenvaluesAreHalfTheBlochLength) {
  const Spectrum s = eigensystem(h1({0.3, 0.8, 1.1}));
  const double r = 0.5 * std::hypot(0.3, 0.8);
  EXPECT_NEAR(s.eigenvalues(0), -r, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), r, 1e-14);
}

TEST(H1Test, RejectsNegativeRabi) { EXPECT_THROW(h1({0.0, -1.0, 0.0}), std::invalid_argument); }

TEST(H1Test, ComponentsFoldSignIntoPhase) {
  const auto p = QubitParams::from_components(0.1, -0.5);
  EXPECT_DOUBLE_EQ(p.omega, 0.5);
  EXPECT_DOUBLE_EQ(p.phi, std::numbers::pi);
  EXPECT_LT(h1(p).max_abs_diff(Operator(0.05 * pauli_z().matrix() - 0.25 * pauli_x().matrix())), 1e-15);
}

TEST(H2Test, ConditionalShiftAndTargetDrive) {
  const Operator h = h2({0.2, 0.6, 0.0});
  const Matrix expect = 0.2 * Operator::diagonal({0.0, 0.0, 0.0, 1.0}).matrix() +
                        0.3 * oracle::kron(Matrix::Identity(2, 2), pauli_x().matrix());
  EXPECT_LT((h.matrix() - expect).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(h2({0.1, -0.2, 0.0}), std::invalid_argument);
}

TEST(H2Test, ComponentsFoldSignIntoPhase) {
  const auto p = TwoQubitParams::from_components(0.1, -0.4);
  EXPECT_DOUBLE_EQ(p.omega_t, 0.4);
  EXPECT_DOUBLE_EQ(p.phi, std::numbers::pi);
}

}  // namespace
}  // namespace qgate
