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
#include "qgate/gates.hpp"
#include "qgate/hamiltonians.hpp"

namespace qgate {
namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(4, 4);
  m.block(0, 0, 2, 2) = a;
  m.block(2, 2, 2, 2) = b;
  return m;
}

TEST(IdealGateTest, PhaseGate) {
  const auto g = ideal_phase(std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(g.unitary(0, 0) - std::polar(1.0, std::numbers::pi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.unitary(1, 1) - std::polar(1.0, -std::numbers::pi / 4)), 0.0, 1e-15);
  EXPECT_EQ(g.dim(), 2u);
}

TEST(IdealGateTest, HadamardLikeMapsEigenstates) {
  const Matrix h = ideal_hadamard_like().unitary.matrix();
  Eigen::VectorXcd plus(2), minus(2);
  plus << 1.0, 1.0;
  minus << 1.0, -1.0;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  const Eigen::VectorXcd a = h * plus;
  const Eigen::VectorXcd b = h * minus;
  EXPECT_NEAR(std::abs(a(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b(1) + 1.0), 0.0, 1e-15);
  EXPECT_TRUE(ideal_hadamard_like().unitary.is_unitary(1e-15));
}

TEST(IdealGateTest, CnotLikeAndNots) {
  const Matrix expect = block_diag(Matrix::Identity(2, 2), (cplx(0.0, 1.0) * pauli_y()).matrix());
  EXPECT_LT((ideal_cnot_like().unitary.matrix() - expect).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((not_gate().matrix() - oracle::kron(pauli_x().matrix(), Matrix::Identity(2, 2))).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((target_not_gate().matrix() - oracle::kron(Matrix::Identity(2, 2), pauli_x().matrix())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FidelityTest, MatchesTraceOracleAndIgnoresGlobalPhase) {
  std::mt19937_64 rng(21);
  const Matrix u = oracle::series_exp(oracle::random_hermitian(4, rng), 1.0);
  const Matrix v = oracle::series_exp(oracle::random_hermitian(4, rng), 1.0);
  EXPECT_NEAR(fidelity(GateTarget{Operator(u)}, v), oracle::trace_fidelity(u, v), 1e-14);
  EXPECT_NEAR(fidelity(GateTarget{Operator(u)}, Operator(std::polar(1.0, 0.7) * u)), 1.0, 1e-14);
  EXPECT_NEAR(fidelity(GateTarget{pauli_x()}, pauli_z()), 0.0, 1e-15);
  EXPECT_THROW(fidelity(ideal_phase(0.1), Operator::identity(4)), std::invalid_argument);
}

TEST(ComposeCnotTest, SyntheticXiCancels) {
  const Matrix isy = (cplx(0.0, 1.0) * pauli_y()).matrix();
  for (double xi : {0.0, std::numbers::pi / 3, std::numbers::pi}) {
    const cplx e = std::polar(1.0, xi);
    const Operator u1(block_diag(Matrix::Identity(2, 2), e * isy));
    const Operator half(Operator::diagonal({1.0, 1.0, 1.0, e}).matrix());
    const Operator u3 = u3_from_half_pass(half);
    EXPECT_LT(u3.max_abs_diff(Operator::diagonal({1.0, 1.0, e, e})), 1e-15);
    const auto seq = compose_cnot(u1, not_gate(), u3);
    EXPECT_NEAR(fidelity(ideal_cnot_like(), seq.composed), 1.0, 1e-12);
    EXPECT_NEAR(oracle::wrap_phase(seq.xi - xi), 0.0, 1e-12);
  }
}

TEST(ComposeCnotTest, RejectsBadInputs) {
  const Operator id = Operator::identity(4);
  EXPECT_THROW(compose_cnot(Operator::identity(2), not_gate(), id), std::invalid_argument);
  EXPECT_THROW(compose_cnot(cplx(2.0) * id, not_gate(), id), std::invalid_argument);
  // A u1 that moves the control qubit is not a controlled operation.
  EXPECT_THROW(compose_cnot(not_gate(), not_gate(), id), std::invalid_argument);
}

}  // namespace
}  // namespace qgate
