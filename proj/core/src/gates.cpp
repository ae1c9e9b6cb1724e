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
#include "qgate/gates.hpp"

#include <cmath>
#include <stdexcept>

#include "qgate/hamiltonians.hpp"

namespace qgate {

GateTarget ideal_phase(double theta) {
  return {Operator::diagonal({std::polar(1.0, 0.5 * theta), std::polar(1.0, -0.5 * theta)})};
}

GateTarget ideal_hadamard_like() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << r, r, -r, r;
  return {Operator(std::move(m))};
}

GateTarget ideal_cnot_like() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = -1.0;
  return {Operator(std::move(m))};
}

Operator not_gate() { return tensor(pauli_x(), Operator::identity(2)); }
Operator target_not_gate() { return tensor(Operator::identity(2), pauli_x()); }

double fidelity(const GateTarget& ideal, const Matrix& real) {
  if (real.rows() != real.cols() || static_cast<std::size_t>(real.rows()) != ideal.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const double d = static_cast<double>(ideal.dim());
  const cplx tr = (ideal.unitary.matrix().adjoint() * real).trace();
  return std::norm(tr) / (d * d);
}

double fidelity(const GateTarget& ideal, const Operator& real) { return fidelity(ideal, real.matrix()); }

CnotSequence compose_cnot(const Operator& u1, const Operator& u2, const Operator& u3) {
  for (const Operator* u : {&u1, &u2, &u3}) {
    if (u->dim() != 4) throw std::invalid_argument("compose_cnot: operators must be 4x4");
    if (!u->is_unitary()) throw std::invalid_argument("compose_cnot: operator is not unitary");
  }
  const Matrix& m = u1.matrix();
  const double off = std::max(m.block(0, 2, 2, 2).cwiseAbs().maxCoeff(), m.block(2, 0, 2, 2).cwiseAbs().maxCoeff());
  if (off > 1e-3) throw std::invalid_argument("compose_cnot: u1 mixes control states");
  const double xi = std::arg(m(2, 3));
  Operator composed = u2 * u3 * u2 * u1;
  return {u1, u2, u3, xi, std::move(composed)};
}

Operator u3_from_half_pass(const Operator& half) {
  const Operator x = target_not_gate();
  return half * x * half * x;
}

}  // namespace qgate
