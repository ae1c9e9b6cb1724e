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

#include "qgate/hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgate {

namespace {

Matrix m2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// sigma_+ e^{i phi} + sigma_- e^{-i phi}
Matrix drive(double phi) {
  const cplx e = std::polar(1.0, phi);
  return m2(0.0, e, std::conj(e), 0.0);
}

}  // namespace

Operator pauli_x() { return Operator(m2(0.0, 1.0, 1.0, 0.0)); }
Operator pauli_y() { return Operator(m2(0.0, cplx(0, -1), cplx(0, 1), 0.0)); }
Operator pauli_z() { return Operator(m2(1.0, 0.0, 0.0, -1.0)); }
Operator sigma_plus() { return Operator(m2(0.0, 1.0, 0.0, 0.0)); }
Operator sigma_minus() { return Operator(m2(0.0, 0.0, 1.0, 0.0)); }

QubitParams QubitParams::from_components(double delta, double omega_x) {
  return {delta, std::abs(omega_x), omega_x < 0.0 ? std::numbers::pi : 0.0};
}

TwoQubitParams TwoQubitParams::from_components(double delta_t, double omega_x) {
  return {delta_t, std::abs(omega_x), omega_x < 0.0 ? std::numbers::pi : 0.0};
}

Operator h1(const QubitParams& p) {
  if (p.omega < 0.0) throw std::invalid_argument("h1: omega must be nonnegative");
  Matrix h = 0.5 * p.omega * drive(p.phi);
  h(0, 0) += 0.5 * p.delta;
  h(1, 1) -= 0.5 * p.delta;
  return Operator(std::move(h));
}

Operator h2(const TwoQubitParams& p) {
  if (p.omega_t < 0.0) throw std::invalid_argument("h2: omega_t must be nonnegative");
  Matrix h = Matrix::Zero(4, 4);
  const Matrix d = 0.5 * p.omega_t * drive(p.phi);
  h.block(0, 0, 2, 2) = d;
  h.block(2, 2, 2, 2) = d;
  h(3, 3) += p.delta_t;
  return Operator(std::move(h));
}

}  // namespace qgate
