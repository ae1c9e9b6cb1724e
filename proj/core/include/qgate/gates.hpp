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

#include <cstddef>

#include "qgate/operator.hpp"

namespace qgate {

// Ideal gate; comparisons are global-phase invariant through fidelity().
struct GateTarget {
  Operator unitary;
  std::size_t dim() const { return unitary.dim(); }
};

// diag(e^{i theta/2}, e^{-i theta/2}).
GateTarget ideal_phase(double theta);
// Rows (1, 1) / sqrt2 and (-1, 1) / sqrt2: (|0>+|1>)/sqrt2 -> |0>, (|0>-|1>)/sqrt2 -> -|1>.
GateTarget ideal_hadamard_like();
// |0><0| (x) I + |1><1| (x) i sigma_y.
GateTarget ideal_cnot_like();
// sigma_x (x) I.
Operator not_gate();
// I (x) sigma_x.
Operator target_not_gate();

// |Tr(V^dagger U)|^2 / d^2. Throws std::invalid_argument on dimension mismatch.
double fidelity(const GateTarget& ideal, const Operator& real);
double fidelity(const GateTarget& ideal, const Matrix& real);
inline double gate_error(const GateTarget& ideal, const Operator& real) { return 1.0 - fidelity(ideal, real); }

struct CnotSequence {
  Operator u1;
  Operator u2;
  Operator u3;
  double xi = 0.0;
  Operator composed;  // u2 u3 u2 u1
};

// Throws std::invalid_argument if any input is not 4x4 unitary or u1 has
// control-changing blocks above 1e-3.
CnotSequence compose_cnot(const Operator& u1, const Operator& u2, const Operator& u3);

// U3 from the half-duration pass: half (I (x) X) half (I (x) X).
Operator u3_from_half_pass(const Operator& half);

}  // namespace qgate
