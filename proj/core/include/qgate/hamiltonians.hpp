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

#include "qgate/operator.hpp"

namespace qgate {

// Basis order (|0>, |1>) with sigma_z|0> = +|0> and sigma_+ = |0><1|.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator sigma_plus();
Operator sigma_minus();

struct QubitParams {
  double delta = 0.0;
  double omega = 0.0;  // >= 0; sign changes go through phi
  double phi = 0.0;

  // Omega_x = omega cos(phi) restricted to phi in {0, pi}.
  static QubitParams from_components(double delta, double omega_x);
};

struct TwoQubitParams {
  double delta_t = 0.0;
  double omega_t = 0.0;  // >= 0
  double phi = 0.0;

  static TwoQubitParams from_components(double delta_t, double omega_x);
};

// (delta/2) sigma_z + (omega/2)(sigma_+ e^{i phi} + sigma_- e^{-i phi}).
// Throws std::invalid_argument for omega < 0.
Operator h1(const QubitParams& p);

// delta_t |11><11| + (omega_t/2) I (x) (sigma_+ e^{i phi} + h.c.),
// basis (|00>, |01>, |10>, |11>).
Operator h2(const TwoQubitParams& p);

}  // namespace qgate
