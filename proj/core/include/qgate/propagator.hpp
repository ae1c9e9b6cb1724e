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
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgate/operator.hpp"
#include "qgate/schedule.hpp"

namespace qgate {

// Parameter tuple -> Hermitian matrix. Dimension must not change along a path.
using HamiltonianBuilder = std::function<Matrix(std::span<const double>)>;

// Raised when a numerical invariant (unitarity, eigenstate tracking) breaks.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolutionResult {
  Operator unitary;
  std::size_t step_count = 0;
  double max_unitarity_defect = 0.0;
};

// Time-ordered product of exp(-i H(midpoint) dt) over ceil(duration * steps_per_unit_time)
// uniform steps per segment. Jumps only change parameters.
EvolutionResult evolve(const ParamPath& path, const HamiltonianBuilder& builder,
                       double steps_per_unit_time);

// Same stepping applied to a block of columns (e.g. the qubit-subspace states of a
// larger space). The returned defect is that of the column block's orthonormality.
struct ColumnEvolution {
  Matrix columns;
  std::size_t step_count = 0;
  double max_unitarity_defect = 0.0;
};
ColumnEvolution evolve_columns(const ParamPath& path, const HamiltonianBuilder& builder,
                               double steps_per_unit_time, const Matrix& initial);

struct AdiabaticPhases {
  std::vector<double> dynamical;  // -int E_alpha dt, indexed by starting level
  std::vector<double> geometric;  // transport phase relative to the end-point gauge
};

struct OracleResult {
  Operator unitary;
  AdiabaticPhases phases;
  std::vector<std::size_t> final_level;  // level reached by each starting level
  double min_overlap = 1.0;
};

// Adiabatic-limit propagator sum_alpha e^{i(phi_alpha + psi_alpha)} |Phi_alpha(end)><Phi_alpha(start)|.
// Eigenstates are followed by maximal overlap; an overlap below 0.5 raises NumericalError.
OracleResult adiabatic_oracle(const ParamPath& path, const HamiltonianBuilder& builder,
                              std::size_t grid_points);

}  // namespace qgate
