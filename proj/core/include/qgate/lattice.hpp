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

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qgate/gates.hpp"
#include "qgate/operator.hpp"
#include "qgate/schedule.hpp"

namespace qgate {

struct SiteOccupation {
  int n_a = 0;
  int n_b = 0;
  int total() const { return n_a + n_b; }
  friend bool operator==(const SiteOccupation&, const SiteOccupation&) = default;
};

// Fixed total atom number over one or two sites; states in descending
// lexicographic order of (n_a1, n_b1[, n_a2, n_b2]), so (n, 0) comes first.
class FockBasis {
 public:
  FockBasis(std::size_t sites, std::vector<int> site_totals);

  std::size_t sites() const { return sites_; }
  int total() const { return total_; }
  const std::vector<int>& site_totals() const { return site_totals_; }
  std::size_t dim() const { return states_.size(); }
  const std::vector<SiteOccupation>& state(std::size_t i) const { return states_.at(i); }
  std::optional<std::size_t> index_of(const std::vector<SiteOccupation>& s) const;

 private:
  std::size_t sites_;
  std::vector<int> site_totals_;
  int total_ = 0;
  std::vector<std::vector<SiteOccupation>> states_;
};

// Throws std::invalid_argument for zero atoms on a site or sites outside {1, 2}.
FockBasis build_fock_basis(std::size_t sites, std::vector<int> site_totals);

struct LatticeParams {
  double u_bb = 0.0;
  double u_aa = 0.0;
  double u_ab = 0.0;
  double j_a = 0.0;
  double j_b = 0.0;
  double g = 0.0;
  double delta_k = 0.0;  // laser detuning; on two sites it acts as the common rotating frame
  double omega_k = 0.0;
  double phi = 0.0;
};

// (delta_k/2)(a^dag a - b^dag b) + (omega_k/2)(e^{i phi} a^dag b + h.c.) + on-site interactions.
Operator single_site_hamiltonian(int n, const LatticeParams& p);

// -J_b and +J_a hopping, interactions, tilt k g (n_a - n_b) for k in {1, 2},
// frame detuning on both sites and the laser on drive_site (1 or 2).
Operator two_site_hamiltonian(const FockBasis& basis, const LatticeParams& p, int drive_site);

// Fock indices of |x1 x2> ordered 00, 01, 10, 11 (or 0, 1 on one site);
// |0>_k = (n_k, 0), |1>_k = (n_k - 1, 1).
std::vector<std::size_t> qubit_indices(const FockBasis& basis, const std::vector<int>& occupations);
Operator qubit_projector(const FockBasis& basis, const std::vector<int>& occupations);

// 2 |<1_k| (omega_k/2)(a^dag b + b^dag a) |0_k>| by explicit projection.
double effective_rabi(int n_k, double omega_k);

// delta + 2 omega^2 n_k / (delta + u_ab - u_bb). Throws std::domain_error when singular.
double delta_shift(int n_k, double omega, double delta, const LatticeParams& p);

struct EffectiveQubitModel {
  double delta_eff = 0.0;
  double omega_eff = 0.0;
  double coupling = 0.0;       // J_b^2 / (g - U_bb)
  double leakage_bound = 0.0;  // (J_b / |g - U_bb|)^2
};
EffectiveQubitModel effective_qubit_model(int n_k, const LatticeParams& p);

enum class GapPartition { Diagonal, Spectral };

struct EffectiveHamiltonian {
  Operator h;              // on the projector's range, in ascending basis order
  double min_gap = 0.0;    // smallest |E_i - E_v| over P states and virtual states
  double max_coupling = 0.0;
  double gap_ratio = 0.0;  // min_gap / max_coupling
  bool gap_condition_met = true;
};

class GapConditionError : public std::runtime_error {
 public:
  GapConditionError(const std::string& what, double ratio) : std::runtime_error(what), ratio_(ratio) {}
  double gap_ratio() const { return ratio_; }

 private:
  double ratio_;
};

// P H P + 1/2 sum_v C_iv C*_jv [1/(E_i - E_v) + 1/(E_j - E_v)]. The projector must be
// diagonal with 0/1 entries. With strict set, a gap ratio below gap_factor throws.
EffectiveHamiltonian effective_hamiltonian_2nd_order(const Operator& full, const Operator& projector,
                                                     GapPartition partition = GapPartition::Diagonal,
                                                     double gap_factor = 10.0, bool strict = false);

enum class LatticeRoute { Full, Effective };

// Maps a path sample to the instantaneous lattice parameters.
using LatticeControl = std::function<LatticeParams(std::span<const double>)>;

struct LatticeRunOptions {
  double steps_per_unit_time = 1.0;
  LatticeRoute route = LatticeRoute::Full;
  int drive_site = 2;
};

struct LatticeGateReport {
  Matrix block;            // frame-corrected qubit block
  double fidelity = 0.0;   // against the ideal gate if given
  double error = 1.0;
  double leakage = 0.0;    // 1 - |block|_F^2 / d
  double max_unitarity_defect = 0.0;
  double gap_ratio = 0.0;  // effective route only
  std::size_t steps = 0;
};

// Propagates the lattice Hamiltonian along path and projects onto the qubit
// subspace in the idle frame exp(i F t), F the static qubit-state energies.
LatticeGateReport simulate_lattice_gate(const ParamPath& path, const FockBasis& basis,
                                        const std::vector<int>& occupations, const LatticeControl& control,
                                        const std::optional<GateTarget>& ideal, const LatticeRunOptions& options);

}  // namespace qgate
