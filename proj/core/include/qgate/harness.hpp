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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgate/lattice.hpp"
#include "qgate/operator.hpp"
#include "qgate/schedule.hpp"

namespace qgate {

inline constexpr const char* kToolVersion = "0.1.0";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind { Phase, Hadamard, Cnot };
GateKind parse_gate(const std::string& name);
std::string gate_name(GateKind g);

struct Grid {
  bool log_scale = true;
  double min = 1.0;
  double max = 1.0;
  int points = 1;
  std::vector<double> explicit_values;
  // Throws ConfigError unless nonempty and strictly increasing.
  std::vector<double> values() const;
};

// Abstract-model settings; T values are in units of 1/omega_m.
struct AbstractSettings {
  double omega_m = 1.0;
  double delta_ratio = 0.1;  // delta_m / omega_m and delta_t_m / omega_t_m
  double theta = 1.5707963267948966;
  double T = 300.0;
  double steps = 32.0;  // steps per 1/omega_m
  RampOptions ramps;
};

struct LatticeSettings {
  double u_ab = 1.0;
  double u_aa = 1.0;
  double j_m = 0.05;
  std::optional<double> omega_m;  // default j_m^2 / 10
  double g_offset = 0.5;          // g = u_bb + g_offset * u_ab
  double T = 200.0;               // in units of 1/omega_m
  double steps = 8.0;             // steps per 1/max(delta_t_nominal, omega_m)
  LatticeRoute route = LatticeRoute::Effective;
  // Local gates on a single site.
  double local_delta_m = 1.0;
  double local_omega_m = 10.0;
  double local_T = 300.0;  // in units of 1/local_omega_m
  double local_steps = 32.0;
  double local_theta = 1.5707963267948966;
  RampOptions ramps;

  double resolved_omega_m() const { return omega_m.value_or(j_m * j_m / 10.0); }
};

struct GateRun {
  double error = 1.0;
  double leakage = 0.0;
  double max_unitarity_defect = 0.0;
  double gap_ratio = 0.0;
  double xi = 0.0;
  std::size_t steps = 0;
};

// Propagates one gate on h1 / h2 at the given settings.
GateRun run_abstract_gate(GateKind gate, const AbstractSettings& s, const std::optional<UnknownMap>& fmap = {});

// Conditional shift E11 - E10 - E01 + E00 of the second-order reduction at fillings (n1, n2).
double lattice_conditional_shift(double ratio, int n1, int n2, const LatticeSettings& s);
// Conditional-phase calibration at the reference fillings n1 = n2 = 1.
double lattice_delta_t_nominal(double ratio, const LatticeSettings& s);
GateRun run_lattice_cnot(double ratio, int n1, int n2, const LatticeSettings& s);
GateRun run_lattice_local(GateKind gate, double ratio, int n, const LatticeSettings& s);

struct SweepConfig {
  std::string experiment = "fig2a";  // fig2a | fig2b | fig2c | fig2d | robustness | gate
  std::vector<std::string> gates;
  std::optional<Grid> grid;
  std::vector<int> n_values{1, 3, 5};
  std::vector<int> imbalances{0, 1, 2};
  int count = 10;
  std::uint64_t seed = 1;
  int workers = 1;
  bool record_wall_time = false;
  AbstractSettings abstract;
  LatticeSettings lattice;
};

// Parses a JSON object; unknown keys and malformed values raise ConfigError.
SweepConfig parse_sweep_config(const std::string& json_text, const std::string& experiment);
std::string config_to_json(const SweepConfig& cfg);

struct SweepRecord {
  std::string series;
  double swept = 0.0;
  double error = 1.0;
  double leakage = 0.0;
  double wall_ms = 0.0;
  double max_unitarity_defect = 0.0;
  double gap_ratio = 0.0;
  std::string status = "ok";
};

struct SweepResult {
  std::string experiment;
  std::vector<SweepRecord> records;  // series-major, grid order inside a series
  std::string config_echo;
  std::string tool_version = kToolVersion;
};

SweepResult run_fig2a(const SweepConfig& cfg);
SweepResult run_fig2bc(const SweepConfig& cfg);  // experiment fig2b (two-qubit) or fig2c (local)
SweepResult run_fig2d(const SweepConfig& cfg);
SweepResult run_robustness(const SweepConfig& cfg);
SweepResult run_sweep(const SweepConfig& cfg);

// Header swept,error,leakage,wall_ms; 12 significant digits; LF endings.
std::string format_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& destination);
struct CsvRow {
  double swept;
  double error;
  double leakage;
  double wall_ms;
};
std::vector<CsvRow> parse_csv(const std::string& text);

// Log-log plot, one path per series; nonpositive errors fall back to a floor of 1e-16.
std::string render_svg_string(const SweepResult& result);
void render_svg(const SweepResult& result, const std::string& destination);

}  // namespace qgate
