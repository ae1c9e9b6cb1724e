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
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qgate {

// Monotone control-to-parameter map f on [0, I_m] with f(0) = 0, f(I_m) = omega_m.
// Evaluated as an odd function so that signed parameters (Omega_x) retrace
// their magnitude through the same map.
class UnknownMap {
 public:
  // f(I) = I with I_m = omega_m.
  static UnknownMap linear(double omega_m);
  // Seeded mixture of cumulative smooth bumps plus a linear floor; strictly increasing.
  static UnknownMap random(double omega_m, std::uint64_t seed, int bumps = 3);
  // Piecewise linear through (controls, values). Throws std::invalid_argument
  // unless both sequences start at 0 and increase strictly.
  static UnknownMap tabulated(std::vector<double> controls, std::vector<double> values);

  double operator()(double control) const;
  double inverse(double value) const;
  double i_max() const { return i_m_; }
  double omega_max() const { return omega_m_; }
  const std::string& kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

 private:
  struct Bump {
    double lo;
    double hi;
    double weight;
  };
  double unit(double x) const;  // normalized shape on [0, 1]

  std::string kind_;
  double omega_m_ = 1.0;
  double i_m_ = 1.0;
  double linear_weight_ = 1.0;
  std::vector<Bump> bumps_;
  std::vector<double> table_x_;
  std::vector<double> table_y_;
  std::uint64_t seed_ = 0;
};

enum class RampShape { Linear, Smoothstep, GapAdapted };
enum class Allocation { Equal, AdiabaticCost };

struct RampOptions {
  RampShape shape = RampShape::GapAdapted;
  Allocation allocation = Allocation::AdiabaticCost;
  double min_fraction = 0.05;   // floor on a sub-step's share, applied before renormalizing
  double uniform_blend = 0.02;  // uniform share mixed into the warped time density
  double gap_exponent = 1.0;    // angle rate proportional to gap^exponent
  int table_points = 4001;
};

// Monotone map s in [0,1] -> progress in [0,1] with fixed endpoints.
class RampProfile {
 public:
  static RampProfile linear();
  static RampProfile smoothstep();
  static RampProfile warped(std::shared_ptr<const std::vector<double>> table);

  double operator()(double s) const;
  // p'(s) = 1 - p(1 - s); traverses the same values backwards in time.
  RampProfile reversed() const;
  std::string name() const;

 private:
  enum class Kind { Linear, Smoothstep, Warped };
  RampProfile(Kind k, bool rev, std::shared_ptr<const std::vector<double>> t)
      : kind_(k), reversed_(rev), table_(std::move(t)) {}
  double forward(double s) const;

  Kind kind_ = Kind::Smoothstep;
  bool reversed_ = false;
  // Progress lambda as a function of warped time on a uniform grid.
  std::shared_ptr<const std::vector<double>> table_;
};

struct RampDesign {
  RampProfile profile;
  double cost = 0.0;  // integral of |d alpha| / gap^exponent
};

// bloch(lambda) gives the two-level Bloch vector along a ramp, lambda in [0, 1].
RampDesign design_ramp(const std::function<std::array<double, 2>(double)>& bloch,
                       const RampOptions& options);

// Split total over sub-steps by cost (with floor) or equally.
std::vector<double> allocate_durations(const std::vector<double>& costs, double total,
                                       const RampOptions& options);

enum class SegmentKind { Ramp, Hold, Jump };

struct Segment {
  SegmentKind kind = SegmentKind::Hold;
  double duration = 0.0;
  std::vector<double> start_values;
  std::vector<double> end_values;
  RampProfile shape = RampProfile::smoothstep();

  static Segment ramp(double duration, std::vector<double> from, std::vector<double> to,
                      RampProfile shape = RampProfile::smoothstep());
  static Segment hold(double duration, std::vector<double> values);
  static Segment jump(std::vector<double> from, std::vector<double> to);
};

// p[param](t) = scale * p[param](time_scale * t + time_shift) + offset on [t_lo, t_hi].
struct SymmetryConstraint {
  std::string label;
  std::size_t param = 0;
  double scale = 1.0;
  double offset = 0.0;
  double time_scale = 1.0;
  double time_shift = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double tolerance = 1e-12;  // relative to the parameter's largest magnitude on the path
};

class ParamPath {
 public:
  // Validates segment invariants and continuity. maps[i] (if present) is the
  // control map of parameter i; ramps are linear in control space.
  ParamPath(std::string kind, std::vector<std::string> names, std::vector<Segment> segments,
            std::vector<SymmetryConstraint> constraints = {},
            std::vector<std::optional<UnknownMap>> maps = {},
            std::vector<double> leg_durations = {});

  const std::string& kind() const { return kind_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<SymmetryConstraint>& constraints() const { return constraints_; }
  const std::vector<std::optional<UnknownMap>>& maps() const { return maps_; }
  const std::vector<double>& leg_durations() const { return legs_; }
  std::size_t param_count() const { return names_.size(); }
  double total_duration() const { return total_; }
  double segment_start(std::size_t i) const { return starts_.at(i); }
  // Largest |value| of parameter i over segment endpoints (at least 1).
  double param_scale(std::size_t i) const;

  // Value inside segment seg at fractional time s in [0, 1].
  std::vector<double> evaluate(std::size_t seg, double s) const;
  // Right-continuous evaluation; throws std::out_of_range outside [0, T_total].
  std::vector<double> sample(double t) const;

 private:
  std::string kind_;
  std::vector<std::string> names_;
  std::vector<Segment> segments_;
  std::vector<SymmetryConstraint> constraints_;
  std::vector<std::optional<UnknownMap>> maps_;
  std::vector<double> legs_;
  std::vector<double> starts_;
  std::vector<std::vector<double>> c0_;  // control-space endpoints
  std::vector<std::vector<double>> c1_;
  double total_ = 0.0;
};

inline std::vector<double> sample(const ParamPath& path, double t) { return path.sample(t); }

struct ScheduleLimits {
  double omega_m = 1.0;
  double delta_m = 0.1;
  double omega_t_m = 1.0;
  double delta_t_m = 0.1;
  double theta = 0.0;
  double T = 300.0;  // adiabatic leg duration
  RampOptions ramps;
};

// Path over (omega, phi) with delta = 0; two legs of duration T.
ParamPath phase_gate_path(const ScheduleLimits& limits, const UnknownMap& fmap);
ParamPath phase_gate_path(const ScheduleLimits& limits);

// Path over (delta, omega_x); leg A of duration T, jump, leg B of duration T.
ParamPath hadamard_path(const ScheduleLimits& limits, const UnknownMap& fmap);
ParamPath hadamard_path(const ScheduleLimits& limits);

// Path over (delta_t, omega_tx); two halves of duration T around a sign jump.
ParamPath cnot_u1_path(const ScheduleLimits& limits, const UnknownMap& fmap);
ParamPath cnot_u1_path(const ScheduleLimits& limits);

// Same delta_t values as u1_path at double speed, no drive. Applied twice
// around target NOTs this realizes (P0 + e^{i xi} P1) (x) I.
// Throws std::invalid_argument if u1_path was not built by cnot_u1_path.
ParamPath cnot_u3_path(const ParamPath& u1_path);

struct ConstraintReport {
  std::string label;
  double max_violation = 0.0;
  double tolerance = 0.0;  // absolute
  std::size_t samples = 0;
  bool passed = true;
};

// Checks every declared constraint on a midpoint grid with at least 1000 points per leg.
std::vector<ConstraintReport> verify_timing(const ParamPath& path);

// JSON document with segments, constraints and maps.
std::string path_to_json(const ParamPath& path);

}  // namespace qgate
