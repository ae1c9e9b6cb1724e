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
#include "qgate/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace qgate {

namespace {

constexpr double kPi = std::numbers::pi;

bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(a[i]))) return false;
  }
  return true;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Segment Segment::ramp(double duration, std::vector<double> from, std::vector<double> to, RampProfile shape) {
  return {SegmentKind::Ramp, duration, std::move(from), std::move(to), std::move(shape)};
}

Segment Segment::hold(double duration, std::vector<double> values) {
  auto end = values;
  return {SegmentKind::Hold, duration, std::move(values), std::move(end), RampProfile::linear()};
}

Segment Segment::jump(std::vector<double> from, std::vector<double> to) {
  return {SegmentKind::Jump, 0.0, std::move(from), std::move(to), RampProfile::linear()};
}

ParamPath::ParamPath(std::string kind, std::vector<std::string> names, std::vector<Segment> segments,
                     std::vector<SymmetryConstraint> constraints,
                     std::vector<std::optional<UnknownMap>> maps, std::vector<double> leg_durations)
    : kind_(std::move(kind)),
      names_(std::move(names)),
      segments_(std::move(segments)),
      constraints_(std::move(constraints)),
      maps_(std::move(maps)),
      legs_(std::move(leg_durations)) {
  const std::size_t np = names_.size();
  if (np == 0) throw std::invalid_argument("ParamPath: no parameters");
  if (segments_.empty()) throw std::invalid_argument("ParamPath: no segments");
  if (maps_.empty()) maps_.resize(np);
  if (maps_.size() != np) throw std::invalid_argument("ParamPath: one map slot per parameter");
  for (const auto& c : constraints_) {
    if (c.param >= np) throw std::invalid_argument("ParamPath: constraint on unknown parameter");
  }
  double t = 0.0;
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Segment& s = segments_[k];
    if (s.start_values.size() != np || s.end_values.size() != np) {
      throw std::invalid_argument("ParamPath: segment value count mismatch");
    }
    if (!(s.duration >= 0.0) || !std::isfinite(s.duration)) {
      throw std::invalid_argument("ParamPath: negative segment duration");
    }
    if (s.kind == SegmentKind::Hold && !same_values(s.start_values, s.end_values, 1e-15)) {
      throw std::invalid_argument("ParamPath: hold segment changes values");
    }
    if (s.kind == SegmentKind::Jump) {
      if (s.duration != 0.0) throw std::invalid_argument("ParamPath: jump with nonzero duration");
      if (same_values(s.start_values, s.end_values, 0.0)) {
        throw std::invalid_argument("ParamPath: jump without a parameter change");
      }
    }
    if (k > 0 && !same_values(segments_[k - 1].end_values, s.start_values, 1e-12)) {
      throw std::invalid_argument("ParamPath: discontinuity at segment " + std::to_string(k));
    }
    starts_.push_back(t);
    t += s.duration;
    std::vector<double> a(np);
    std::vector<double> b(np);
    for (std::size_t i = 0; i < np; ++i) {
      a[i] = maps_[i] ? maps_[i]->inverse(s.start_values[i]) : s.start_values[i];
      b[i] = maps_[i] ? maps_[i]->inverse(s.end_values[i]) : s.end_values[i];
    }
    c0_.push_back(std::move(a));
    c1_.push_back(std::move(b));
  }
  total_ = t;
}

double ParamPath::param_scale(std::size_t i) const {
  double m = 1.0;
  for (const auto& s : segments_) {
    m = std::max({m, std::abs(s.start_values.at(i)), std::abs(s.end_values.at(i))});
  }
  return m;
}

std::vector<double> ParamPath::evaluate(std::size_t seg, double s) const {
  const Segment& g = segments_.at(seg);
  if (g.kind == SegmentKind::Jump) return s < 1.0 ? g.start_values : g.end_values;
  if (g.kind == SegmentKind::Hold) return g.start_values;
  if (s <= 0.0) return g.start_values;
  if (s >= 1.0) return g.end_values;
  const double w = g.shape(s);
  std::vector<double> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (g.start_values[i] == g.end_values[i]) {
      out[i] = g.start_values[i];
      continue;
    }
    const double c = c0_[seg][i] + (c1_[seg][i] - c0_[seg][i]) * w;
    out[i] = maps_[i] ? (*maps_[i])(c) : c;
  }
  return out;
}

std::vector<double> ParamPath::sample(double t) const {
  if (!(t >= 0.0) || t > total_) throw std::out_of_range("sample: time outside [0, T_total]");
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const double d = segments_[k].duration;
    if (d > 0.0 && t >= starts_[k] && t < starts_[k] + d) return evaluate(k, (t - starts_[k]) / d);
  }
  return segments_.back().end_values;
}

namespace {

std::vector<double> leg_costs_to_durations(const std::vector<RampDesign>& designs, double total,
                                           const RampOptions& o) {
  std::vector<double> costs;
  for (const auto& d : designs) costs.push_back(d.cost);
  return allocate_durations(costs, total, o);
}

}  // namespace

ParamPath phase_gate_path(const ScheduleLimits& L, const UnknownMap& fmap) {
  require_positive(L.omega_m, "omega_m");
  require_positive(L.T, "T");
  if (!(L.theta >= 0.0 && L.theta < 2.0 * kPi)) throw std::invalid_argument("phase_gate_path: theta outside [0, 2pi)");
  if (std::abs(fmap.omega_max() - L.omega_m) > 1e-12 * L.omega_m) {
    throw std::invalid_argument("phase_gate_path: map endpoint differs from omega_m");
  }
  const double om = L.omega_m;
  const double th = L.theta;
  const auto d1 = design_ramp([&](double l) { return std::array<double, 2>{om * l, 0.0}; }, L.ramps);
  const auto d2 = design_ramp(
      [&](double l) {
        return std::array<double, 2>{om * std::cos(0.5 * th * l), om * std::sin(0.5 * th * l)};
      },
      L.ramps);
  const auto dur = leg_costs_to_durations({d1, d2}, L.T, L.ramps);
  std::vector<Segment> segs{
      Segment::ramp(dur[0], {0.0, 0.0}, {om, 0.0}, d1.profile),
      Segment::ramp(dur[1], {om, 0.0}, {om, 0.5 * th}, d2.profile),
      Segment::jump({om, 0.5 * th}, {om, 0.5 * th + kPi}),
      Segment::ramp(dur[1], {om, 0.5 * th + kPi}, {om, th + kPi}, d2.profile.reversed()),
      Segment::ramp(dur[0], {om, th + kPi}, {0.0, th + kPi}, d1.profile.reversed()),
  };
  const double T2 = 2.0 * L.T;
  std::vector<SymmetryConstraint> cons{
      {"omega(t) = omega(2T - t)", 0, 1.0, 0.0, -1.0, T2, 0.0, T2},
      {"phi(t) = pi + theta - phi(2T - t)", 1, -1.0, kPi + th, -1.0, T2, 0.0, T2},
  };
  return ParamPath("phase", {"omega", "phi"}, std::move(segs), std::move(cons), {fmap, std::nullopt},
                   {L.T, L.T});
}

ParamPath phase_gate_path(const ScheduleLimits& L) {
  return phase_gate_path(L, UnknownMap::linear(L.omega_m));
}

ParamPath hadamard_path(const ScheduleLimits& L, const UnknownMap& fmap) {
  require_positive(L.omega_m, "omega_m");
  require_positive(L.delta_m, "delta_m");
  require_positive(L.T, "T");
  if (std::abs(fmap.omega_max() - L.omega_m) > 1e-12 * L.omega_m) {
    throw std::invalid_argument("hadamard_path: map endpoint differs from omega_m");
  }
  const double om = L.omega_m;
  const double dm = L.delta_m;
  // Bloch vector (z, x) = (delta, omega_x). Leg A runs at omega_x = -omega_m so that
  // the jump to +omega_m lands on the target gate with sigma_z|0> = +|0>.
  const auto r1 = design_ramp([&](double l) { return std::array<double, 2>{dm * l, -om}; }, L.ramps);
  const auto r2 = design_ramp([&](double l) { return std::array<double, 2>{dm, -om * (1.0 - l)}; }, L.ramps);
  const auto d = leg_costs_to_durations({r1, r2}, 0.5 * L.T, L.ramps);
  std::vector<Segment> segs{
      Segment::ramp(d[0], {0.0, -om}, {dm, -om}, r1.profile),
      Segment::ramp(d[1], {dm, -om}, {dm, 0.0}, r2.profile),
      Segment::ramp(d[1], {dm, 0.0}, {dm, -om}, r2.profile.reversed()),
      Segment::ramp(d[0], {dm, -om}, {0.0, -om}, r1.profile.reversed()),
      Segment::jump({0.0, -om}, {0.0, om}),
      Segment::ramp(2.0 * d[0], {0.0, om}, {dm, om}, r1.profile),
      Segment::ramp(2.0 * d[1], {dm, om}, {dm, 0.0}, r2.profile),
  };
  const double T = L.T;
  std::vector<SymmetryConstraint> cons{
      {"delta(t) = delta(T - t)", 0, 1.0, 0.0, -1.0, T, 0.0, T},
      {"omega_x(t) = omega_x(T - t)", 1, 1.0, 0.0, -1.0, T, 0.0, T},
      {"delta(T + t) = delta(t / 2)", 0, 1.0, 0.0, 0.5, -0.5 * T, T, 2.0 * T},
      {"omega_x(T + t) = -omega_x(t / 2)", 1, -1.0, 0.0, 0.5, -0.5 * T, T, 2.0 * T},
  };
  return ParamPath("hadamard", {"delta", "omega_x"}, std::move(segs), std::move(cons),
                   {std::nullopt, fmap}, {T, T});
}

ParamPath hadamard_path(const ScheduleLimits& L) { return hadamard_path(L, UnknownMap::linear(L.omega_m)); }

ParamPath cnot_u1_path(const ScheduleLimits& L, const UnknownMap& fmap) {
  require_positive(L.omega_t_m, "omega_t_m");
  require_positive(L.delta_t_m, "delta_t_m");
  require_positive(L.T, "T");
  if (std::abs(fmap.omega_max() - L.omega_t_m) > 1e-12 * L.omega_t_m) {
    throw std::invalid_argument("cnot_u1_path: map endpoint differs from omega_t_m");
  }
  const double om = L.omega_t_m;
  const double dm = L.delta_t_m;
  // Control-1 block Bloch vector (z, x) = (-delta_t, omega_tx).
  const auto r1 = design_ramp([&](double l) { return std::array<double, 2>{-dm, om * l}; }, L.ramps);
  const auto r2 = design_ramp([&](double l) { return std::array<double, 2>{-dm * (1.0 - l), om}; }, L.ramps);
  const auto d = leg_costs_to_durations({r1, r2}, L.T, L.ramps);
  std::vector<Segment> segs{
      Segment::ramp(d[0], {dm, 0.0}, {dm, om}, r1.profile),
      Segment::ramp(d[1], {dm, om}, {0.0, om}, r2.profile),
      Segment::jump({0.0, om}, {0.0, -om}),
      Segment::ramp(d[1], {0.0, -om}, {dm, -om}, r2.profile.reversed()),
      Segment::ramp(d[0], {dm, -om}, {dm, 0.0}, r1.profile.reversed()),
  };
  const double T2 = 2.0 * L.T;
  std::vector<SymmetryConstraint> cons{
      {"delta_t(t) = delta_t(2T - t)", 0, 1.0, 0.0, -1.0, T2, 0.0, T2},
      {"omega_tx(t) = -omega_tx(2T - t)", 1, -1.0, 0.0, -1.0, T2, 0.0, T2},
  };
  return ParamPath("cnot_u1", {"delta_t", "omega_tx"}, std::move(segs), std::move(cons),
                   {std::nullopt, fmap}, {L.T, L.T});
}

ParamPath cnot_u1_path(const ScheduleLimits& L) { return cnot_u1_path(L, UnknownMap::linear(L.omega_t_m)); }

ParamPath cnot_u3_path(const ParamPath& u1) {
  if (u1.kind() != "cnot_u1" || u1.param_count() != 2 || u1.names()[0] != "delta_t") {
    throw std::invalid_argument("cnot_u3_path: source path was not built by cnot_u1_path");
  }
  std::vector<Segment> segs;
  for (const auto& s : u1.segments()) {
    if (s.kind == SegmentKind::Jump && s.start_values[0] == s.end_values[0]) continue;
    Segment c = s;
    c.duration = 0.5 * s.duration;
    c.start_values[1] = 0.0;
    c.end_values[1] = 0.0;
    segs.push_back(std::move(c));
  }
  const double T = 0.5 * u1.total_duration();
  std::vector<SymmetryConstraint> cons{
      {"delta_t(t) = delta_t(T - t)", 0, 1.0, 0.0, -1.0, T, 0.0, T},
      {"omega_tx(t) = 0", 1, 0.0, 0.0, 1.0, 0.0, 0.0, T},
  };
  std::vector<double> legs;
  for (double l : u1.leg_durations()) legs.push_back(0.5 * l);
  return ParamPath("cnot_u3", u1.names(), std::move(segs), std::move(cons), {}, std::move(legs));
}

std::vector<ConstraintReport> verify_timing(const ParamPath& path) {
  std::vector<ConstraintReport> out;
  const std::size_t legs = std::max<std::size_t>(path.leg_durations().size(), 1);
  const std::size_t n = std::max<std::size_t>(4096, 1000 * legs);
  for (const auto& c : path.constraints()) {
    ConstraintReport r;
    r.label = c.label;
    r.samples = n;
    r.tolerance = c.tolerance * path.param_scale(c.param);
    const double span = c.t_hi - c.t_lo;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = c.t_lo + (static_cast<double>(i) + 0.5) * span / static_cast<double>(n);
      const double tm = std::clamp(c.time_scale * t + c.time_shift, 0.0, path.total_duration());
      const double lhs = path.sample(t)[c.param];
      const double rhs = c.scale * path.sample(tm)[c.param] + c.offset;
      r.max_violation = std::max(r.max_violation, std::abs(lhs - rhs));
    }
    r.passed = r.max_violation <= r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

std::string path_to_json(const ParamPath& path) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["kind"] = path.kind();
  j["parameters"] = path.names();
  j["total_duration"] = path.total_duration();
  j["leg_durations"] = path.leg_durations();
  ordered_json maps = ordered_json::array();
  for (const auto& m : path.maps()) {
    if (!m) {
      maps.push_back(nullptr);
      continue;
    }
    maps.push_back({{"kind", m->kind()}, {"seed", m->seed()}, {"i_max", m->i_max()}, {"omega_max", m->omega_max()}});
  }
  j["maps"] = maps;
  ordered_json segs = ordered_json::array();
  for (std::size_t k = 0; k < path.segments().size(); ++k) {
    const auto& s = path.segments()[k];
    const char* kind = s.kind == SegmentKind::Ramp ? "ramp" : s.kind == SegmentKind::Hold ? "hold" : "jump";
    segs.push_back({{"kind", kind},
                    {"t_start", path.segment_start(k)},
                    {"duration", s.duration},
                    {"start", s.start_values},
                    {"end", s.end_values},
                    {"shape", s.shape.name()}});
  }
  j["segments"] = segs;
  ordered_json cons = ordered_json::array();
  for (const auto& c : path.constraints()) {
    cons.push_back({{"label", c.label},
                    {"parameter", path.names()[c.param]},
                    {"scale", c.scale},
                    {"offset", c.offset},
                    {"time_scale", c.time_scale},
                    {"time_shift", c.time_shift},
                    {"t_lo", c.t_lo},
                    {"t_hi", c.t_hi},
                    {"tolerance", c.tolerance}});
  }
  j["constraints"] = cons;
  return j.dump(2) + "\n";
}

}  // namespace qgate
