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
#include "qgate/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>

#include <json.hpp>

#include "qgate/gates.hpp"
#include "qgate/hamiltonians.hpp"
#include "qgate/propagator.hpp"

namespace qgate {

GateKind parse_gate(const std::string& name) {
  if (name == "phase") return GateKind::Phase;
  if (name == "hadamard") return GateKind::Hadamard;
  if (name == "cnot") return GateKind::Cnot;
  throw ConfigError("unknown gate '" + name + "' (expected phase, hadamard or cnot)");
}

std::string gate_name(GateKind g) {
  switch (g) {
    case GateKind::Phase:
      return "phase";
    case GateKind::Hadamard:
      return "hadamard";
    case GateKind::Cnot:
      return "cnot";
  }
  return "?";
}

std::vector<double> Grid::values() const {
  std::vector<double> v;
  if (!explicit_values.empty()) {
    v = explicit_values;
  } else {
    if (points < 1) throw ConfigError("grid: points must be at least 1");
    if (log_scale && !(min > 0.0 && max > 0.0)) throw ConfigError("grid: log scale needs positive bounds");
    for (int i = 0; i < points; ++i) {
      const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      v.push_back(log_scale ? std::pow(10.0, std::log10(min) + f * (std::log10(max) - std::log10(min)))
                            : min + f * (max - min));
    }
    if (points > 1) v.back() = max;
    v.front() = min;
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) throw ConfigError("grid: values must be strictly increasing");
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw ConfigError("grid: non-finite value");
  }
  return v;
}

// ---------------------------------------------------------------- gate runs

GateRun run_abstract_gate(GateKind gate, const AbstractSettings& s, const std::optional<UnknownMap>& fmap) {
  ScheduleLimits lim;
  lim.omega_m = lim.omega_t_m = s.omega_m;
  lim.delta_m = lim.delta_t_m = s.delta_ratio * s.omega_m;
  lim.theta = s.theta;
  lim.T = s.T / s.omega_m;
  lim.ramps = s.ramps;
  const UnknownMap f = fmap.value_or(UnknownMap::linear(s.omega_m));
  const double spu = s.steps * s.omega_m;
  GateRun out;
  if (gate == GateKind::Phase) {
    const auto path = phase_gate_path(lim, f);
    const auto ev = evolve(
        path, [](std::span<const double> v) { return h1({0.0, v[0], v[1]}).matrix(); }, spu);
    out.error = gate_error(ideal_phase(s.theta), ev.unitary);
    out.max_unitarity_defect = ev.max_unitarity_defect;
    out.steps = ev.step_count;
  } else if (gate == GateKind::Hadamard) {
    const auto path = hadamard_path(lim, f);
    const auto ev = evolve(
        path, [](std::span<const double> v) { return h1(QubitParams::from_components(v[0], v[1])).matrix(); }, spu);
    out.error = gate_error(ideal_hadamard_like(), ev.unitary);
    out.max_unitarity_defect = ev.max_unitarity_defect;
    out.steps = ev.step_count;
  } else {
    const auto u1p = cnot_u1_path(lim, f);
    const auto u3p = cnot_u3_path(u1p);
    const HamiltonianBuilder b = [](std::span<const double> v) {
      return h2(TwoQubitParams::from_components(v[0], v[1])).matrix();
    };
    const auto u1 = evolve(u1p, b, spu);
    const auto u3h = evolve(u3p, b, spu);
    const auto seq = compose_cnot(u1.unitary, not_gate(), u3_from_half_pass(u3h.unitary));
    out.error = gate_error(ideal_cnot_like(), seq.composed);
    out.xi = seq.xi;
    out.max_unitarity_defect = std::max(u1.max_unitarity_defect, u3h.max_unitarity_defect);
    out.steps = u1.step_count + u3h.step_count;
  }
  out.error = std::clamp(out.error, 0.0, 1.0);
  return out;
}

namespace {

LatticeParams lattice_statics(double ratio, const LatticeSettings& s) {
  LatticeParams p;
  p.u_ab = s.u_ab;
  p.u_aa = s.u_aa;
  p.u_bb = ratio * s.u_ab;
  p.g = p.u_bb + s.g_offset * s.u_ab;
  p.delta_k = -4.0 * p.g;  // common frame resonant with site 2
  return p;
}

}  // namespace

double lattice_conditional_shift(double ratio, int n1, int n2, const LatticeSettings& s) {
  const FockBasis basis(2, {n1, n2});
  LatticeParams p = lattice_statics(ratio, s);
  p.j_a = p.j_b = s.j_m;
  const auto eff = effective_hamiltonian_2nd_order(two_site_hamiltonian(basis, p, 2), qubit_projector(basis, {n1, n2}));
  const Matrix h = eff.h.matrix();
  return (h(3, 3) - h(2, 2) - h(1, 1) + h(0, 0)).real();
}

double lattice_delta_t_nominal(double ratio, const LatticeSettings& s) { return lattice_conditional_shift(ratio, 1, 1, s); }

GateRun run_lattice_cnot(double ratio, int n1, int n2, const LatticeSettings& s) {
  const double om = s.resolved_omega_m();
  const double dt_nom = lattice_delta_t_nominal(ratio, s);
  if (!(dt_nom > 0.0)) throw NumericalError("run_lattice_cnot: nonpositive conditional shift");
  ScheduleLimits lim;
  lim.omega_t_m = om;
  lim.delta_t_m = dt_nom;
  lim.omega_m = om;
  lim.delta_m = dt_nom;
  lim.T = s.T / om;
  lim.ramps = s.ramps;
  const auto u1p = cnot_u1_path(lim);
  const auto u3p = cnot_u3_path(u1p);
  const LatticeParams statics = lattice_statics(ratio, s);
  // Only the sign of the actual shift is used: a negative shift mirrors the passage,
  // which a pi offset of the drive phase (sigma_z conjugation on the target) undoes.
  const double phi0 = lattice_conditional_shift(ratio, n1, n2, s) < 0.0 ? std::numbers::pi : 0.0;
  const LatticeControl control = [&](std::span<const double> v) {
    LatticeParams p = statics;
    p.j_a = p.j_b = s.j_m * std::sqrt(std::max(v[0], 0.0) / dt_nom);
    p.omega_k = om * std::abs(v[1]) / lim.omega_t_m;
    p.phi = std::fmod(phi0 + (v[1] < 0.0 ? std::numbers::pi : 0.0), 2.0 * std::numbers::pi);
    return p;
  };
  const FockBasis basis(2, {n1, n2});
  LatticeRunOptions opt;
  opt.route = s.route;
  opt.steps_per_unit_time = s.steps * std::max(dt_nom, om);
  opt.drive_site = 2;
  const auto r1 = simulate_lattice_gate(u1p, basis, {n1, n2}, control, std::nullopt, opt);
  const auto r3 = simulate_lattice_gate(u3p, basis, {n1, n2}, control, std::nullopt, opt);
  const Matrix xt = target_not_gate().matrix();
  const Matrix xc = not_gate().matrix();
  const Matrix c = xc * r3.block * xt * r3.block * xt * xc * r1.block;
  GateRun out;
  out.error = std::clamp(1.0 - fidelity(ideal_cnot_like(), c), 0.0, 1.0);
  out.leakage = std::max(0.0, 1.0 - c.squaredNorm() / 4.0);
  out.max_unitarity_defect = std::max(r1.max_unitarity_defect, r3.max_unitarity_defect);
  out.gap_ratio = s.route == LatticeRoute::Effective ? std::min(r1.gap_ratio, r3.gap_ratio) : 0.0;
  out.steps = r1.steps + r3.steps;
  out.xi = std::arg(r1.block(2, 3));
  return out;
}

GateRun run_lattice_local(GateKind gate, double ratio, int n, const LatticeSettings& s) {
  if (gate == GateKind::Cnot) throw ConfigError("local lattice gates are phase or hadamard");
  ScheduleLimits lim;
  lim.omega_m = s.local_omega_m;
  lim.delta_m = s.local_delta_m;
  lim.theta = s.local_theta;
  lim.T = s.local_T / s.local_omega_m;
  lim.ramps = s.ramps;
  LatticeParams statics;
  statics.u_ab = s.u_ab;
  statics.u_aa = s.u_aa;
  statics.u_bb = ratio * s.u_ab;
  const bool phase = gate == GateKind::Phase;
  const auto path = phase ? phase_gate_path(lim) : hadamard_path(lim);
  const LatticeControl control = [&](std::span<const double> v) {
    LatticeParams p = statics;
    if (phase) {
      p.omega_k = v[0];
      p.phi = v[1];
    } else {
      p.delta_k = v[0];
      p.omega_k = std::abs(v[1]);
      p.phi = v[1] < 0.0 ? std::numbers::pi : 0.0;
    }
    return p;
  };
  LatticeRunOptions opt;
  opt.steps_per_unit_time = s.local_steps * s.local_omega_m;
  const auto ideal = phase ? ideal_phase(s.local_theta) : ideal_hadamard_like();
  const auto r = simulate_lattice_gate(path, FockBasis(1, {n}), {n}, control, ideal, opt);
  GateRun out;
  out.error = std::clamp(r.error, 0.0, 1.0);
  out.leakage = r.leakage;
  out.max_unitarity_defect = r.max_unitarity_defect;
  out.steps = r.steps;
  return out;
}

// ---------------------------------------------------------------- config

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void read_ramps(const json& j, RampOptions& r) {
  check_keys(j, {"shape", "allocation", "min_fraction", "uniform_blend", "gap_exponent", "table_points"}, "ramps");
  if (j.contains("shape")) {
    const auto s = j.at("shape").get<std::string>();
    if (s == "linear") r.shape = RampShape::Linear;
    else if (s == "smoothstep") r.shape = RampShape::Smoothstep;
    else if (s == "gap_adapted") r.shape = RampShape::GapAdapted;
    else throw ConfigError("ramps.shape: expected linear, smoothstep or gap_adapted");
  }
  if (j.contains("allocation")) {
    const auto s = j.at("allocation").get<std::string>();
    if (s == "equal") r.allocation = Allocation::Equal;
    else if (s == "adiabatic_cost") r.allocation = Allocation::AdiabaticCost;
    else throw ConfigError("ramps.allocation: expected equal or adiabatic_cost");
  }
  read(j, "min_fraction", r.min_fraction);
  read(j, "uniform_blend", r.uniform_blend);
  read(j, "gap_exponent", r.gap_exponent);
  read(j, "table_points", r.table_points);
  if (!(r.min_fraction >= 0.0 && r.min_fraction < 1.0)) throw ConfigError("ramps.min_fraction outside [0, 1)");
  if (!(r.uniform_blend >= 0.0)) throw ConfigError("ramps.uniform_blend must be nonnegative");
  if (r.table_points < 3) throw ConfigError("ramps.table_points must be at least 3");
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text, const std::string& experiment) {
  static const std::set<std::string> experiments{"fig2a", "fig2b", "fig2c", "fig2d", "robustness", "gate"};
  if (!experiments.count(experiment)) throw ConfigError("unknown experiment '" + experiment + "'");
  SweepConfig cfg;
  cfg.experiment = experiment;
  json j = json::object();
  try {
    if (!text.empty()) j = json::parse(text);
    check_keys(j, {"experiment", "gates", "grid", "n_values", "imbalances", "count", "seed", "workers",
                   "record_wall_time", "abstract", "lattice"},
               "config");
    if (j.contains("experiment") && j.at("experiment").get<std::string>() != experiment) {
      throw ConfigError("config: experiment '" + j.at("experiment").get<std::string>() +
                        "' does not match subcommand '" + experiment + "'");
    }
    read(j, "gates", cfg.gates);
    read(j, "n_values", cfg.n_values);
    read(j, "imbalances", cfg.imbalances);
    read(j, "count", cfg.count);
    read(j, "seed", cfg.seed);
    read(j, "workers", cfg.workers);
    read(j, "record_wall_time", cfg.record_wall_time);
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      check_keys(g, {"scale", "min", "max", "points", "values"}, "grid");
      Grid grid;
      if (g.contains("scale")) {
        const auto s = g.at("scale").get<std::string>();
        require(s == "log" || s == "linear", "grid.scale: expected log or linear");
        grid.log_scale = s == "log";
      }
      read(g, "min", grid.min);
      read(g, "max", grid.max);
      read(g, "points", grid.points);
      read(g, "values", grid.explicit_values);
      if (g.contains("values")) require(!grid.explicit_values.empty(), "grid.values: must be nonempty");
      cfg.grid = grid;
    }
    if (j.contains("abstract")) {
      const json& a = j.at("abstract");
      check_keys(a, {"omega_m", "delta_ratio", "theta", "T", "steps", "ramps"}, "abstract");
      read(a, "omega_m", cfg.abstract.omega_m);
      read(a, "delta_ratio", cfg.abstract.delta_ratio);
      read(a, "theta", cfg.abstract.theta);
      read(a, "T", cfg.abstract.T);
      read(a, "steps", cfg.abstract.steps);
      if (a.contains("ramps")) read_ramps(a.at("ramps"), cfg.abstract.ramps);
    }
    if (j.contains("lattice")) {
      const json& l = j.at("lattice");
      check_keys(l, {"u_ab", "u_aa", "j_m", "omega_m", "g_offset", "T", "steps", "route", "local_delta_m",
                     "local_omega_m", "local_T", "local_steps", "local_theta", "ramps"},
                 "lattice");
      auto& s = cfg.lattice;
      read(l, "u_ab", s.u_ab);
      read(l, "u_aa", s.u_aa);
      read(l, "j_m", s.j_m);
      if (l.contains("omega_m")) s.omega_m = l.at("omega_m").get<double>();
      read(l, "g_offset", s.g_offset);
      read(l, "T", s.T);
      read(l, "steps", s.steps);
      if (l.contains("route")) {
        const auto r = l.at("route").get<std::string>();
        require(r == "full" || r == "effective", "lattice.route: expected full or effective");
        s.route = r == "full" ? LatticeRoute::Full : LatticeRoute::Effective;
      }
      read(l, "local_delta_m", s.local_delta_m);
      read(l, "local_omega_m", s.local_omega_m);
      read(l, "local_T", s.local_T);
      read(l, "local_steps", s.local_steps);
      read(l, "local_theta", s.local_theta);
      if (l.contains("ramps")) read_ramps(l.at("ramps"), s.ramps);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  require(cfg.workers >= 1, "workers must be at least 1");
  require(cfg.count >= 1, "count must be at least 1");
  require(cfg.abstract.omega_m > 0.0 && cfg.abstract.delta_ratio > 0.0, "abstract: omega_m and delta_ratio must be positive");
  require(cfg.abstract.T > 0.0 && cfg.abstract.steps > 0.0, "abstract: T and steps must be positive");
  require(cfg.abstract.theta >= 0.0 && cfg.abstract.theta < 2.0 * std::numbers::pi, "abstract.theta outside [0, 2pi)");
  require(cfg.lattice.j_m > 0.0 && cfg.lattice.resolved_omega_m() > 0.0, "lattice: j_m and omega_m must be positive");
  require(cfg.lattice.T > 0.0 && cfg.lattice.steps > 0.0 && cfg.lattice.local_steps > 0.0, "lattice: T and steps must be positive");
  for (int n : cfg.n_values) require(n >= 1, "n_values: every site needs at least one atom");
  for (int m : cfg.imbalances) require(m >= 0, "imbalances must be nonnegative");
  for (const auto& g : cfg.gates) parse_gate(g);
  if (cfg.grid) cfg.grid->values();
  return cfg;
}

namespace {

nlohmann::ordered_json ramps_to_json(const RampOptions& r) {
  const char* shape = r.shape == RampShape::Linear       ? "linear"
                      : r.shape == RampShape::Smoothstep ? "smoothstep"
                                                         : "gap_adapted";
  return {{"shape", shape},
          {"allocation", r.allocation == Allocation::Equal ? "equal" : "adiabatic_cost"},
          {"min_fraction", r.min_fraction},
          {"uniform_blend", r.uniform_blend},
          {"gap_exponent", r.gap_exponent},
          {"table_points", r.table_points}};
}

}  // namespace

// Worker count is left out: it never changes results.
std::string config_to_json(const SweepConfig& cfg) {
  nlohmann::ordered_json j;
  j["experiment"] = cfg.experiment;
  j["gates"] = cfg.gates;
  if (cfg.grid) j["grid"] = {{"values", cfg.grid->values()}};
  j["n_values"] = cfg.n_values;
  j["imbalances"] = cfg.imbalances;
  j["count"] = cfg.count;
  j["seed"] = cfg.seed;
  j["record_wall_time"] = cfg.record_wall_time;
  j["abstract"] = {{"omega_m", cfg.abstract.omega_m}, {"delta_ratio", cfg.abstract.delta_ratio},
                   {"theta", cfg.abstract.theta},     {"T", cfg.abstract.T},
                   {"steps", cfg.abstract.steps},     {"ramps", ramps_to_json(cfg.abstract.ramps)}};
  j["lattice"] = {{"u_ab", cfg.lattice.u_ab},
                  {"u_aa", cfg.lattice.u_aa},
                  {"j_m", cfg.lattice.j_m},
                  {"omega_m", cfg.lattice.resolved_omega_m()},
                  {"g_offset", cfg.lattice.g_offset},
                  {"T", cfg.lattice.T},
                  {"steps", cfg.lattice.steps},
                  {"route", cfg.lattice.route == LatticeRoute::Full ? "full" : "effective"},
                  {"local_delta_m", cfg.lattice.local_delta_m},
                  {"local_omega_m", cfg.lattice.local_omega_m},
                  {"local_T", cfg.lattice.local_T},
                  {"local_steps", cfg.lattice.local_steps},
                  {"local_theta", cfg.lattice.local_theta},
                  {"ramps", ramps_to_json(cfg.lattice.ramps)}};
  return j.dump();
}

// ---------------------------------------------------------------- sweeps

namespace {

struct Task {
  std::string series;
  double swept;
  std::function<GateRun()> run;
};

// Runs tasks on up to `workers` threads; records keep task order.
SweepResult execute(const SweepConfig& cfg, std::vector<Task> tasks) {
  SweepResult res;
  res.experiment = cfg.experiment;
  res.config_echo = config_to_json(cfg);
  res.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      SweepRecord r;
      r.series = tasks[i].series;
      r.swept = tasks[i].swept;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const GateRun g = tasks[i].run();
        r.error = g.error;
        r.leakage = g.leakage;
        r.max_unitarity_defect = g.max_unitarity_defect;
        r.gap_ratio = g.gap_ratio;
      } catch (const NumericalError& e) {
        r.status = std::string("failed: ") + e.what();
        r.error = 1.0;
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
      const auto t1 = std::chrono::steady_clock::now();
      r.wall_ms = cfg.record_wall_time ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
      res.records[i] = std::move(r);
    }
  };
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.workers, 1)), tasks.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return res;
}

std::vector<double> grid_or(const SweepConfig& cfg, Grid fallback) {
  return cfg.grid ? cfg.grid->values() : fallback.values();
}

std::vector<GateKind> gates_or(const SweepConfig& cfg, std::vector<GateKind> fallback) {
  if (cfg.gates.empty()) return fallback;
  std::vector<GateKind> out;
  for (const auto& g : cfg.gates) out.push_back(parse_gate(g));
  return out;
}

const Grid kRatioGrid{true, 1e2, 1e5, 10, {}};

}  // namespace

SweepResult run_fig2a(const SweepConfig& cfg) {
  const auto ts = grid_or(cfg, Grid{true, 30.0, 3000.0, 13, {}});
  std::vector<Task> tasks;
  for (GateKind g : gates_or(cfg, {GateKind::Hadamard, GateKind::Phase, GateKind::Cnot})) {
    for (double T : ts) {
      AbstractSettings s = cfg.abstract;
      s.T = T;
      tasks.push_back({gate_name(g), T, [g, s] { return run_abstract_gate(g, s); }});
    }
  }
  return execute(cfg, std::move(tasks));
}

SweepResult run_fig2bc(const SweepConfig& cfg) {
  const auto ratios = grid_or(cfg, kRatioGrid);
  std::vector<Task> tasks;
  if (cfg.experiment == "fig2c") {
    for (GateKind g : gates_or(cfg, {GateKind::Phase, GateKind::Hadamard})) {
      if (g == GateKind::Cnot) throw ConfigError("fig2c runs local gates only (phase, hadamard)");
      for (int n : cfg.n_values) {
        for (double r : ratios) {
          const LatticeSettings s = cfg.lattice;
          tasks.push_back({gate_name(g) + " n=" + std::to_string(n), r, [g, r, n, s] { return run_lattice_local(g, r, n, s); }});
        }
      }
    }
  } else {
    for (int n : cfg.n_values) {
      for (double r : ratios) {
        const LatticeSettings s = cfg.lattice;
        tasks.push_back({"cnot n=" + std::to_string(n), r, [r, n, s] { return run_lattice_cnot(r, n, n, s); }});
      }
    }
  }
  return execute(cfg, std::move(tasks));
}

SweepResult run_fig2d(const SweepConfig& cfg) {
  const auto ratios = grid_or(cfg, kRatioGrid);
  const int n = cfg.n_values.empty() ? 1 : cfg.n_values.front();
  std::vector<Task> tasks;
  for (int imb : cfg.imbalances) {
    for (double r : ratios) {
      const LatticeSettings s = cfg.lattice;
      tasks.push_back({"cnot |n-m|=" + std::to_string(imb), r, [r, n, imb, s] { return run_lattice_cnot(r, n, n + imb, s); }});
    }
  }
  return execute(cfg, std::move(tasks));
}

SweepResult run_robustness(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (GateKind g : gates_or(cfg, {GateKind::Phase, GateKind::Hadamard, GateKind::Cnot})) {
    for (int k = 0; k < cfg.count; ++k) {
      const AbstractSettings s = cfg.abstract;
      const std::uint64_t seed = cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k + 1);
      tasks.push_back({gate_name(g), static_cast<double>(k), [g, s, seed] {
                         return run_abstract_gate(g, s, UnknownMap::random(s.omega_m, seed));
                       }});
    }
  }
  return execute(cfg, std::move(tasks));
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.experiment == "fig2a") return run_fig2a(cfg);
  if (cfg.experiment == "fig2b" || cfg.experiment == "fig2c") return run_fig2bc(cfg);
  if (cfg.experiment == "fig2d") return run_fig2d(cfg);
  if (cfg.experiment == "robustness") return run_robustness(cfg);
  throw ConfigError("run_sweep: experiment '" + cfg.experiment + "' is not a sweep");
}

}  // namespace qgate
