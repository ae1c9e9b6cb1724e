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
// qgate: command line front end for the gate sweeps.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgate/harness.hpp"
#include "qgate/propagator.hpp"
#include "qgate/schedule.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

struct Options {
  std::string config;
  std::string out;
  std::string svg;
  std::optional<int> steps;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string dump_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qgate::ConfigError("cannot read config '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

qgate::SweepConfig load(const std::string& experiment, const Options& o) {
  auto cfg = qgate::parse_sweep_config(o.config.empty() ? std::string() : read_file(o.config), experiment);
  if (o.steps) {
    if (*o.steps <= 0) throw qgate::ConfigError("--steps must be positive");
    cfg.abstract.steps = *o.steps;
    cfg.lattice.local_steps = *o.steps;
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.workers) {
    if (*o.workers <= 0) throw qgate::ConfigError("--workers must be positive");
    cfg.workers = *o.workers;
  }
  return cfg;
}

qgate::ScheduleLimits limits_of(const qgate::AbstractSettings& a) {
  qgate::ScheduleLimits lim;
  lim.omega_m = lim.omega_t_m = a.omega_m;
  lim.delta_m = lim.delta_t_m = a.delta_ratio * a.omega_m;
  lim.theta = a.theta;
  lim.T = a.T / a.omega_m;
  lim.ramps = a.ramps;
  return lim;
}

std::vector<qgate::ParamPath> gate_paths(qgate::GateKind g, const qgate::ScheduleLimits& lim) {
  switch (g) {
    case qgate::GateKind::Phase:
      return {qgate::phase_gate_path(lim)};
    case qgate::GateKind::Hadamard:
      return {qgate::hadamard_path(lim)};
    case qgate::GateKind::Cnot: {
      auto u1 = qgate::cnot_u1_path(lim);
      auto u3 = qgate::cnot_u3_path(u1);
      return {u1, u3};
    }
  }
  return {};
}

void dump_paths(const std::vector<qgate::ParamPath>& paths, const std::string& dest) {
  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw qgate::ConfigError("cannot write '" + dest + "'");
  if (paths.size() == 1) {
    out << qgate::path_to_json(paths.front());
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < paths.size(); ++i) out << qgate::path_to_json(paths[i]) << (i + 1 < paths.size() ? ",\n" : "");
    out << "]\n";
  }
}

std::vector<qgate::GateKind> selected_gates(const qgate::SweepConfig& cfg) {
  std::vector<qgate::GateKind> gates;
  for (const auto& g : cfg.gates) gates.push_back(qgate::parse_gate(g));
  if (gates.empty()) gates = {qgate::GateKind::Phase, qgate::GateKind::Hadamard, qgate::GateKind::Cnot};
  return gates;
}

int run_sweep_command(const std::string& experiment, const Options& o) {
  const auto cfg = load(experiment, o);
  if (!o.dump_path.empty()) {
    std::vector<qgate::ParamPath> all;
    for (auto g : selected_gates(cfg)) {
      if (experiment != "fig2a" && experiment != "robustness") break;
      for (auto& p : gate_paths(g, limits_of(cfg.abstract))) all.push_back(p);
    }
    if (!all.empty()) dump_paths(all, o.dump_path);
  }
  const auto res = qgate::run_sweep(cfg);
  if (!o.out.empty()) qgate::write_csv(res, o.out);
  else std::cout << qgate::format_csv(res);
  if (!o.svg.empty()) qgate::render_svg(res, o.svg);
  int failures = 0;
  for (const auto& r : res.records) {
    if (r.status != "ok") {
      std::cerr << r.series << " @ " << r.swept << ": " << r.status << "\n";
      ++failures;
    }
  }
  return failures ? kNumericalError : 0;
}

int run_gate_command(const Options& o) {
  const auto cfg = load("gate", o);
  const auto gates = selected_gates(cfg);
  std::vector<qgate::ParamPath> all;
  for (auto g : gates) {
    for (auto& p : gate_paths(g, limits_of(cfg.abstract))) all.push_back(p);
  }
  if (!o.dump_path.empty()) dump_paths(all, o.dump_path);
  qgate::SweepResult res;
  res.experiment = "gate";
  for (auto g : gates) {
    const auto r = qgate::run_abstract_gate(g, cfg.abstract);
    std::printf("%-9s T=%g/omega_m error=%.6e steps=%zu defect=%.2e\n", qgate::gate_name(g).c_str(),
                cfg.abstract.T, r.error, r.steps, r.max_unitarity_defect);
    res.records.push_back({qgate::gate_name(g), cfg.abstract.T, r.error, r.leakage, 0.0, r.max_unitarity_defect, 0.0, "ok"});
  }
  if (!o.out.empty()) qgate::write_csv(res, o.out);
  if (!o.svg.empty()) qgate::render_svg(res, o.svg);
  return 0;
}

int run_verify_command(const Options& o) {
  const auto cfg = load("gate", o);
  bool ok = true;
  std::vector<qgate::ParamPath> all;
  for (auto g : selected_gates(cfg)) {
    for (auto& p : gate_paths(g, limits_of(cfg.abstract))) all.push_back(p);
  }
  for (const auto& p : all) {
    for (const auto& r : qgate::verify_timing(p)) {
      std::printf("%-9s %-36s max_violation=%.3e tol=%.1e samples=%zu %s\n", p.kind().c_str(), r.label.c_str(),
                  r.max_violation, r.tolerance, r.samples, r.passed ? "ok" : "VIOLATED");
      ok = ok && r.passed;
    }
  }
  if (!o.dump_path.empty()) dump_paths(all, o.dump_path);
  return ok ? 0 : kNumericalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic gate simulations with unknown control maps"};
  app.require_subcommand(1);
  Options o;
  const char* names[] = {"fig2a", "fig2b", "fig2c", "fig2d", "robustness", "gate", "verify"};
  const char* help[] = {"gate error vs adiabatic time on the abstract models",
                        "lattice two-qubit gate error vs U_bb/U_ab for n atoms per site",
                        "lattice local gate error vs U_bb/U_ab for n atoms",
                        "lattice two-qubit gate error vs U_bb/U_ab for population imbalance",
                        "gate errors over seeded unknown control maps",
                        "run single gates and print their errors",
                        "check the timing symmetry constraints of the gate paths"};
  for (int i = 0; i < 7; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", o.config, "JSON config file");
    sub->add_option("--out", o.out, "CSV output file");
    sub->add_option("--svg", o.svg, "SVG plot output file");
    sub->add_option("--steps", o.steps, "steps per 1/omega_m");
    sub->add_option("--seed", o.seed, "seed for unknown maps");
    sub->add_option("--workers", o.workers, "concurrent grid points");
    sub->add_option("--dump-path", o.dump_path, "write the gate paths as JSON");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "gate") return run_gate_command(o);
    if (cmd == "verify") return run_verify_command(o);
    return run_sweep_command(cmd, o);
  } catch (const qgate::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const qgate::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }
}
