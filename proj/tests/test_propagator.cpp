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
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgate/gates.hpp"
#include "qgate/hamiltonians.hpp"
#include "qgate/propagator.hpp"

namespace qgate {
namespace {

const HamiltonianBuilder kQubit = [](std::span<const double> v) { return h1({v[0], v[1], v[2]}).matrix(); };

ParamPath smooth_path(double duration) {
  return ParamPath("test", {"delta", "omega", "phi"},
                   {Segment::ramp(duration, {1.0, 0.0, 0.0}, {-1.0, 2.0, 1.0})});
}

TEST(EvolveTest, HoldMatchesExactExponential) {
  const ParamPath p("hold", {"delta", "omega", "phi"}, {Segment::hold(3.7, {0.4, 1.3, 0.2})});
  const auto r = evolve(p, kQubit, 2.0);
  EXPECT_LT((r.unitary.matrix() - oracle::bloch_exp(0.4, 1.3, 0.2, 3.7)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(r.step_count, 8u);
  EXPECT_LT(r.max_unitarity_defect, 1e-13);
}

TEST(EvolveTest, ConvergesAtSecondOrder) {
  const auto p = smooth_path(5.0);
  const Matrix ref = oracle::rk4_propagate(p, kQubit, 20000);
  const double e1 = (evolve(p, kQubit, 8.0).unitary.matrix() - ref).cwiseAbs().maxCoeff();
  const double e2 = (evolve(p, kQubit, 16.0).unitary.matrix() - ref).cwiseAbs().maxCoeff();
  const double e3 = (evolve(p, kQubit, 32.0).unitary.matrix() - ref).cwiseAbs().maxCoeff();
  EXPECT_NEAR(e1 / e2, 4.0, 0.6);
  EXPECT_NEAR(e2 / e3, 4.0, 0.6);
  EXPECT_LT(e3, 1e-4);
}

TEST(EvolveTest, JumpsDoNotEvolve) {
  const ParamPath with_jump("j", {"delta", "omega", "phi"},
                            {Segment::hold(1.0, {0.5, 0.0, 0.0}), Segment::jump({0.5, 0.0, 0.0}, {0.5, 1.0, 0.0}),
                             Segment::hold(1.0, {0.5, 1.0, 0.0})});
  const Matrix expect = oracle::bloch_exp(0.5, 1.0, 0.0, 1.0) * oracle::bloch_exp(0.5, 0.0, 0.0, 1.0);
  EXPECT_LT((evolve(with_jump, kQubit, 4.0).unitary.matrix() - expect).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(EvolveTest, RejectsBadInputs) {
  const auto p = smooth_path(1.0);
  EXPECT_THROW(evolve(p, kQubit, 0.0), std::invalid_argument);
  int calls = 0;
  const HamiltonianBuilder changing = [&](std::span<const double> v) {
    return ++calls > 2 ? h2({v[0], v[1], v[2]}).matrix() : kQubit(v);
  };
  EXPECT_THROW(evolve(p, changing, 4.0), std::invalid_argument);
}

TEST(EvolveTest, ColumnsMatchFullPropagator) {
  const auto p = smooth_path(2.0);
  const auto full = evolve(p, kQubit, 10.0);
  const Matrix init = Matrix::Identity(2, 1);
  const auto cols = evolve_columns(p, kQubit, 10.0, init);
  EXPECT_LT((cols.columns - full.unitary.matrix().col(0)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(cols.step_count, full.step_count);
}

TEST(OracleTest, ClosedLoopBerryPhase) {
  const double delta = 0.5;
  const double omega = 1.0;
  const ParamPath loop("loop", {"delta", "omega", "phi"},
                       {Segment::ramp(2000.0, {delta, omega, 0.0}, {delta, omega, 2.0 * std::numbers::pi})});
  const auto o = adiabatic_oracle(loop, kQubit, 4000);
  const double expect = std::numbers::pi * (1.0 - delta / std::hypot(delta, omega));
  const double g0 = oracle::wrap_phase(o.phases.geometric[0]);
  const double g1 = oracle::wrap_phase(o.phases.geometric[1]);
  EXPECT_NEAR(std::abs(g0), expect, 1e-5);
  EXPECT_NEAR(oracle::wrap_phase(g0 + g1), 0.0, 1e-5);
  // The oracle's sign convention agrees with slow propagation.
  const auto slow = evolve(loop, kQubit, 4.0);
  EXPECT_GT(fidelity(GateTarget{o.unitary}, slow.unitary), 1.0 - 1e-4);
}

TEST(OracleTest, DynamicalPhaseOfStaticHamiltonian) {
  const ParamPath p("hold", {"delta", "omega", "phi"}, {Segment::hold(7.0, {0.6, 0.8, 0.0})});
  const auto o = adiabatic_oracle(p, kQubit, 100);
  EXPECT_NEAR(o.phases.dynamical[0], 7.0 * 0.5, 1e-12);
  EXPECT_NEAR(o.phases.dynamical[1], -7.0 * 0.5, 1e-12);
  EXPECT_LT((o.unitary.matrix() - oracle::bloch_exp(0.6, 0.8, 0.0, 7.0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OracleTest, MatchesPropagationOnGatePaths) {
  ScheduleLimits l;
  l.theta = std::numbers::pi / 2;
  l.T = 3000.0;
  const HamiltonianBuilder phase = [](std::span<const double> v) { return h1({0.0, v[0], v[1]}).matrix(); };
  const HamiltonianBuilder had = [](std::span<const double> v) {
    return h1(QubitParams::from_components(v[0], v[1])).matrix();
  };
  const auto pp = phase_gate_path(l);
  const auto hp = hadamard_path(l);
  const auto op = adiabatic_oracle(pp, phase, 4000);
  const auto oh = adiabatic_oracle(hp, had, 4000);
  EXPECT_LT(gate_error(ideal_phase(l.theta), op.unitary), 1e-10);
  EXPECT_LT(gate_error(ideal_hadamard_like(), oh.unitary), 1e-10);
  EXPECT_GT(fidelity(GateTarget{op.unitary}, evolve(pp, phase, 32.0).unitary), 1.0 - 1e-3);
  EXPECT_GT(fidelity(GateTarget{oh.unitary}, evolve(hp, had, 32.0).unitary), 1.0 - 1e-3);
}

}  // namespace
}  // namespace qgate
