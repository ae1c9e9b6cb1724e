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
#include "qgate/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>

namespace qgate {

namespace {

std::size_t steps_for(double duration, double steps_per_unit_time) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(duration * steps_per_unit_time - 1e-9)));
}

template <class Apply>
std::size_t march(const ParamPath& path, const HamiltonianBuilder& builder, double spu, Eigen::Index dim,
                  Apply&& apply) {
  if (!(spu > 0.0) || !std::isfinite(spu)) throw std::invalid_argument("evolve: steps_per_unit_time must be positive");
  std::size_t count = 0;
  for (std::size_t k = 0; k < path.segments().size(); ++k) {
    const Segment& seg = path.segments()[k];
    if (seg.kind == SegmentKind::Jump || seg.duration == 0.0) continue;
    const std::size_t n = steps_for(seg.duration, spu);
    const double dt = seg.duration / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = path.evaluate(k, (static_cast<double>(i) + 0.5) / static_cast<double>(n));
      const Matrix h = builder(p);
      if (h.rows() != dim || h.cols() != dim) throw std::invalid_argument("evolve: builder dimension changed");
      apply(detail::hermitian_exp(h, dt));
    }
    count += n;
  }
  if (count == 0) throw std::invalid_argument("evolve: path has no evolution steps");
  return count;
}

std::string defect_message(const char* who, double defect) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s: unitarity defect %.3e exceeds %.0e", who, defect, kUnitaryTol);
  return buf;
}

Eigen::Index probe_dim(const ParamPath& path, const HamiltonianBuilder& builder) {
  const Matrix h0 = builder(path.sample(0.0));
  if (h0.rows() == 0 || h0.rows() != h0.cols()) throw std::invalid_argument("evolve: builder must return square matrices");
  return h0.rows();
}

}  // namespace

EvolutionResult evolve(const ParamPath& path, const HamiltonianBuilder& builder, double spu) {
  const Eigen::Index d = probe_dim(path, builder);
  Matrix u = Matrix::Identity(d, d);
  const std::size_t n = march(path, builder, spu, d, [&](const Matrix& step) { u = step * u; });
  Operator op(std::move(u));
  const double defect = op.unitarity_defect();
  if (defect > kUnitaryTol) throw NumericalError(defect_message("evolve", defect));
  return {std::move(op), n, defect};
}

ColumnEvolution evolve_columns(const ParamPath& path, const HamiltonianBuilder& builder, double spu,
                               const Matrix& initial) {
  const Eigen::Index d = probe_dim(path, builder);
  if (initial.rows() != d) throw std::invalid_argument("evolve_columns: initial block has the wrong row count");
  Matrix c = initial;
  const std::size_t n = march(path, builder, spu, d, [&](const Matrix& step) { c = step * c; });
  const Matrix g0 = initial.adjoint() * initial;
  const double defect = (c.adjoint() * c - g0).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTol) throw NumericalError(defect_message("evolve_columns", defect));
  return {std::move(c), n, defect};
}

namespace {

struct GridPoint {
  std::vector<double> params;
  double t = 0.0;
  bool jump_after = false;  // a jump separates this point from the next
};

std::vector<GridPoint> oracle_grid(const ParamPath& path, std::size_t grid_points) {
  std::vector<GridPoint> g;
  const double total = path.total_duration();
  for (std::size_t k = 0; k < path.segments().size(); ++k) {
    const Segment& seg = path.segments()[k];
    if (seg.kind == SegmentKind::Jump) {
      if (!g.empty()) g.back().jump_after = true;
      continue;
    }
    if (seg.duration == 0.0) continue;
    const auto n = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(static_cast<double>(grid_points) * seg.duration / total)));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 && !g.empty() && !g.back().jump_after) continue;  // shared boundary
      const double s = static_cast<double>(i) / static_cast<double>(n - 1);
      g.push_back({path.evaluate(k, s), path.segment_start(k) + s * seg.duration, false});
    }
  }
  return g;
}

}  // namespace

OracleResult adiabatic_oracle(const ParamPath& path, const HamiltonianBuilder& builder, std::size_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("adiabatic_oracle: need at least two grid points");
  const auto grid = oracle_grid(path, grid_points);
  const std::size_t m = grid.size();

  std::vector<Matrix> hs;
  std::vector<Spectrum> specs;
  hs.reserve(m);
  specs.reserve(m);
  for (const auto& p : grid) {
    hs.push_back(builder(p.params));
    specs.push_back(eigensystem(Operator(hs.back())));
  }
  // Degenerate points borrow vectors from the nearest non-degenerate point.
  std::optional<std::size_t> first_ok;
  for (std::size_t i = 0; i < m; ++i) {
    if (!specs[i].degenerate) {
      first_ok = i;
      break;
    }
  }
  if (!first_ok) throw NumericalError("adiabatic_oracle: spectrum degenerate along the whole path");
  for (std::size_t i = 0; i < m; ++i) {
    if (!specs[i].degenerate) continue;
    const std::size_t src = i < *first_ok ? *first_ok : i - 1;
    specs[i].eigenvectors = specs[src].eigenvectors;
    for (Eigen::Index a = 0; a < specs[i].eigenvectors.cols(); ++a) {
      const Eigen::VectorXcd v = specs[i].eigenvectors.col(a);
      specs[i].eigenvalues(a) = v.dot(hs[i] * v).real();
    }
  }

  const Eigen::Index d = specs.front().eigenvectors.cols();
  OracleResult out{Operator::identity(static_cast<std::size_t>(d)), {}, {}, 1.0};
  out.phases.dynamical.assign(static_cast<std::size_t>(d), 0.0);
  out.phases.geometric.assign(static_cast<std::size_t>(d), 0.0);
  std::vector<std::size_t> level(static_cast<std::size_t>(d));
  for (std::size_t a = 0; a < level.size(); ++a) level[a] = a;
  std::vector<double> chi(static_cast<std::size_t>(d), 0.0);

  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Spectrum& s0 = specs[i];
    const Spectrum& s1 = specs[i + 1];
    const double dt = grid[i + 1].t - grid[i].t;
    const Matrix ov = s0.eigenvectors.adjoint() * s1.eigenvectors;
    std::vector<bool> taken(static_cast<std::size_t>(d), false);
    for (std::size_t a = 0; a < level.size(); ++a) {
      const auto from = static_cast<Eigen::Index>(level[a]);
      Eigen::Index best = -1;
      double best_abs = -1.0;
      for (Eigen::Index b = 0; b < d; ++b) {
        if (taken[static_cast<std::size_t>(b)]) continue;
        if (std::abs(ov(from, b)) > best_abs) {
          best_abs = std::abs(ov(from, b));
          best = b;
        }
      }
      out.min_overlap = std::min(out.min_overlap, best_abs);
      if (best_abs < 0.5) {
        throw NumericalError("adiabatic_oracle: untrackable crossing near t = " + std::to_string(grid[i].t) +
                             " (overlap " + std::to_string(best_abs) + ")");
      }
      taken[static_cast<std::size_t>(best)] = true;
      if (!grid[i].jump_after) {
        out.phases.dynamical[a] -= 0.5 * dt * (s0.eigenvalues(from) + s1.eigenvalues(best));
      }
      chi[a] -= std::arg(ov(from, best));
      level[a] = static_cast<std::size_t>(best);
    }
  }

  // Geometric phase relative to the end eigenvectors gauge-fixed against the start.
  const Matrix& v0 = specs.front().eigenvectors;
  const Matrix& v1 = specs.back().eigenvectors;
  Matrix u = Matrix::Zero(d, d);
  for (std::size_t a = 0; a < level.size(); ++a) {
    const auto ea = static_cast<Eigen::Index>(a);
    const auto eb = static_cast<Eigen::Index>(level[a]);
    Eigen::VectorXcd end = v1.col(eb);
    const cplx ref = v0.col(ea).dot(end);
    double gauge = 0.0;
    if (std::abs(ref) > 1e-12) gauge = -std::arg(ref);
    end *= std::polar(1.0, gauge);
    out.phases.geometric[a] = std::remainder(chi[a] - gauge, 2.0 * std::numbers::pi);
    u += std::polar(1.0, out.phases.dynamical[a] + out.phases.geometric[a]) * end * v0.col(ea).adjoint();
  }
  out.unitary = Operator(std::move(u));
  out.final_level = std::move(level);
  return out;
}

}  // namespace qgate
