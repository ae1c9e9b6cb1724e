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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgate/schedule.hpp"

namespace qgate {

namespace {

double smooth(double s) { return s * s * (3.0 - 2.0 * s); }

}  // namespace

RampProfile RampProfile::linear() { return {Kind::Linear, false, nullptr}; }
RampProfile RampProfile::smoothstep() { return {Kind::Smoothstep, false, nullptr}; }

RampProfile RampProfile::warped(std::shared_ptr<const std::vector<double>> table) {
  if (!table || table->size() < 2 || table->front() != 0.0 || table->back() != 1.0) {
    throw std::invalid_argument("RampProfile: warp table must run from 0 to 1");
  }
  return {Kind::Warped, false, std::move(table)};
}

double RampProfile::forward(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  switch (kind_) {
    case Kind::Linear:
      return s;
    case Kind::Smoothstep:
      return smooth(s);
    case Kind::Warped: {
      // table_[i] is the normalized warped time at lambda = i / (n - 1).
      const auto& w = *table_;
      const double u = smooth(s);
      if (u <= 0.0) return 0.0;
      if (u >= 1.0) return 1.0;
      const auto it = std::upper_bound(w.begin(), w.end(), u);
      const std::size_t k = static_cast<std::size_t>(it - w.begin()) - 1;
      const double frac = (u - w[k]) / (w[k + 1] - w[k]);
      return (static_cast<double>(k) + frac) / static_cast<double>(w.size() - 1);
    }
  }
  return s;
}

double RampProfile::operator()(double s) const {
  return reversed_ ? 1.0 - forward(1.0 - s) : forward(s);
}

RampProfile RampProfile::reversed() const { return {kind_, !reversed_, table_}; }

std::string RampProfile::name() const {
  std::string base = kind_ == Kind::Linear ? "linear" : kind_ == Kind::Smoothstep ? "smoothstep" : "gap_adapted";
  return reversed_ ? base + "_reversed" : base;
}

RampDesign design_ramp(const std::function<std::array<double, 2>(double)>& bloch,
                       const RampOptions& options) {
  const int n = std::max(options.table_points, 3);
  std::vector<double> alpha(static_cast<std::size_t>(n));
  std::vector<double> gap(static_cast<std::size_t>(n));
  double gmax = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto p = bloch(static_cast<double>(i) / (n - 1));
    alpha[static_cast<std::size_t>(i)] = std::atan2(p[1], p[0]);
    gap[static_cast<std::size_t>(i)] = std::hypot(p[0], p[1]);
    gmax = std::max(gmax, gap[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    while (alpha[i] - alpha[i - 1] > std::numbers::pi) alpha[i] -= 2.0 * std::numbers::pi;
    while (alpha[i] - alpha[i - 1] < -std::numbers::pi) alpha[i] += 2.0 * std::numbers::pi;
  }
  const double floor = 1e-9 * std::max(gmax, 1e-300);
  const double h = 1.0 / (n - 1);
  std::vector<double> dens(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = i + 1 == alpha.size() ? i : i + 1;
    const double dal = std::abs(alpha[b] - alpha[a]) / (h * static_cast<double>(b - a));
    dens[i] = dal / std::pow(std::max(gap[i], floor), options.gap_exponent);
  }
  double cost = 0.0;
  for (std::size_t i = 1; i < dens.size(); ++i) cost += 0.5 * h * (dens[i] + dens[i - 1]);

  RampDesign out{RampProfile::smoothstep(), cost};
  if (options.shape == RampShape::Linear) {
    out.profile = RampProfile::linear();
    return out;
  }
  if (options.shape == RampShape::Smoothstep) return out;

  const double blend = options.uniform_blend * std::max(cost, 1e-12);
  auto table = std::make_shared<std::vector<double>>(dens.size(), 0.0);
  for (std::size_t i = 1; i < dens.size(); ++i) {
    (*table)[i] = (*table)[i - 1] + 0.5 * h * (dens[i] + dens[i - 1] + 2.0 * blend);
  }
  const double last = table->back();
  for (auto& w : *table) w /= last;
  table->back() = 1.0;
  out.profile = RampProfile::warped(std::move(table));
  return out;
}

std::vector<double> allocate_durations(const std::vector<double>& costs, double total,
                                       const RampOptions& options) {
  if (costs.empty()) return {};
  const double k = static_cast<double>(costs.size());
  double sum = 0.0;
  for (double c : costs) sum += c;
  if (options.allocation == Allocation::Equal || !(sum > 0.0)) {
    return std::vector<double>(costs.size(), total / k);
  }
  std::vector<double> share(costs.size());
  double norm = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    share[i] = std::max(costs[i] / sum, options.min_fraction);
    norm += share[i];
  }
  for (auto& s : share) s = total * s / norm;
  return share;
}

}  // namespace qgate
