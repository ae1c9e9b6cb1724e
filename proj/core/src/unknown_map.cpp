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
#include <random>
#include <stdexcept>

#include "qgate/schedule.hpp"

namespace qgate {

namespace {

double smootherstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

// Platform-independent uniform double in [0, 1) from raw engine output.
// Bounds every bump slope to 15/8 / kMinBumpWidth times the linear slope.
constexpr double kMinBumpWidth = 0.4;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

UnknownMap UnknownMap::linear(double omega_m) {
  if (!(omega_m > 0.0)) throw std::invalid_argument("UnknownMap: omega_m must be positive");
  UnknownMap f;
  f.kind_ = "linear";
  f.omega_m_ = omega_m;
  f.i_m_ = omega_m;
  return f;
}

UnknownMap UnknownMap::random(double omega_m, std::uint64_t seed, int bumps) {
  if (!(omega_m > 0.0)) throw std::invalid_argument("UnknownMap: omega_m must be positive");
  if (bumps < 1) throw std::invalid_argument("UnknownMap: need at least one bump");
  std::mt19937_64 rng(seed);
  UnknownMap f;
  f.kind_ = "bump_mixture";
  f.seed_ = seed;
  f.omega_m_ = omega_m;
  f.i_m_ = omega_m;
  f.linear_weight_ = 0.25 + 0.25 * uniform01(rng);
  double total = 0.0;
  for (int k = 0; k < bumps; ++k) {
    const double lo = (1.0 - kMinBumpWidth) * uniform01(rng);
    const double width = kMinBumpWidth + (1.0 - lo - kMinBumpWidth) * uniform01(rng);
    const double w = 0.2 + uniform01(rng);
    f.bumps_.push_back({lo, lo + width, w});
    total += w;
  }
  for (auto& b : f.bumps_) b.weight /= total;
  return f;
}

UnknownMap UnknownMap::tabulated(std::vector<double> controls, std::vector<double> values) {
  if (controls.size() != values.size() || controls.size() < 2) {
    throw std::invalid_argument("UnknownMap: table needs at least two matching points");
  }
  if (controls.front() != 0.0 || values.front() != 0.0) {
    throw std::invalid_argument("UnknownMap: table must start at f(0) = 0");
  }
  for (std::size_t i = 1; i < controls.size(); ++i) {
    if (!(controls[i] > controls[i - 1]) || !(values[i] > values[i - 1])) {
      throw std::invalid_argument("UnknownMap: table is not strictly increasing");
    }
  }
  UnknownMap f;
  f.kind_ = "tabulated";
  f.i_m_ = controls.back();
  f.omega_m_ = values.back();
  f.table_x_ = std::move(controls);
  f.table_y_ = std::move(values);
  return f;
}

double UnknownMap::unit(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double y = linear_weight_ * x;
  for (const auto& b : bumps_) y += (1.0 - linear_weight_) * b.weight * smootherstep((x - b.lo) / (b.hi - b.lo));
  return y;
}

double UnknownMap::operator()(double control) const {
  const double a = std::abs(control);
  if (a > i_m_ * (1.0 + 1e-12)) throw std::out_of_range("UnknownMap: control beyond I_m");
  const double sign = control < 0.0 ? -1.0 : 1.0;
  if (a >= i_m_) return sign * omega_m_;
  if (kind_ == "linear") return control;
  if (kind_ == "tabulated") {
    const auto it = std::upper_bound(table_x_.begin(), table_x_.end(), a);
    const std::size_t k = static_cast<std::size_t>(it - table_x_.begin()) - 1;
    const double u = (a - table_x_[k]) / (table_x_[k + 1] - table_x_[k]);
    return sign * (table_y_[k] + u * (table_y_[k + 1] - table_y_[k]));
  }
  return sign * omega_m_ * unit(a / i_m_);
}

double UnknownMap::inverse(double value) const {
  const double a = std::abs(value);
  if (a > omega_m_ * (1.0 + 1e-12)) throw std::out_of_range("UnknownMap: value beyond omega_m");
  const double sign = value < 0.0 ? -1.0 : 1.0;
  if (a >= omega_m_) return sign * i_m_;
  if (a == 0.0) return 0.0;
  if (kind_ == "linear") return value;
  if (kind_ == "tabulated") {
    const auto it = std::upper_bound(table_y_.begin(), table_y_.end(), a);
    const std::size_t k = static_cast<std::size_t>(it - table_y_.begin()) - 1;
    const double u = (a - table_y_[k]) / (table_y_[k + 1] - table_y_[k]);
    return sign * (table_x_[k] + u * (table_x_[k + 1] - table_x_[k]));
  }
  const double y = a / omega_m_;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    (unit(mid) < y ? lo : hi) = mid;
  }
  return sign * i_m_ * 0.5 * (lo + hi);
}

}  // namespace qgate
