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
#include <regex>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qgate/harness.hpp"

namespace qgate {
namespace {

SweepConfig small_fig2a() {
  auto cfg = parse_sweep_config(R"({"gates": ["phase", "cnot"], "grid": {"min": 30, "max": 300, "points": 3},
                                    "abstract": {"steps": 8}})",
                                "fig2a");
  return cfg;
}

TEST(GridTest, LogLinearAndExplicit) {
  const auto log = Grid{true, 1e2, 1e4, 3, {}}.values();
  ASSERT_EQ(log.size(), 3u);
  EXPECT_DOUBLE_EQ(log[0], 1e2);
  EXPECT_NEAR(log[1], 1e3, 1e-9);
  EXPECT_DOUBLE_EQ(log[2], 1e4);
  const auto lin = Grid{false, 1.0, 3.0, 3, {}}.values();
  EXPECT_DOUBLE_EQ(lin[1], 2.0);
  EXPECT_EQ((Grid{true, 5.0, 5.0, 1, {}}.values()), (std::vector<double>{5.0}));
  EXPECT_EQ((Grid{true, 0, 0, 0, {1.0, 4.0}}.values()), (std::vector<double>{1.0, 4.0}));
  EXPECT_THROW((Grid{true, 0, 0, 0, {4.0, 1.0}}.values()), ConfigError);
  EXPECT_THROW((Grid{true, 1.0, 2.0, 0, {}}.values()), ConfigError);
  EXPECT_THROW((Grid{true, -1.0, 2.0, 3, {}}.values()), ConfigError);
}

TEST(ConfigTest, DefaultsWhenEmpty) {
  const auto cfg = parse_sweep_config("", "fig2b");
  EXPECT_EQ(cfg.experiment, "fig2b");
  EXPECT_EQ(cfg.n_values, (std::vector<int>{1, 3, 5}));
  EXPECT_DOUBLE_EQ(cfg.lattice.resolved_omega_m(), 2.5e-4);
  EXPECT_DOUBLE_EQ(cfg.abstract.T, 300.0);
  EXPECT_EQ(cfg.workers, 1);
}

TEST(ConfigTest, RejectsUnknownKeysAtEveryLevel) {
  for (const char* text : {R"({"sed": 1})", R"({"grid": {"pts": 3}})", R"({"abstract": {"omega": 1}})",
                           R"({"lattice": {"jm": 0.05}})", R"({"abstract": {"ramps": {"shape": "linear", "x": 1}}})",
                           R"({"lattice": {"ramps": {"blend": 0.1}}})"}) {
    EXPECT_THROW(parse_sweep_config(text, "fig2a"), ConfigError) << text;
  }
}

TEST(ConfigTest, RejectsMalformedValues) {
  for (const char* text : {R"({"grid": {"min": 30,)", R"({"seed": "one"})", R"({"workers": 0})",
                           R"({"gates": ["toffoli"]})", R"({"lattice": {"route": "exact"}})",
                           R"({"abstract": {"theta": 7.0}})", R"({"grid": {"scale": "cubic"}})", R"([1, 2])",
                           R"({"n_values": [0]})"}) {
    EXPECT_THROW(parse_sweep_config(text, "fig2a"), ConfigError) << text;
  }
  EXPECT_THROW(parse_sweep_config(R"({"experiment": "fig2b"})", "fig2a"), ConfigError);
  EXPECT_THROW(parse_sweep_config("", "fig9"), ConfigError);
}

TEST(ConfigTest, EchoRoundTrips) {
  auto cfg = parse_sweep_config(R"({"seed": 17, "count": 4, "lattice": {"route": "full", "omega_m": 1e-3},
                                    "abstract": {"ramps": {"shape": "smoothstep", "allocation": "equal"}},
                                    "grid": {"values": [1, 2, 5]}})",
                                "robustness");
  const auto again = parse_sweep_config(config_to_json(cfg), "robustness");
  EXPECT_EQ(config_to_json(again), config_to_json(cfg));
  EXPECT_EQ(again.seed, 17u);
  EXPECT_EQ(again.lattice.route, LatticeRoute::Full);
  EXPECT_EQ(again.abstract.ramps.shape, RampShape::Smoothstep);
  EXPECT_EQ(again.grid->values(), (std::vector<double>{1.0, 2.0, 5.0}));
}

TEST(CsvTest, FormatHeaderDigitsAndLineEndings) {
  SweepResult r;
  r.records.push_back({"a", 30.0, 1.0 / 3.0, 0.0, 0.0, 0.0, 0.0, "ok"});
  r.records.push_back({"a", 1e5, 2.5e-7, 1e-12, 12.25, 0.0, 0.0, "ok"});
  const std::string csv = format_csv(r);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "swept,error,leakage,wall_ms");
  const std::regex field(R"(-?\d\.\d{11}e[+-]\d{2,3})");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) EXPECT_TRUE(std::regex_match(f, field)) << f;
  }
  EXPECT_EQ(rows, 2);
  EXPECT_NE(csv.find("3.33333333333e-01"), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');
}

TEST(CsvTest, ParseRoundTrip) {
  SweepResult r;
  r.records.push_back({"a", 123.456, 7.5e-5, 0.0, 0.0, 0.0, 0.0, "ok"});
  const auto rows = parse_csv(format_csv(r));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].swept, 123.456, 1e-9);
  EXPECT_NEAR(rows[0].error, 7.5e-5, 1e-16);
  EXPECT_THROW(parse_csv("x,y\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("swept,error,leakage,wall_ms\n1,2\n"), std::invalid_argument);
}

TEST(SweepTest, DeterministicAcrossRunsAndWorkers) {
  auto cfg = small_fig2a();
  const std::string a = format_csv(run_sweep(cfg));
  const std::string b = format_csv(run_sweep(cfg));
  cfg.workers = 3;
  const std::string c = format_csv(run_sweep(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(SweepTest, Fig2aOrderAndTrend) {
  const auto res = run_sweep(small_fig2a());
  ASSERT_EQ(res.records.size(), 6u);
  EXPECT_EQ(res.records[0].series, "phase");
  EXPECT_EQ(res.records[3].series, "cnot");
  EXPECT_DOUBLE_EQ(res.records[0].swept, 30.0);
  EXPECT_GT(res.records[3].error, res.records[5].error);
  for (const auto& r : res.records) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_LT(r.max_unitarity_defect, 1e-9);
    EXPECT_EQ(r.wall_ms, 0.0);
  }
}

TEST(SweepTest, RobustnessSeedsChangeMaps) {
  auto cfg = parse_sweep_config(R"({"gates": ["cnot"], "count": 3, "seed": 5})", "robustness");
  const auto a = run_sweep(cfg);
  ASSERT_EQ(a.records.size(), 3u);
  EXPECT_NE(a.records[0].error, a.records[1].error);
  cfg.seed = 6;
  EXPECT_NE(format_csv(run_sweep(cfg)), format_csv(a));
}

TEST(SweepTest, Fig2dCountAndBalancedCaseMatchesFig2b) {
  auto d = parse_sweep_config(R"({"grid": {"values": [1000]}, "n_values": [1]})", "fig2d");
  auto b = parse_sweep_config(R"({"grid": {"values": [1000]}, "n_values": [1]})", "fig2b");
  const auto rd = run_sweep(d);
  const auto rb = run_sweep(b);
  ASSERT_EQ(rd.records.size(), 3u);
  ASSERT_EQ(rb.records.size(), 1u);
  EXPECT_EQ(rd.records[0].error, rb.records[0].error);
  for (const auto& r : rd.records) EXPECT_LT(std::abs(std::log10(r.error / rb.records[0].error)), 1.0);
}

TEST(SweepTest, Fig2cRejectsTwoQubitGate) {
  const auto cfg = parse_sweep_config(R"({"gates": ["cnot"], "grid": {"values": [100]}})", "fig2c");
  EXPECT_THROW(run_sweep(cfg), ConfigError);
  auto threaded = cfg;
  threaded.workers = 2;
  EXPECT_THROW(run_sweep(threaded), ConfigError);
}

TEST(SvgTest, OnePathPerSeriesAndFloor) {
  SweepResult r;
  r.records.push_back({"phase", 30.0, 1e-3, 0.0, 0.0, 0.0, 0.0, "ok"});
  r.records.push_back({"phase", 300.0, 0.0, 0.0, 0.0, 0.0, 0.0, "ok"});
  r.records.push_back({"cnot", 30.0, 1e-2, 0.0, 0.0, 0.0, 0.0, "ok"});
  r.records.push_back({"cnot", 300.0, 1e-5, 0.0, 0.0, 0.0, 0.0, "ok"});
  const std::string svg = render_svg_string(r);
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.find("<svg") != std::string::npos, true);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t paths = 0;
  for (std::size_t p = svg.find("<path"); p != std::string::npos; p = svg.find("<path", p + 1)) ++paths;
  EXPECT_EQ(paths, 2u);
  EXPECT_NE(svg.find("phase"), std::string::npos);
  EXPECT_NE(svg.find("1e-16"), std::string::npos);
  EXPECT_EQ(svg, render_svg_string(r));
}

TEST(OutputTest, UnwritableDestinationIsConfigError) {
  SweepResult r;
  EXPECT_THROW(write_csv(r, "/nonexistent_dir/out.csv"), ConfigError);
  EXPECT_THROW(render_svg(r, "/nonexistent_dir/out.svg"), ConfigError);
}

}  // namespace
}  // namespace qgate
