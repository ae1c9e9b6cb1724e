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
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qgate/harness.hpp"

namespace qgate {

namespace {

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace

std::string format_csv(const SweepResult& result) {
  std::string s = "swept,error,leakage,wall_ms\n";
  for (const auto& r : result.records) {
    s += sci(r.swept) + "," + sci(r.error) + "," + sci(r.leakage) + "," + sci(r.wall_ms) + "\n";
  }
  return s;
}

void write_csv(const SweepResult& result, const std::string& destination) {
  write_file(destination, format_csv(result));
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "swept,error,leakage,wall_ms") {
    throw std::invalid_argument("parse_csv: unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CsvRow r{};
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r.swept, &r.error, &r.leakage, &r.wall_ms) != 4) {
      throw std::invalid_argument("parse_csv: malformed row '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

std::string render_svg_string(const SweepResult& result) {
  // Series split where the swept value restarts, so the plot only uses what the CSV shows.
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Series> series;
  bool floored = false;
  constexpr double kFloor = 1e-16;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    if (series.empty() || r.swept <= series.back().pts.back().first) series.push_back({r.series, {}});
    double e = r.error;
    if (!(e > 0.0)) {
      e = kFloor;
      floored = true;
    }
    series.back().pts.emplace_back(r.swept, std::max(e, kFloor));
  }

  const double W = 640, H = 440, left = 80, right = 170, top = 30, bottom = 60;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  bool xlog = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.pts) {
      if (!(x > 0.0)) xlog = false;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  auto fx = [&](double x) { return xlog ? std::log10(x) : x; };
  double x0 = series.empty() ? 0.0 : fx(xmin), x1 = series.empty() ? 1.0 : fx(xmax);
  double y0 = series.empty() ? -16.0 : std::floor(std::log10(ymin)), y1 = series.empty() ? 0.0 : std::ceil(std::log10(ymax));
  if (xlog) {
    x0 = std::floor(x0);
    x1 = std::ceil(x1);
  }
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  const double pw = W - left - right, ph = H - top - bottom;
  auto px = [&](double x) { return left + (fx(x) - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (y1 - std::log10(y)) / (y1 - y0) * ph; };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << " " << H << "\">\n";
  o << "<!-- " << result.experiment << ", qgate " << result.tool_version << " -->\n";
  if (floored) o << "<!-- symlog fallback: nonpositive errors drawn at the 1e-16 floor -->\n";
  if (!xlog) o << "<!-- linear x axis: nonpositive swept values -->\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int ystep = std::max(1, static_cast<int>(std::ceil((y1 - y0) / 8.0)));
  for (int k = static_cast<int>(y0); k <= static_cast<int>(y1); k += ystep) {
    const double y = top + (y1 - k) / (y1 - y0) * ph;
    o << "<line x1=\"" << left - 4 << "\" y1=\"" << num(y) << "\" x2=\"" << left << "\" y2=\"" << num(y)
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << left - 8 << "\" y=\"" << num(y + 4) << "\" font-size=\"11\" text-anchor=\"end\">1e"
      << k << "</text>\n";
  }
  if (xlog) {
    for (int k = static_cast<int>(x0); k <= static_cast<int>(x1); ++k) {
      const double x = left + (k - x0) / (x1 - x0) * pw;
      o << "<line x1=\"" << num(x) << "\" y1=\"" << top + ph << "\" x2=\"" << num(x) << "\" y2=\"" << top + ph + 4
        << "\" stroke=\"black\"/>\n";
      o << "<text x=\"" << num(x) << "\" y=\"" << top + ph + 18 << "\" font-size=\"11\" text-anchor=\"middle\">1e"
        << k << "</text>\n";
    }
  }
  o << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 15 << "\" font-size=\"12\" text-anchor=\"middle\">swept</text>\n";
  o << "<text x=\"18\" y=\"" << top + ph / 2 << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << top + ph / 2 << ")\">gate error 1-F</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* c = colors[s % 8];
    const auto& pts = series[s].pts;
    if (pts.size() > 1) {
      o << "<path fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" d=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        o << (i == 0 ? "M" : " L") << num(px(pts[i].first)) << "," << num(py(pts[i].second));
      }
      o << "\"/>\n";
    }
    for (const auto& [x, y] : pts) {
      o << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\"" << c << "\"/>\n";
    }
    const double ly = top + 14.0 + 16.0 * static_cast<double>(s);
    o << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << num(ly) << "\" x2=\"" << left + pw + 28 << "\" y2=\""
      << num(ly) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << left + pw + 32 << "\" y=\"" << num(ly + 4) << "\" font-size=\"11\">" << series[s].label
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void render_svg(const SweepResult& result, const std::string& destination) {
  write_file(destination, render_svg_string(result));
}

}  // namespace qgate
