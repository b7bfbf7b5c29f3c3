// Copyright 2026 The schoolchoice Authors
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

#include "boxplot.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace schoolchoice::cli {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 70;
constexpr double kRight = 150;  // room for the legend
constexpr double kTop = 50;
constexpr double kBottom = 70;
constexpr const char* kColors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                   "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

double Quantile(const std::vector<double>& sorted, double q) {
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

BoxStats ComputeBoxStats(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("box plot needs at least one value");
  std::sort(values.begin(), values.end());
  BoxStats b;
  b.count = values.size();
  b.median = Quantile(values, 0.5);
  b.q1 = Quantile(values, 0.25);
  b.q3 = Quantile(values, 0.75);
  const double iqr = b.q3 - b.q1;
  const double low_fence = b.q1 - 1.5 * iqr;
  const double high_fence = b.q3 + 1.5 * iqr;
  b.whisker_low = b.q1;
  b.whisker_high = b.q3;
  for (double v : values) {
    if (v < low_fence || v > high_fence) {
      b.outliers.push_back(v);
      continue;
    }
    b.whisker_low = std::min(b.whisker_low, v);
    b.whisker_high = std::max(b.whisker_high, v);
  }
  return b;
}

std::string RenderBoxPlotSvg(const BoxPlotData& data) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto y_of = [&](double v) { return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0)); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" "
         "height=\"500\" font-family=\"sans-serif\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<text x=\"" + Fmt(kWidth / 2) + "\" y=\"28\" font-size=\"16\" text-anchor=\"middle\">" +
         Escape(data.title) + "</text>\n";

  // Axes and grid.
  for (int t = 0; t <= 5; ++t) {
    double v = t / 5.0;
    double y = y_of(v);
    svg += "<line x1=\"" + Fmt(kLeft) + "\" y1=\"" + Fmt(y) + "\" x2=\"" + Fmt(kLeft + plot_w) +
           "\" y2=\"" + Fmt(y) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + Fmt(kLeft - 8) + "\" y=\"" + Fmt(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + Fmt(v) + "</text>\n";
  }
  svg += "<line x1=\"" + Fmt(kLeft) + "\" y1=\"" + Fmt(kTop) + "\" x2=\"" + Fmt(kLeft) + "\" y2=\"" +
         Fmt(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + Fmt(kLeft) + "\" y1=\"" + Fmt(kTop + plot_h) + "\" x2=\"" +
         Fmt(kLeft + plot_w) + "\" y2=\"" + Fmt(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"18\" y=\"" + Fmt(kTop + plot_h / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         Fmt(kTop + plot_h / 2) + ")\">" + Escape(data.y_label) + "</text>\n";

  const std::size_t groups = std::max<std::size_t>(1, data.groups.size());
  const std::size_t series = std::max<std::size_t>(1, data.series.size());
  const double group_w = plot_w / static_cast<double>(groups);
  const double slot_w = group_w * 0.8 / static_cast<double>(series);
  const double box_w = slot_w * 0.6;

  for (std::size_t g = 0; g < data.groups.size(); ++g) {
    const double gx = kLeft + group_w * static_cast<double>(g);
    svg += "<text x=\"" + Fmt(gx + group_w / 2) + "\" y=\"" + Fmt(kTop + plot_h + 22) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + Escape(data.groups[g]) + "</text>\n";
    for (std::size_t s = 0; s < data.series.size(); ++s) {
      if (g >= data.values.size() || s >= data.values[g].size() || data.values[g][s].empty()) continue;
      const BoxStats b = ComputeBoxStats(data.values[g][s]);
      const std::string color = kColors[s % std::size(kColors)];
      const double cx = gx + group_w * 0.1 + slot_w * (static_cast<double>(s) + 0.5);
      const double x0 = cx - box_w / 2;
      svg += "<g>\n";
      // Whiskers.
      svg += "<line x1=\"" + Fmt(cx) + "\" y1=\"" + Fmt(y_of(b.whisker_low)) + "\" x2=\"" + Fmt(cx) +
             "\" y2=\"" + Fmt(y_of(b.q1)) + "\" stroke=\"black\"/>\n";
      svg += "<line x1=\"" + Fmt(cx) + "\" y1=\"" + Fmt(y_of(b.q3)) + "\" x2=\"" + Fmt(cx) +
             "\" y2=\"" + Fmt(y_of(b.whisker_high)) + "\" stroke=\"black\"/>\n";
      for (double w : {b.whisker_low, b.whisker_high}) {
        svg += "<line x1=\"" + Fmt(cx - box_w / 4) + "\" y1=\"" + Fmt(y_of(w)) + "\" x2=\"" +
               Fmt(cx + box_w / 4) + "\" y2=\"" + Fmt(y_of(w)) + "\" stroke=\"black\"/>\n";
      }
      // Box and median.
      svg += "<rect x=\"" + Fmt(x0) + "\" y=\"" + Fmt(y_of(b.q3)) + "\" width=\"" + Fmt(box_w) +
             "\" height=\"" + Fmt(std::max(0.5, y_of(b.q1) - y_of(b.q3))) + "\" fill=\"" + color +
             "\" fill-opacity=\"0.6\" stroke=\"black\"/>\n";
      svg += "<line x1=\"" + Fmt(x0) + "\" y1=\"" + Fmt(y_of(b.median)) + "\" x2=\"" +
             Fmt(x0 + box_w) + "\" y2=\"" + Fmt(y_of(b.median)) +
             "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      for (double o : b.outliers) {
        svg += "<circle cx=\"" + Fmt(cx) + "\" cy=\"" + Fmt(y_of(o)) + "\" r=\"2\" fill=\"none\" stroke=\"" +
               color + "\"/>\n";
      }
      svg += "<text x=\"" + Fmt(cx) + "\" y=\"" + Fmt(kTop + plot_h + 40) +
             "\" font-size=\"9\" text-anchor=\"middle\">" + Fmt(b.median) + "</text>\n";
      svg += "</g>\n";
    }
  }

  // Legend.
  for (std::size_t s = 0; s < data.series.size(); ++s) {
    const double y = kTop + 20 * static_cast<double>(s);
    const double x = kWidth - kRight + 20;
    svg += "<rect x=\"" + Fmt(x) + "\" y=\"" + Fmt(y) + "\" width=\"12\" height=\"12\" fill=\"" +
           kColors[s % std::size(kColors)] + "\" fill-opacity=\"0.6\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + Fmt(x + 18) + "\" y=\"" + Fmt(y + 10) + "\" font-size=\"12\">" +
           Escape(data.series[s]) + "</text>\n";
  }
  svg += "<text x=\"" + Fmt(kWidth - kRight + 20) + "\" y=\"" + Fmt(kTop + plot_h + 40) +
         "\" font-size=\"9\">medians</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace schoolchoice::cli
