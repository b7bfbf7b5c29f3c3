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

// Standalone SVG box plots, grouped by category with one box per series.

#ifndef SCHOOLCHOICE_TOOLS_BOXPLOT_H_
#define SCHOOLCHOICE_TOOLS_BOXPLOT_H_

#include <string>
#include <vector>

namespace schoolchoice::cli {

struct BoxStats {
  double median = 0;
  double q1 = 0;
  double q3 = 0;
  double whisker_low = 0;   // smallest value >= q1 - 1.5 IQR
  double whisker_high = 0;  // largest value <= q3 + 1.5 IQR
  std::vector<double> outliers;
  std::size_t count = 0;
};

// Quartiles by linear interpolation between order statistics. Requires a
// non-empty sample.
BoxStats ComputeBoxStats(std::vector<double> values);

struct BoxPlotData {
  std::string title;
  std::string y_label;
  std::vector<std::string> groups;
  std::vector<std::string> series;
  // values[g][s]; empty cells are skipped.
  std::vector<std::vector<std::vector<double>>> values;
};

// 800x500 viewBox, y axis fixed to [0, 1].
std::string RenderBoxPlotSvg(const BoxPlotData& data);

}  // namespace schoolchoice::cli

#endif  // SCHOOLCHOICE_TOOLS_BOXPLOT_H_
