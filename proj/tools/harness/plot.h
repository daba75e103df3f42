// Copyright 2026 The ifom Authors
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

// Minimal deterministic SVG output: log-scale trace plots with envelope
// overlays, line plots for sweeps and rho heatmaps for scans.

#ifndef IFOM_TOOLS_HARNESS_PLOT_H_
#define IFOM_TOOLS_HARNESS_PLOT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifom::harness {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

// Log10 y axis; non-positive and non-finite points break the line.
std::string LogPlot(const std::string& title, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<Series>& series);

// Linear axes.
std::string LinePlot(const std::string& title, const std::string& x_label,
                     const std::string& y_label,
                     const std::vector<Series>& series);

// rho[i][j] over alpha_grid[i] (vertical) and step_grid[j] (horizontal, log
// scale). Cells are blue where rho < 1, red where rho > 1, grey when
// undefined; the rho = 1 boundary is drawn as a contour and the threshold,
// if any, as a horizontal line.
std::string Heatmap(const std::string& title,
                    const std::vector<double>& alpha_grid,
                    const std::vector<double>& step_grid,
                    const std::vector<std::vector<double>>& rho,
                    std::optional<double> threshold);

// Throws IoError when the file cannot be written.
void WriteFile(const std::string& path, const std::string& content);

}  // namespace ifom::harness

#endif  // IFOM_TOOLS_HARNESS_PLOT_H_
