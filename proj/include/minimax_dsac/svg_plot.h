// Copyright 2026 The minimax_dsac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINIMAX_DSAC_SVG_PLOT_H_
#define MINIMAX_DSAC_SVG_PLOT_H_

#include <filesystem>
#include <string>
#include <vector>

namespace minimax_dsac {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  // Optional shaded band; same length as x when present.
  std::vector<double> lower;
  std::vector<double> upper;
};

struct BoxGroup {
  std::string label;
  std::vector<double> values;
};

// Five-number summary used for a box: quartiles by linear interpolation,
// whiskers at the most extreme values within 1.5 IQR.
struct BoxStats {
  double whisker_low = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_high = 0.0;
};

BoxStats ComputeBoxStats(std::vector<double> values);

std::string LinePlotSvg(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<LineSeries>& series);
std::string BoxPlotSvg(const std::string& title, const std::string& y_label,
                       const std::vector<BoxGroup>& groups);

void WriteTextFile(const std::filesystem::path& path, const std::string& contents);

}  // namespace minimax_dsac

#endif  // MINIMAX_DSAC_SVG_PLOT_H_
