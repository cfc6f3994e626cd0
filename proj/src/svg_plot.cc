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

#include "minimax_dsac/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace minimax_dsac {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finalize() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(Range x, Range y) : x_(x), y_(y) {}

  double X(double v) const { return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * PlotWidth(); }
  double Y(double v) const {
    return kTop + (1.0 - (v - y_.lo) / (y_.hi - y_.lo)) * PlotHeight();
  }
  static double PlotWidth() { return kWidth - kLeft - kRight; }
  static double PlotHeight() { return kHeight - kTop - kBottom; }

  void Frame(std::ostringstream& os, const std::string& title, const std::string& x_label,
             const std::string& y_label, bool x_ticks) const {
    os << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << PlotWidth()
       << "' height='" << PlotHeight() << "' fill='none' stroke='black'/>\n";
    os << "<text x='" << kWidth / 2 << "' y='" << kTop / 2 + 5
       << "' text-anchor='middle' font-size='16'>" << Escape(title) << "</text>\n";
    os << "<text x='" << kLeft + PlotWidth() / 2 << "' y='" << kHeight - 10
       << "' text-anchor='middle' font-size='13'>" << Escape(x_label) << "</text>\n";
    os << "<text x='15' y='" << kTop + PlotHeight() / 2
       << "' text-anchor='middle' font-size='13' transform='rotate(-90 15 "
       << kTop + PlotHeight() / 2 << ")'>" << Escape(y_label) << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
      const double v = y_.lo + (y_.hi - y_.lo) * i / 4.0;
      os << "<text x='" << kLeft - 5 << "' y='" << Y(v) + 4
         << "' text-anchor='end' font-size='11'>" << Tick(v) << "</text>\n";
      if (x_ticks) {
        const double xv = x_.lo + (x_.hi - x_.lo) * i / 4.0;
        os << "<text x='" << X(xv) << "' y='" << kTop + PlotHeight() + 15
           << "' text-anchor='middle' font-size='11'>" << Tick(xv) << "</text>\n";
      }
    }
  }

 private:
  static std::string Tick(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
  }
  Range x_;
  Range y_;
};

std::string Header() {
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
     << "' font-family='sans-serif'>\n<rect width='100%' height='100%' fill='white'/>\n";
  return os.str();
}

double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

BoxStats ComputeBoxStats(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("box plot of an empty group");
  std::sort(values.begin(), values.end());
  BoxStats b;
  b.q1 = Quantile(values, 0.25);
  b.median = Quantile(values, 0.5);
  b.q3 = Quantile(values, 0.75);
  const double iqr = b.q3 - b.q1;
  b.whisker_low = b.q1;
  b.whisker_high = b.q3;
  for (double v : values) {
    if (v >= b.q1 - 1.5 * iqr) b.whisker_low = std::min(b.whisker_low, v);
    if (v <= b.q3 + 1.5 * iqr) b.whisker_high = std::max(b.whisker_high, v);
  }
  return b;
}

std::string LinePlotSvg(const std::string& title, const std::string& x_label,
                        const std::string& y_label, const std::vector<LineSeries>& series) {
  Range xr, yr;
  for (const LineSeries& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xr.Include(s.x[i]);
      yr.Include(s.y[i]);
      if (!s.lower.empty()) {
        yr.Include(s.lower[i]);
        yr.Include(s.upper[i]);
      }
    }
  }
  xr.Finalize();
  yr.Finalize();
  const Canvas canvas(xr, yr);
  std::ostringstream os;
  os << Header();
  canvas.Frame(os, title, x_label, y_label, true);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const LineSeries& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    if (!s.lower.empty() && !s.x.empty()) {
      os << "<polygon fill='" << color << "' fill-opacity='0.2' stroke='none' points='";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (std::isfinite(s.upper[i])) os << canvas.X(s.x[i]) << ',' << canvas.Y(s.upper[i]) << ' ';
      }
      for (std::size_t i = s.x.size(); i-- > 0;) {
        if (std::isfinite(s.lower[i])) os << canvas.X(s.x[i]) << ',' << canvas.Y(s.lower[i]) << ' ';
      }
      os << "'/>\n";
    }
    os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.8' points='";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isfinite(s.y[i])) os << canvas.X(s.x[i]) << ',' << canvas.Y(s.y[i]) << ' ';
    }
    os << "'/>\n";
    const double ly = kTop + 15 + 18 * static_cast<double>(k);
    os << "<line x1='" << kWidth - kRight + 10 << "' y1='" << ly << "' x2='"
       << kWidth - kRight + 30 << "' y2='" << ly << "' stroke='" << color
       << "' stroke-width='2'/>\n<text x='" << kWidth - kRight + 35 << "' y='" << ly + 4
       << "' font-size='12'>" << Escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string BoxPlotSvg(const std::string& title, const std::string& y_label,
                       const std::vector<BoxGroup>& groups) {
  Range xr{0.0, static_cast<double>(std::max<std::size_t>(groups.size(), 1))};
  Range yr;
  for (const BoxGroup& g : groups) {
    for (double v : g.values) yr.Include(v);
  }
  yr.Finalize();
  const Canvas canvas(xr, yr);
  std::ostringstream os;
  os << Header();
  canvas.Frame(os, title, "", y_label, false);
  const double slot = Canvas::PlotWidth() / std::max<double>(1.0, static_cast<double>(groups.size()));
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const BoxGroup& g = groups[k];
    const double cx = kLeft + slot * (static_cast<double>(k) + 0.5);
    const double half = std::min(30.0, slot * 0.3);
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<text x='" << cx << "' y='" << kTop + Canvas::PlotHeight() + 15
       << "' text-anchor='middle' font-size='11'>" << Escape(g.label) << "</text>\n";
    if (g.values.empty()) continue;
    const BoxStats b = ComputeBoxStats(g.values);
    os << "<line x1='" << cx << "' y1='" << canvas.Y(b.whisker_low) << "' x2='" << cx
       << "' y2='" << canvas.Y(b.whisker_high) << "' stroke='black'/>\n";
    os << "<rect x='" << cx - half << "' y='" << canvas.Y(b.q3) << "' width='" << 2 * half
       << "' height='" << std::max(0.5, canvas.Y(b.q1) - canvas.Y(b.q3)) << "' fill='" << color
       << "' fill-opacity='0.5' stroke='black'/>\n";
    os << "<line x1='" << cx - half << "' y1='" << canvas.Y(b.median) << "' x2='" << cx + half
       << "' y2='" << canvas.Y(b.median) << "' stroke='black' stroke-width='2'/>\n";
    for (double v : g.values) {
      if (v < b.whisker_low || v > b.whisker_high) {
        os << "<circle cx='" << cx << "' cy='" << canvas.Y(v)
           << "' r='2.5' fill='none' stroke='black'/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

void WriteTextFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace minimax_dsac
