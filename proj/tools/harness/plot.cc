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

#include "harness/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace ifom::harness {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 160;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

// Fixed two-decimal coordinates keep the output byte-stable.
std::string F(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string Label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') {
      out += "&lt;";
    } else if (c == '>') {
      out += "&gt;";
    } else if (c == '&') {
      out += "&amp;";
    } else {
      out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void Add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!(lo <= hi)) {
      lo = 0;
      hi = 1;
    }
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

// Ticks at multiples of a 1/2/5 step covering [lo, hi].
std::vector<double> NiceTicks(double lo, double hi, int target) {
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step;
       t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

class Canvas {
 public:
  Canvas(const std::string& title, Range x, Range y) : x_(x), y_(y) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << F(kWidth)
         << "\" height=\"" << F(kHeight) << "\" viewBox=\"0 0 " << F(kWidth)
         << ' ' << F(kHeight) << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ << "<text x=\"" << F(kWidth / 2) << "\" y=\"24\" "
         << "text-anchor=\"middle\" font-family=\"sans-serif\" "
         << "font-size=\"15\">" << Escape(title) << "</text>\n";
  }

  double X(double v) const {
    return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight);
  }
  double Y(double v) const {
    return kHeight - kBottom -
           (v - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom);
  }

  void Axes(const std::string& x_label, const std::string& y_label,
            const std::vector<double>& x_ticks,
            const std::vector<std::string>& x_names,
            const std::vector<double>& y_ticks,
            const std::vector<std::string>& y_names) {
    const double x0 = kLeft, x1 = kWidth - kRight;
    const double y0 = kHeight - kBottom, y1 = kTop;
    out_ << "<rect x=\"" << F(x0) << "\" y=\"" << F(y1) << "\" width=\""
         << F(x1 - x0) << "\" height=\"" << F(y0 - y1)
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (size_t i = 0; i < x_ticks.size(); ++i) {
      const double x = X(x_ticks[i]);
      out_ << "<line x1=\"" << F(x) << "\" y1=\"" << F(y0) << "\" x2=\""
           << F(x) << "\" y2=\"" << F(y0 + 5) << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << F(x) << "\" y=\"" << F(y0 + 18)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"11\">"
           << Escape(x_names[i]) << "</text>\n";
    }
    for (size_t i = 0; i < y_ticks.size(); ++i) {
      const double y = Y(y_ticks[i]);
      out_ << "<line x1=\"" << F(x0 - 5) << "\" y1=\"" << F(y) << "\" x2=\""
           << F(x0) << "\" y2=\"" << F(y) << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << F(x0 - 8) << "\" y=\"" << F(y + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
              "font-size=\"11\">"
           << Escape(y_names[i]) << "</text>\n";
    }
    out_ << "<text x=\"" << F((x0 + x1) / 2) << "\" y=\"" << F(kHeight - 18)
         << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            "font-size=\"13\">"
         << Escape(x_label) << "</text>\n";
    out_ << "<text transform=\"translate(18 " << F((y0 + y1) / 2)
         << ") rotate(-90)\" text-anchor=\"middle\" "
            "font-family=\"sans-serif\" font-size=\"13\">"
         << Escape(y_label) << "</text>\n";
  }

  void Polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color, bool dashed) {
    if (pts.empty()) return;
    out_ << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\"";
    if (dashed) out_ << " stroke-dasharray=\"6 4\"";
    out_ << " points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ << ' ';
      out_ << F(X(pts[i].first)) << ',' << F(Y(pts[i].second));
    }
    out_ << "\"/>\n";
  }

  void Legend(int index, const std::string& name, const std::string& color,
              bool dashed) {
    const double x = kWidth - kRight + 12, y = kTop + 16 + 18 * index;
    out_ << "<line x1=\"" << F(x) << "\" y1=\"" << F(y) << "\" x2=\""
         << F(x + 24) << "\" y2=\"" << F(y) << "\" stroke=\"" << color
         << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "")
         << "/>\n";
    out_ << "<text x=\"" << F(x + 30) << "\" y=\"" << F(y + 4)
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << Escape(name)
         << "</text>\n";
  }

  std::ostringstream& raw() { return out_; }

  std::string Finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Range x_;
  Range y_;
  std::ostringstream out_;
};

// At most ~2000 vertices per series; the stride depends only on the length.
template <class F>
std::vector<std::vector<std::pair<double, double>>> Segments(const Series& s,
                                                            F transform) {
  std::vector<std::vector<std::pair<double, double>>> segments(1);
  const size_t n = std::min(s.x.size(), s.y.size());
  const size_t stride = std::max<size_t>(1, n / 2000);
  for (size_t i = 0; i < n; ++i) {
    if (i % stride != 0 && i + 1 != n) continue;
    const auto t = transform(s.y[i]);
    if (!t || !std::isfinite(s.x[i])) {
      if (!segments.back().empty()) segments.emplace_back();
      continue;
    }
    segments.back().push_back({s.x[i], *t});
  }
  return segments;
}

std::string Plot(const std::string& title, const std::string& x_label,
                 const std::string& y_label, const std::vector<Series>& series,
                 bool log_y) {
  const auto transform = [log_y](double v) -> std::optional<double> {
    if (!std::isfinite(v)) return std::nullopt;
    if (!log_y) return v;
    if (v <= 0.0) return std::nullopt;
    return std::log10(v);
  };
  Range xr, yr;
  for (const Series& s : series) {
    for (const auto& seg : Segments(s, transform)) {
      for (const auto& [x, y] : seg) {
        xr.Add(x);
        yr.Add(y);
      }
    }
  }
  xr.Finish();
  yr.Finish();
  if (log_y) {
    yr.lo = std::floor(yr.lo);
    yr.hi = std::ceil(yr.hi);
    if (yr.lo == yr.hi) yr.hi += 1;
  }
  Canvas canvas(title, xr, yr);
  const std::vector<double> xt = NiceTicks(xr.lo, xr.hi, 6);
  std::vector<std::string> xn;
  for (double t : xt) xn.push_back(Label(t));
  std::vector<double> yt;
  std::vector<std::string> yn;
  if (log_y) {
    const int span = static_cast<int>(yr.hi - yr.lo);
    const int step = std::max(1, span / 8);
    for (int e = static_cast<int>(yr.lo); e <= static_cast<int>(yr.hi);
         e += step) {
      yt.push_back(e);
      yn.push_back("1e" + std::to_string(e));
    }
  } else {
    yt = NiceTicks(yr.lo, yr.hi, 6);
    for (double t : yt) yn.push_back(Label(t));
  }
  canvas.Axes(x_label, y_label, xt, xn, yt, yn);
  for (size_t i = 0; i < series.size(); ++i) {
    const std::string color = kPalette[i % 8];
    for (const auto& seg : Segments(series[i], transform)) {
      canvas.Polyline(seg, color, series[i].dashed);
    }
    canvas.Legend(static_cast<int>(i), series[i].name, color,
                  series[i].dashed);
  }
  return canvas.Finish();
}

std::string CellColor(double rho) {
  if (!std::isfinite(rho) || rho <= 0.0) {
    return rho == 0.0 ? "#08306b" : "#bdbdbd";
  }
  // Intensity from the per-step log rate on a log scale: |log rho| from 1e-8
  // (pale) to 1 (saturated).
  const double rate = std::abs(std::log(rho));
  const double t =
      rate == 0.0 ? 0.0
                  : std::clamp((std::log10(rate) + 8.0) / 8.0, 0.0, 1.0);
  const int fade = static_cast<int>(std::lround(235 - 200 * t));
  char buf[16];
  if (rho < 1.0) {
    std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);
  } else {
    std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);
  }
  return buf;
}

}  // namespace

std::string LogPlot(const std::string& title, const std::string& x_label,
                    const std::string& y_label,
                    const std::vector<Series>& series) {
  return Plot(title, x_label, y_label, series, true);
}

std::string LinePlot(const std::string& title, const std::string& x_label,
                     const std::string& y_label,
                     const std::vector<Series>& series) {
  return Plot(title, x_label, y_label, series, false);
}

std::string Heatmap(const std::string& title,
                    const std::vector<double>& alpha_grid,
                    const std::vector<double>& step_grid,
                    const std::vector<std::vector<double>>& rho,
                    std::optional<double> threshold) {
  const int na = static_cast<int>(alpha_grid.size());
  const int ne = static_cast<int>(step_grid.size());
  // Cell (i, j) spans [j, j+1] x [i, i+1] in index space.
  Range xr, yr;
  xr.lo = 0;
  xr.hi = std::max(ne, 1);
  yr.lo = 0;
  yr.hi = std::max(na, 1);
  Canvas canvas(title, xr, yr);
  std::vector<double> xt, yt;
  std::vector<std::string> xn, yn;
  const int xs = std::max(1, ne / 6), ys = std::max(1, na / 8);
  for (int j = 0; j < ne; j += xs) {
    xt.push_back(j + 0.5);
    xn.push_back(Label(step_grid[j]));
  }
  for (int i = 0; i < na; i += ys) {
    yt.push_back(i + 0.5);
    yn.push_back(Label(alpha_grid[i]));
  }
  auto& out = canvas.raw();
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < ne; ++j) {
      const double x0 = canvas.X(j), x1 = canvas.X(j + 1);
      const double y0 = canvas.Y(i + 1), y1 = canvas.Y(i);
      out << "<rect x=\"" << F(x0) << "\" y=\"" << F(y0) << "\" width=\""
          << F(x1 - x0) << "\" height=\"" << F(y1 - y0) << "\" fill=\""
          << CellColor(rho[i][j]) << "\"/>\n";
    }
  }
  const auto converges = [&](int i, int j) {
    const double r = rho[i][j];
    return std::isfinite(r) && r < 1.0;
  };
  out << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < ne; ++j) {
      if (j + 1 < ne && converges(i, j) != converges(i, j + 1)) {
        out << "<line x1=\"" << F(canvas.X(j + 1)) << "\" y1=\""
            << F(canvas.Y(i)) << "\" x2=\"" << F(canvas.X(j + 1))
            << "\" y2=\"" << F(canvas.Y(i + 1)) << "\"/>\n";
      }
      if (i + 1 < na && converges(i, j) != converges(i + 1, j)) {
        out << "<line x1=\"" << F(canvas.X(j)) << "\" y1=\""
            << F(canvas.Y(i + 1)) << "\" x2=\"" << F(canvas.X(j + 1))
            << "\" y2=\"" << F(canvas.Y(i + 1)) << "\"/>\n";
      }
    }
  }
  out << "</g>\n";
  canvas.Axes("step eta (log scale)", "noise level alpha", xt, xn, yt, yn);
  if (threshold) {
    const auto it = std::find(alpha_grid.begin(), alpha_grid.end(), *threshold);
    if (it != alpha_grid.end()) {
      const double y = canvas.Y((it - alpha_grid.begin()) + 1);
      out << "<line x1=\"" << F(canvas.X(0)) << "\" y1=\"" << F(y)
          << "\" x2=\"" << F(canvas.X(ne)) << "\" y2=\"" << F(y)
          << "\" stroke=\"#ff7f0e\" stroke-width=\"2\" "
             "stroke-dasharray=\"6 4\"/>\n";
      canvas.Legend(0, "threshold " + Label(*threshold), "#ff7f0e", true);
    }
  }
  canvas.Legend(1, "rho = 1 contour", "black", false);
  return canvas.Finish();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace ifom::harness
