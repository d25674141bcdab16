// Copyright 2026 The riskfield Authors
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


#include "riskfield/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "riskfield/report.hpp"

namespace riskfield {
namespace {

constexpr double kWidth = 720, kHeight = 540;
constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 80;

std::string F(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", rounded(v, 3));
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Maps data coordinates onto the plot frame.
class Canvas {
 public:
  Canvas(double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
    body_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + F(kWidth) + "\" height=\"" +
            F(kHeight) + "\" viewBox=\"0 0 " + F(kWidth) + ' ' + F(kHeight) +
            "\" font-family=\"sans-serif\" font-size=\"12\">\n"
            "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double X(double x) const { return kLeft + (x - x0_) / (x1_ - x0_) * (kWidth - kLeft - kRight); }
  double Y(double y) const {
    return kHeight - kBottom - (y - y0_) / (y1_ - y0_) * (kHeight - kTop - kBottom);
  }

  void Raw(const std::string& s) { body_ += s; }

  void Line(double xa, double ya, double xb, double yb, const std::string& style) {
    body_ += "<line x1=\"" + F(X(xa)) + "\" y1=\"" + F(Y(ya)) + "\" x2=\"" + F(X(xb)) +
             "\" y2=\"" + F(Y(yb)) + "\" " + style + "/>\n";
  }

  void Polyline(const std::vector<Point>& pts, const std::string& style) {
    if (pts.size() < 2) return;
    body_ += "<polyline fill=\"none\" " + style + " points=\"";
    for (const Point& p : pts) body_ += F(X(p.t)) + ',' + F(Y(p.c)) + ' ';
    body_ += "\"/>\n";
  }

  void Text(double px, double py, const std::string& text, const std::string& attrs = {}) {
    body_ += "<text x=\"" + F(px) + "\" y=\"" + F(py) + "\" " + attrs + '>' + Escape(text) +
             "</text>\n";
  }

  void Frame(const std::string& title, const std::string& x_label, const std::string& y_label,
             int x_ticks, int y_ticks) {
    const double l = X(x0_), r = X(x1_), t = Y(y1_), b = Y(y0_);
    body_ += "<rect x=\"" + F(l) + "\" y=\"" + F(t) + "\" width=\"" + F(r - l) + "\" height=\"" +
             F(b - t) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= x_ticks; ++i) {
      const double v = x0_ + (x1_ - x0_) * i / x_ticks;
      body_ += "<line x1=\"" + F(X(v)) + "\" y1=\"" + F(b) + "\" x2=\"" + F(X(v)) + "\" y2=\"" +
               F(b + 5) + "\" stroke=\"black\"/>\n";
      Text(X(v), b + 18, Tick(v), "text-anchor=\"middle\"");
    }
    for (int i = 0; i <= y_ticks; ++i) {
      const double v = y0_ + (y1_ - y0_) * i / y_ticks;
      body_ += "<line x1=\"" + F(l - 5) + "\" y1=\"" + F(Y(v)) + "\" x2=\"" + F(l) + "\" y2=\"" +
               F(Y(v)) + "\" stroke=\"black\"/>\n";
      Text(l - 8, Y(v) + 4, Tick(v), "text-anchor=\"end\"");
    }
    Text(0.5 * (l + r), 22, title, "text-anchor=\"middle\" font-size=\"15\"");
    Text(0.5 * (l + r), kHeight - 12, x_label, "text-anchor=\"middle\"");
    Text(18, 0.5 * (t + b), y_label,
         "text-anchor=\"middle\" transform=\"rotate(-90 18 " + F(0.5 * (t + b)) + ")\"");
  }

  std::string Finish() { return body_ + "</svg>\n"; }

 private:
  double x0_, x1_, y0_, y1_;
  std::string body_;
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string contour_svg(const RiskField& field, const Rectangle& d,
                        const std::vector<double>& levels, double threshold, GridSpec grid,
                        const StageMap& stages) {
  Canvas canvas(d.t_min, d.t_max, d.c_min, d.c_max);

  // Shade {R >= threshold} on a coarse raster.
  constexpr int kShade = 96;
  const double dt = (d.t_max - d.t_min) / kShade, dc = (d.c_max - d.c_min) / kShade;
  canvas.Raw("<g fill=\"#fde0c5\" stroke=\"none\">\n");
  for (int i = 0; i < kShade; ++i) {
    for (int j = 0; j < kShade; ++j) {
      const double t = d.t_min + (i + 0.5) * dt, c = d.c_min + (j + 0.5) * dc;
      if (field(t, c) < threshold) continue;
      const double x = canvas.X(t - 0.5 * dt), y = canvas.Y(c + 0.5 * dc);
      canvas.Raw("<rect x=\"" + F(x) + "\" y=\"" + F(y) + "\" width=\"" +
                 F(canvas.X(t + 0.5 * dt) - x + 0.3) + "\" height=\"" +
                 F(canvas.Y(c - 0.5 * dc) - y + 0.3) + "\"/>\n");
    }
  }
  canvas.Raw("</g>\n");

  const auto sets = level_curves(field, d, levels, grid);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string color = kPalette[k % std::size(kPalette)];
    const std::string style = "stroke=\"" + color + "\" stroke-width=\"1.6\"";
    for (const auto& line : sets[k].polylines) canvas.Polyline(line, style);
    canvas.Text(kWidth - kRight - 90, kTop + 14 + 16 * static_cast<double>(k),
                "R = " + Tick(sets[k].level), "fill=\"" + color + "\"");
  }

  canvas.Frame("Risk level curves (shaded: R >= " + Tick(threshold) + ")",
               "stage t  /  age (years)", "concentration c (mg/kg)", 8, 6);
  // Secondary age labels beneath the stage ticks.
  for (int i = 0; i <= 8; ++i) {
    const double t = d.t_min + (d.t_max - d.t_min) * i / 8;
    if (t < stages.first_stage()) continue;
    canvas.Text(canvas.X(t), canvas.Y(d.c_min) + 34, Tick(rounded(stages.stage_to_age(t), 1)) + " y",
                "text-anchor=\"middle\" fill=\"#555\"");
  }
  return canvas.Finish();
}

std::string flow_svg(const RiskField& field, const Rectangle& d,
                     const std::vector<FlowTrajectory>& trajectories, int arrows_per_axis) {
  Canvas canvas(d.t_min, d.t_max, d.c_min, d.c_max);
  canvas.Raw(
      "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
      "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#444\"/></marker></defs>\n");
  const int n = std::max(arrows_per_axis, 2);
  const double cell_x = (kWidth - kLeft - kRight) / n;
  const double cell_y = (kHeight - kTop - kBottom) / n;
  const double len = 0.4 * std::min(cell_x, cell_y);
  for (const Point& p : lattice_starts(d, n)) {
    const Gradient g = field.gradient(p.t, p.c);
    // Screen-space direction; SVG y grows downwards.
    const double sx = g.dt * (kWidth - kLeft - kRight) / (d.t_max - d.t_min);
    const double sy = -g.dc * (kHeight - kTop - kBottom) / (d.c_max - d.c_min);
    const double norm = std::hypot(sx, sy);
    if (norm == 0.0) continue;
    const double x = canvas.X(p.t), y = canvas.Y(p.c);
    canvas.Raw("<line x1=\"" + F(x - len * sx / norm) + "\" y1=\"" + F(y - len * sy / norm) +
               "\" x2=\"" + F(x + len * sx / norm) + "\" y2=\"" + F(y + len * sy / norm) +
               "\" stroke=\"#444\" stroke-width=\"1\" marker-end=\"url(#head)\"/>\n");
  }
  for (std::size_t k = 0; k < trajectories.size(); ++k) {
    std::vector<Point> pts;
    for (const FlowSample& s : trajectories[k].samples) pts.push_back({s.t, s.c});
    canvas.Polyline(pts, std::string("stroke=\"") + kPalette[k % std::size(kPalette)] +
                             "\" stroke-width=\"1.8\"");
  }
  canvas.Frame("Gradient flow of R", "stage t", "concentration c (mg/kg)", 8, 6);
  return canvas.Finish();
}

std::string curvature_svg(const RiskField& field, const CurvatureReport& report) {
  const Polynomial mixed = mixed_partial(field);
  const double lo = report.search_min, hi = report.search_max;
  constexpr int kSamples = 600;
  std::vector<Point> pts;  // (t, k(t)) reusing Point's fields
  double k_min = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = lo + (hi - lo) * i / kSamples;
    const double m = mixed(t);
    pts.push_back({t, -m * m});
    k_min = std::min(k_min, -m * m);
  }
  if (k_min == 0.0) k_min = -1.0;
  // Round the axis to a 1-2-5 step so the tick labels are short.
  const double raw = -k_min / 5.0;
  const double decade = std::pow(10.0, std::floor(std::log10(raw)));
  const double step = raw <= decade ? decade : raw <= 2 * decade ? 2 * decade
                                           : raw <= 5 * decade ? 5 * decade : 10 * decade;
  const double y0 = std::floor(k_min / step) * step, y1 = step;
  Canvas canvas(lo, hi, y0, y1);
  canvas.Line(lo, 0.0, hi, 0.0, "stroke=\"#999\" stroke-dasharray=\"4 3\"");
  canvas.Polyline(pts, "stroke=\"#1f77b4\" stroke-width=\"2\"");
  for (std::size_t k = 0; k < report.zero_loci.size(); ++k) {
    const ZeroLocus& z = report.zero_loci[k];
    canvas.Line(z.t, y0, z.t, y1,
                std::string("stroke=\"#d62728\"") +
                    (z.extrapolated ? " stroke-dasharray=\"6 4\"" : ""));
    // Labels in the right half sit left of their line to stay on the canvas.
    const bool right = z.t > 0.5 * (lo + hi);
    canvas.Text(canvas.X(z.t) + (right ? -4 : 4),
                canvas.Y(0.0) + 16 + 14 * static_cast<double>(k % 2),
                "t=" + Tick(rounded(z.t, 2)) + ", " + age_label(z),
                std::string("fill=\"#d62728\"") + (right ? " text-anchor=\"end\"" : ""));
  }
  canvas.Frame("Reduced curvature k(t) = -(d2R/dt dc)^2", "stage t", "k(t)", 10,
               static_cast<int>(std::lround((y1 - y0) / step)));
  return canvas.Finish();
}

}  // namespace riskfield
