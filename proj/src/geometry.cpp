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

#include "riskfield/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "riskfield/error.hpp"

namespace riskfield {

double gaussian_curvature(const RiskField& field, double t, double c) {
  const Gradient g = field.gradient(t, c);
  const SecondPartials h = field.second_partials(t, c);
  const double metric = 1.0 + g.dt * g.dt + g.dc * g.dc;
  return (h.tt * h.cc - h.tc * h.tc) / (metric * metric);
}

Polynomial mixed_partial(const RiskField& field) {
  if (!field.is_affine_in_c()) throw DomainError("mixed partial polynomial needs an affine field");
  return field.slope().derivative();
}

namespace {

double AgeOf(const StageMap& stages, double t) {
  return t >= stages.first_stage() ? stages.stage_to_age(t)
                                   : std::numeric_limits<double>::quiet_NaN();
}

constexpr double kGolden = 0.6180339887498949;

// Maximise f on [lo, hi]: dense scan, then golden section around the best
// sample. Adequate for the smooth, few-extremum profiles handled here.
Extremum MaximiseLine(const std::function<double(double)>& f, double lo, double hi) {
  constexpr int kSamples = 4000;
  Extremum best{f(lo), lo};
  for (int i = 1; i <= kSamples; ++i) {
    const double x = lo + (hi - lo) * i / kSamples;
    const double v = f(x);
    if (v > best.value) best = {v, x};
  }
  const double cell = (hi - lo) / kSamples;
  double a = std::max(lo, best.at - cell);
  double b = std::min(hi, best.at + cell);
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  const double v = f(x);
  return v > best.value ? Extremum{v, x} : best;
}

CurvatureReport HadamardAffine(const RiskField& field, const Rectangle& d) {
  CurvatureReport report;
  report.search_min = d.t_min;
  report.search_max = d.t_max;
  const Polynomial mixed = field.slope().derivative();
  if (mixed.is_zero()) {
    report.degenerate = true;
    report.max_curvature = 0.0;
    report.max_at = {d.t_min, d.c_min};
    report.is_hadamard = true;
    return report;
  }
  const auto roots = real_roots(mixed, d.t_min, d.t_max);
  if (!roots.empty()) {
    report.max_curvature = 0.0;
    report.max_at = {roots.front(), d.c_min};
  } else {
    // For fixed t, R_t is affine in c, so 1 + |grad R|^2 is convex in c and
    // -N(t) / (.)^2 peaks on one of the two horizontal edges.
    report.max_curvature = -std::numeric_limits<double>::infinity();
    for (double c : {d.c_min, d.c_max}) {
      const Extremum e =
          MaximiseLine([&](double t) { return gaussian_curvature(field, t, c); }, d.t_min, d.t_max);
      if (e.value > report.max_curvature) {
        report.max_curvature = e.value;
        report.max_at = {e.at, c};
      }
    }
  }
  const StageMap stages;
  for (double t : roots) {
    report.zero_loci.push_back({t, AgeOf(stages, t), false});
  }
  report.is_hadamard = report.max_curvature <= 0.0;
  return report;
}

CurvatureReport HadamardGeneral(const RiskField& field, const Rectangle& d) {
  CurvatureReport report;
  report.search_min = d.t_min;
  report.search_max = d.t_max;
  constexpr int kGrid = 200;
  const double ht = (d.t_max - d.t_min) / kGrid;
  const double hc = (d.c_max - d.c_min) / kGrid;
  Point best{d.t_min, d.c_min};
  double best_val = gaussian_curvature(field, best.t, best.c);
  for (int i = 0; i <= kGrid; ++i) {
    for (int j = 0; j <= kGrid; ++j) {
      const Point p{d.t_min + i * ht, d.c_min + j * hc};
      const double v = gaussian_curvature(field, p.t, p.c);
      if (v > best_val) {
        best_val = v;
        best = p;
      }
    }
  }
  // Compass search inside the domain from the best grid node.
  double st = ht, sc = hc;
  while (st > 1e-12 || sc > 1e-12) {
    bool moved = false;
    const Point trial[4] = {{best.t + st, best.c}, {best.t - st, best.c},
                            {best.t, best.c + sc}, {best.t, best.c - sc}};
    for (const Point& p : trial) {
      if (!d.contains(p)) continue;
      const double v = gaussian_curvature(field, p.t, p.c);
      if (v > best_val) {
        best_val = v;
        best = p;
        moved = true;
      }
    }
    if (!moved) {
      st *= 0.5;
      sc *= 0.5;
    }
  }
  report.max_curvature = best_val;
  report.max_at = best;
  report.is_hadamard = best_val <= 0.0;
  return report;
}

}  // namespace

CurvatureReport certify_hadamard(const RiskField& field, const Rectangle& domain) {
  domain.validate();
  return field.is_affine_in_c() ? HadamardAffine(field, domain) : HadamardGeneral(field, domain);
}

CurvatureReport critical_ages(const RiskField& field, const StageMap& stages, double search_min,
                              double search_max) {
  if (!field.is_affine_in_c()) {
    throw DomainError("critical ages are defined for fields affine in c");
  }
  if (!(search_min < search_max)) throw DomainError("critical-age search interval is empty");
  CurvatureReport report = certify_hadamard(field, field.domain());
  report.search_min = search_min;
  report.search_max = search_max;
  report.zero_loci.clear();
  if (report.degenerate) return report;

  const Rectangle& d = field.domain();
  for (double t : real_roots(mixed_partial(field), search_min, search_max)) {
    const bool outside = t < d.t_min || t > d.t_max;
    report.zero_loci.push_back({t, AgeOf(stages, t), outside});
  }
  return report;
}

}  // namespace riskfield
