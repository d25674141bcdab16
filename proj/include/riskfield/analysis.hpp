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

#ifndef RISKFIELD_ANALYSIS_HPP
#define RISKFIELD_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riskfield/field.hpp"

namespace riskfield {

/// Evidence that the gradient of R does (not) vanish on the domain.
///
/// For fields affine in c, dR/dc = a(t) depends on t alone, so every
/// critical point sits on a real root t* of a(t) with c solving
/// c a'(t*) + b'(t*) = 0. When a(t) has no root on [t_min, t_max] the field
/// is regular on the whole rectangle.
struct CriticalPointCertificate {
  bool has_critical_points = false;
  /// min of dR/dc over t in [t_min, t_max] (affine fields).
  double min_dRdc = 0.0;
  double min_dRdc_at = 0.0;
  /// Roots of dR/dc on the t-range.
  std::vector<double> dRdc_roots;
  /// Isolated critical points found inside the domain.
  std::vector<Point> critical_points;
  /// Stages at which a whole vertical segment {t*} x [c_min, c_max] is critical.
  std::vector<double> critical_lines;
  bool every_point_critical = false;
  std::string method;
};

CriticalPointCertificate certify_no_critical_points(const RiskField& field);

/// (1/area) * double integral of R, from polynomial antiderivatives.
double mean_risk(const RiskField& field, const Rectangle& domain);

/// Double integral of R over the domain, closed form.
double integral(const RiskField& field, const Rectangle& domain);

struct RegionArea {
  double area = 0.0;
  /// Zero for the exact 1-D reduction; Monte Carlo standard error otherwise.
  double standard_error = 0.0;
  std::string method;
};

struct MonteCarloOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
};

/// Area of {(t,c) in domain : R(t,c) >= threshold}. Affine fields reduce to
/// a 1-D integral of the clamped level-set width: the t-range is cut at the
/// roots of R(t, c_min) - threshold and R(t, c_max) - threshold, and each
/// piece is either full, empty or crossed once, so the width is smooth there
/// and adaptive Simpson converges. This holds even where dR/dc changes sign.
/// Non-affine fields get a seeded Monte Carlo estimate with its standard
/// error.
RegionArea risk_region_area(const RiskField& field, const Rectangle& domain,
                            double threshold = 1.0, const MonteCarloOptions& fallback = {});

/// Area(R >= threshold) / Area(domain).
double risk_probability(const RiskField& field, const Rectangle& domain, double threshold = 1.0,
                        const MonteCarloOptions& fallback = {});

/// Plain hit-or-miss estimate of the region area. Deterministic for a
/// given seed: samples are drawn in a fixed order from mt19937_64.
RegionArea monte_carlo_region_area(const RiskField& field, const Rectangle& domain,
                                   double threshold, const MonteCarloOptions& options);

/// Adaptive Simpson on [lo, hi] to absolute tolerance `tolerance`.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tolerance, int max_depth = 50);

struct LevelCurveSet {
  double level = 0.0;
  std::vector<std::vector<Point>> polylines;
};

struct GridSpec {
  int cells_t = 256;
  int cells_c = 256;
};

/// Marching-squares iso-lines. Vertices are interpolated linearly along cell
/// edges; saddle cells are resolved by the cell-centre value. Requires at
/// least 16 cells per axis.
std::vector<LevelCurveSet> level_curves(const RiskField& field, const Rectangle& domain,
                                        const std::vector<double>& levels, GridSpec grid = {});

/// Area of the marching-squares polygons of {R >= level}, i.e. the region
/// the level curves enclose together with the domain boundary.
double level_region_area(const RiskField& field, const Rectangle& domain, double level,
                         GridSpec grid = {});

}  // namespace riskfield

#endif  // RISKFIELD_ANALYSIS_HPP
