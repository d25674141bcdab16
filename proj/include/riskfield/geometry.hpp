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

// Gaussian curvature of the risk surface (t, c, R(t, c)) and its zero set.

#ifndef RISKFIELD_GEOMETRY_HPP
#define RISKFIELD_GEOMETRY_HPP

#include <vector>

#include "riskfield/field.hpp"
#include "riskfield/stagemap.hpp"

namespace riskfield {

/// K = (R_tt R_cc - R_tc^2) / (1 + R_t^2 + R_c^2)^2 for the graph surface.
double gaussian_curvature(const RiskField& field, double t, double c);

/// d^2R/dt dc for an affine field: a'(t), the polynomial whose square is
/// the curvature numerator up to sign.
Polynomial mixed_partial(const RiskField& field);

struct ZeroLocus {
  double t;
  double age_years;
  /// Outside the field's stage range; the age comes from extending the
  /// last stage-map segment.
  bool extrapolated;
};

struct CurvatureReport {
  double max_curvature = 0.0;
  Point max_at{};
  std::vector<ZeroLocus> zero_loci;
  bool is_hadamard = false;
  /// Mixed partial identically zero: the curvature vanishes everywhere.
  bool degenerate = false;
  double search_min = 0.0;
  double search_max = 0.0;
};

/// Supremum of K over the domain and the nonpositivity verdict. For affine
/// fields K = -a'(t)^2 / (1 + |grad R|^2)^2, so the supremum is 0 exactly
/// when a' has a root in [t_min, t_max]; otherwise it is attained on
/// c = c_min or c = c_max, where |grad R| is largest for fixed t, and is
/// located by dense sampling plus golden-section refinement. Non-affine
/// fields are scanned on a grid and refined by compass search.
CurvatureReport certify_hadamard(const RiskField& field, const Rectangle& domain);

inline constexpr double kCriticalAgeSearchMin = 1.0;
inline constexpr double kCriticalAgeSearchMax = 6.0;

/// Zero-curvature stages: the real roots of a'(t) on [search_min,
/// search_max], mapped to ages through `stages` and flagged when outside
/// the field's domain. Also carries the certify_hadamard verdict on the
/// field's domain. Requires an affine field.
CurvatureReport critical_ages(const RiskField& field, const StageMap& stages = StageMap{},
                              double search_min = kCriticalAgeSearchMin,
                              double search_max = kCriticalAgeSearchMax);

}  // namespace riskfield

#endif  // RISKFIELD_GEOMETRY_HPP
