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


// Self-contained SVG plots: contour/region map, flow portrait and the
// reduced curvature profile.

#ifndef RISKFIELD_SVG_HPP
#define RISKFIELD_SVG_HPP

#include <string>
#include <vector>

#include "riskfield/analysis.hpp"
#include "riskfield/dynamics.hpp"
#include "riskfield/geometry.hpp"
#include "riskfield/stagemap.hpp"

namespace riskfield {

/// Level curves over the domain with {R >= threshold} shaded. The t axis
/// carries a second row of age labels from `stages`.
std::string contour_svg(const RiskField& field, const Rectangle& domain,
                        const std::vector<double>& levels, double threshold, GridSpec grid = {},
                        const StageMap& stages = StageMap{});

/// Normalized gradient arrows on an `arrows_per_axis` lattice plus the
/// given trajectories.
std::string flow_svg(const RiskField& field, const Rectangle& domain,
                     const std::vector<FlowTrajectory>& trajectories, int arrows_per_axis = 15);

/// k(t) = -(d2R/dt dc)^2 over the report's search interval with the zero
/// loci marked and labelled by age. Requires an affine field.
std::string curvature_svg(const RiskField& field, const CurvatureReport& report);

}  // namespace riskfield

#endif  // RISKFIELD_SVG_HPP
