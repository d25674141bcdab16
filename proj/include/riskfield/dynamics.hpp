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

#ifndef RISKFIELD_DYNAMICS_HPP
#define RISKFIELD_DYNAMICS_HPP

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "riskfield/field.hpp"

namespace riskfield {

struct FlowSample {
  double tau;
  double t;
  double c;
  /// R(t, c); NaN for trajectories of fields without a potential.
  double risk;
};

enum class ExitReason { kLeftDomain, kMaxSteps, kStepUnderflow };

std::string_view to_string(ExitReason reason);

struct FlowTrajectory {
  std::vector<FlowSample> samples;
  ExitReason exit_reason = ExitReason::kMaxSteps;
};

using VectorField = std::function<Gradient(double t, double c)>;

/// Speeds below this are treated as an equilibrium.
inline constexpr double kVelocityUnderflow = 1e-14;

/// Fixed-step classical RK4 for x' = grad R(x), started inside the field's
/// domain. Stops when a step leaves the domain (the final sample is clipped
/// to the boundary by bisection along that step), after `max_steps` steps,
/// or when the velocity underflows.
FlowTrajectory flow(const RiskField& field, Point start, double step = 1e-3,
                    std::size_t max_steps = 1'000'000);

/// Same integrator for an arbitrary planar vector field on `domain`.
FlowTrajectory flow(const VectorField& velocity, const Rectangle& domain, Point start, double step,
                    std::size_t max_steps);

/// Discrete closed-orbit witness. Returns false if some later sample comes
/// back within `radius` of an earlier sample after having left that radius.
bool check_no_recurrence(const FlowTrajectory& trajectory, double radius);

}  // namespace riskfield

#endif  // RISKFIELD_DYNAMICS_HPP
