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

#include "riskfield/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskfield/error.hpp"

namespace riskfield {

std::string_view to_string(ExitReason reason) {
  switch (reason) {
    case ExitReason::kLeftDomain: return "left_domain";
    case ExitReason::kMaxSteps: return "max_steps";
    case ExitReason::kStepUnderflow: return "step_underflow";
  }
  return "unknown";
}

namespace {

Point Rk4Step(const VectorField& v, Point x, double h) {
  const Gradient k1 = v(x.t, x.c);
  const Gradient k2 = v(x.t + 0.5 * h * k1.dt, x.c + 0.5 * h * k1.dc);
  const Gradient k3 = v(x.t + 0.5 * h * k2.dt, x.c + 0.5 * h * k2.dc);
  const Gradient k4 = v(x.t + h * k3.dt, x.c + h * k3.dc);
  return {x.t + h / 6.0 * (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt),
          x.c + h / 6.0 * (k1.dc + 2.0 * k2.dc + 2.0 * k3.dc + k4.dc)};
}

Point Clamp(Point p, const Rectangle& d) {
  return {std::clamp(p.t, d.t_min, d.t_max), std::clamp(p.c, d.c_min, d.c_max)};
}

FlowTrajectory Integrate(const VectorField& velocity, const Rectangle& domain, Point start,
                         double step, std::size_t max_steps,
                         const std::function<double(Point)>& potential) {
  domain.validate();
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("flow step must be positive");
  if (!domain.contains(start)) throw DomainError("flow start lies outside the domain");

  FlowTrajectory out;
  out.samples.push_back({0.0, start.t, start.c, potential(start)});
  Point x = start;
  double tau = 0.0;
  for (std::size_t n = 0; n < max_steps; ++n) {
    const Gradient v = velocity(x.t, x.c);
    if (std::hypot(v.dt, v.dc) < kVelocityUnderflow) {
      out.exit_reason = ExitReason::kStepUnderflow;
      return out;
    }
    const Point next = Rk4Step(velocity, x, step);
    if (domain.contains(next)) {
      x = next;
      tau += step;
      out.samples.push_back({tau, x.t, x.c, potential(x)});
      continue;
    }
    // Largest sub-step along this RK4 segment that stays inside.
    double inside = 0.0, outside = step;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (inside + outside);
      if (domain.contains(Rk4Step(velocity, x, mid))) inside = mid;
      else outside = mid;
    }
    const Point edge = Clamp(Rk4Step(velocity, x, outside), domain);
    const double r_edge = potential(edge);
    const double r_prev = out.samples.back().risk;
    // Skip a clip that does not move the state, e.g. when already on the boundary.
    if (outside > 0.0 && (std::isnan(r_edge) || r_edge > r_prev)) {
      out.samples.push_back({tau + outside, edge.t, edge.c, r_edge});
    }
    out.exit_reason = ExitReason::kLeftDomain;
    return out;
  }
  out.exit_reason = ExitReason::kMaxSteps;
  return out;
}

}  // namespace

FlowTrajectory flow(const RiskField& field, Point start, double step, std::size_t max_steps) {
  const VectorField gradient = [&field](double t, double c) { return field.gradient(t, c); };
  return Integrate(gradient, field.domain(), start, step, max_steps,
                   [&field](Point p) { return field(p.t, p.c); });
}

FlowTrajectory flow(const VectorField& velocity, const Rectangle& domain, Point start, double step,
                    std::size_t max_steps) {
  return Integrate(velocity, domain, start, step, max_steps,
                   [](Point) { return std::numeric_limits<double>::quiet_NaN(); });
}

bool check_no_recurrence(const FlowTrajectory& trajectory, double radius) {
  const auto& s = trajectory.samples;
  const double r2 = radius * radius;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool left = false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dt = s[j].t - s[i].t;
      const double dc = s[j].c - s[i].c;
      const double d2 = dt * dt + dc * dc;
      if (!left) {
        left = d2 > r2;
      } else if (d2 <= r2) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace riskfield
