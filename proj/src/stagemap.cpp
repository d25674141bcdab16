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

#include "riskfield/stagemap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riskfield/error.hpp"

namespace riskfield {

StageMap::StageMap() : StageMap({{1, 1}, {2, 6}, {3, 12}, {4, 60}, {5, 90}}) {}

StageMap::StageMap(std::vector<StageKnot> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw DomainError("stage map needs at least two knots");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i].stage) || !std::isfinite(knots_[i].age_years)) {
      throw DomainError("stage map knots must be finite");
    }
    if (i > 0 && !(knots_[i].stage > knots_[i - 1].stage &&
                   knots_[i].age_years > knots_[i - 1].age_years)) {
      throw DomainError("stage map knots must be strictly increasing in stage and age (knot " +
                        std::to_string(i) + ")");
    }
  }
}

std::vector<StageSegment> StageMap::segments() const {
  std::vector<StageSegment> out;
  out.reserve(knots_.size() - 1);
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const auto& a = knots_[i];
    const auto& b = knots_[i + 1];
    const double slope = (b.age_years - a.age_years) / (b.stage - a.stage);
    out.push_back({a.stage, b.stage, slope, a.age_years - slope * a.stage});
  }
  return out;
}

double StageMap::stage_to_age(double stage) const {
  if (!(stage >= knots_.front().stage)) {
    throw DomainError("stage " + std::to_string(stage) + " is below the first knot");
  }
  // Half-open segments [t_i, t_{i+1}); the last one is closed and extended.
  std::size_t i = 0;
  while (i + 2 < knots_.size() && stage >= knots_[i + 1].stage) ++i;
  const auto& a = knots_[i];
  const auto& b = knots_[i + 1];
  const double slope = (b.age_years - a.age_years) / (b.stage - a.stage);
  return a.age_years + slope * (stage - a.stage);
}

double StageMap::age_to_stage(double age_years) const {
  if (!(age_years >= knots_.front().age_years)) {
    throw DomainError("age " + std::to_string(age_years) + " is below the first knot");
  }
  std::size_t i = 0;
  while (i + 2 < knots_.size() && age_years >= knots_[i + 1].age_years) ++i;
  const auto& a = knots_[i];
  const auto& b = knots_[i + 1];
  const double slope = (b.stage - a.stage) / (b.age_years - a.age_years);
  return a.stage + slope * (age_years - a.age_years);
}

}  // namespace riskfield
