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

#ifndef RISKFIELD_STAGEMAP_HPP
#define RISKFIELD_STAGEMAP_HPP

#include <span>
#include <vector>

namespace riskfield {

struct StageKnot {
  double stage;
  double age_years;
};

/// Affine piece s = slope * t + intercept valid from `stage_begin`.
struct StageSegment {
  double stage_begin;
  double stage_end;
  double slope;
  double intercept;
};

/// Piecewise-linear, strictly increasing bijection between the life-stage
/// variable t and biological age s. Beyond the last knot the final segment
/// is extended; below the first knot both directions are undefined.
class StageMap {
 public:
  /// Babies [1,6) -> [1,2), boys [6,12) -> [2,3), men [12,60) -> [3,4),
  /// seniors [60,90] -> [4,5].
  StageMap();
  explicit StageMap(std::vector<StageKnot> knots);

  std::span<const StageKnot> knots() const noexcept { return knots_; }
  std::vector<StageSegment> segments() const;

  double first_stage() const noexcept { return knots_.front().stage; }
  double last_stage() const noexcept { return knots_.back().stage; }

  double stage_to_age(double stage) const;
  double age_to_stage(double age_years) const;

 private:
  std::vector<StageKnot> knots_;
};

}  // namespace riskfield

#endif  // RISKFIELD_STAGEMAP_HPP
