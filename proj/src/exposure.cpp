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

#include "riskfield/exposure.hpp"

#include <cmath>

#include "riskfield/error.hpp"

namespace riskfield::exposure {
namespace {

void RequireNonNegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be a finite value >= 0");
  }
}

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be a finite value > 0");
  }
}

}  // namespace

double total_dose(double concentration, double ingestion, double duration_days,
                  double frequency_per_day) {
  RequireNonNegative(concentration, "concentration");
  RequireNonNegative(ingestion, "ingestion");
  RequireNonNegative(duration_days, "duration");
  RequireNonNegative(frequency_per_day, "frequency");
  return concentration * ingestion * duration_days * frequency_per_day;
}

double average_daily_dose(double total_dose_mg, double body_weight_kg, double life_expectancy_years) {
  RequireNonNegative(total_dose_mg, "total_dose");
  RequirePositive(body_weight_kg, "body_weight");
  RequirePositive(life_expectancy_years, "life_expectancy");
  return total_dose_mg / (body_weight_kg * life_expectancy_years * kDaysPerYear);
}

double consumption_limit_kg_per_day(double reference_dose, double body_weight_kg,
                                    double concentration) {
  RequireNonNegative(reference_dose, "reference_dose");
  RequireNonNegative(body_weight_kg, "body_weight");
  RequirePositive(concentration, "concentration");
  return reference_dose * body_weight_kg / concentration;
}

double consumption_limit_meals_per_month(double limit_kg_per_day, double portion_mass_kg) {
  RequireNonNegative(limit_kg_per_day, "consumption_limit");
  RequirePositive(portion_mass_kg, "portion_mass");
  return limit_kg_per_day * kDaysPerMonth / portion_mass_kg;
}

double exposure_factor(double days_per_week, double exposure_years, double averaging_years) {
  if (!(days_per_week >= 0.0 && days_per_week <= 7.0)) {
    throw DomainError("days_per_week must lie in [0, 7]");
  }
  RequireNonNegative(exposure_years, "exposure_years");
  RequirePositive(averaging_years, "averaging_years");
  return days_per_week * kWeeksPerYear * exposure_years /
         (averaging_years * kExposureFactorDaysPerYear);
}

std::string first_violation(const ExposureProfile& p) {
  auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  auto pos = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!nonneg(p.concentration_mg_per_kg)) return "concentration_mg_per_kg must be >= 0";
  if (!nonneg(p.intake_kg_per_day)) return "intake must be >= 0";
  if (!pos(p.body_weight_kg)) return "body_weight_kg must be > 0";
  if (!(p.exposure_days_per_week >= 0.0 && p.exposure_days_per_week <= 7.0)) {
    return "days_per_week must lie in [0, 7]";
  }
  if (!nonneg(p.exposure_years)) return "exposure_years must be >= 0";
  if (!pos(p.averaging_years)) return "averaging_years must be > 0";
  if (!(p.substitution_fraction >= 0.0 && p.substitution_fraction <= 1.0)) {
    return "substitution_fraction must lie in [0, 1]";
  }
  if (!pos(p.reference_dose)) return "rfd must be > 0";
  if (!pos(p.life_expectancy_years)) return "life_expectancy_years must be > 0";
  return {};
}

void validate(const ExposureProfile& profile) {
  if (auto v = first_violation(profile); !v.empty()) throw DomainError(v);
}

double exposure(const ExposureProfile& profile) {
  validate(profile);
  const double intake = profile.intake_kg_per_day * profile.substitution_fraction;
  const double fe = exposure_factor(profile.exposure_days_per_week, profile.exposure_years,
                                    profile.averaging_years);
  return profile.concentration_mg_per_kg * intake * fe / profile.body_weight_kg;
}

RiskVerdict risk_coefficient(double exposure_mg_per_kg_day, double reference_dose) {
  RequireNonNegative(exposure_mg_per_kg_day, "exposure");
  RequirePositive(reference_dose, "reference_dose");
  const double rc = exposure_mg_per_kg_day / reference_dose;
  return {rc, rc < 1.0};
}

}  // namespace riskfield::exposure
