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

// Dose, consumption-limit, exposure and hazard-quotient arithmetic for
// non-carcinogenic contaminants in fish. Internal units are mg, kg and
// days; conversions from grams and months happen at the ingestion boundary
// (see io.hpp).

#ifndef RISKFIELD_EXPOSURE_HPP
#define RISKFIELD_EXPOSURE_HPP

#include <string>

namespace riskfield::exposure {

/// Reference dose for the developing foetus, children, older adults and men
/// of reproductive age (mg/kg/day).
inline constexpr double kRfdSensitive = 0.0001;
/// Reference dose for the general adult population (mg/kg/day).
inline constexpr double kRfdAdult = 0.0003;

inline constexpr double kDaysPerYear = 365.25;
/// Averaging period used by the meals-per-month limit, 365.25 / 12 rounded.
inline constexpr double kDaysPerMonth = 30.44;
/// The exposure factor uses a 365-day year and 52 weeks.
inline constexpr double kExposureFactorDaysPerYear = 365.0;
inline constexpr double kWeeksPerYear = 52.0;

inline constexpr double kLifeExpectancyYears = 78.0;
/// Mean fraction of retail fish meat found to be shark.
inline constexpr double kSharkSubstitutionFraction = 0.6037;

struct ExposureProfile {
  double concentration_mg_per_kg = 0.0;
  /// Fish intake before substitution, kg/day.
  double intake_kg_per_day = 0.0;
  double body_weight_kg = 0.0;
  double exposure_days_per_week = 7.0;
  double exposure_years = 1.0;
  double averaging_years = 1.0;
  double substitution_fraction = 1.0;
  double reference_dose = kRfdSensitive;
  double life_expectancy_years = kLifeExpectancyYears;
};

struct RiskVerdict {
  double risk_coefficient = 0.0;
  /// True iff risk_coefficient < 1; a quotient of exactly 1 is unacceptable.
  bool acceptable = false;
};

/// mg. concentration (mg/kg) x ingestion (kg/event) x duration (days) x frequency (events/day).
double total_dose(double concentration, double ingestion, double duration_days,
                  double frequency_per_day);

/// mg/kg/day, with the life expectancy converted at 365.25 days/year.
double average_daily_dose(double total_dose_mg, double body_weight_kg, double life_expectancy_years);

/// Maximum allowable consumption, kg/day: RfD * BW / Cm.
double consumption_limit_kg_per_day(double reference_dose, double body_weight_kg,
                                    double concentration);

/// Meals per month for a given portion mass (kg): CR_lim * 30.44 / MS.
double consumption_limit_meals_per_month(double limit_kg_per_day, double portion_mass_kg);

/// Dimensionless: days/week * 52 * exposure years / (averaging years * 365).
double exposure_factor(double days_per_week, double exposure_years, double averaging_years);

/// mg/kg/day: C * TI * FE / BW, with TI scaled by the substitution fraction.
double exposure(const ExposureProfile& profile);

RiskVerdict risk_coefficient(double exposure_mg_per_kg_day, double reference_dose);

/// Throws DomainError naming the first field that violates the profile
/// invariants.
void validate(const ExposureProfile& profile);

/// Empty when valid, otherwise a description of the first violation.
std::string first_violation(const ExposureProfile& profile);

}  // namespace riskfield::exposure

#endif  // RISKFIELD_EXPOSURE_HPP
