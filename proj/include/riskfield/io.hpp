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

// File formats.
//
//   Risk table CSV:  header "concentration,<t_1>,...,<t_n>", then one row per
//                    concentration: "<c>,<R(t_1)>,...,<R(t_n)>".
//   Risk table JSON: {"concentrations": [...], "nodes": [...], "values": [[...], ...]}
//   Field JSON:      {"a": [...], "b": [...], "domain": {"t": [lo, hi], "c": [lo, hi]}}
//                    a and b in ascending powers of t.
//   Profile CSV:     group, age_min, age_max, body_weight_kg, intake_g_per_month,
//                    portions_per_month, concentration_mg_per_kg, rfd,
//                    substitution_fraction [, days_per_week, exposure_years,
//                    averaging_years, life_expectancy_years]
//   Profile JSON:    array of objects with the CSV column names as keys.

#ifndef RISKFIELD_IO_HPP
#define RISKFIELD_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riskfield/exposure.hpp"
#include "riskfield/field.hpp"

namespace riskfield {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

RiskTable parse_table_csv(std::string_view text);
RiskTable parse_table_json(std::string_view text);
/// Dispatches on the first non-blank character: '{' means JSON.
RiskTable parse_table(std::string_view text);
std::string table_to_csv(const RiskTable& table);

json field_to_json(const RiskField& field);
RiskField field_from_json(const json& j);
bool looks_like_field_json(std::string_view text);

/// One survey group at one concentration, in the units people record.
struct SurveyProfile {
  std::string group;
  double age_min = 0.0;
  double age_max = 0.0;
  double body_weight_kg = 0.0;
  double intake_g_per_month = 0.0;
  double portions_per_month = 0.0;
  double concentration_mg_per_kg = 0.0;
  double rfd = exposure::kRfdSensitive;
  double substitution_fraction = exposure::kSharkSubstitutionFraction;
  double days_per_week = 7.0;
  /// Defaults to age_max - age_min when absent.
  double exposure_years = 0.0;
  double averaging_years = 0.0;
  double life_expectancy_years = exposure::kLifeExpectancyYears;
};

/// g/month -> kg/day at 30.44 days/month; everything else passes through.
exposure::ExposureProfile to_exposure_profile(const SurveyProfile& p);

/// Parse and validate. Throws ParseError for malformed syntax and
/// ValidationError listing every offending row and field.
std::vector<SurveyProfile> parse_profiles_csv(std::string_view text);
std::vector<SurveyProfile> parse_profiles_json(std::string_view text);
std::vector<SurveyProfile> parse_profiles(std::string_view text);

/// Age groups at 0.27, 2.43 and 3.33 mg/kg with the exposure-factor inputs
/// that best reproduce the published risk coefficients (see data/).
std::vector<SurveyProfile> builtin_profiles();
std::string profiles_to_csv(const std::vector<SurveyProfile>& profiles);

struct ExposureAssessment {
  std::string group;
  double concentration_mg_per_kg;
  double intake_kg_per_day;
  double exposure_factor;
  double exposure_mg_per_kg_day;
  exposure::RiskVerdict verdict;
  double average_daily_dose;
  double limit_kg_per_day;
  double limit_meals_per_month;
};

ExposureAssessment assess(const SurveyProfile& profile);

}  // namespace riskfield

#endif  // RISKFIELD_IO_HPP
