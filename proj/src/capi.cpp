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


#include "riskfield/riskfield.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <string>
#include <system_error>
#include <vector>

#include "riskfield/analysis.hpp"
#include "riskfield/dynamics.hpp"
#include "riskfield/error.hpp"
#include "riskfield/exposure.hpp"
#include "riskfield/field.hpp"
#include "riskfield/geometry.hpp"
#include "riskfield/io.hpp"
#include "riskfield/report.hpp"
#include "riskfield/stagemap.hpp"
#include "riskfield/svg.hpp"

struct rf_field {
  riskfield::RiskField value;
};

struct rf_table {
  riskfield::RiskTable value;
};

namespace {

thread_local std::string g_last_error;

rf_status Fail(rf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
rf_status Guard(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return RF_OK;
  } catch (const riskfield::DomainError& e) {
    return Fail(RF_ERR_DOMAIN, e.what());
  } catch (const riskfield::ArityError& e) {
    return Fail(RF_ERR_ARITY, e.what());
  } catch (const riskfield::ParseError& e) {
    return Fail(RF_ERR_PARSE, e.what());
  } catch (const riskfield::ValidationError& e) {
    return Fail(RF_ERR_VALIDATION, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return Fail(RF_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RF_ERR_INTERNAL, "out of memory");
  } catch (const std::invalid_argument& e) {
    return Fail(RF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return Fail(RF_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(RF_ERR_INTERNAL, "unknown error");
  }
}

struct NullArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename T>
void Require(T* p, const char* name) {
  if (p == nullptr) throw NullArgument(std::string(name) + " must not be NULL");
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void Put(char** out, const std::string& s) {
  if (out != nullptr) *out = Dup(s);
}

riskfield::Rectangle ToRect(const rf_domain& d) { return {d.t_min, d.t_max, d.c_min, d.c_max}; }
rf_domain FromRect(const riskfield::Rectangle& d) { return {d.t_min, d.t_max, d.c_min, d.c_max}; }

riskfield::Rectangle DomainOr(const rf_field* field, const rf_domain* domain) {
  const riskfield::Rectangle r = domain ? ToRect(*domain) : field->value.domain();
  r.validate();
  return r;
}

rf_field* NewField(riskfield::RiskField f) { return new rf_field{std::move(f)}; }

std::vector<riskfield::Point> Starts(const double* starts, std::size_t count) {
  if (count > 0) Require(starts, "starts");
  std::vector<riskfield::Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({starts[2 * i], starts[2 * i + 1]});
  return out;
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "1.0.0"; }

const char* rf_status_name(rf_status status) {
  switch (status) {
    case RF_OK: return "ok";
    case RF_ERR_DOMAIN: return "domain error";
    case RF_ERR_ARITY: return "arity error";
    case RF_ERR_PARSE: return "parse error";
    case RF_ERR_VALIDATION: return "validation error";
    case RF_ERR_IO: return "i/o error";
    case RF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rf_last_error(void) { return g_last_error.c_str(); }

void rf_string_free(char* s) { std::free(s); }

rf_domain rf_default_domain(void) { return FromRect(riskfield::kDefaultDomain); }

rf_status rf_total_dose(double concentration, double ingestion_kg, double duration_days,
                        double frequency_per_day, double* out_mg) {
  return Guard([&] {
    Require(out_mg, "out_mg");
    *out_mg = riskfield::exposure::total_dose(concentration, ingestion_kg, duration_days,
                                              frequency_per_day);
  });
}

rf_status rf_average_daily_dose(double total_dose_mg, double body_weight_kg,
                                double life_expectancy_years, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = riskfield::exposure::average_daily_dose(total_dose_mg, body_weight_kg,
                                                   life_expectancy_years);
  });
}

rf_status rf_consumption_limit_kg_per_day(double rfd, double body_weight_kg, double concentration,
                                          double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = riskfield::exposure::consumption_limit_kg_per_day(rfd, body_weight_kg, concentration);
  });
}

rf_status rf_consumption_limit_meals_per_month(double limit_kg_per_day, double portion_mass_kg,
                                               double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = riskfield::exposure::consumption_limit_meals_per_month(limit_kg_per_day,
                                                                  portion_mass_kg);
  });
}

rf_status rf_exposure_factor(double days_per_week, double exposure_years, double averaging_years,
                             double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = riskfield::exposure::exposure_factor(days_per_week, exposure_years, averaging_years);
  });
}

void rf_exposure_profile_default(rf_exposure_profile* profile) {
  if (profile == nullptr) return;
  const riskfield::exposure::ExposureProfile d;
  *profile = {d.concentration_mg_per_kg, d.intake_kg_per_day, d.body_weight_kg,
              d.exposure_days_per_week,  d.exposure_years,    d.averaging_years,
              d.substitution_fraction,   d.reference_dose,    d.life_expectancy_years};
}

rf_status rf_exposure(const rf_exposure_profile* p, double* out) {
  return Guard([&] {
    Require(p, "profile");
    Require(out, "out");
    riskfield::exposure::ExposureProfile e;
    e.concentration_mg_per_kg = p->concentration_mg_per_kg;
    e.intake_kg_per_day = p->intake_kg_per_day;
    e.body_weight_kg = p->body_weight_kg;
    e.exposure_days_per_week = p->exposure_days_per_week;
    e.exposure_years = p->exposure_years;
    e.averaging_years = p->averaging_years;
    e.substitution_fraction = p->substitution_fraction;
    e.reference_dose = p->reference_dose;
    e.life_expectancy_years = p->life_expectancy_years;
    *out = riskfield::exposure::exposure(e);
  });
}

rf_status rf_risk_coefficient(double exposure, double rfd, double* out_coefficient,
                              int* out_acceptable) {
  return Guard([&] {
    const auto v = riskfield::exposure::risk_coefficient(exposure, rfd);
    if (out_coefficient) *out_coefficient = v.risk_coefficient;
    if (out_acceptable) *out_acceptable = v.acceptable ? 1 : 0;
  });
}

rf_status rf_assess_profiles(const char* profiles_text, char** out_json, char** out_csv) {
  return Guard([&] {
    const auto profiles = profiles_text ? riskfield::parse_profiles(profiles_text)
                                        : riskfield::builtin_profiles();
    std::vector<riskfield::ExposureAssessment> rows;
    for (const auto& p : profiles) rows.push_back(riskfield::assess(p));
    Put(out_json, riskfield::exposure_report(rows).dump(2) + "\n");
    Put(out_csv, riskfield::exposure_csv(rows));
  });
}

rf_status rf_builtin_profiles_csv(char** out_csv) {
  return Guard([&] {
    Require(out_csv, "out_csv");
    *out_csv = Dup(riskfield::profiles_to_csv(riskfield::builtin_profiles()));
  });
}

rf_status rf_stage_to_age(double stage, double* out_years) {
  return Guard([&] {
    Require(out_years, "out_years");
    *out_years = riskfield::StageMap{}.stage_to_age(stage);
  });
}

rf_status rf_age_to_stage(double age_years, double* out_stage) {
  return Guard([&] {
    Require(out_stage, "out_stage");
    *out_stage = riskfield::StageMap{}.age_to_stage(age_years);
  });
}

rf_status rf_field_create(const double* a, size_t a_len, const double* b, size_t b_len,
                          const rf_domain* domain, rf_field** out) {
  return Guard([&] {
    Require(out, "out");
    if (a_len > 0) Require(a, "a");
    if (b_len > 0) Require(b, "b");
    const riskfield::Rectangle d = domain ? ToRect(*domain) : riskfield::kDefaultDomain;
    d.validate();
    *out = NewField(riskfield::RiskField(riskfield::Polynomial(std::vector<double>(a, a + a_len)),
                                         riskfield::Polynomial(std::vector<double>(b, b + b_len)),
                                         d));
  });
}

rf_status rf_field_builtin(rf_field** out) {
  return Guard([&] {
    Require(out, "out");
    *out = NewField(riskfield::builtin_field());
  });
}

rf_status rf_field_from_json(const char* json_text, rf_field** out) {
  return Guard([&] {
    Require(json_text, "json_text");
    Require(out, "out");
    riskfield::json j;
    try {
      j = riskfield::json::parse(json_text);
    } catch (const riskfield::json::parse_error& e) {
      throw riskfield::ParseError(std::string("invalid JSON: ") + e.what());
    }
    *out = NewField(riskfield::field_from_json(j));
  });
}

rf_status rf_field_with_domain(const rf_field* field, const rf_domain* domain, rf_field** out) {
  return Guard([&] {
    Require(field, "field");
    Require(domain, "domain");
    Require(out, "out");
    const riskfield::Rectangle d = ToRect(*domain);
    d.validate();
    *out = NewField(field->value.with_domain(d));
  });
}

void rf_field_free(rf_field* field) { delete field; }

rf_status rf_field_to_json(const rf_field* field, char** out_json) {
  return Guard([&] {
    Require(field, "field");
    Require(out_json, "out_json");
    *out_json = Dup(riskfield::field_to_json(field->value).dump(2) + "\n");
  });
}

rf_status rf_field_domain(const rf_field* field, rf_domain* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    *out = FromRect(field->value.domain());
  });
}

rf_status rf_field_eval(const rf_field* field, double t, double c, double* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    *out = field->value(t, c);
  });
}

rf_status rf_field_gradient(const rf_field* field, double t, double c, double* out_dt,
                            double* out_dc) {
  return Guard([&] {
    Require(field, "field");
    const riskfield::Gradient g = field->value.gradient(t, c);
    if (out_dt) *out_dt = g.dt;
    if (out_dc) *out_dc = g.dc;
  });
}

rf_status rf_table_builtin(rf_table** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new rf_table{riskfield::builtin_table()};
  });
}

rf_status rf_table_parse(const char* text, rf_table** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = new rf_table{riskfield::parse_table(text)};
  });
}

rf_status rf_table_load(const char* path, rf_table** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    std::string text;
    try {
      text = riskfield::read_file(path);
    } catch (const std::runtime_error& e) {
      throw std::filesystem::filesystem_error(e.what(), std::make_error_code(std::errc::io_error));
    }
    *out = new rf_table{riskfield::parse_table(text)};
  });
}

void rf_table_free(rf_table* table) { delete table; }

rf_status rf_table_build_field(const rf_table* table, const rf_domain* domain, rf_field** out) {
  return Guard([&] {
    Require(table, "table");
    Require(out, "out");
    const riskfield::Rectangle d = domain ? ToRect(*domain) : riskfield::kDefaultDomain;
    d.validate();
    *out = NewField(riskfield::build_field(table->value, d));
  });
}

rf_status rf_table_fit_report(const rf_table* table, const rf_domain* domain,
                              int include_reference, char** out_json) {
  return Guard([&] {
    Require(table, "table");
    Require(out_json, "out_json");
    const riskfield::Rectangle d = domain ? ToRect(*domain) : riskfield::kDefaultDomain;
    d.validate();
    const riskfield::RiskField field = riskfield::build_field(table->value, d);
    std::vector<riskfield::Polynomial> reference;
    if (include_reference) {
      if (table->value.concentrations.size() != riskfield::kBuiltinConcentrations.size()) {
        throw riskfield::ArityError("reference interpolants need a three-concentration table");
      }
      const auto ref = riskfield::builtin_interpolants();
      reference.assign(ref.begin(), ref.end());
    }
    const riskfield::json report =
        riskfield::fit_report(table->value, field, include_reference ? &reference : nullptr);
    *out_json = Dup(report.dump(2) + "\n");
  });
}

rf_status rf_field_from_reference_interpolants(rf_field** out) {
  return Guard([&] {
    Require(out, "out");
    const auto ref = riskfield::builtin_interpolants();
    *out = NewField(riskfield::field_from_polynomials(riskfield::kBuiltinConcentrations, ref));
  });
}

rf_status rf_mean_risk(const rf_field* field, const rf_domain* domain, double* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    *out = riskfield::mean_risk(field->value, DomainOr(field, domain));
  });
}

rf_status rf_risk_region_area(const rf_field* field, const rf_domain* domain, double threshold,
                              uint64_t seed, double* out_area, double* out_standard_error) {
  return Guard([&] {
    Require(field, "field");
    riskfield::MonteCarloOptions mc;
    mc.seed = seed;
    const auto r = riskfield::risk_region_area(field->value, DomainOr(field, domain), threshold, mc);
    if (out_area) *out_area = r.area;
    if (out_standard_error) *out_standard_error = r.standard_error;
  });
}

rf_status rf_risk_probability(const rf_field* field, const rf_domain* domain, double threshold,
                              uint64_t seed, double* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    riskfield::MonteCarloOptions mc;
    mc.seed = seed;
    *out = riskfield::risk_probability(field->value, DomainOr(field, domain), threshold, mc);
  });
}

rf_status rf_monte_carlo_area(const rf_field* field, const rf_domain* domain, double threshold,
                              uint64_t samples, uint64_t seed, double* out_area,
                              double* out_standard_error) {
  return Guard([&] {
    Require(field, "field");
    const auto r = riskfield::monte_carlo_region_area(field->value, DomainOr(field, domain),
                                                      threshold, {samples, seed});
    if (out_area) *out_area = r.area;
    if (out_standard_error) *out_standard_error = r.standard_error;
  });
}

rf_status rf_certify_no_critical_points(const rf_field* field, int* out_has_critical,
                                        double* out_min_dRdc, double* out_min_at) {
  return Guard([&] {
    Require(field, "field");
    const auto cert = riskfield::certify_no_critical_points(field->value);
    if (out_has_critical) *out_has_critical = cert.has_critical_points ? 1 : 0;
    if (out_min_dRdc) *out_min_dRdc = cert.min_dRdc;
    if (out_min_at) *out_min_at = cert.min_dRdc_at;
  });
}

rf_status rf_analysis_options_default(const rf_field* field, rf_analysis_options* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    static const double kLevels[] = {0.5, 1.0, 2.0, 5.0, 10.0};
    const riskfield::MonteCarloOptions mc;
    *out = {FromRect(field->value.domain()), 1.0, kLevels, std::size(kLevels), 256,
            mc.samples, mc.seed, 1};
  });
}

rf_status rf_analysis_report(const rf_field* field, const rf_analysis_options* options,
                             char** out_json) {
  return Guard([&] {
    Require(field, "field");
    Require(options, "options");
    Require(out_json, "out_json");
    if (options->level_count > 0) Require(options->levels, "options->levels");
    riskfield::AnalysisOptions o;
    o.domain = ToRect(options->domain);
    o.threshold = options->threshold;
    o.levels.assign(options->levels, options->levels + options->level_count);
    o.grid = {options->grid, options->grid};
    o.monte_carlo = {options->monte_carlo_samples, options->seed};
    o.include_polylines = options->include_polylines != 0;
    *out_json = Dup(riskfield::analysis_report(field->value, o).dump(2) + "\n");
  });
}

rf_status rf_gaussian_curvature(const rf_field* field, double t, double c, double* out) {
  return Guard([&] {
    Require(field, "field");
    Require(out, "out");
    *out = riskfield::gaussian_curvature(field->value, t, c);
  });
}

rf_status rf_critical_ages(const rf_field* field, double search_min, double search_max,
                           double* out_stages, double* out_ages, int* out_extrapolated,
                           size_t capacity, size_t* out_count) {
  return Guard([&] {
    Require(field, "field");
    const auto report =
        riskfield::critical_ages(field->value, riskfield::StageMap{}, search_min, search_max);
    const auto& loci = report.zero_loci;
    for (std::size_t i = 0; i < loci.size() && i < capacity; ++i) {
      if (out_stages) out_stages[i] = loci[i].t;
      if (out_ages) out_ages[i] = loci[i].age_years;
      if (out_extrapolated) out_extrapolated[i] = loci[i].extrapolated ? 1 : 0;
    }
    if (out_count) *out_count = loci.size();
  });
}

rf_status rf_certify_hadamard(const rf_field* field, int* out_is_hadamard,
                              double* out_max_curvature) {
  return Guard([&] {
    Require(field, "field");
    const auto report = riskfield::certify_hadamard(field->value, field->value.domain());
    if (out_is_hadamard) *out_is_hadamard = report.is_hadamard ? 1 : 0;
    if (out_max_curvature) *out_max_curvature = report.max_curvature;
  });
}

rf_status rf_geometry_report(const rf_field* field, double search_min, double search_max,
                             char** out_json) {
  return Guard([&] {
    Require(field, "field");
    Require(out_json, "out_json");
    const auto report =
        riskfield::critical_ages(field->value, riskfield::StageMap{}, search_min, search_max);
    *out_json = Dup(riskfield::geometry_report(report).dump(2) + "\n");
  });
}

rf_status rf_flow(const rf_field* field, double t0, double c0, double step, size_t max_steps,
                  char** out_csv, rf_exit_reason* out_reason, size_t* out_samples,
                  int* out_monotone, int* out_no_recurrence) {
  return Guard([&] {
    Require(field, "field");
    const auto traj = riskfield::flow(field->value, {t0, c0}, step, max_steps);
    Put(out_csv, riskfield::trajectory_csv(traj));
    if (out_reason) *out_reason = static_cast<rf_exit_reason>(traj.exit_reason);
    if (out_samples) *out_samples = traj.samples.size();
    if (out_monotone) {
      bool monotone = true;
      for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        monotone = monotone && traj.samples[i].risk > traj.samples[i - 1].risk;
      }
      *out_monotone = monotone ? 1 : 0;
    }
    if (out_no_recurrence) {
      *out_no_recurrence = riskfield::check_no_recurrence(traj, 10.0 * step) ? 1 : 0;
    }
  });
}

rf_status rf_flow_batch(const rf_field* field, const double* starts, size_t start_count,
                        double step, size_t max_steps, char** out_json, char** out_csv) {
  return Guard([&] {
    Require(field, "field");
    std::vector<riskfield::FlowTrajectory> trajectories;
    riskfield::json summary = riskfield::json::array();
    for (const riskfield::Point& p : Starts(starts, start_count)) {
      trajectories.push_back(riskfield::flow(field->value, p, step, max_steps));
      summary.push_back(riskfield::trajectory_to_json(trajectories.back()));
    }
    Put(out_json, riskfield::json{{"step", step}, {"max_steps", max_steps},
                                  {"trajectories", summary}}
                          .dump(2) +
                      "\n");
    Put(out_csv, riskfield::trajectories_csv(trajectories));
  });
}

rf_status rf_contour_svg(const rf_field* field, const rf_domain* domain, const double* levels,
                         size_t level_count, double threshold, int grid, char** out_svg) {
  return Guard([&] {
    Require(field, "field");
    Require(out_svg, "out_svg");
    if (level_count > 0) Require(levels, "levels");
    const riskfield::Rectangle d = DomainOr(field, domain);
    *out_svg = Dup(riskfield::contour_svg(field->value.with_domain(d), d,
                                          std::vector<double>(levels, levels + level_count),
                                          threshold, {grid, grid}));
  });
}

rf_status rf_flow_svg(const rf_field* field, const rf_domain* domain, const double* starts,
                      size_t start_count, double step, size_t max_steps, int arrows_per_axis,
                      char** out_svg) {
  return Guard([&] {
    Require(field, "field");
    Require(out_svg, "out_svg");
    const riskfield::Rectangle d = DomainOr(field, domain);
    const riskfield::RiskField f = field->value.with_domain(d);
    std::vector<riskfield::FlowTrajectory> trajectories;
    for (const riskfield::Point& p : Starts(starts, start_count)) {
      trajectories.push_back(riskfield::flow(f, p, step, max_steps));
    }
    *out_svg = Dup(riskfield::flow_svg(f, d, trajectories, arrows_per_axis));
  });
}

rf_status rf_curvature_svg(const rf_field* field, double search_min, double search_max,
                           char** out_svg) {
  return Guard([&] {
    Require(field, "field");
    Require(out_svg, "out_svg");
    const auto report =
        riskfield::critical_ages(field->value, riskfield::StageMap{}, search_min, search_max);
    *out_svg = Dup(riskfield::curvature_svg(field->value, report));
  });
}

}  // extern "C"
