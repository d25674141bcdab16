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


/* C interface to the riskfield library.
 *
 * Conventions: every fallible call returns rf_status and writes results
 * through out-parameters. On failure rf_last_error() describes the problem
 * (per thread, valid until the next call on that thread). Strings returned
 * through char** are heap-allocated and must be released with
 * rf_string_free(). Handles are opaque and released with their _free call;
 * passing NULL to a _free call is a no-op. */

#ifndef RISKFIELD_RISKFIELD_H
#define RISKFIELD_RISKFIELD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RISKFIELD_BUILDING)
#define RF_API __declspec(dllexport)
#else
#define RF_API __declspec(dllimport)
#endif
#else
#define RF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
  RF_OK = 0,
  RF_ERR_DOMAIN = 1,
  RF_ERR_ARITY = 2,
  RF_ERR_PARSE = 3,
  RF_ERR_VALIDATION = 4,
  RF_ERR_IO = 5,
  RF_ERR_INVALID_ARGUMENT = 6,
  RF_ERR_INTERNAL = 7
} rf_status;

typedef struct rf_field rf_field;
typedef struct rf_table rf_table;

typedef struct rf_domain {
  double t_min;
  double t_max;
  double c_min;
  double c_max;
} rf_domain;

RF_API const char* rf_version(void);
RF_API const char* rf_status_name(rf_status status);
RF_API const char* rf_last_error(void);
RF_API void rf_string_free(char* s);
/* Stages [1,5] x concentrations [0.2,3.5] mg/kg. */
RF_API rf_domain rf_default_domain(void);

/* ---- exposure arithmetic ---- */

RF_API rf_status rf_total_dose(double concentration, double ingestion_kg, double duration_days,
                               double frequency_per_day, double* out_mg);
RF_API rf_status rf_average_daily_dose(double total_dose_mg, double body_weight_kg,
                                       double life_expectancy_years, double* out);
RF_API rf_status rf_consumption_limit_kg_per_day(double rfd, double body_weight_kg,
                                                 double concentration, double* out);
RF_API rf_status rf_consumption_limit_meals_per_month(double limit_kg_per_day,
                                                      double portion_mass_kg, double* out);
RF_API rf_status rf_exposure_factor(double days_per_week, double exposure_years,
                                    double averaging_years, double* out);

typedef struct rf_exposure_profile {
  double concentration_mg_per_kg;
  double intake_kg_per_day;
  double body_weight_kg;
  double exposure_days_per_week;
  double exposure_years;
  double averaging_years;
  double substitution_fraction;
  double reference_dose;
  double life_expectancy_years;
} rf_exposure_profile;

RF_API void rf_exposure_profile_default(rf_exposure_profile* profile);
RF_API rf_status rf_exposure(const rf_exposure_profile* profile, double* out);
RF_API rf_status rf_risk_coefficient(double exposure, double rfd, double* out_coefficient,
                                     int* out_acceptable);

/* Assess survey profiles (CSV or JSON text; NULL uses the built-in survey
 * approximation). Either output pointer may be NULL. */
RF_API rf_status rf_assess_profiles(const char* profiles_text, char** out_json, char** out_csv);
RF_API rf_status rf_builtin_profiles_csv(char** out_csv);

/* ---- stage map ---- */

RF_API rf_status rf_stage_to_age(double stage, double* out_years);
RF_API rf_status rf_age_to_stage(double age_years, double* out_stage);

/* ---- fields ---- */

/* R = a(t) c + b(t); coefficients in ascending powers of t. domain may be
 * NULL for the default. */
RF_API rf_status rf_field_create(const double* a, size_t a_len, const double* b, size_t b_len,
                                 const rf_domain* domain, rf_field** out);
RF_API rf_status rf_field_builtin(rf_field** out);
RF_API rf_status rf_field_from_json(const char* json_text, rf_field** out);
RF_API rf_status rf_field_with_domain(const rf_field* field, const rf_domain* domain,
                                      rf_field** out);
RF_API void rf_field_free(rf_field* field);
RF_API rf_status rf_field_to_json(const rf_field* field, char** out_json);
RF_API rf_status rf_field_domain(const rf_field* field, rf_domain* out);
RF_API rf_status rf_field_eval(const rf_field* field, double t, double c, double* out);
RF_API rf_status rf_field_gradient(const rf_field* field, double t, double c, double* out_dt,
                                   double* out_dc);

/* ---- tables and fitting ---- */

RF_API rf_status rf_table_builtin(rf_table** out);
RF_API rf_status rf_table_parse(const char* text, rf_table** out);
RF_API rf_status rf_table_load(const char* path, rf_table** out);
RF_API void rf_table_free(rf_table* table);
RF_API rf_status rf_table_build_field(const rf_table* table, const rf_domain* domain,
                                      rf_field** out);
/* JSON fit report; with include_reference the built-in published
 * interpolants are regressed alongside (three-row tables only). */
RF_API rf_status rf_table_fit_report(const rf_table* table, const rf_domain* domain,
                                     int include_reference, char** out_json);
/* Field regressed from the built-in published interpolants. */
RF_API rf_status rf_field_from_reference_interpolants(rf_field** out);

/* ---- analysis ---- */

RF_API rf_status rf_mean_risk(const rf_field* field, const rf_domain* domain, double* out);
RF_API rf_status rf_risk_region_area(const rf_field* field, const rf_domain* domain,
                                     double threshold, uint64_t seed, double* out_area,
                                     double* out_standard_error);
RF_API rf_status rf_risk_probability(const rf_field* field, const rf_domain* domain,
                                     double threshold, uint64_t seed, double* out);
RF_API rf_status rf_monte_carlo_area(const rf_field* field, const rf_domain* domain,
                                     double threshold, uint64_t samples, uint64_t seed,
                                     double* out_area, double* out_standard_error);
RF_API rf_status rf_certify_no_critical_points(const rf_field* field, int* out_has_critical,
                                               double* out_min_dRdc, double* out_min_at);

typedef struct rf_analysis_options {
  rf_domain domain;
  double threshold;
  const double* levels;
  size_t level_count;
  int grid;
  uint64_t monte_carlo_samples;
  uint64_t seed;
  int include_polylines;
} rf_analysis_options;

/* Field's own domain, threshold 1, levels {0.5,1,2,5,10}, 256 grid,
 * 10^6 samples, seed 42, polylines included. */
RF_API rf_status rf_analysis_options_default(const rf_field* field, rf_analysis_options* out);
RF_API rf_status rf_analysis_report(const rf_field* field, const rf_analysis_options* options,
                                    char** out_json);

/* ---- geometry ---- */

RF_API rf_status rf_gaussian_curvature(const rf_field* field, double t, double c, double* out);
/* Zero-curvature loci on [search_min, search_max]. Arrays receive up to
 * capacity entries; out_count receives the total. Any array may be NULL. */
RF_API rf_status rf_critical_ages(const rf_field* field, double search_min, double search_max,
                                  double* out_stages, double* out_ages, int* out_extrapolated,
                                  size_t capacity, size_t* out_count);
RF_API rf_status rf_certify_hadamard(const rf_field* field, int* out_is_hadamard,
                                     double* out_max_curvature);
RF_API rf_status rf_geometry_report(const rf_field* field, double search_min, double search_max,
                                    char** out_json);

/* ---- gradient flow ---- */

typedef enum rf_exit_reason {
  RF_EXIT_LEFT_DOMAIN = 0,
  RF_EXIT_MAX_STEPS = 1,
  RF_EXIT_STEP_UNDERFLOW = 2
} rf_exit_reason;

/* One trajectory as CSV "tau,t,c,R". Output pointers may be NULL. */
RF_API rf_status rf_flow(const rf_field* field, double t0, double c0, double step,
                         size_t max_steps, char** out_csv, rf_exit_reason* out_reason,
                         size_t* out_samples, int* out_monotone, int* out_no_recurrence);
/* Trajectories from interleaved (t, c) starts; JSON summary and CSV. */
RF_API rf_status rf_flow_batch(const rf_field* field, const double* starts, size_t start_count,
                               double step, size_t max_steps, char** out_json, char** out_csv);

/* ---- plots ---- */

RF_API rf_status rf_contour_svg(const rf_field* field, const rf_domain* domain,
                                const double* levels, size_t level_count, double threshold,
                                int grid, char** out_svg);
RF_API rf_status rf_flow_svg(const rf_field* field, const rf_domain* domain, const double* starts,
                             size_t start_count, double step, size_t max_steps,
                             int arrows_per_axis, char** out_svg);
RF_API rf_status rf_curvature_svg(const rf_field* field, double search_min, double search_max,
                                  char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* RISKFIELD_RISKFIELD_H */
