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


#include "riskfield/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "riskfield/error.hpp"

namespace riskfield {

double rounded(double value, int decimals) {
  if (!std::isfinite(value)) return value;
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(value * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

namespace {

json DomainJson(const Rectangle& d) {
  return {{"t", {d.t_min, d.t_max}}, {"c", {d.c_min, d.c_max}}};
}

json PointJson(Point p) { return {{"t", p.t}, {"c", p.c}}; }

std::vector<double> Coefficients(const Polynomial& p) {
  const auto c = p.coefficients();
  return {c.begin(), c.end()};
}

// Shortest representation that round-trips, for CSV cells.
std::string Num(double v) {
  char buf[40];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

json certificate_to_json(const CriticalPointCertificate& cert) {
  json points = json::array();
  for (const Point& p : cert.critical_points) points.push_back(PointJson(p));
  return {{"has_critical_points", cert.has_critical_points},
          {"min_dRdc", cert.min_dRdc},
          {"min_dRdc_at", cert.min_dRdc_at},
          {"dRdc_roots", cert.dRdc_roots},
          {"critical_points", points},
          {"critical_lines", cert.critical_lines},
          {"every_point_critical", cert.every_point_critical},
          {"method", cert.method}};
}

json analysis_report(const RiskField& base, const AnalysisOptions& options) {
  options.domain.validate();
  const RiskField field = base.with_domain(options.domain);
  const Rectangle& d = options.domain;

  json report;
  report["domain"] = DomainJson(d);
  report["domain_area"] = d.area();
  report["threshold"] = options.threshold;
  report["integral"] = integral(field, d);
  report["mean_risk"] = mean_risk(field, d);

  const RegionArea region = risk_region_area(field, d, options.threshold, options.monte_carlo);
  report["region_area"] = region.area;
  report["region_area_method"] = region.method;
  report["region_area_standard_error"] = region.standard_error;
  report["probability"] = region.area / d.area();

  const RegionArea mc = monte_carlo_region_area(field, d, options.threshold, options.monte_carlo);
  report["monte_carlo"] = {{"samples", options.monte_carlo.samples},
                           {"seed", options.monte_carlo.seed},
                           {"area", mc.area},
                           {"standard_error", mc.standard_error},
                           {"z_score", mc.standard_error > 0.0
                                           ? (mc.area - region.area) / mc.standard_error
                                           : 0.0}};

  if (field.is_affine_in_c()) {
    const CriticalPointCertificate cert = certify_no_critical_points(field);
    report["certificate"] = certificate_to_json(cert);
    report["critical_points"] = cert.has_critical_points ? "present" : "none";
  }

  json levels = json::array();
  if (!options.levels.empty()) {
    for (const LevelCurveSet& set : level_curves(field, d, options.levels, options.grid)) {
      std::size_t vertices = 0;
      json lines = json::array();
      for (const auto& line : set.polylines) {
        vertices += line.size();
        if (!options.include_polylines) continue;
        json coords = json::array();
        for (const Point& p : line) coords.push_back({rounded(p.t, 6), rounded(p.c, 6)});
        lines.push_back(std::move(coords));
      }
      json entry = {{"level", set.level},
                    {"polyline_count", set.polylines.size()},
                    {"vertex_count", vertices},
                    {"enclosed_area", level_region_area(field, d, set.level, options.grid)}};
      if (options.include_polylines) entry["polylines"] = std::move(lines);
      levels.push_back(std::move(entry));
    }
  }
  report["grid"] = {options.grid.cells_t, options.grid.cells_c};
  report["levels"] = std::move(levels);
  return report;
}

std::string age_label(const ZeroLocus& locus) {
  if (std::isnan(locus.age_years)) return "below first stage";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.1f y%s", locus.age_years,
                locus.extrapolated ? " (extrapolated)" : "");
  return buf;
}

json geometry_report(const CurvatureReport& report) {
  json loci = json::array();
  for (const ZeroLocus& z : report.zero_loci) {
    loci.push_back({{"t", z.t},
                    {"t_2dp", rounded(z.t, 2)},
                    {"t_truncated_1dp", std::trunc(z.t * 10.0) / 10.0},
                    {"age_years", std::isnan(z.age_years) ? json(nullptr) : json(z.age_years)},
                    {"label", age_label(z)},
                    {"extrapolated", z.extrapolated}});
  }
  json out = {{"max_curvature", report.max_curvature},
              {"max_at", PointJson(report.max_at)},
              {"is_hadamard", report.is_hadamard},
              {"degenerate", report.degenerate},
              {"search_interval", {report.search_min, report.search_max}},
              {"zero_loci", std::move(loci)}};
  if (report.degenerate) {
    out["notice"] = "mixed partial vanishes identically: every stage is a zero-curvature locus";
  } else {
    out["notice"] =
        "loci are high-precision roots of the mixed partial; t_truncated_1dp gives the "
        "one-decimal truncation commonly quoted";
  }
  return out;
}

json fit_report(const RiskTable& table, const RiskField& field,
                const std::vector<Polynomial>* reference) {
  const std::vector<Polynomial> polys = interpolants(table);
  json rows = json::array();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    double worst = 0.0;
    for (std::size_t k = 0; k < table.nodes.size(); ++k) {
      worst = std::max(worst, std::fabs(polys[i](table.nodes[k]) - table.values[i][k]));
    }
    rows.push_back({{"concentration", table.concentrations[i]},
                    {"coefficients", Coefficients(polys[i])},
                    {"display", polys[i].to_descending_string(4)},
                    {"max_node_residual", worst}});
  }
  auto regression = [](const RiskField& f) {
    json terms = json::array();
    const std::size_t n = std::max(f.slope().size(), f.intercept().size());
    for (std::size_t k = n; k-- > 0;) {
      terms.push_back({{"power", k},
                       {"slope", f.slope().coefficient(k)},
                       {"intercept", f.intercept().coefficient(k)}});
    }
    return terms;
  };
  json out = {{"nodes", table.nodes},
              {"concentrations", table.concentrations},
              {"interpolants", std::move(rows)},
              {"coefficient_regression", regression(field)},
              {"field", field_to_json(field)},
              {"slope_display", field.slope().to_descending_string(4)},
              {"intercept_display", field.intercept().to_descending_string(4)}};
  if (reference != nullptr) {
    const RiskField ref = field_from_polynomials(table.concentrations, *reference, field.domain());
    json listed = json::array();
    for (std::size_t i = 0; i < reference->size(); ++i) {
      listed.push_back({{"concentration", table.concentrations[i]},
                        {"coefficients", Coefficients((*reference)[i])},
                        {"display", (*reference)[i].to_descending_string(2)}});
    }
    out["reference_interpolants"] = std::move(listed);
    out["reference_regression"] = regression(ref);
    out["reference_field"] = field_to_json(ref);
  }
  return out;
}

json trajectory_to_json(const FlowTrajectory& trajectory) {
  const auto& s = trajectory.samples;
  json out = {{"exit_reason", std::string(to_string(trajectory.exit_reason))},
              {"sample_count", s.size()}};
  if (!s.empty()) {
    out["start"] = PointJson({s.front().t, s.front().c});
    out["end"] = PointJson({s.back().t, s.back().c});
    out["tau_end"] = s.back().tau;
    out["risk_start"] = std::isnan(s.front().risk) ? json(nullptr) : json(s.front().risk);
    out["risk_end"] = std::isnan(s.back().risk) ? json(nullptr) : json(s.back().risk);
  }
  return out;
}

std::string trajectory_csv(const FlowTrajectory& trajectory) {
  std::string out = "tau,t,c,R\n";
  for (const FlowSample& s : trajectory.samples) {
    out += Num(s.tau) + ',' + Num(s.t) + ',' + Num(s.c) + ',' + Num(s.risk) + '\n';
  }
  return out;
}

std::string trajectories_csv(const std::vector<FlowTrajectory>& trajectories) {
  std::string out = "trajectory,tau,t,c,R\n";
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const std::string id = std::to_string(i) + ',';
    for (const FlowSample& s : trajectories[i].samples) {
      out += id + Num(s.tau) + ',' + Num(s.t) + ',' + Num(s.c) + ',' + Num(s.risk) + '\n';
    }
  }
  return out;
}

json assessment_to_json(const ExposureAssessment& a) {
  return {{"group", a.group},
          {"concentration_mg_per_kg", a.concentration_mg_per_kg},
          {"intake_kg_per_day", a.intake_kg_per_day},
          {"exposure_factor", a.exposure_factor},
          {"exposure_mg_per_kg_day", a.exposure_mg_per_kg_day},
          {"risk_coefficient", a.verdict.risk_coefficient},
          {"acceptable", a.verdict.acceptable},
          {"average_daily_dose", a.average_daily_dose},
          {"limit_kg_per_day", a.limit_kg_per_day},
          {"limit_meals_per_month", a.limit_meals_per_month}};
}

json exposure_report(const std::vector<ExposureAssessment>& assessments) {
  json rows = json::array();
  std::size_t unacceptable = 0;
  for (const auto& a : assessments) {
    rows.push_back(assessment_to_json(a));
    if (!a.verdict.acceptable) ++unacceptable;
  }
  return {{"rows", std::move(rows)},
          {"row_count", assessments.size()},
          {"unacceptable_count", unacceptable}};
}

std::string exposure_csv(const std::vector<ExposureAssessment>& assessments) {
  std::string out =
      "group,concentration_mg_per_kg,intake_kg_per_day,exposure_factor,exposure_mg_per_kg_day,"
      "risk_coefficient,acceptable,average_daily_dose,limit_kg_per_day,limit_meals_per_month\n";
  for (const auto& a : assessments) {
    out += a.group + ',' + Num(a.concentration_mg_per_kg) + ',' + Num(a.intake_kg_per_day) + ',' +
           Num(a.exposure_factor) + ',' + Num(a.exposure_mg_per_kg_day) + ',' +
           Num(a.verdict.risk_coefficient) + ',' + (a.verdict.acceptable ? "true" : "false") +
           ',' + Num(a.average_daily_dose) + ',' + Num(a.limit_kg_per_day) + ',' +
           Num(a.limit_meals_per_month) + '\n';
  }
  return out;
}

std::vector<Point> lattice_starts(const Rectangle& d, int per_axis) {
  if (per_axis < 1) throw DomainError("lattice needs at least one point per axis");
  std::vector<Point> out;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      out.push_back({d.t_min + (d.t_max - d.t_min) * (i + 0.5) / per_axis,
                     d.c_min + (d.c_max - d.c_min) * (j + 0.5) / per_axis});
    }
  }
  return out;
}

}  // namespace riskfield
