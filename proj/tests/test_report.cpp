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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "riskfield/report.hpp"
#include "riskfield/svg.hpp"

using doctest::Approx;

namespace {
riskfield::AnalysisOptions SmallOptions() {
  riskfield::AnalysisOptions o;
  o.monte_carlo.samples = 20'000;
  o.grid = {32, 32};
  return o;
}
}  // namespace

TEST_CASE("analysis report contents") {
  const auto r = riskfield::analysis_report(riskfield::builtin_field(), SmallOptions());
  CHECK(r["mean_risk"].get<double>() == Approx(5.5599).epsilon(1e-4));
  CHECK(r["region_area"].get<double>() == Approx(12.5706).epsilon(1e-4));
  CHECK(r["probability"].get<double>() == Approx(12.5706 / 13.2).epsilon(1e-4));
  CHECK(r["critical_points"] == "none");
  CHECK(r["certificate"]["has_critical_points"] == false);
  CHECK(r["monte_carlo"]["samples"] == 20000);
  CHECK(r["levels"].size() == 5);
  CHECK(r["levels"][1]["level"] == 1.0);
  CHECK(r["levels"][1]["polylines"].size() == r["levels"][1]["polyline_count"]);
}

TEST_CASE("analysis report is deterministic") {
  const auto a = riskfield::analysis_report(riskfield::builtin_field(), SmallOptions()).dump();
  const auto b = riskfield::analysis_report(riskfield::builtin_field(), SmallOptions()).dump();
  CHECK(a == b);
}

TEST_CASE("threshold above the maximum") {
  auto o = SmallOptions();
  o.threshold = 100.0;
  const auto r = riskfield::analysis_report(riskfield::builtin_field(), o);
  CHECK(r["probability"] == 0.0);
}

TEST_CASE("geometry report labels ages") {
  const auto r = riskfield::geometry_report(riskfield::critical_ages(riskfield::builtin_field()));
  REQUIRE(r["zero_loci"].size() == 3);
  CHECK(r["zero_loci"][2]["extrapolated"] == true);
  CHECK(r["zero_loci"][2]["label"].get<std::string>().find("(extrapolated)") != std::string::npos);
  CHECK(r["zero_loci"][0]["t_2dp"] == 1.85);
  CHECK(r["zero_loci"][0]["t_truncated_1dp"].get<double>() == Approx(1.8));
  CHECK(r["zero_loci"][1]["t_truncated_1dp"].get<double>() == Approx(3.3));
  CHECK(r["zero_loci"][2]["t_truncated_1dp"].get<double>() == Approx(5.5));
  CHECK(r["is_hadamard"] == true);

  const riskfield::RiskField flat(riskfield::Polynomial{0.5}, riskfield::Polynomial{1.0});
  const auto flat_report = riskfield::geometry_report(riskfield::critical_ages(flat));
  CHECK(flat_report["degenerate"] == true);
  CHECK(flat_report["notice"].get<std::string>().find("every stage") != std::string::npos);
}

TEST_CASE("fit report") {
  const auto table = riskfield::builtin_table();
  const auto field = riskfield::build_field(table);
  const auto ref = riskfield::builtin_interpolants();
  const std::vector<riskfield::Polynomial> reference(ref.begin(), ref.end());
  const auto r = riskfield::fit_report(table, field, &reference);
  REQUIRE(r["interpolants"].size() == 3);
  CHECK(r["interpolants"][0]["max_node_residual"].get<double>() < 1e-9);
  CHECK(r["reference_interpolants"][0]["display"].get<std::string>().find("t^4") != std::string::npos);
  CHECK(r["reference_regression"][0]["power"] == 4);
  CHECK(r["reference_regression"][0]["slope"].get<double>() == Approx(-0.24).epsilon(0.02 / 0.24));
  CHECK(std::fabs(r["field"]["a"][0].get<double>() - -19.48) < 0.05);
}

TEST_CASE("CSV renderers") {
  const auto tr = riskfield::flow(riskfield::builtin_field(), {3.0, 1.0});
  const std::string csv = riskfield::trajectory_csv(tr);
  CHECK(csv.rfind("tau,t,c,R\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(tr.samples.size() + 1));
  CHECK(riskfield::trajectories_csv({tr, tr}).rfind("trajectory,tau,t,c,R\n", 0) == 0);

  std::vector<riskfield::ExposureAssessment> rows;
  for (const auto& p : riskfield::builtin_profiles()) rows.push_back(riskfield::assess(p));
  const std::string ex = riskfield::exposure_csv(rows);
  CHECK(std::count(ex.begin(), ex.end(), '\n') == 13);
  CHECK(riskfield::exposure_report(rows)["unacceptable_count"] == 8);
}

TEST_CASE("lattice starts sit inside the domain") {
  const auto pts = riskfield::lattice_starts(riskfield::kDefaultDomain, 4);
  CHECK(pts.size() == 16);
  for (const auto& p : pts) CHECK(riskfield::kDefaultDomain.contains(p));
}

TEST_CASE("SVG output is self-contained") {
  const auto f = riskfield::builtin_field();
  const std::string contour =
      riskfield::contour_svg(f, riskfield::kDefaultDomain, {1.0, 2.0}, 1.0, {32, 32});
  CHECK(contour.rfind("<svg", 0) == 0);
  CHECK(contour.find("</svg>") != std::string::npos);
  CHECK(contour.find("<polyline") != std::string::npos);
  CHECK(contour.find("90 y") != std::string::npos);  // age label under t = 5

  const auto tr = riskfield::flow(f, {3.0, 1.0});
  const std::string flow = riskfield::flow_svg(f, riskfield::kDefaultDomain, {tr}, 5);
  CHECK(flow.find("marker-end") != std::string::npos);

  const std::string curve = riskfield::curvature_svg(f, riskfield::critical_ages(f));
  CHECK(curve.find("(extrapolated)") != std::string::npos);
  CHECK(riskfield::contour_svg(f, riskfield::kDefaultDomain, {1.0, 2.0}, 1.0, {32, 32}) == contour);
}
