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


// JSON and CSV renderings of analysis results. Every builder is a pure
// function of its inputs so reports are byte-stable across runs.

#ifndef RISKFIELD_REPORT_HPP
#define RISKFIELD_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "riskfield/analysis.hpp"
#include "riskfield/dynamics.hpp"
#include "riskfield/geometry.hpp"
#include "riskfield/io.hpp"

namespace riskfield {

struct AnalysisOptions {
  Rectangle domain = kDefaultDomain;
  double threshold = 1.0;
  std::vector<double> levels{0.5, 1.0, 2.0, 5.0, 10.0};
  GridSpec grid{};
  MonteCarloOptions monte_carlo{};
  /// Include marching-squares vertices, not just per-level counts.
  bool include_polylines = true;
};

json certificate_to_json(const CriticalPointCertificate& cert);

/// {mean_risk, integral, region_area, probability, threshold, domain,
///  certificate, monte_carlo, levels}
json analysis_report(const RiskField& field, const AnalysisOptions& options);

/// Curvature verdict and zero loci with age labels such as "26.4 y" or
/// "107.9 y (extrapolated)".
json geometry_report(const CurvatureReport& report);
std::string age_label(const ZeroLocus& locus);

/// Interpolants, coefficient-wise regression and the resulting field.
/// `reference` optionally lists externally supplied interpolants that are
/// regressed alongside for comparison.
json fit_report(const RiskTable& table, const RiskField& field,
                const std::vector<Polynomial>* reference = nullptr);

json trajectory_to_json(const FlowTrajectory& trajectory);
/// Header "tau,t,c,R"; one line per sample.
std::string trajectory_csv(const FlowTrajectory& trajectory);
/// Several trajectories in one table, prefixed by a trajectory index column.
std::string trajectories_csv(const std::vector<FlowTrajectory>& trajectories);

json assessment_to_json(const ExposureAssessment& assessment);
json exposure_report(const std::vector<ExposureAssessment>& assessments);
std::string exposure_csv(const std::vector<ExposureAssessment>& assessments);

/// Starts on an evenly spaced n x n lattice strictly inside the domain.
std::vector<Point> lattice_starts(const Rectangle& domain, int per_axis);

/// Round to `decimals` places for compact, stable output.
double rounded(double value, int decimals);

}  // namespace riskfield

#endif  // RISKFIELD_REPORT_HPP
