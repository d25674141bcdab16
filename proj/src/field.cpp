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

#include "riskfield/field.hpp"

#include <cmath>
#include <string>

#include "riskfield/error.hpp"

namespace riskfield {

void Rectangle::validate() const {
  const bool finite = std::isfinite(t_min) && std::isfinite(t_max) && std::isfinite(c_min) &&
                      std::isfinite(c_max);
  if (!finite || !(t_min < t_max) || !(c_min < c_max)) {
    throw DomainError("domain must satisfy t_min < t_max and c_min < c_max");
  }
}

RiskField::RiskField(Polynomial slope, Polynomial intercept, Rectangle domain)
    : RiskField(std::vector<Polynomial>{std::move(intercept), std::move(slope)}, domain, 0) {}

RiskField RiskField::from_c_powers(std::vector<Polynomial> terms, Rectangle domain) {
  while (terms.size() < 2) terms.emplace_back();
  return RiskField(std::move(terms), domain, 0);
}

RiskField::RiskField(std::vector<Polynomial> terms, Rectangle domain, int)
    : terms_(std::move(terms)), domain_(domain) {
  domain_.validate();
  d_terms_.reserve(terms_.size());
  dd_terms_.reserve(terms_.size());
  for (const auto& p : terms_) {
    d_terms_.push_back(p.derivative());
    dd_terms_.push_back(d_terms_.back().derivative());
  }
}

RiskField RiskField::with_domain(Rectangle domain) const {
  return RiskField(terms_, domain, 0);
}

bool RiskField::is_affine_in_c() const noexcept {
  for (std::size_t j = 2; j < terms_.size(); ++j) {
    if (!terms_[j].is_zero()) return false;
  }
  return true;
}

double RiskField::operator()(double t, double c) const noexcept {
  double acc = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * c + (*it)(t);
  return acc;
}

Gradient RiskField::gradient(double t, double c) const noexcept {
  double dt = 0.0;
  for (auto it = d_terms_.rbegin(); it != d_terms_.rend(); ++it) dt = dt * c + (*it)(t);
  // d/dc of sum_j c^j P_j = sum_{j>=1} j c^{j-1} P_j
  double dc = 0.0;
  for (std::size_t j = terms_.size() - 1; j >= 1; --j) {
    dc = dc * c + static_cast<double>(j) * terms_[j](t);
  }
  return {dt, dc};
}

SecondPartials RiskField::second_partials(double t, double c) const noexcept {
  double tt = 0.0;
  for (auto it = dd_terms_.rbegin(); it != dd_terms_.rend(); ++it) tt = tt * c + (*it)(t);
  double tc = 0.0;
  for (std::size_t j = d_terms_.size() - 1; j >= 1; --j) {
    tc = tc * c + static_cast<double>(j) * d_terms_[j](t);
  }
  // No j >= 2 terms means the c-curvature is identically zero, not merely small.
  double cc = 0.0;
  for (std::size_t j = terms_.size() - 1; j >= 2; --j) {
    cc = cc * c + static_cast<double>(j * (j - 1)) * terms_[j](t);
  }
  return {tt, tc, cc};
}

void RiskTable::validate() const {
  if (concentrations.size() != values.size()) {
    throw ArityError("risk table has " + std::to_string(concentrations.size()) +
                     " concentrations but " + std::to_string(values.size()) + " value rows");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != nodes.size()) {
      throw ArityError("risk table row " + std::to_string(i + 1) + " has " +
                       std::to_string(values[i].size()) + " values for " +
                       std::to_string(nodes.size()) + " nodes");
    }
    for (double v : values[i]) {
      if (!std::isfinite(v)) throw DomainError("risk table values must be finite");
    }
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!(nodes[k] >= 1.0 && nodes[k] <= 5.0)) {
      throw DomainError("risk table nodes must lie within [1, 5]");
    }
    if (k > 0 && !(nodes[k] > nodes[k - 1])) {
      throw DomainError("risk table nodes must be strictly increasing");
    }
  }
  for (double c : concentrations) {
    if (!std::isfinite(c)) throw DomainError("risk table concentrations must be finite");
  }
}

Polynomial newton_interpolate(std::span<const double> nodes, std::span<const double> values) {
  if (nodes.size() != values.size()) throw ArityError("nodes and values differ in length");
  const std::size_t n = nodes.size();
  if (n == 0) throw ArityError("interpolation needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nodes[i] == nodes[j]) throw DomainError("interpolation nodes must be distinct");
    }
  }
  // In-place divided-difference table; dd[i] ends as f[x_0, ..., x_i].
  std::vector<double> dd(values.begin(), values.end());
  for (std::size_t order = 1; order < n; ++order) {
    for (std::size_t i = n - 1; i >= order; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - order]);
    }
  }
  // Nested (Horner) form expanded to monomials from the innermost factor.
  Polynomial p{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * Polynomial{-nodes[i], 1.0} + Polynomial{dd[i]};
  }
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  c.resize(n, 0.0);
  return Polynomial(std::move(c));
}

Polynomial interpolate(std::span<const double> nodes, std::span<const double> values) {
  if (nodes.size() != 5 || values.size() != 5) {
    throw ArityError("degree-4 interpolation needs exactly 5 nodes and 5 values, got " +
                     std::to_string(nodes.size()) + " and " + std::to_string(values.size()));
  }
  return newton_interpolate(nodes, values);
}

LinearFit regress_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ArityError("regression xs and ys differ in length");
  if (xs.size() < 2) throw ArityError("regression needs at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DomainError("regression design is degenerate: all x values are equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

RiskField field_from_polynomials(std::span<const double> concentrations,
                                 std::span<const Polynomial> polynomials, Rectangle domain) {
  if (concentrations.size() != polynomials.size()) {
    throw ArityError("one polynomial per concentration is required");
  }
  if (concentrations.size() < 2) {
    throw DomainError("a field needs at least two concentrations to regress over");
  }
  std::size_t width = 0;
  for (const auto& p : polynomials) width = std::max(width, p.size());
  std::vector<double> a(width), b(width), ys(polynomials.size());
  for (std::size_t k = 0; k < width; ++k) {
    for (std::size_t i = 0; i < polynomials.size(); ++i) ys[i] = polynomials[i].coefficient(k);
    const LinearFit fit = regress_linear(concentrations, ys);
    a[k] = fit.slope;
    b[k] = fit.intercept;
  }
  return RiskField(Polynomial(std::move(a)), Polynomial(std::move(b)), domain);
}

std::vector<Polynomial> interpolants(const RiskTable& table) {
  table.validate();
  std::vector<Polynomial> out;
  out.reserve(table.values.size());
  for (const auto& row : table.values) out.push_back(interpolate(table.nodes, row));
  return out;
}

RiskField build_field(const RiskTable& table, Rectangle domain) {
  const auto polys = interpolants(table);
  return field_from_polynomials(table.concentrations, polys, domain);
}

RiskField builtin_field() {
  return RiskField(Polynomial{-19.48, 33.17, -16.89, 3.45, -0.24},
                   Polynomial{-0.04, 0.09, -0.06, 0.007, 0.006}, kDefaultDomain);
}

RiskTable builtin_table() {
  RiskTable table;
  table.concentrations = {0.27, 2.43, 3.33};
  table.nodes = {1.0, 2.0, 3.0, 4.0, 5.0};
  table.values = {
      {0.0, 0.804, 0.342, 0.204, 0.388},
      {0.0, 7.237, 3.077, 1.834, 3.490},
      {0.0, 9.918, 4.216, 2.513, 4.783},
  };
  return table;
}

std::array<Polynomial, 3> builtin_interpolants() {
  return {
      Polynomial{-5.25, 8.93, -4.54, 0.92, -0.06},
      Polynomial{-47.6, 81.11, -41.39, 8.48, -0.60},
      Polynomial{-64.8, 110.28, -56.12, 11.47, -0.82},
  };
}

}  // namespace riskfield
