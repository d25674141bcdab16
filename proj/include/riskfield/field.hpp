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

// Bivariate risk field R(t, c) over life stage t and contaminant
// concentration c, and the interpolate-then-regress pipeline that builds it
// from a table of hazard quotients.

#ifndef RISKFIELD_FIELD_HPP
#define RISKFIELD_FIELD_HPP

#include <array>
#include <span>
#include <vector>

#include "riskfield/polynomial.hpp"

namespace riskfield {

struct Point {
  double t;
  double c;
};

struct Rectangle {
  double t_min = 1.0;
  double t_max = 5.0;
  double c_min = 0.2;
  double c_max = 3.5;

  double area() const noexcept { return (t_max - t_min) * (c_max - c_min); }
  bool contains(Point p) const noexcept {
    return p.t >= t_min && p.t <= t_max && p.c >= c_min && p.c <= c_max;
  }
  /// Throws DomainError unless both sides are positive and finite.
  void validate() const;
};

/// The default analysis domain, stages [1,5] x concentrations [0.2,3.5] mg/kg.
inline constexpr Rectangle kDefaultDomain{};

struct Gradient {
  double dt;
  double dc;
};

struct SecondPartials {
  double tt;
  double tc;
  double cc;
};

/// R(t, c) = sum_j c^j P_j(t). The fitted fields are affine in c
/// (P_1 = slope a(t), P_0 = intercept b(t)); higher powers of c are allowed
/// for synthetic checks. Immutable once built.
class RiskField {
 public:
  RiskField() : RiskField(Polynomial{}, Polynomial{}) {}
  /// R = slope(t) * c + intercept(t).
  RiskField(Polynomial slope, Polynomial intercept, Rectangle domain = kDefaultDomain);
  /// General polynomial field, terms indexed by power of c.
  static RiskField from_c_powers(std::vector<Polynomial> terms, Rectangle domain = kDefaultDomain);

  const Rectangle& domain() const noexcept { return domain_; }
  RiskField with_domain(Rectangle domain) const;

  /// Coefficient of c (a_k in ascending t powers) and of c^0 (b_k).
  const Polynomial& slope() const noexcept { return terms_[1]; }
  const Polynomial& intercept() const noexcept { return terms_[0]; }
  std::span<const Polynomial> c_powers() const noexcept { return terms_; }

  bool is_affine_in_c() const noexcept;

  double operator()(double t, double c) const noexcept;
  Gradient gradient(double t, double c) const noexcept;
  SecondPartials second_partials(double t, double c) const noexcept;

 private:
  RiskField(std::vector<Polynomial> terms, Rectangle domain, int);

  std::vector<Polynomial> terms_;     // by power of c, at least two entries
  std::vector<Polynomial> d_terms_;   // d/dt of terms_
  std::vector<Polynomial> dd_terms_;  // d2/dt2 of terms_
  Rectangle domain_;
};

/// Hazard quotients sampled on a stage grid, one row per concentration.
struct RiskTable {
  std::vector<double> concentrations;
  std::vector<double> nodes;
  std::vector<std::vector<double>> values;

  /// Throws DomainError/ArityError on inconsistent shape, non-increasing
  /// nodes, or nodes outside [1, 5].
  void validate() const;
};

/// Degree-4 interpolant through exactly five distinct nodes, by Newton
/// divided differences expanded to ascending monomial coefficients.
Polynomial interpolate(std::span<const double> nodes, std::span<const double> values);

/// Newton interpolant of arbitrary arity (n distinct nodes, degree n-1).
Polynomial newton_interpolate(std::span<const double> nodes, std::span<const double> values);

struct LinearFit {
  double slope;
  double intercept;
};

/// Unweighted ordinary least squares y = slope * x + intercept.
LinearFit regress_linear(std::span<const double> xs, std::span<const double> ys);

/// Per-concentration coefficient rows regressed coefficient-wise over
/// concentration. Rows are ascending-power coefficient vectors.
RiskField field_from_polynomials(std::span<const double> concentrations,
                                 std::span<const Polynomial> polynomials,
                                 Rectangle domain = kDefaultDomain);

RiskField build_field(const RiskTable& table, Rectangle domain = kDefaultDomain);

/// The per-concentration interpolants build_field regresses.
std::vector<Polynomial> interpolants(const RiskTable& table);

/// Published field:
/// (-0.24c + 0.006)t^4 + (3.45c + 0.007)t^3 + (-16.89c - 0.06)t^2
///   + (33.17c + 0.09)t + (-19.48c - 0.04) on [1,5] x [0.2,3.5].
RiskField builtin_field();

/// Risk coefficients for men's unintentional shark consumption by age
/// group (babies, boys, men, seniors) at 0.27, 2.43 and 3.33 mg/kg, placed
/// at the right end of each stage interval (t = 2..5) with zero risk at
/// t = 1 before fish consumption begins.
RiskTable builtin_table();

/// Published degree-4 interpolants for 0.27, 2.43 and 3.33 mg/kg, ascending powers.
std::array<Polynomial, 3> builtin_interpolants();
inline constexpr std::array<double, 3> kBuiltinConcentrations{0.27, 2.43, 3.33};

}  // namespace riskfield

#endif  // RISKFIELD_FIELD_HPP
