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

#ifndef RISKFIELD_POLYNOMIAL_HPP
#define RISKFIELD_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace riskfield {

/// Univariate real polynomial stored in ascending powers: coefficient k
/// multiplies t^k. The stored length is a degree bound; trailing zeros are
/// allowed and preserved.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {}
  Polynomial(std::initializer_list<double> coefficients) : coeffs_(coefficients) {}

  std::span<const double> coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^k, zero beyond the stored length.
  double coefficient(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  /// Highest k with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  double operator()(double t) const noexcept;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  double integrate(double lo, double hi) const;

  /// Copy with trailing zero coefficients removed.
  Polynomial trimmed() const;

  /// "-0.06 t^4 + 0.92 t^3 - 4.54 t^2 + 8.93 t - 5.25" style, descending powers.
  std::string to_descending_string(int decimals = 4, const char* variable = "t") const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(double scale, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Number of distinct real roots in the half-open interval (lo, hi],
/// counted with a Sturm sequence.
int count_real_roots(const Polynomial& p, double lo, double hi);

/// Distinct real roots in [lo, hi], ascending. Intervals are isolated with
/// Sturm counts and refined by sign-change bisection to `tolerance`.
/// Even-multiplicity roots are located through the derivative. The zero
/// polynomial has no isolated roots; callers must test is_zero() first.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi,
                               double tolerance = 1e-10);

struct Extremum {
  double value;
  double at;
};

/// Exact min/max of p on [lo, hi] from endpoints and critical points.
Extremum minimum_on(const Polynomial& p, double lo, double hi);
Extremum maximum_on(const Polynomial& p, double lo, double hi);

}  // namespace riskfield

#endif  // RISKFIELD_POLYNOMIAL_HPP
