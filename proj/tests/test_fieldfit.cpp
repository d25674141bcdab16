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

#include <random>

#include "oracles.hpp"
#include "riskfield/error.hpp"
#include "riskfield/field.hpp"

using doctest::Approx;
using riskfield::Polynomial;

TEST_CASE("interpolation of trivial data") {
  const std::vector<double> nodes{1, 2, 3, 4, 5};
  const Polynomial one = riskfield::interpolate(nodes, std::vector<double>{1, 1, 1, 1, 1});
  CHECK(one.coefficient(0) == Approx(1.0));
  for (int k = 1; k <= 4; ++k) CHECK(std::fabs(one.coefficient(k)) < 1e-12);
  const Polynomial quartic = riskfield::interpolate(nodes, std::vector<double>{1, 16, 81, 256, 625});
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(quartic.coefficient(k)) < 1e-9);
  CHECK(quartic.coefficient(4) == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("interpolation errors") {
  const std::vector<double> four{1, 2, 3, 4}, six{1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(riskfield::interpolate(four, four), riskfield::ArityError);
  CHECK_THROWS_AS(riskfield::interpolate(six, six), riskfield::ArityError);
  const std::vector<double> dup{1, 2, 2, 4, 5}, v{0, 1, 2, 3, 4};
  CHECK_THROWS_AS(riskfield::interpolate(dup, v), riskfield::DomainError);
}

TEST_CASE("table column at 0.27 mg/kg reproduces the printed quartic") {
  const auto table = riskfield::builtin_table();
  const Polynomial p = riskfield::interpolate(table.nodes, table.values[0]);
  const double printed[] = {-5.25, 8.93, -4.54, 0.92, -0.06};
  for (int k = 0; k <= 4; ++k) CHECK(std::fabs(p.coefficient(k) - printed[k]) < 0.25);
  // Unrounded leading coefficient listed among the regression conditions.
  CHECK(p.coefficient(4) == Approx(-0.0663).epsilon(0.001 / 0.0663));
}

TEST_CASE("interpolant agrees with the Lagrange form") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> value(-10, 10), jitter(-0.3, 0.3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> nodes, values;
    for (int k = 0; k < 5; ++k) {
      nodes.push_back(1.0 + k + jitter(rng));
      values.push_back(value(rng));
    }
    const Polynomial p = riskfield::interpolate(nodes, values);
    for (int k = 0; k < 5; ++k) REQUIRE(std::fabs(p(nodes[k]) - values[k]) < 1e-9);
    const double x = 1.0 + 4.0 * (trial % 97) / 97.0;
    REQUIRE(p(x) == Approx(oracle::lagrange(nodes, values, x)).epsilon(1e-9));
  }
}

TEST_CASE("regression examples") {
  const auto exact = riskfield::regress_linear(std::vector<double>{0, 1}, std::vector<double>{0, 1});
  CHECK(exact.slope == Approx(1.0));
  CHECK(std::fabs(exact.intercept) < 1e-15);

  const std::vector<double> xs{0.27, 2.43, 3.33};
  const auto f3 = riskfield::regress_linear(xs, std::vector<double>{0.92, 8.48, 11.47});
  CHECK(std::fabs(f3.slope - 3.457) < 0.002);
  CHECK(std::fabs(f3.intercept - 0.008) < 0.002);
  const auto f2 = riskfield::regress_linear(xs, std::vector<double>{-4.54, -41.39, -56.12});
  CHECK(std::fabs(f2.slope - -16.894) < 0.002);
  CHECK(std::fabs(f2.intercept - -0.060) < 0.002);

  CHECK_THROWS_AS(riskfield::regress_linear(std::vector<double>{2, 2, 2}, xs), riskfield::DomainError);
  CHECK_THROWS_AS(riskfield::regress_linear(std::vector<double>{2}, std::vector<double>{1}),
                  riskfield::ArityError);
}

TEST_CASE("regression matches exhaustive grid refinement") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xs, ys;
    for (int i = 0; i < 6; ++i) {
      xs.push_back(u(rng));
      ys.push_back(u(rng));
    }
    const auto fit = riskfield::regress_linear(xs, ys);
    const auto [m, b] = oracle::grid_regression(xs, ys, 0.0, 0.0, 8.0, 1e-6);
    CHECK(fit.slope == Approx(m).epsilon(1e-4).scale(1.0));
    CHECK(fit.intercept == Approx(b).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("published field") {
  const auto f = riskfield::builtin_field();
  const double a[] = {-19.48, 33.17, -16.89, 3.45, -0.24};
  const double b[] = {-0.04, 0.09, -0.06, 0.007, 0.006};
  for (int k = 0; k <= 4; ++k) {
    CHECK(f.slope().coefficient(k) == a[k]);
    CHECK(f.intercept().coefficient(k) == b[k]);
  }
  CHECK(f(1.0, 0.27) == Approx(0.0057).epsilon(1e-4 / 0.0057));
  CHECK(f(1.0, 0.27) == Approx(oracle::published_r(1.0, 0.27)));
  CHECK(f.gradient(2.2, 0.7).dc == Approx(oracle::slope_g(2.2)));
  CHECK(f.domain().area() == Approx(13.2));
}

TEST_CASE("field is affine in c") {
  const auto f = riskfield::builtin_field();
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> t(1, 5), c(0.2, 3.5), lam(-1, 2);
  for (int i = 0; i < 1000; ++i) {
    const double tt = t(rng), c1 = c(rng), c2 = c(rng), l = lam(rng);
    REQUIRE(f(tt, l * c1 + (1 - l) * c2) ==
            Approx(l * f(tt, c1) + (1 - l) * f(tt, c2)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("build_field round-trips a synthetic affine field") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> g(5), h(5);
    for (auto& x : g) x = u(rng);
    for (auto& x : h) x = u(rng);
    auto eval = [](const std::vector<double>& p, double t) {
      return p[0] + t * (p[1] + t * (p[2] + t * (p[3] + t * p[4])));
    };
    riskfield::RiskTable table;
    table.concentrations = {0.27, 2.43, 3.33};
    table.nodes = {1, 2, 3, 4, 5};
    for (double c : table.concentrations) {
      std::vector<double> row;
      for (double t : table.nodes) row.push_back(c * eval(g, t) + eval(h, t));
      table.values.push_back(row);
    }
    const auto f = riskfield::build_field(table);
    for (int k = 0; k <= 4; ++k) {
      REQUIRE(std::fabs(f.slope().coefficient(k) - g[k]) < 1e-8);
      REQUIRE(std::fabs(f.intercept().coefficient(k) - h[k]) < 1e-8);
    }
  }
}

TEST_CASE("printed interpolants regress to the published field") {
  const auto polys = riskfield::builtin_interpolants();
  const auto f = riskfield::field_from_polynomials(riskfield::kBuiltinConcentrations, polys);
  const auto ref = riskfield::builtin_field();
  for (int k = 0; k <= 4; ++k) {
    CHECK(std::fabs(f.slope().coefficient(k) - ref.slope().coefficient(k)) < 0.02);
    CHECK(std::fabs(f.intercept().coefficient(k) - ref.intercept().coefficient(k)) < 0.02);
  }
}

TEST_CASE("degenerate and malformed tables") {
  riskfield::RiskTable one;
  one.concentrations = {0.27};
  one.nodes = {1, 2, 3, 4, 5};
  one.values = {{0, 1, 2, 3, 4}};
  CHECK_THROWS_AS(riskfield::build_field(one), riskfield::DomainError);

  auto bad = riskfield::builtin_table();
  bad.values[1].pop_back();
  CHECK_THROWS_AS(bad.validate(), riskfield::ArityError);
  bad = riskfield::builtin_table();
  bad.nodes = {1, 2, 3, 4, 6};
  CHECK_THROWS_AS(bad.validate(), riskfield::DomainError);
  bad.nodes = {1, 3, 2, 4, 5};
  CHECK_THROWS_AS(bad.validate(), riskfield::DomainError);
}
