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
#include "riskfield/analysis.hpp"
#include "riskfield/error.hpp"

using doctest::Approx;
using riskfield::Polynomial;
using riskfield::RiskField;

namespace {

const riskfield::Rectangle kD = riskfield::kDefaultDomain;

RiskField RandomAffineField(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<double> a(5), b(5);
  for (auto& x : a) x = u(rng) / 4;
  for (auto& x : b) x = u(rng) / 4;
  return RiskField(Polynomial(a), Polynomial(b));
}

oracle::Fn2 Eval(const RiskField& f) {
  return [&f](double t, double c) { return f(t, c); };
}

}  // namespace

TEST_CASE("gradient of the published field") {
  const auto f = riskfield::builtin_field();
  CHECK(f.gradient(1.0, 2.0).dc == Approx(0.01).epsilon(1e-12 / 0.01));
  const RiskField zero;
  CHECK(zero.gradient(2.0, 1.0).dt == 0.0);
  CHECK(zero.gradient(2.0, 1.0).dc == 0.0);

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> t(1.001, 4.999), c(0.201, 3.499);
  for (int i = 0; i < 1000; ++i) {
    const double tt = t(rng), cc = c(rng);
    const auto g = f.gradient(tt, cc);
    const double fd_t = oracle::central_diff([&](double x) { return oracle::published_r(x, cc); }, tt, 1e-5);
    const double fd_c = oracle::central_diff([&](double x) { return oracle::published_r(tt, x); }, cc, 1e-5);
    REQUIRE(std::fabs(g.dt - fd_t) < 1e-6);
    REQUIRE(std::fabs(g.dc - fd_c) < 1e-6);
    const double norm = std::hypot(g.dt, g.dc);
    REQUIRE(std::hypot(g.dt - fd_t, g.dc - fd_c) / norm < 1e-5);
  }
}

TEST_CASE("no critical points on the published field") {
  const auto cert = riskfield::certify_no_critical_points(riskfield::builtin_field());
  CHECK_FALSE(cert.has_critical_points);
  CHECK(cert.min_dRdc > 0.0);
  CHECK(cert.min_dRdc == Approx(0.01).epsilon(1e-9));
  CHECK(cert.min_dRdc_at == Approx(1.0));
  CHECK(cert.dRdc_roots.empty());
  const auto [m, at] = oracle::dense_min(oracle::slope_g, 1.0, 5.0, 100000);
  CHECK(cert.min_dRdc == Approx(m).epsilon(1e-9));
  CHECK(cert.min_dRdc_at == Approx(at).epsilon(1e-4));
}

TEST_CASE("shifted slope has a sign change near t = 1") {
  const auto base = riskfield::builtin_field();
  auto a = std::vector<double>(base.slope().coefficients().begin(), base.slope().coefficients().end());
  a[0] -= 0.02;
  const RiskField f(Polynomial(a), base.intercept());
  const auto cert = riskfield::certify_no_critical_points(f);
  REQUIRE(cert.dRdc_roots.size() == 1);
  const auto ref = oracle::bisection_roots([&](double t) { return oracle::slope_g(t) - 0.02; }, 1.0, 5.0, 4000);
  REQUIRE(ref.size() == 1);
  CHECK(cert.dRdc_roots[0] == Approx(ref[0]).epsilon(1e-9));
  CHECK(cert.dRdc_roots[0] < 1.01);
  CHECK(cert.min_dRdc < 0.0);
  // Any critical point must solve c a'(t*) + b'(t*) = 0.
  for (const auto& p : cert.critical_points) {
    CHECK(std::fabs(f.gradient(p.t, p.c).dt) < 1e-8);
    CHECK(std::fabs(f.gradient(p.t, p.c).dc) < 1e-8);
  }
}

TEST_CASE("constant field is critical everywhere") {
  const RiskField f(Polynomial{}, Polynomial{3.0});
  const auto cert = riskfield::certify_no_critical_points(f);
  CHECK(cert.has_critical_points);
  CHECK(cert.every_point_critical);
  CHECK_THROWS_AS(riskfield::certify_no_critical_points(
                      RiskField::from_c_powers({Polynomial{1}, Polynomial{0}, Polynomial{1}})),
                  riskfield::DomainError);
}

TEST_CASE("mean risk") {
  const auto f = riskfield::builtin_field();
  const double mean = riskfield::mean_risk(f, kD);
  CHECK(std::fabs(mean - 5.560) < 0.005);
  CHECK(riskfield::integral(f, kD) == Approx(73.39).epsilon(0.01 / 73.39));
  const double simpson = oracle::simpson_2d(oracle::published_r, 1, 5, 0.2, 3.5, 400) / 13.2;
  CHECK(std::fabs(mean - simpson) < 1e-8);
  CHECK(riskfield::mean_risk(RiskField(Polynomial{}, Polynomial{2.5}), kD) == 2.5);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto r = RandomAffineField(rng);
    const double s = oracle::simpson_2d(Eval(r), 1, 5, 0.2, 3.5, 400) / 13.2;
    CHECK(std::fabs(riskfield::mean_risk(r, kD) - s) < 1e-8);
  }
}

TEST_CASE("critical region of the published field") {
  const auto f = riskfield::builtin_field();
  const auto region = riskfield::risk_region_area(f, kD, 1.0);
  CHECK(region.standard_error == 0.0);
  // Independent checks: a fine midpoint lattice and Monte Carlo.
  constexpr int kN = 2000;
  long hits = 0;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      if (oracle::published_r(1 + 4.0 * (i + 0.5) / kN, 0.2 + 3.3 * (j + 0.5) / kN) >= 1.0) ++hits;
    }
  }
  CHECK(region.area == Approx(13.2 * hits / (double(kN) * kN)).epsilon(1e-3));
  const auto mc = oracle::mc_area(oracle::published_r, 1, 5, 0.2, 3.5, 1.0, 1'000'000, 42);
  CHECK(std::fabs(region.area - mc.area) < 3 * mc.standard_error);
  CHECK(region.area == Approx(12.5706).epsilon(1e-4 / 12.5706));
  CHECK(riskfield::risk_probability(f, kD, 1.0) == Approx(0.95232).epsilon(1e-4));

  const auto lib_mc = riskfield::monte_carlo_region_area(f, kD, 1.0, {1'000'000, 42});
  CHECK(std::fabs(region.area - lib_mc.area) < 3 * lib_mc.standard_error);
}

TEST_CASE("trivial thresholds") {
  const auto f = riskfield::builtin_field();
  CHECK(riskfield::risk_region_area(f, kD, -100.0).area == Approx(13.2));
  CHECK(riskfield::risk_region_area(f, kD, 100.0).area == 0.0);
  CHECK(riskfield::risk_probability(f, kD, 100.0) == 0.0);
}

TEST_CASE("region area is nonincreasing in the threshold") {
  const auto f = riskfield::builtin_field();
  double prev = 13.2 + 1e-9;
  for (double tau = -1.0; tau <= 16.0; tau += 0.05) {
    const double a = riskfield::risk_region_area(f, kD, tau).area;
    REQUIRE(a <= prev + 1e-9);
    prev = a;
  }
}

TEST_CASE("exact reduction agrees with Monte Carlo on random affine fields") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto r = RandomAffineField(rng);
    const double tau = r(3.0, 1.8);  // a level that cuts the domain
    const auto exact = riskfield::risk_region_area(r, kD, tau);
    const auto mc = oracle::mc_area(Eval(r), 1, 5, 0.2, 3.5, tau, 200'000, 100 + i);
    CHECK(std::fabs(exact.area - mc.area) <= 3 * mc.standard_error + 1e-9);
  }
}

TEST_CASE("slope that vanishes inside the t-range") {
  // a(t) = t - 3 changes sign at t = 3; R = (t - 3) c.
  const RiskField f(Polynomial{-3.0, 1.0}, Polynomial{});
  const auto exact = riskfield::risk_region_area(f, kD, 0.5);
  const auto mc = oracle::mc_area(Eval(f), 1, 5, 0.2, 3.5, 0.5, 1'000'000, 9);
  CHECK(std::fabs(exact.area - mc.area) < 3 * mc.standard_error);
  // Closed form: for t > 3, c >= 0.5 / (t - 3) clamped.
  const double closed = riskfield::adaptive_simpson(
      [](double t) {
        if (t <= 3.0) return 0.0;
        return 3.5 - std::clamp(0.5 / (t - 3.0), 0.2, 3.5);
      },
      3.0, 5.0, 1e-12);
  CHECK(exact.area == Approx(closed).epsilon(1e-8));
}

TEST_CASE("non-affine fields use Monte Carlo") {
  const auto f = RiskField::from_c_powers({Polynomial{0}, Polynomial{0}, Polynomial{1}});  // c^2
  const auto r = riskfield::risk_region_area(f, kD, 1.0, {200'000, 5});
  CHECK(r.standard_error > 0.0);
  CHECK(std::fabs(r.area - 4.0 * 2.5) < 3 * r.standard_error + 1e-12);
}

TEST_CASE("Monte Carlo is deterministic for a seed") {
  const auto f = riskfield::builtin_field();
  const auto a = riskfield::monte_carlo_region_area(f, kD, 1.0, {10'000, 7});
  const auto b = riskfield::monte_carlo_region_area(f, kD, 1.0, {10'000, 7});
  CHECK(a.area == b.area);
}

TEST_CASE("level curves") {
  const auto f = riskfield::builtin_field();
  const auto sets = riskfield::level_curves(f, kD, {1.0, 2.0, 1000.0});
  REQUIRE(sets.size() == 3);
  CHECK_FALSE(sets[0].polylines.empty());
  CHECK(sets[2].polylines.empty());
  for (const auto& set : sets) {
    for (const auto& line : set.polylines) {
      for (const auto& p : line) {
        REQUIRE(kD.contains(p));
        REQUIRE(std::fabs(f(p.t, p.c) - set.level) < 0.01);
      }
    }
  }
  const double polygon = riskfield::level_region_area(f, kD, 1.0);
  const double exact = riskfield::risk_region_area(f, kD, 1.0).area;
  CHECK(std::fabs(polygon - exact) / exact < 0.02);
  CHECK_THROWS_AS(riskfield::level_curves(f, kD, {1.0}, {8, 8}), riskfield::DomainError);
}

TEST_CASE("level curves stitch closed loops for a bump") {
  // (t-3)^2 + (c-1.85)^2 with the 1.0 level a circle inside the domain.
  const auto f = RiskField::from_c_powers(
      {Polynomial{9.0 + 1.85 * 1.85, -6.0, 1.0}, Polynomial{-3.7}, Polynomial{1.0}});
  const auto sets = riskfield::level_curves(f, kD, {1.0}, {128, 128});
  REQUIRE(sets[0].polylines.size() == 1);
  const auto& loop = sets[0].polylines[0];
  CHECK(std::hypot(loop.front().t - loop.back().t, loop.front().c - loop.back().c) < 1e-12);
  CHECK(riskfield::level_region_area(f, kD, 1.0, {128, 128}) ==
        Approx(13.2 - 3.14159265358979).epsilon(2e-3));
}

TEST_CASE("adaptive Simpson") {
  CHECK(riskfield::adaptive_simpson([](double x) { return std::sin(x); }, 0, M_PI, 1e-12) ==
        Approx(2.0).epsilon(1e-11));
  CHECK(riskfield::adaptive_simpson([](double) { return 1.0; }, 2, 2, 1e-9) == 0.0);
}

TEST_CASE("rectangle validation") {
  CHECK_THROWS_AS((riskfield::Rectangle{2, 1, 0, 1}.validate()), riskfield::DomainError);
  CHECK_THROWS_AS((riskfield::Rectangle{1, 2, 1, 1}.validate()), riskfield::DomainError);
}
