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


// Independent reference computations used by the tests. None of these call
// into the library's numerical routines; they trade speed for simplicity.

#ifndef RISKFIELD_TESTS_ORACLES_HPP
#define RISKFIELD_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Published field coefficients, ascending powers of t, typed in afresh.
inline double slope_g(double t) {
  return -19.48 + t * (33.17 + t * (-16.89 + t * (3.45 + t * -0.24)));
}
inline double intercept_h(double t) {
  return -0.04 + t * (0.09 + t * (-0.06 + t * (0.007 + t * 0.006)));
}
inline double published_r(double t, double c) { return c * slope_g(t) + intercept_h(t); }

// The printed mixed-partial cubic.
inline double printed_cubic(double t) { return 33.17 - 33.78 * t + 10.35 * t * t - 0.96 * t * t * t; }

// Composite Simpson over [t0,t1] x [c0,c1] with n (even) panels per axis.
inline double simpson_2d(const Fn2& f, double t0, double t1, double c0, double c1, int n) {
  const double ht = (t1 - t0) / n, hc = (c1 - c0) / n;
  auto w = [n](int i) { return (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) sum += w(i) * w(j) * f(t0 + i * ht, c0 + j * hc);
  }
  return sum * ht * hc / 9.0;
}

struct McResult {
  double area;
  double standard_error;
};

// Hit-or-miss area of {f >= level}, drawn with the standard distribution
// (a different sampler than the library's).
inline McResult mc_area(const Fn2& f, double t0, double t1, double c0, double c1, double level,
                        std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> ut(t0, t1), uc(c0, c1);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double t = ut(rng), c = uc(rng);
    if (f(t, c) >= level) ++hits;
  }
  const double area = (t1 - t0) * (c1 - c0);
  const double p = static_cast<double>(hits) / samples;
  return {area * p, area * std::sqrt(p * (1 - p) / samples)};
}

// Minimum of f on n+1 equally spaced points.
inline std::pair<double, double> dense_min(const Fn1& f, double lo, double hi, int n) {
  double best = f(lo), at = lo;
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (v < best) {
      best = v;
      at = x;
    }
  }
  return {best, at};
}

// Sign changes on a uniform scan, each refined by plain bisection.
inline std::vector<double> bisection_roots(const Fn1& f, double lo, double hi, int scan) {
  std::vector<double> roots;
  double a = lo, fa = f(lo);
  for (int i = 1; i <= scan; ++i) {
    const double b = lo + (hi - lo) * i / scan;
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if (fa * fb < 0.0) {
      double x0 = a, x1 = b, f0 = fa;
      for (int it = 0; it < 200 && x1 - x0 > 1e-14; ++it) {
        const double m = 0.5 * (x0 + x1);
        const double fm = f(m);
        if (f0 * fm <= 0.0) {
          x1 = m;
        } else {
          x0 = m;
          f0 = fm;
        }
      }
      roots.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(hi);
  return roots;
}

// Least-squares line by successively refined exhaustive grid search over
// (slope, intercept); resolution ends near `resolution`.
inline std::pair<double, double> grid_regression(const std::vector<double>& xs,
                                                 const std::vector<double>& ys, double slope0,
                                                 double intercept0, double span,
                                                 double resolution) {
  auto sse = [&](double m, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) s += std::pow(ys[i] - (m * xs[i] + b), 2);
    return s;
  };
  double m = slope0, b = intercept0, half = span;
  while (half > resolution) {
    double best = sse(m, b), bm = m, bb = b;
    constexpr int kSteps = 20;
    for (int i = -kSteps; i <= kSteps; ++i) {
      for (int j = -kSteps; j <= kSteps; ++j) {
        const double mm = m + half * i / kSteps, b2 = b + half * j / kSteps;
        const double v = sse(mm, b2);
        if (v < best) {
          best = v;
          bm = mm;
          bb = b2;
        }
      }
    }
    m = bm;
    b = bb;
    half *= 0.25;
  }
  return {m, b};
}

inline double central_diff(const Fn1& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

// Lagrange-form evaluation of the interpolant through (xs, ys) at x.
inline double lagrange(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) term *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace oracle

#endif  // RISKFIELD_TESTS_ORACLES_HPP
