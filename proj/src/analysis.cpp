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

#include "riskfield/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "riskfield/error.hpp"

namespace riskfield {
namespace {

std::string Fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementation.
double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double SimpsonStep(const std::function<double(double)>& f, double lo, double hi, double flo,
                   double fmid, double fhi, double whole, double tolerance, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid);
  const double rm = 0.5 * (mid + hi);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tolerance) return left + right + delta / 15.0;
  return SimpsonStep(f, lo, mid, flo, flm, fmid, left, 0.5 * tolerance, depth - 1) +
         SimpsonStep(f, mid, hi, fmid, frm, fhi, right, 0.5 * tolerance, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tolerance, int max_depth) {
  if (lo == hi) return 0.0;
  const double flo = f(lo);
  const double fhi = f(hi);
  const double fmid = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return SimpsonStep(f, lo, hi, flo, fmid, fhi, whole, tolerance, max_depth);
}

CriticalPointCertificate certify_no_critical_points(const RiskField& field) {
  if (!field.is_affine_in_c()) {
    throw DomainError("critical-point certificate requires a field affine in c");
  }
  const Rectangle& d = field.domain();
  const Polynomial& g = field.slope();
  const Polynomial dh = field.intercept().derivative();
  CriticalPointCertificate cert;

  if (g.is_zero()) {
    // dR/dc vanishes identically; R depends on t alone.
    cert.min_dRdc = 0.0;
    cert.min_dRdc_at = d.t_min;
    if (dh.is_zero()) {
      cert.every_point_critical = true;
      cert.has_critical_points = true;
      cert.method = "dR/dc and dR/dt vanish identically: every point of the domain is critical";
      return cert;
    }
    cert.critical_lines = real_roots(dh, d.t_min, d.t_max);
    cert.has_critical_points = !cert.critical_lines.empty();
    cert.method = "dR/dc vanishes identically; critical lines at the roots of dR/dt";
    return cert;
  }

  const Extremum lowest = minimum_on(g, d.t_min, d.t_max);
  cert.min_dRdc = lowest.value;
  cert.min_dRdc_at = lowest.at;
  cert.dRdc_roots = real_roots(g, d.t_min, d.t_max);
  const Polynomial dg = g.derivative();
  for (double t : cert.dRdc_roots) {
    const double slope = dg(t);
    const double offset = dh(t);
    if (slope == 0.0) {
      if (offset == 0.0) cert.critical_lines.push_back(t);
      continue;
    }
    const double c = -offset / slope;
    if (c >= d.c_min && c <= d.c_max) cert.critical_points.push_back({t, c});
  }
  cert.has_critical_points = !cert.critical_points.empty() || !cert.critical_lines.empty();
  cert.method = "Sturm-sequence isolation of dR/dc = a(t) on [" + Fixed(d.t_min, 4) + ", " +
                Fixed(d.t_max, 4) + "]: " + std::to_string(cert.dRdc_roots.size()) +
                " root(s); min a(t) = " + Fixed(cert.min_dRdc) + " at t = " +
                Fixed(cert.min_dRdc_at) + "; each root solved for c in c*a'(t) + b'(t) = 0";
  return cert;
}

double integral(const RiskField& field, const Rectangle& domain) {
  domain.validate();
  double total = 0.0;
  const auto terms = field.c_powers();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const double p = static_cast<double>(j + 1);
    const double c_part = (std::pow(domain.c_max, p) - std::pow(domain.c_min, p)) / p;
    total += c_part * terms[j].integrate(domain.t_min, domain.t_max);
  }
  return total;
}

double mean_risk(const RiskField& field, const Rectangle& domain) {
  return integral(field, domain) / domain.area();
}

RegionArea monte_carlo_region_area(const RiskField& field, const Rectangle& domain,
                                   double threshold, const MonteCarloOptions& options) {
  domain.validate();
  if (options.samples == 0) throw DomainError("Monte Carlo needs at least one sample");
  std::mt19937_64 rng(options.seed);
  const double wt = domain.t_max - domain.t_min;
  const double wc = domain.c_max - domain.c_min;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const double t = domain.t_min + wt * UnitDouble(rng);
    const double c = domain.c_min + wc * UnitDouble(rng);
    if (field(t, c) >= threshold) ++hits;
  }
  const double n = static_cast<double>(options.samples);
  const double p = static_cast<double>(hits) / n;
  return {domain.area() * p, domain.area() * std::sqrt(p * (1.0 - p) / n),
          "monte-carlo (" + std::to_string(options.samples) + " samples, seed " +
              std::to_string(options.seed) + ")"};
}

RegionArea risk_region_area(const RiskField& field, const Rectangle& domain, double threshold,
                            const MonteCarloOptions& fallback) {
  domain.validate();
  if (!field.is_affine_in_c()) {
    return monte_carlo_region_area(field, domain, threshold, fallback);
  }
  const Polynomial& g = field.slope();
  const Polynomial& h = field.intercept();
  // R(t, c_edge) - threshold for both horizontal edges. Between consecutive
  // roots of these two polynomials the level set crosses the strip
  // [c_min, c_max] in a fixed pattern.
  const Polynomial lower = h + domain.c_min * g - Polynomial{threshold};
  const Polynomial upper = h + domain.c_max * g - Polynomial{threshold};
  std::vector<double> cuts{domain.t_min, domain.t_max};
  for (const auto* q : {&lower, &upper}) {
    for (double r : real_roots(*q, domain.t_min, domain.t_max, 1e-13)) cuts.push_back(r);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double width = domain.c_max - domain.c_min;
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi);
    const bool lower_in = lower(mid) >= 0.0;
    const bool upper_in = upper(mid) >= 0.0;
    if (lower_in && upper_in) {
      area += width * (hi - lo);
    } else if (lower_in != upper_in) {
      // g cannot vanish here: R(t,c_min) and R(t,c_max) straddle the threshold.
      auto crossing = [&](double t) {
        return std::clamp((threshold - h(t)) / g(t), domain.c_min, domain.c_max);
      };
      const std::function<double(double)> strip =
          upper_in ? std::function<double(double)>([&](double t) { return domain.c_max - crossing(t); })
                   : std::function<double(double)>([&](double t) { return crossing(t) - domain.c_min; });
      area += adaptive_simpson(strip, lo, hi, 1e-11);
    }
  }
  return {area, 0.0, "exact level-set width integrated by adaptive Simpson"};
}

double risk_probability(const RiskField& field, const Rectangle& domain, double threshold,
                        const MonteCarloOptions& fallback) {
  return risk_region_area(field, domain, threshold, fallback).area / domain.area();
}

namespace {

struct Lattice {
  int nt;
  int nc;
  Rectangle domain;
  std::vector<double> values;  // (nt+1) x (nc+1), index i * (nc+1) + j

  double t(int i) const { return domain.t_min + (domain.t_max - domain.t_min) * i / nt; }
  double c(int j) const { return domain.c_min + (domain.c_max - domain.c_min) * j / nc; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * (nc + 1) + j]; }
};

Lattice Sample(const RiskField& field, const Rectangle& domain, GridSpec grid) {
  domain.validate();
  if (grid.cells_t < 16 || grid.cells_c < 16) {
    throw DomainError("level-curve grid needs at least 16 cells per axis");
  }
  Lattice lat{grid.cells_t, grid.cells_c, domain, {}};
  lat.values.resize(static_cast<std::size_t>(lat.nt + 1) * (lat.nc + 1));
  for (int i = 0; i <= lat.nt; ++i) {
    for (int j = 0; j <= lat.nc; ++j) {
      lat.values[static_cast<std::size_t>(i) * (lat.nc + 1) + j] = field(lat.t(i), lat.c(j));
    }
  }
  return lat;
}

// Corner order: 0 (i,j), 1 (i+1,j), 2 (i+1,j+1), 3 (i,j+1).
// Edge k joins corner k and corner (k+1) % 4.
constexpr int kCornerDi[4] = {0, 1, 1, 0};
constexpr int kCornerDj[4] = {0, 0, 1, 1};

// Global id of edge k of cell (i, j); shared edges get the same id.
long EdgeId(const Lattice& lat, int i, int j, int k) {
  const long horizontal = static_cast<long>(lat.nt) * (lat.nc + 1);
  switch (k) {
    case 0: return static_cast<long>(j) * lat.nt + i;
    case 2: return static_cast<long>(j + 1) * lat.nt + i;
    case 1: return horizontal + static_cast<long>(j) * (lat.nt + 1) + (i + 1);
    default: return horizontal + static_cast<long>(j) * (lat.nt + 1) + i;
  }
}

Point EdgePoint(const Lattice& lat, int i, int j, int k, double level) {
  // Orient every edge from its lower-index lattice vertex so both cells
  // sharing it compute the identical point.
  int ai = i + kCornerDi[k], aj = j + kCornerDj[k];
  int bi = i + kCornerDi[(k + 1) % 4], bj = j + kCornerDj[(k + 1) % 4];
  if (ai > bi || aj > bj) {
    std::swap(ai, bi);
    std::swap(aj, bj);
  }
  const double va = lat.at(ai, aj);
  const double vb = lat.at(bi, bj);
  const double f = (level - va) / (vb - va);
  return {lat.t(ai) + f * (lat.t(bi) - lat.t(ai)), lat.c(aj) + f * (lat.c(bj) - lat.c(aj))};
}

struct Segment {
  long edge_a;
  long edge_b;
  Point a;
  Point b;
};

std::vector<Segment> MarchSegments(const Lattice& lat, double level) {
  std::vector<Segment> segments;
  for (int j = 0; j < lat.nc; ++j) {
    for (int i = 0; i < lat.nt; ++i) {
      int index = 0;
      double v[4];
      for (int k = 0; k < 4; ++k) {
        v[k] = lat.at(i + kCornerDi[k], j + kCornerDj[k]);
        if (v[k] >= level) index |= 1 << k;
      }
      if (index == 0 || index == 15) continue;
      int pairs[2][2];
      int count = 1;
      switch (index) {
        case 1: case 14: pairs[0][0] = 3; pairs[0][1] = 0; break;
        case 2: case 13: pairs[0][0] = 0; pairs[0][1] = 1; break;
        case 3: case 12: pairs[0][0] = 3; pairs[0][1] = 1; break;
        case 4: case 11: pairs[0][0] = 1; pairs[0][1] = 2; break;
        case 6: case 9:  pairs[0][0] = 0; pairs[0][1] = 2; break;
        case 7: case 8:  pairs[0][0] = 3; pairs[0][1] = 2; break;
        case 5:
        case 10: {
          const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
          const bool centre_in = centre >= level;
          // Isolate the two corners that are not connected through the centre.
          const bool cut_odd = (index == 5) == centre_in;
          count = 2;
          if (cut_odd) {  // corners 1 and 3
            pairs[0][0] = 0; pairs[0][1] = 1;
            pairs[1][0] = 2; pairs[1][1] = 3;
          } else {        // corners 0 and 2
            pairs[0][0] = 3; pairs[0][1] = 0;
            pairs[1][0] = 1; pairs[1][1] = 2;
          }
          break;
        }
        default: break;
      }
      for (int s = 0; s < count; ++s) {
        const int ka = pairs[s][0], kb = pairs[s][1];
        segments.push_back({EdgeId(lat, i, j, ka), EdgeId(lat, i, j, kb),
                            EdgePoint(lat, i, j, ka, level), EdgePoint(lat, i, j, kb, level)});
      }
    }
  }
  return segments;
}

std::vector<std::vector<Point>> Stitch(const std::vector<Segment>& segments) {
  std::unordered_map<long, std::vector<std::size_t>> by_edge;
  by_edge.reserve(segments.size() * 2);
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge[segments[s].edge_a].push_back(s);
    by_edge[segments[s].edge_b].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<std::vector<Point>> chains;

  auto walk = [&](std::size_t first, long start_edge) {
    std::vector<Point> chain;
    std::size_t current = first;
    long entry = start_edge;
    chain.push_back(segments[current].edge_a == entry ? segments[current].a : segments[current].b);
    while (true) {
      used[current] = true;
      const Segment& seg = segments[current];
      const bool forward = seg.edge_a == entry;
      const long exit = forward ? seg.edge_b : seg.edge_a;
      chain.push_back(forward ? seg.b : seg.a);
      std::size_t next = segments.size();
      for (std::size_t cand : by_edge[exit]) {
        if (!used[cand]) {
          next = cand;
          break;
        }
      }
      if (next == segments.size()) break;
      current = next;
      entry = exit;
    }
    chains.push_back(std::move(chain));
  };

  // Open chains start on a boundary edge, which only one segment touches.
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    if (by_edge[segments[s].edge_a].size() == 1) walk(s, segments[s].edge_a);
    else if (by_edge[segments[s].edge_b].size() == 1) walk(s, segments[s].edge_b);
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) walk(s, segments[s].edge_a);
  }
  return chains;
}

}  // namespace

std::vector<LevelCurveSet> level_curves(const RiskField& field, const Rectangle& domain,
                                        const std::vector<double>& levels, GridSpec grid) {
  const Lattice lat = Sample(field, domain, grid);
  std::vector<LevelCurveSet> out;
  out.reserve(levels.size());
  for (double level : levels) {
    out.push_back({level, Stitch(MarchSegments(lat, level))});
  }
  return out;
}

double level_region_area(const RiskField& field, const Rectangle& domain, double level,
                         GridSpec grid) {
  const Lattice lat = Sample(field, domain, grid);
  double total = 0.0;
  std::vector<Point> poly;
  for (int j = 0; j < lat.nc; ++j) {
    for (int i = 0; i < lat.nt; ++i) {
      poly.clear();
      for (int k = 0; k < 4; ++k) {
        const int ci = i + kCornerDi[k], cj = j + kCornerDj[k];
        const int ni = i + kCornerDi[(k + 1) % 4], nj = j + kCornerDj[(k + 1) % 4];
        const bool in = lat.at(ci, cj) >= level;
        const bool next_in = lat.at(ni, nj) >= level;
        if (in) poly.push_back({lat.t(ci), lat.c(cj)});
        if (in != next_in) poly.push_back(EdgePoint(lat, i, j, k, level));
      }
      double twice = 0.0;
      for (std::size_t p = 0; p < poly.size(); ++p) {
        const Point& a = poly[p];
        const Point& b = poly[(p + 1) % poly.size()];
        twice += a.t * b.c - b.t * a.c;
      }
      total += 0.5 * std::fabs(twice);
    }
  }
  return total;
}

}  // namespace riskfield
