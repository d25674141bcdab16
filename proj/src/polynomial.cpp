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

#include "riskfield/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "riskfield/error.hpp"

namespace riskfield {

int Polynomial::degree() const noexcept {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] != 0.0) return k;
  }
  return -1;
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return Polynomial(std::move(out));
}

double Polynomial::integrate(double lo, double hi) const {
  const Polynomial anti = antiderivative();
  return anti(hi) - anti(lo);
}

Polynomial Polynomial::trimmed() const {
  const int d = degree();
  return Polynomial(std::vector<double>(coeffs_.begin(), coeffs_.begin() + (d + 1)));
}

std::string Polynomial::to_descending_string(int decimals, const char* variable) const {
  const int d = degree();
  if (d < 0) return "0";
  std::string out;
  char buf[64];
  for (int k = d; k >= 0; --k) {
    const double c = coeffs_[k];
    if (c == 0.0 && k != 0) continue;
    if (c == 0.0 && !out.empty()) continue;
    const double mag = std::fabs(c);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, mag);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += buf;
    if (k >= 1) {
      out += " ";
      out += variable;
    }
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(std::max(lhs.size(), rhs.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs.coefficient(k) + rhs.coefficient(k);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> out(std::max(lhs.size(), rhs.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs.coefficient(k) - rhs.coefficient(k);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.size() == 0 || rhs.size() == 0) return Polynomial{};
  std::vector<double> out(lhs.size() + rhs.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(double scale, const Polynomial& p) {
  std::vector<double> out(p.coeffs_);
  for (double& c : out) c *= scale;
  return Polynomial(std::move(out));
}

namespace {

// Working representation for the Sturm chain: trimmed, scaled to unit
// max-norm so remainders neither overflow nor vanish spuriously.
std::vector<double> Normalized(std::vector<double> c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return {};
  for (double& v : c) v /= scale;
  // Coefficients far below the leading scale are roundoff from the
  // remainder sequence.
  while (!c.empty() && std::fabs(c.back()) <= 1e-13) c.pop_back();
  return c;
}

double Eval(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Remainder of num / den (den nonempty, leading coefficient nonzero).
std::vector<double> Remainder(std::vector<double> num, const std::vector<double>& den) {
  const std::size_t dn = den.size();
  while (num.size() >= dn) {
    const double factor = num.back() / den.back();
    const std::size_t shift = num.size() - dn;
    for (std::size_t k = 0; k < dn; ++k) num[shift + k] -= factor * den[k];
    num.pop_back();
  }
  return num;
}

std::vector<std::vector<double>> SturmChain(const Polynomial& p) {
  std::vector<std::vector<double>> chain;
  const auto c = p.coefficients();
  auto p0 = Normalized(std::vector<double>(c.begin(), c.end()));
  if (p0.empty()) return chain;
  chain.push_back(p0);
  const Polynomial dp = p.derivative();
  const auto d = dp.coefficients();
  auto p1 = Normalized(std::vector<double>(d.begin(), d.end()));
  if (p1.empty()) return chain;
  chain.push_back(p1);
  while (chain.back().size() > 1) {
    auto r = Remainder(chain[chain.size() - 2], chain.back());
    // Dividends have unit max-norm, so a remainder at roundoff level means
    // the previous entry is the gcd: p has a repeated root.
    double size = 0.0;
    for (double& v : r) {
      v = -v;
      size = std::max(size, std::fabs(v));
    }
    if (size <= 1e-10) break;
    r = Normalized(std::move(r));
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int SignVariations(const std::vector<std::vector<double>>& chain, double t) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const double v = Eval(q, t);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

double Bisect(const Polynomial& p, double lo, double hi, double tolerance) {
  double flo = p(lo);
  if (flo == 0.0) return lo;
  if (p(hi) == 0.0) return hi;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Refine the single distinct root known to lie in (lo, hi].
double RefineIsolated(const Polynomial& p, double lo, double hi, double tolerance) {
  const double fhi = p(hi);
  if (fhi == 0.0) return hi;
  // A root sitting exactly on lo is not part of (lo, hi]; step off it.
  if (p(lo) == 0.0) lo += 1e-7 * (hi - lo);
  const double flo = p(lo);
  if (flo != 0.0 && (flo < 0) != (fhi < 0)) return Bisect(p, lo, hi, tolerance);
  // No sign change: an even-multiplicity root, which is also a root of p'.
  const auto candidates = real_roots(p.derivative(), lo, hi, tolerance);
  double best = 0.5 * (lo + hi);
  double best_val = std::numeric_limits<double>::infinity();
  for (double r : candidates) {
    if (r <= lo) continue;
    const double v = std::fabs(p(r));
    if (v < best_val) {
      best_val = v;
      best = r;
    }
  }
  return best;
}

void Isolate(const Polynomial& p, const std::vector<std::vector<double>>& chain, double lo, double hi,
             int count, double tolerance, std::vector<double>& out, int depth) {
  if (count <= 0) return;
  if (count == 1 || hi - lo <= tolerance || depth > 200) {
    out.push_back(RefineIsolated(p, lo, hi, tolerance));
    return;
  }
  const double mid = 0.5 * (lo + hi);
  const int left = SignVariations(chain, lo) - SignVariations(chain, mid);
  Isolate(p, chain, lo, mid, left, tolerance, out, depth + 1);
  Isolate(p, chain, mid, hi, count - left, tolerance, out, depth + 1);
}

}  // namespace

int count_real_roots(const Polynomial& p, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("count_real_roots: empty interval");
  const auto chain = SturmChain(p);
  if (chain.size() <= 1) return 0;
  return SignVariations(chain, lo) - SignVariations(chain, hi);
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi, double tolerance) {
  if (!(lo <= hi)) throw DomainError("real_roots: invalid interval");
  std::vector<double> out;
  if (p.degree() <= 0) return out;
  if (p(lo) == 0.0) out.push_back(lo);
  if (lo == hi) return out;
  const auto chain = SturmChain(p);
  const int count = SignVariations(chain, lo) - SignVariations(chain, hi);
  Isolate(p, chain, lo, hi, count, tolerance, out, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [tolerance](double a, double b) { return std::fabs(a - b) <= tolerance; }),
            out.end());
  return out;
}

namespace {

template <typename Better>
Extremum Extremize(const Polynomial& p, double lo, double hi, Better better) {
  if (!(lo <= hi)) throw DomainError("extremum: invalid interval");
  Extremum best{p(lo), lo};
  auto consider = [&](double t) {
    const double v = p(t);
    if (better(v, best.value)) best = {v, t};
  };
  consider(hi);
  const Polynomial d = p.derivative();
  if (d.degree() >= 1) {
    for (double t : real_roots(d, lo, hi)) consider(t);
  }
  return best;
}

}  // namespace

Extremum minimum_on(const Polynomial& p, double lo, double hi) {
  return Extremize(p, lo, hi, [](double a, double b) { return a < b; });
}

Extremum maximum_on(const Polynomial& p, double lo, double hi) {
  return Extremize(p, lo, hi, [](double a, double b) { return a > b; });
}

}  // namespace riskfield
