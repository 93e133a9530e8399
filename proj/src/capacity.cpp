// Copyright 2026 The fgc Authors
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

#include "fgc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fgc {

GaussianChannel lossy_channel(double t, int n) {
  if (t < 0.0 || t > 1.0) raise(Errc::OutOfRange, "transmission must lie in [0, 1]");
  if (n < 1) raise(Errc::OutOfRange, "mode count must be positive");
  return make_channel(std::sqrt(t) * Matrix::Identity(2 * n, 2 * n), (1.0 - t) * j_matrix(n));
}

double coherent_information(double t, double lambda) {
  if (t < 0.0 || t > 1.0) raise(Errc::OutOfRange, "transmission must lie in [0, 1]");
  if (lambda < -1.0 || lambda > 1.0) raise(Errc::OutOfRange, "lambda must lie in [-1, 1]");
  const double mu_out = t * lambda + (1.0 - t);
  const double mu_env = (1.0 - t) * lambda + t;
  return binary_entropy(0.5 * (1.0 + mu_out)) - binary_entropy(0.5 * (1.0 + mu_env));
}

namespace {

// Golden-section maximization on [lo, hi] down to |hi - lo| < 1e-8.
std::pair<double, double> golden_max(double t, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = coherent_information(t, x1);
  double f2 = coherent_information(t, x2);
  while (b - a > 1e-8) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = coherent_information(t, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = coherent_information(t, x1);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, coherent_information(t, x)};
}

}  // namespace

CapacityResult quantum_capacity_lossy(double t) {
  if (t < 0.0 || t > 1.0) raise(Errc::OutOfRange, "transmission must lie in [0, 1]");
  CapacityResult result;
  result.tolerance = 1e-8;
  if (t <= 0.5) {
    result.q = 0.0;
    result.lambda_opt = 0.0;
    result.grid_points = 0;
    result.reason = "antidegradable";
    return result;
  }
  // Coarse global grid, then golden-section refinement around the best cell.
  const int grid = 1001;
  int best = 0;
  double best_val = coherent_information(t, -1.0);
  for (int i = 1; i < grid; ++i) {
    const double lambda = -1.0 + 2.0 * i / (grid - 1);
    const double val = coherent_information(t, lambda);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  const double step = 2.0 / (grid - 1);
  const double lo = std::max(-1.0, -1.0 + best * step - step);
  const double hi = std::min(1.0, -1.0 + best * step + step);
  auto [lambda_opt, value] = golden_max(t, lo, hi);
  result.q = std::max(value, best_val);
  result.lambda_opt = value >= best_val ? lambda_opt : -1.0 + best * step;
  result.grid_points = grid;
  result.reason = "coherent information maximum";
  return result;
}

std::vector<CapacityPoint> capacity_curve(double t_min, double t_max, int steps) {
  if (t_min < 0.0 || t_max > 1.0 || t_min > t_max) raise(Errc::OutOfRange, "range must lie in [0, 1]");
  if (steps < 1 || (steps < 2 && t_min != t_max)) raise(Errc::OutOfRange, "need at least two steps");
  std::vector<CapacityPoint> points;
  points.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
    CapacityResult r = quantum_capacity_lossy(std::clamp(t, 0.0, 1.0));
    points.push_back(CapacityPoint{t, r.q, r.lambda_opt});
  }
  return points;
}

std::string capacity_curve_csv(const std::vector<CapacityPoint>& points) {
  std::string csv = "t,Q,lambda_opt\n";
  char row[128];
  for (const auto& p : points) {
    std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g\n", p.t, p.q, p.lambda_opt);
    csv += row;
  }
  return csv;
}

}  // namespace fgc
