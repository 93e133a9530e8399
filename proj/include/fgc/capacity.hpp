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

#ifndef FGC_CAPACITY_HPP_
#define FGC_CAPACITY_HPP_

#include <string>
#include <vector>

#include "fgc/channels.hpp"

namespace fgc {

// Attenuation channel gamma -> t gamma + (1 - t) J on n modes. Parameterized
// by the transmission t: degradable iff t >= 1/2.
GaussianChannel lossy_channel(double t, int n = 1);

// Coherent information of the lossy channel for the one-mode input
// gamma = lambda J, in bits:
//   H2((1 + mu_out) / 2) - H2((1 + mu_env) / 2),
// with mu_out = t lambda + (1 - t) and mu_env = (1 - t) lambda + t.
double coherent_information(double t, double lambda);

struct CapacityResult {
  double q = 0.0;
  double lambda_opt = 0.0;
  int grid_points = 0;
  double tolerance = 0.0;
  std::string reason;
};

// Quantum capacity of the single-mode lossy channel: zero for t <= 1/2
// (antidegradable), otherwise the maximum of the coherent information over
// lambda in [-1, 1] (coarse grid plus golden-section refinement).
CapacityResult quantum_capacity_lossy(double t);

struct CapacityPoint {
  double t = 0.0;
  double q = 0.0;
  double lambda_opt = 0.0;
};

std::vector<CapacityPoint> capacity_curve(double t_min, double t_max, int steps);

// CSV rows "t,Q,lambda_opt" with 12 significant digits and LF line endings.
std::string capacity_curve_csv(const std::vector<CapacityPoint>& points);

}  // namespace fgc

#endif  // FGC_CAPACITY_HPP_
