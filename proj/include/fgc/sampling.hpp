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

#ifndef FGC_SAMPLING_HPP_
#define FGC_SAMPLING_HPP_

#include <random>

#include "fgc/channels.hpp"

namespace fgc {

using Rng = std::mt19937_64;

Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Haar-like random rotation via QR of a Gaussian matrix.
Matrix random_rotation(Eigen::Index dim, Rng& rng, bool special = true);

Matrix random_antisymmetric(Eigen::Index dim, Rng& rng, double scale = 1.0);

CMatrix random_hermitian(Eigen::Index dim, Rng& rng, double scale = 1.0);

// Random valid covariance matrix: rotate a canonical form with lambdas drawn
// uniformly from [-1, 1] (or +-1 for pure states).
CovarianceMatrix random_cm(int n, Rng& rng, bool pure = false);

struct ChannelOptions {
  bool pure_environment = false;  // draw B from a pure state (small dilations)
  double min_singular = 0.0;      // lower bound on the singular values of A
};

// Valid channel by construction: A = O1 diag(s) O2 with s in
// [min_singular, 1], B = sqrt(1 - AA^T) gamma sqrt(1 - AA^T) for a random
// valid covariance matrix gamma.
GaussianChannel random_channel(int n_in, int n_out, Rng& rng, const ChannelOptions& opts = {});

}  // namespace fgc

#endif  // FGC_SAMPLING_HPP_
