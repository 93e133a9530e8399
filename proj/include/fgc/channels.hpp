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

#ifndef FGC_CHANNELS_HPP_
#define FGC_CHANNELS_HPP_

#include "fgc/states.hpp"

namespace fgc {

// Fermionic Gaussian channel, acting on covariance matrices as
// gamma -> A gamma A^T + B. Complete positivity: 1 - iB - AA^T >= 0, which
// also forces B to vanish on the perfectly transmitted directions.
struct GaussianChannel {
  int n_in = 0;
  int n_out = 0;
  Matrix a;  // 2 n_out x 2 n_in
  Matrix b;  // 2 n_out x 2 n_out, antisymmetric
};

GaussianChannel make_channel(const Matrix& a, const Matrix& b);

GaussianChannel identity_channel(int n);

struct ChannelValidity {
  bool valid = false;
  double min_eig = 0.0;
};

ChannelValidity validate(const GaussianChannel& t);

CovarianceMatrix apply(const GaussianChannel& t, const CovarianceMatrix& gamma);

// t2 after t1.
GaussianChannel compose(const GaussianChannel& t2, const GaussianChannel& t1);

GaussianChannel direct_sum(const GaussianChannel& t1, const GaussianChannel& t2);

// Channel conjugated by orthogonal rotations: gamma -> o_post (A (o_pre gamma
// o_pre^T) A^T + B) o_post^T collapsed into a single channel.
GaussianChannel rotate_channel(const GaussianChannel& t, const Matrix& o_post, const Matrix& o_pre);

// T = U_{O1} o T_std o U_{O2} with A_std the padded diagonal of singular
// values (descending, in [0, 1]) and B_std = O1^T B O1. A determinant sign
// that cannot be absorbed into the padding lands in the pre-rotation, which
// may then have det -1.
struct ChannelStandardForm {
  int n_in = 0;
  int n_out = 0;
  OrthogonalFactor pre_rotation;   // O2, 2 n_in
  OrthogonalFactor post_rotation;  // O1, 2 n_out
  Vector d;                        // length 2 min(n_in, n_out)
  Matrix b_std;

  GaussianChannel standard_channel() const;
  GaussianChannel reconstruct() const;
};

ChannelStandardForm standard_form(const GaussianChannel& t);

// Choi-Jamiolkowski state: channel applied to the first half of the
// maximally entangled state on 2 n_in modes. Output modes first, then the
// untouched reference modes.
CovarianceMatrix choi_cm(const GaussianChannel& t);

// Minimal pure-environment size in modes, 2n - dim ker(1 - AA^T - iB),
// for square channels.
int choi_rank_modes(const GaussianChannel& t);

// Orthogonal system-environment coupling reproducing the channel when the
// environment (pure state gamma_env, 2 n_out - pure_env_modes modes) is
// traced out. b_prime is the environment state seen through the coupling,
// completed with vacuum pairs on the uncoupled directions.
struct Dilation {
  Matrix o_se;                 // square, 2 (n_in + 2 n_out - pure_env_modes)
  CovarianceMatrix gamma_env;  // pure
  int pure_env_modes = 0;      // pure modes of b_prime
  CovarianceMatrix b_prime;    // n_out modes
};

Dilation dilation(const GaussianChannel& t);

// Channel into the purifying environment: n_in -> n_in + n_out - pure_env_modes.
GaussianChannel complement(const GaussianChannel& t);

// Strips floor(L/2) perfectly transmitted modes (L = count of unit singular
// values) off a standard-form channel; the remainder keeps at most one unit
// singular value.
struct PerfectSplit {
  int perfect_modes = 0;
  GaussianChannel remainder;
};

PerfectSplit split_perfect_modes(const GaussianChannel& t_std);

}  // namespace fgc

#endif  // FGC_CHANNELS_HPP_
