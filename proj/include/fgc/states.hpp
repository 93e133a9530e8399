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

#ifndef FGC_STATES_HPP_
#define FGC_STATES_HPP_

#include <vector>

#include "fgc/linalg.hpp"

namespace fgc {

// Fermionic Gaussian state of n modes, represented by the real antisymmetric
// 2n x 2n matrix of Majorana second moments. Valid states have all canonical
// values lambda_j in [-1, 1].
struct CovarianceMatrix {
  int modes = 0;
  Matrix mat;
};

CovarianceMatrix make_cm(const Matrix& m);

// Validity: 1 + i*gamma >= 0, i.e. all |lambda_j| <= 1 (within tolerance).
bool is_valid_cm(const CovarianceMatrix& gamma);

// Max-abs entry of gamma^2 + 1; zero exactly for pure states.
double purity_defect(const CovarianceMatrix& gamma);

bool is_pure(const CovarianceMatrix& gamma, double tolerance = 1e-8);

// Binary entropy in bits.
double binary_entropy(double x);

// Von Neumann entropy in bits: sum_j H2((1 + lambda_j) / 2).
double entropy_bits(const CovarianceMatrix& gamma);

// Maximally entangled pure state of 2n modes: [[0, K], [-K, 0]] with
// K = sum_n sigma_x.
CovarianceMatrix max_entangled(int n);

// Bipartite normal form of a pure state on n + m modes. Local rotations
// O_A, O_B (special orthogonal) bring the state to
//   [ diag(pure A signs x J) . . . ]
//   [ .  Lambda   K        .      ]
//   [ . -K        Lambda   .      ]
//   [ .  .        .  diag(pure B signs x J) ]
// with Lambda = sum_j lambda_j J over the entangled pairs, K = sum_j kappa_j
// sigma_x, lambda^2 + kappa^2 = 1, kappa >= 0 and |lambda| descending. Pure
// modes keep their signs (+-1); reconstruct() applies O_A + O_B.
struct SchmidtForm {
  int left_modes = 0;
  int right_modes = 0;
  int pure_left = 0;
  std::vector<double> lambdas;  // entangled pairs only
  std::vector<double> kappas;
  std::vector<double> pure_left_signs;
  std::vector<double> pure_right_signs;
  OrthogonalFactor rotation_left;
  OrthogonalFactor rotation_right;

  Matrix pattern() const;
  Matrix reconstruct() const;
};

SchmidtForm schmidt_form(const CovarianceMatrix& gamma, int n, int m);

// Standard purification: appends one partner mode for every mixed mode
// (canonical |lambda| < 1 - tol), leaving the original state as the
// upper-left block. Pure input comes back unchanged.
CovarianceMatrix purify(const CovarianceMatrix& gamma);

// Number of canonical values with |lambda| >= 1 - tol::pure_mode.
int count_pure_modes(const std::vector<double>& lambdas);

}  // namespace fgc

#endif  // FGC_STATES_HPP_
