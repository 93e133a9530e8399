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

#ifndef FGC_FOCK_HPP_
#define FGC_FOCK_HPP_

#include <vector>

#include "fgc/channels.hpp"

namespace fgc::fock {

// Dense brute-force layer on 2^n-dimensional Fock space, used to verify the
// covariance-matrix algebra operator by operator. Mode counts are capped at
// 7 (dimension 128) to keep every check at desk scale.
inline constexpr int kMaxModes = 7;

// Jordan-Wigner Majorana operators: c_{2k} = Z^(k) X, c_{2k+1} = Z^(k) Y
// (0-based site k, site 0 the most significant tensor factor). The vacuum
// |0...0> then has covariance matrix J.
struct MajoranaSet {
  int n = 0;
  std::vector<CMatrix> c;  // 2n Hermitian operators
};

MajoranaSet majoranas(int n);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// |0...0><0...0| on n modes.
CMatrix vacuum_state(int n);

// Total parity operator (product of per-site Z).
CMatrix parity_operator(int n);

void require_density_matrix(const CMatrix& rho);

// Gaussian state with the given covariance matrix (n <= 6).
CMatrix state_from_cm(const CovarianceMatrix& gamma);

// gamma_kl = (i/2) tr(rho [c_k, c_l]).
CovarianceMatrix cm_from_state(const CMatrix& rho, const MajoranaSet& maj);

// Gaussian unitary with U c_k U^dag = sum_l O_kl c_l. Orthogonals with
// det -1 are realized by prefixing the last Majorana operator.
CMatrix unitary_from_orthogonal(const Matrix& o);

// Partial trace over the trailing sites.
CMatrix trace_out_back(const CMatrix& rho, int keep_sites, int total_sites);

// Exact channel action: adjoin the pure environment of the dilation,
// conjugate by the coupling unitary, trace out the environment.
CMatrix apply_channel_dense(const GaussianChannel& t, const CMatrix& rho);

// Von Neumann entropy in bits; eigenvalues below 1e-14 are skipped.
double entropy_dense(const CMatrix& rho);

// tr(rho c_a c_b c_c c_d), for Wick-theorem checks.
std::complex<double> fourth_moment(const CMatrix& rho, const MajoranaSet& maj, int a, int b, int c,
                                   int d);

}  // namespace fgc::fock

#endif  // FGC_FOCK_HPP_
