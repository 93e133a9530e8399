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

#ifndef FGC_LINALG_HPP_
#define FGC_LINALG_HPP_

#include <Eigen/Dense>
#include <vector>

#include "fgc/errors.hpp"

namespace fgc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

// Shared numerical conventions. Pure-mode / perfect-transmission detection
// uses the same cutoff everywhere so that dilation, complement and the
// classifier never disagree about which modes are pure.
namespace tol {
inline constexpr double orthogonality = 1e-9;
inline constexpr double cp_eig = 1e-9;           // CP / CM validity eigenvalue slack
inline constexpr double pure_mode = 1e-9;        // |lambda| >= 1 - pure_mode is pure
inline constexpr double degeneracy_group = 1e-8; // singular values closer than this form a block
inline constexpr double block_zero = 1e-8;       // cross-block entries below this count as zero
inline constexpr double kernel_eig = 1e-8;       // kernel detection for Choi rank
}  // namespace tol

inline constexpr double kInvSqrt2 = 0.7071067811865475244;

// 2x2 generator of Majorana-plane rotations, [[0,-1],[1,0]].
Matrix j_block();
// Direct sum of n copies of j_block(), size 2n.
Matrix j_matrix(int n);

double max_abs(const Matrix& m);
double max_abs(const CMatrix& m);

bool is_antisymmetric(const Matrix& m, double rel_tol = 1e-10);

// Orthogonal matrix together with its determinant sign.
struct OrthogonalFactor {
  Matrix matrix;
  int det_sign = 1;
};

// Checks O^T O = 1 within tol::orthogonality and records the determinant sign.
OrthogonalFactor make_orthogonal(const Matrix& m);

// Canonical form of a real antisymmetric matrix: M = O (sum_j lambda_j J) O^T
// with O special orthogonal and lambdas sorted descending. The determinant
// constraint is absorbed by flipping the sign of the last lambda if needed,
// so at most the final lambda is negative.
struct AntisymCanonical {
  OrthogonalFactor rotation;  // 2n x 2n, det +1
  std::vector<double> lambdas;

  Matrix reconstruct() const;
};

AntisymCanonical antisym_canonical(const Matrix& m);

// SVD with special-orthogonal factors: A = O1 * pad(D) * O2, both factors of
// determinant +1 and D descending. For rectangular A the determinant signs
// are absorbed into the zero padding; for square A with det A < 0 the last
// entry of D comes out negative.
struct SvdSo {
  OrthogonalFactor o1;  // 2m x 2m, det +1
  Vector d;             // length 2*min(m,n), descending by absolute value
  OrthogonalFactor o2;  // 2n x 2n, det +1

  Matrix padded_d(Eigen::Index rows, Eigen::Index cols) const;
  Matrix reconstruct() const;
};

SvdSo svd_so(const Matrix& a);

struct PsdVerdict {
  bool is_psd = false;
  double min_eig = 0.0;
};

// Minimum eigenvalue of a Hermitian matrix; PSD up to -tol*max(1, |H|).
PsdVerdict psd_min_eig(const CMatrix& h, double tolerance = tol::cp_eig);
PsdVerdict psd_min_eig(const Matrix& h, double tolerance = tol::cp_eig);

// X symmetric, Y antisymmetric: decides X + iY >= 0. Equivalent to the PSD
// test on the doubled real matrix [[X, Y], [-Y, X]].
bool complex_form_psd(const Matrix& x, const Matrix& y, double tolerance = tol::cp_eig);

// S^(-1/2) on range(S), zero on the kernel. Eigenvalues below
// 1e-10 * max_eig are treated as kernel; below -1e-8 * |S| is an error.
Matrix pinv_sqrt(const Matrix& s);

// Square root of a symmetric PSD matrix (same clipping as pinv_sqrt).
Matrix psd_sqrt(const Matrix& s);

// Cosine-sine decomposition of an orthogonal matrix partitioned into the
// first 2n and the remaining 2m coordinates (n <= m):
//   O = (Q1 + Q2) [[D, S, 0], [-S, D, 0], [0, 0, 1]] (R1 + R2),
// with S = sqrt(1 - D^2) and 1 >= D >= 0 diagonal.
struct CsDecomposition {
  Matrix q1, q2;  // 2n x 2n and 2m x 2m
  Vector d;       // length 2n, in [0, 1]
  Matrix r1, r2;

  Matrix middle_factor() const;
  Matrix reconstruct() const;
};

CsDecomposition cs_decompose(const Matrix& o, int n, int m);

// Principal logarithm of a special orthogonal matrix: antisymmetric h with
// exp(h) = O and rotation angles in (-pi, pi].
Matrix so_log(const Matrix& o);

// exp(h) for antisymmetric h, via the canonical form.
Matrix antisym_exp(const Matrix& h);

// Eigenvalue inequality nu_k <= lambda_i + mu_j (descending eigenvalues of
// X, Y, X + Y; indices 1-based with i + j = k + 1), with 1e-10 slack.
bool horn_check(const CMatrix& x, const CMatrix& y, int i, int j, int k);

}  // namespace fgc

#endif  // FGC_LINALG_HPP_
