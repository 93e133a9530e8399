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

#include "fgc/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace fgc {

namespace {

Matrix sigma_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

CovarianceMatrix make_cm(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    raise(Errc::NotAntisymmetric, "covariance matrix must be square with even dimension");
  }
  if (!is_antisymmetric(m)) raise(Errc::NotAntisymmetric, "covariance matrix must be antisymmetric");
  return CovarianceMatrix{static_cast<int>(m.rows() / 2), m};
}

bool is_valid_cm(const CovarianceMatrix& gamma) {
  if (!is_antisymmetric(gamma.mat)) raise(Errc::NotAntisymmetric, "covariance matrix must be antisymmetric");
  CMatrix h = CMatrix::Identity(gamma.mat.rows(), gamma.mat.cols()) +
              std::complex<double>(0, 1) * gamma.mat.cast<std::complex<double>>();
  return psd_min_eig(h).min_eig >= -tol::cp_eig;
}

double purity_defect(const CovarianceMatrix& gamma) {
  if (!is_valid_cm(gamma)) raise(Errc::InvalidCM, "not a valid covariance matrix");
  Matrix residual = gamma.mat * gamma.mat + Matrix::Identity(gamma.mat.rows(), gamma.mat.cols());
  return max_abs(residual);
}

bool is_pure(const CovarianceMatrix& gamma, double tolerance) {
  return purity_defect(gamma) < tolerance;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_bits(const CovarianceMatrix& gamma) {
  if (!is_valid_cm(gamma)) raise(Errc::InvalidCM, "not a valid covariance matrix");
  AntisymCanonical canon = antisym_canonical(gamma.mat);
  double total = 0.0;
  for (double lam : canon.lambdas) {
    const double clipped = std::clamp(lam, -1.0, 1.0);
    total += binary_entropy(0.5 * (1.0 + clipped));
  }
  return total;
}

CovarianceMatrix max_entangled(int n) {
  if (n < 1) raise(Errc::OutOfRange, "max_entangled needs n >= 1");
  Matrix k = Matrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) k.block<2, 2>(2 * j, 2 * j) = sigma_x();
  Matrix gamma = Matrix::Zero(4 * n, 4 * n);
  gamma.topRightCorner(2 * n, 2 * n) = k;
  gamma.bottomLeftCorner(2 * n, 2 * n) = -k;
  return CovarianceMatrix{2 * n, gamma};
}

Matrix SchmidtForm::pattern() const {
  const int n = left_modes;
  const int m = right_modes;
  const int e = static_cast<int>(lambdas.size());
  const int la = pure_left;
  Matrix g = Matrix::Zero(2 * (n + m), 2 * (n + m));
  for (int j = 0; j < la; ++j) g.block<2, 2>(2 * j, 2 * j) = pure_left_signs[j] * j_block();
  for (int j = 0; j < e; ++j) {
    g.block<2, 2>(2 * (la + j), 2 * (la + j)) = lambdas[j] * j_block();
    g.block<2, 2>(2 * (n + j), 2 * (n + j)) = lambdas[j] * j_block();
    g.block<2, 2>(2 * (la + j), 2 * (n + j)) = kappas[j] * sigma_x();
    g.block<2, 2>(2 * (n + j), 2 * (la + j)) = -kappas[j] * sigma_x();
  }
  for (int j = 0; j < m - e; ++j) {
    g.block<2, 2>(2 * (n + e + j), 2 * (n + e + j)) = pure_right_signs[j] * j_block();
  }
  return g;
}

Matrix SchmidtForm::reconstruct() const {
  const int n = left_modes;
  const int m = right_modes;
  Matrix local = Matrix::Zero(2 * (n + m), 2 * (n + m));
  local.topLeftCorner(2 * n, 2 * n) = rotation_left.matrix;
  local.bottomRightCorner(2 * m, 2 * m) = rotation_right.matrix;
  return local * pattern() * local.transpose();
}

SchmidtForm schmidt_form(const CovarianceMatrix& gamma, int n, int m) {
  if (n < 1 || m < 1 || gamma.modes != n + m) {
    raise(Errc::BadPartition, "partition sizes must be positive and sum to the mode count");
  }
  if (purity_defect(gamma) >= 1e-8) raise(Errc::NotPure, "state is not pure");

  const Matrix& g = gamma.mat;
  const Eigen::Index p = 2 * static_cast<Eigen::Index>(n);
  const Eigen::Index q = 2 * static_cast<Eigen::Index>(m);

  // Left side: canonical form, reordered so pure modes (|lambda| ~ 1) lead.
  AntisymCanonical canon_a = antisym_canonical(g.topLeftCorner(p, p));
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(canon_a.lambdas[a]) > std::abs(canon_a.lambdas[b]);
  });
  Matrix oa(p, p);
  std::vector<double> lam_a(n);
  for (int j = 0; j < n; ++j) {
    oa.col(2 * j) = canon_a.rotation.matrix.col(2 * order[j]);
    oa.col(2 * j + 1) = canon_a.rotation.matrix.col(2 * order[j] + 1);
    lam_a[j] = canon_a.lambdas[order[j]];
  }

  int entangled = 0;
  for (double lam : lam_a) {
    if (std::abs(lam) < 1.0 - tol::pure_mode) ++entangled;
  }
  const int e = entangled;
  const int la = n - e;
  if (e > m) raise(Errc::NotPure, "entangled mode count exceeds the right partition");

  // Right-side basis from the cross-correlation rows of the entangled modes.
  Matrix cross = oa.transpose() * g.topRightCorner(p, q);
  Matrix ob = Matrix::Zero(q, q);
  for (int j = 0; j < e; ++j) {
    Vector row0 = cross.row(2 * (la + j)).transpose();
    Vector row1 = cross.row(2 * (la + j) + 1).transpose();
    ob.col(2 * j) = row1.normalized();
    ob.col(2 * j + 1) = row0.normalized();
  }
  if (m > e) {
    // Orthonormal completion, then canonicalize the decoupled right corner.
    Matrix full = Matrix::Identity(q, q);
    if (e > 0) {
      Eigen::HouseholderQR<Matrix> qr(ob.leftCols(2 * e));
      full = qr.householderQ();
    }
    ob.rightCols(q - 2 * e) = full.rightCols(q - 2 * e);
    Matrix corner = ob.rightCols(q - 2 * e).transpose() * g.bottomRightCorner(q, q) *
                    ob.rightCols(q - 2 * e);
    AntisymCanonical canon_b = antisym_canonical(0.5 * (corner - corner.transpose()));
    ob.rightCols(q - 2 * e) = ob.rightCols(q - 2 * e) * canon_b.rotation.matrix;
  }

  std::vector<double> pure_left_signs(lam_a.begin(), lam_a.begin() + la);
  std::vector<double> lambdas(lam_a.begin() + la, lam_a.end());
  std::vector<double> pure_right_signs;
  if (m > e) {
    Matrix corner = ob.rightCols(q - 2 * e).transpose() * g.bottomRightCorner(q, q) *
                    ob.rightCols(q - 2 * e);
    for (int j = 0; j < m - e; ++j) pure_right_signs.push_back(corner(2 * j + 1, 2 * j));
  }

  // Both rotations must be special orthogonal. oa has det +1 by construction;
  // a det -1 on ob is absorbed by a sign flip on a pure right mode, or by a
  // sigma_x twist of an entangled pair (compensated on a pure left mode).
  if (ob.determinant() < 0) {
    if (m - e >= 1) {
      ob.col(2 * e + 1) *= -1;
      pure_right_signs[0] = -pure_right_signs[0];
    } else if (e >= 1 && la >= 1) {
      ob.col(2 * (e - 1)).swap(ob.col(2 * (e - 1) + 1));
      oa.col(2 * (n - 1)).swap(oa.col(2 * (n - 1) + 1));
      lambdas[e - 1] = -lambdas[e - 1];
      oa.col(1) *= -1;
      pure_left_signs[0] = -pure_left_signs[0];
    } else {
      raise(Errc::NotPure, "inconsistent parity in bipartite normal form");
    }
  }

  SchmidtForm sf;
  sf.left_modes = n;
  sf.right_modes = m;
  sf.pure_left = la;
  sf.lambdas = lambdas;
  sf.kappas.resize(e);
  for (int j = 0; j < e; ++j) sf.kappas[j] = std::sqrt(std::max(0.0, 1.0 - lambdas[j] * lambdas[j]));
  sf.pure_left_signs = pure_left_signs;
  sf.pure_right_signs = pure_right_signs;
  sf.rotation_left = make_orthogonal(oa);
  sf.rotation_right = make_orthogonal(ob);
  return sf;
}

CovarianceMatrix purify(const CovarianceMatrix& gamma) {
  if (!is_valid_cm(gamma)) raise(Errc::InvalidCM, "not a valid covariance matrix");
  const int n = gamma.modes;
  AntisymCanonical canon = antisym_canonical(gamma.mat);
  std::vector<int> mixed;
  for (int j = 0; j < n; ++j) {
    if (std::abs(canon.lambdas[j]) < 1.0 - tol::pure_mode) mixed.push_back(j);
  }
  const int k = static_cast<int>(mixed.size());
  const int total = n + k;

  Matrix std_form = Matrix::Zero(2 * total, 2 * total);
  for (int j = 0; j < n; ++j) {
    std_form.block<2, 2>(2 * j, 2 * j) = std::clamp(canon.lambdas[j], -1.0, 1.0) * j_block();
  }
  for (int i = 0; i < k; ++i) {
    const int j = mixed[i];
    const double lam = std::clamp(canon.lambdas[j], -1.0, 1.0);
    const double kappa = std::sqrt(std::max(0.0, 1.0 - lam * lam));
    std_form.block<2, 2>(2 * (n + i), 2 * (n + i)) = lam * j_block();
    std_form.block<2, 2>(2 * j, 2 * (n + i)) = kappa * sigma_x();
    std_form.block<2, 2>(2 * (n + i), 2 * j) = -kappa * sigma_x();
  }

  Matrix rot = Matrix::Identity(2 * total, 2 * total);
  rot.topLeftCorner(2 * n, 2 * n) = canon.rotation.matrix;
  return CovarianceMatrix{total, rot * std_form * rot.transpose()};
}

int count_pure_modes(const std::vector<double>& lambdas) {
  int count = 0;
  for (double lam : lambdas) {
    if (std::abs(lam) >= 1.0 - tol::pure_mode) ++count;
  }
  return count;
}

}  // namespace fgc
