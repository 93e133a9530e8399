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

#include "fgc/fock.hpp"

#include <cmath>
#include <complex>

namespace fgc::fock {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MajoranaSet majoranas(int n) {
  if (n < 1 || n > kMaxModes) raise(Errc::TooManyModes, "mode count must lie in [1, 7]");
  MajoranaSet set;
  set.n = n;
  set.c.reserve(2 * n);
  for (int site = 0; site < n; ++site) {
    for (int which = 0; which < 2; ++which) {
      CMatrix op = CMatrix::Identity(1, 1);
      for (int k = 0; k < n; ++k) {
        if (k < site) {
          op = kron(op, pauli_z());
        } else if (k == site) {
          op = kron(op, which == 0 ? pauli_x() : pauli_y());
        } else {
          op = kron(op, CMatrix::Identity(2, 2));
        }
      }
      set.c.push_back(op);
    }
  }
  return set;
}

CMatrix vacuum_state(int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return rho;
}

CMatrix parity_operator(int n) {
  CMatrix p = CMatrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) p = kron(p, pauli_z());
  return p;
}

void require_density_matrix(const CMatrix& rho) {
  if (rho.rows() != rho.cols()) raise(Errc::NotDensityMatrix, "not square");
  const double scale = std::max(1.0, max_abs(rho));
  if (max_abs(CMatrix(rho - rho.adjoint())) > 1e-9 * scale) {
    raise(Errc::NotDensityMatrix, "not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10 * std::max(1.0, std::abs(rho.trace()))) {
    raise(Errc::NotDensityMatrix, "trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) raise(Errc::NotDensityMatrix, "not positive semidefinite");
}

CMatrix unitary_from_orthogonal(const Matrix& o) {
  if (o.rows() != o.cols() || o.rows() % 2 != 0) raise(Errc::NotOrthogonal, "matrix is not even square");
  const int n = static_cast<int>(o.rows() / 2);
  if (n > kMaxModes) raise(Errc::TooManyModes, "mode count must be at most 7");
  Matrix gram = o.transpose() * o;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > 1e-8) raise(Errc::NotOrthogonal, "matrix is not orthogonal");

  const bool reflect = o.determinant() < 0;
  Matrix rot = o;
  if (reflect) {
    // Conjugation by the last Majorana flips every other Majorana; absorb
    // that reflection so the remaining factor is special orthogonal.
    rot = -o;
    rot.col(2 * n - 1) *= -1;
  }
  MajoranaSet maj = majoranas(n);
  Matrix h = so_log(rot);
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix gen = CMatrix::Zero(dim, dim);
  for (int k = 0; k < 2 * n; ++k) {
    for (int l = 0; l < 2 * n; ++l) {
      if (h(k, l) != 0.0) gen -= 0.25 * h(k, l) * maj.c[k] * maj.c[l];
    }
  }
  // gen is anti-Hermitian; exponentiate through the Hermitian i*gen.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(CMatrix(kI * gen));
  CMatrix phases(dim, dim);
  phases.setZero();
  for (Eigen::Index i = 0; i < dim; ++i) phases(i, i) = std::exp(-kI * es.eigenvalues()(i));
  CMatrix u = es.eigenvectors() * phases * es.eigenvectors().adjoint();
  if (reflect) u = maj.c[2 * n - 1] * u;
  return u;
}

CMatrix state_from_cm(const CovarianceMatrix& gamma) {
  if (!is_valid_cm(gamma)) raise(Errc::InvalidCM, "not a valid covariance matrix");
  const int n = gamma.modes;
  if (n > 6) raise(Errc::TooManyModes, "state construction is capped at 6 modes");
  AntisymCanonical canon = antisym_canonical(gamma.mat);

  // Product of single-mode Gibbs states in the canonical basis: occupation
  // probability (1 - lambda) / 2 per mode.
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix rho = CMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
      const double lam = std::clamp(canon.lambdas[k], -1.0, 1.0);
      const bool occupied = (idx >> (n - 1 - k)) & 1;
      p *= occupied ? 0.5 * (1.0 - lam) : 0.5 * (1.0 + lam);
    }
    rho(idx, idx) = p;
  }
  CMatrix u = unitary_from_orthogonal(canon.rotation.matrix.transpose());
  return u * rho * u.adjoint();
}

CovarianceMatrix cm_from_state(const CMatrix& rho, const MajoranaSet& maj) {
  require_density_matrix(rho);
  const int dim = 2 * maj.n;
  Matrix gamma = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int l = k + 1; l < dim; ++l) {
      const Complex val = kI * (rho * maj.c[k] * maj.c[l]).trace();
      if (std::abs(val.imag()) > 1e-10) {
        raise(Errc::NotDensityMatrix, "covariance entries are not real");
      }
      gamma(k, l) = val.real();
      gamma(l, k) = -val.real();
    }
  }
  return CovarianceMatrix{maj.n, gamma};
}

CMatrix trace_out_back(const CMatrix& rho, int keep_sites, int total_sites) {
  const Eigen::Index keep_dim = Eigen::Index(1) << keep_sites;
  const Eigen::Index rest_dim = Eigen::Index(1) << (total_sites - keep_sites);
  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (Eigen::Index i = 0; i < keep_dim; ++i) {
    for (Eigen::Index j = 0; j < keep_dim; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < rest_dim; ++t) sum += rho(i * rest_dim + t, j * rest_dim + t);
      out(i, j) = sum;
    }
  }
  return out;
}

CMatrix apply_channel_dense(const GaussianChannel& t, const CMatrix& rho) {
  if (!validate(t).valid) raise(Errc::InvalidChannel, "channel violates complete positivity");
  require_density_matrix(rho);
  if (rho.rows() != (Eigen::Index(1) << t.n_in)) {
    raise(Errc::ShapeMismatch, "state dimension does not match the channel input");
  }
  Dilation dil = dilation(t);
  const int total = t.n_in + dil.gamma_env.modes;
  if (total > kMaxModes) {
    raise(Errc::TooManyModes, "joint system exceeds the 7-mode cap");
  }
  CMatrix joint = kron(rho, state_from_cm(dil.gamma_env));
  CMatrix u = unitary_from_orthogonal(dil.o_se.transpose());
  CMatrix evolved = u * joint * u.adjoint();
  return trace_out_back(evolved, t.n_out, total);
}

double entropy_dense(const CMatrix& rho) {
  require_density_matrix(rho);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-14) entropy -= p * std::log2(p);
  }
  return entropy;
}

std::complex<double> fourth_moment(const CMatrix& rho, const MajoranaSet& maj, int a, int b, int c,
                                   int d) {
  return (rho * maj.c[a] * maj.c[b] * maj.c[c] * maj.c[d]).trace();
}

}  // namespace fgc::fock
