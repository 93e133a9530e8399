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

#include "fgc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace fgc {

GaussianChannel make_channel(const Matrix& a, const Matrix& b) {
  if (a.rows() % 2 != 0 || a.cols() % 2 != 0) raise(Errc::ShapeMismatch, "A must have even dimensions");
  if (b.rows() != a.rows() || b.cols() != a.rows()) {
    raise(Errc::ShapeMismatch, "B must be square with the output dimension of A");
  }
  if (!is_antisymmetric(b)) raise(Errc::NotAntisymmetricB, "B must be antisymmetric");
  GaussianChannel t;
  t.n_in = static_cast<int>(a.cols() / 2);
  t.n_out = static_cast<int>(a.rows() / 2);
  t.a = a;
  t.b = b;
  return t;
}

GaussianChannel identity_channel(int n) {
  return make_channel(Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n));
}

ChannelValidity validate(const GaussianChannel& t) {
  if (t.a.rows() != 2 * t.n_out || t.a.cols() != 2 * t.n_in || t.b.rows() != 2 * t.n_out ||
      t.b.cols() != 2 * t.n_out) {
    raise(Errc::ShapeMismatch, "channel matrices do not match the declared mode counts");
  }
  if (!is_antisymmetric(t.b)) raise(Errc::NotAntisymmetricB, "B must be antisymmetric");
  const std::complex<double> im(0, 1);
  CMatrix m = CMatrix::Identity(t.b.rows(), t.b.cols()) - im * t.b.cast<std::complex<double>>() -
              (t.a * t.a.transpose()).cast<std::complex<double>>();
  PsdVerdict v = psd_min_eig(m);
  return ChannelValidity{v.min_eig >= -tol::cp_eig, v.min_eig};
}

namespace {

void require_valid(const GaussianChannel& t) {
  if (!validate(t).valid) raise(Errc::InvalidChannel, "channel violates complete positivity");
}

}  // namespace

CovarianceMatrix apply(const GaussianChannel& t, const CovarianceMatrix& gamma) {
  require_valid(t);
  if (gamma.modes != t.n_in) raise(Errc::InvalidInput, "input mode count does not match the channel");
  if (!is_valid_cm(gamma)) raise(Errc::InvalidInput, "input is not a valid covariance matrix");
  return CovarianceMatrix{t.n_out, t.a * gamma.mat * t.a.transpose() + t.b};
}

GaussianChannel compose(const GaussianChannel& t2, const GaussianChannel& t1) {
  if (t1.n_out != t2.n_in) raise(Errc::ShapeMismatch, "inner mode counts do not match");
  return make_channel(t2.a * t1.a, t2.a * t1.b * t2.a.transpose() + t2.b);
}

GaussianChannel direct_sum(const GaussianChannel& t1, const GaussianChannel& t2) {
  Matrix a = Matrix::Zero(t1.a.rows() + t2.a.rows(), t1.a.cols() + t2.a.cols());
  a.topLeftCorner(t1.a.rows(), t1.a.cols()) = t1.a;
  a.bottomRightCorner(t2.a.rows(), t2.a.cols()) = t2.a;
  Matrix b = Matrix::Zero(t1.b.rows() + t2.b.rows(), t1.b.cols() + t2.b.cols());
  b.topLeftCorner(t1.b.rows(), t1.b.cols()) = t1.b;
  b.bottomRightCorner(t2.b.rows(), t2.b.cols()) = t2.b;
  return make_channel(a, b);
}

GaussianChannel rotate_channel(const GaussianChannel& t, const Matrix& o_post, const Matrix& o_pre) {
  make_orthogonal(o_post);
  make_orthogonal(o_pre);
  return make_channel(o_post * t.a * o_pre, o_post * t.b * o_post.transpose());
}

GaussianChannel ChannelStandardForm::standard_channel() const {
  Matrix a = Matrix::Zero(2 * n_out, 2 * n_in);
  a.diagonal().head(d.size()) = d;
  return make_channel(a, b_std);
}

GaussianChannel ChannelStandardForm::reconstruct() const {
  GaussianChannel inner = standard_channel();
  return make_channel(post_rotation.matrix * inner.a * pre_rotation.matrix,
                      post_rotation.matrix * inner.b * post_rotation.matrix.transpose());
}

ChannelStandardForm standard_form(const GaussianChannel& t) {
  require_valid(t);
  SvdSo svd = svd_so(t.a);
  Vector d = svd.d;
  Matrix pre = svd.o2.matrix;
  // A square channel with det A < 0 leaves one negative entry in D; push the
  // sign into the pre-rotation so that 1 >= D >= 0.
  const Eigen::Index last = d.size() - 1;
  if (last >= 0 && d(last) < 0) {
    d(last) = -d(last);
    pre.row(last) *= -1;
  }
  d = d.cwiseMin(1.0);

  ChannelStandardForm sf;
  sf.n_in = t.n_in;
  sf.n_out = t.n_out;
  sf.pre_rotation = make_orthogonal(pre);
  sf.post_rotation = svd.o1;
  sf.d = d;
  sf.b_std = svd.o1.matrix.transpose() * t.b * svd.o1.matrix;
  return sf;
}

CovarianceMatrix choi_cm(const GaussianChannel& t) {
  require_valid(t);
  CovarianceMatrix me = max_entangled(t.n_in);
  Matrix ext = Matrix::Zero(2 * (t.n_out + t.n_in), 4 * t.n_in);
  ext.topLeftCorner(2 * t.n_out, 2 * t.n_in) = t.a;
  ext.bottomRightCorner(2 * t.n_in, 2 * t.n_in).setIdentity();
  Matrix m = ext * me.mat * ext.transpose();
  m.topLeftCorner(2 * t.n_out, 2 * t.n_out) += t.b;
  return CovarianceMatrix{t.n_out + t.n_in, m};
}

int choi_rank_modes(const GaussianChannel& t) {
  if (t.n_in != t.n_out) raise(Errc::NotSquareChannel, "Choi rank in modes needs a square channel");
  require_valid(t);
  const std::complex<double> im(0, 1);
  CMatrix m = CMatrix::Identity(t.b.rows(), t.b.cols()) -
              (t.a * t.a.transpose()).cast<std::complex<double>>() -
              im * t.b.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  int kernel = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) <= tol::kernel_eig) ++kernel;
  }
  return 2 * t.n_in - kernel;
}

namespace {

// Environment state seen through the coupling: pinv_sqrt(1 - AA^T) B
// pinv_sqrt(1 - AA^T), with vacuum pairs filled in on the kernel of
// 1 - AA^T (those directions never couple, so the completion is free and
// keeps the environment as pure as possible).
CovarianceMatrix environment_cm(const GaussianChannel& t) {
  Matrix g = Matrix::Identity(t.b.rows(), t.b.cols()) - t.a * t.a.transpose();
  g = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  // Kernel detection via the shared perfect-transmission cutoff on singular
  // values of A: sigma >= 1 - tol <=> g-eigenvalue <= 2 tol (to first order).
  const double kernel_cut = 2.0 * tol::pure_mode;
  Vector inv_sqrt = Vector::Zero(es.eigenvalues().size());
  std::vector<Eigen::Index> kernel;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()(i);
    if (e <= kernel_cut) {
      kernel.push_back(i);
    } else {
      inv_sqrt(i) = 1.0 / std::sqrt(e);
    }
  }
  Matrix w = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().transpose();
  Matrix bp = w * t.b * w;
  for (std::size_t i = 0; i + 1 < kernel.size(); i += 2) {
    Vector u = es.eigenvectors().col(kernel[i]);
    Vector v = es.eigenvectors().col(kernel[i + 1]);
    bp += -u * v.transpose() + v * u.transpose();
  }
  bp = 0.5 * (bp - bp.transpose());
  return CovarianceMatrix{t.n_out, bp};
}

}  // namespace

Dilation dilation(const GaussianChannel& t) {
  require_valid(t);
  const Eigen::Index p = 2 * static_cast<Eigen::Index>(t.n_in);
  const Eigen::Index q = 2 * static_cast<Eigen::Index>(t.n_out);

  Dilation dil;
  dil.b_prime = environment_cm(t);
  AntisymCanonical canon = antisym_canonical(dil.b_prime.mat);
  dil.pure_env_modes = count_pure_modes(canon.lambdas);
  dil.gamma_env = purify(dil.b_prime);

  Matrix root_out = psd_sqrt(Matrix(Matrix::Identity(q, q) - t.a * t.a.transpose()));
  Matrix root_in = psd_sqrt(Matrix(Matrix::Identity(p, p) - t.a.transpose() * t.a));
  const Eigen::Index spectators = 2 * static_cast<Eigen::Index>(t.n_out - dil.pure_env_modes);
  Matrix o = Matrix::Zero(p + q + spectators, p + q + spectators);
  o.topLeftCorner(q, p) = t.a;
  o.block(0, p, q, q) = root_out;
  o.block(q, 0, p, p) = -root_in;
  o.block(q, p, p, q) = t.a.transpose();
  o.bottomRightCorner(spectators, spectators).setIdentity();

  Matrix gram = o.transpose() * o;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > tol::orthogonality) {
    raise(Errc::NotOrthogonal, "dilation coupling failed the orthogonality check");
  }
  dil.o_se = o;
  return dil;
}

GaussianChannel complement(const GaussianChannel& t) {
  require_valid(t);
  Dilation dil = dilation(t);
  const Eigen::Index p = 2 * static_cast<Eigen::Index>(t.n_in);
  const Eigen::Index q = 2 * static_cast<Eigen::Index>(t.n_out);
  const Eigen::Index env = 2 * static_cast<Eigen::Index>(dil.gamma_env.modes);

  Matrix root_in = psd_sqrt(Matrix(Matrix::Identity(p, p) - t.a.transpose() * t.a));
  Matrix ac = Matrix::Zero(p + env - q, p);
  ac.topLeftCorner(p, p) = root_in;

  // (A^T + 1) gamma_env (A + 1) with the identity acting on the spectator
  // modes of the purified environment.
  Matrix left = Matrix::Zero(p + env - q, env);
  left.topLeftCorner(p, q) = t.a.transpose();
  left.bottomRightCorner(env - q, env - q).setIdentity();
  Matrix bc = left * dil.gamma_env.mat * left.transpose();
  bc = 0.5 * (bc - bc.transpose());
  return make_channel(ac, bc);
}

PerfectSplit split_perfect_modes(const GaussianChannel& t_std) {
  require_valid(t_std);
  const Eigen::Index rows = t_std.a.rows();
  const Eigen::Index cols = t_std.a.cols();
  const Eigen::Index k = std::min(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (i != j && std::abs(t_std.a(i, j)) > 1e-9) {
        raise(Errc::NotStandardForm, "A is not a padded diagonal");
      }
    }
  }
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    if (t_std.a(i, i) < t_std.a(i + 1, i + 1) - 1e-9) {
      raise(Errc::NotStandardForm, "singular values are not descending");
    }
  }

  Eigen::Index unit = 0;
  while (unit < k && t_std.a(unit, unit) >= 1.0 - tol::pure_mode) ++unit;
  const Eigen::Index strip = 2 * (unit / 2);

  PerfectSplit split;
  split.perfect_modes = static_cast<int>(strip / 2);
  split.remainder = make_channel(t_std.a.block(strip, strip, rows - strip, cols - strip),
                                 t_std.b.block(strip, strip, rows - strip, rows - strip));
  return split;
}

}  // namespace fgc
