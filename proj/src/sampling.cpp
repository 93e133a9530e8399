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

#include "fgc/sampling.hpp"

namespace fgc {

Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  }
  return m;
}

Matrix random_rotation(Eigen::Index dim, Rng& rng, bool special) {
  Matrix g = random_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the sign ambiguity of QR so the distribution is Haar-like.
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (r(i, i) < 0) q.col(i) *= -1;
  }
  if (special && q.determinant() < 0) q.col(dim - 1) *= -1;
  return q;
}

Matrix random_antisymmetric(Eigen::Index dim, Rng& rng, double scale) {
  Matrix g = scale * random_gaussian_matrix(dim, dim, rng);
  return 0.5 * (g - g.transpose());
}

CMatrix random_hermitian(Eigen::Index dim, Rng& rng, double scale) {
  Matrix re = random_gaussian_matrix(dim, dim, rng);
  Matrix im = random_gaussian_matrix(dim, dim, rng);
  CMatrix h = re.cast<std::complex<double>>() + std::complex<double>(0, 1) * im.cast<std::complex<double>>();
  return scale * 0.5 * (h + h.adjoint());
}

CovarianceMatrix random_cm(int n, Rng& rng, bool pure) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Matrix lam = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double value = pure ? (uniform(rng) < 0 ? -1.0 : 1.0) : uniform(rng);
    lam.block<2, 2>(2 * k, 2 * k) = value * j_block();
  }
  Matrix o = random_rotation(2 * n, rng);
  return CovarianceMatrix{n, o * lam * o.transpose()};
}

GaussianChannel random_channel(int n_in, int n_out, Rng& rng, const ChannelOptions& opts) {
  std::uniform_real_distribution<double> uniform(opts.min_singular, 1.0);
  const Eigen::Index p = 2 * static_cast<Eigen::Index>(n_in);
  const Eigen::Index q = 2 * static_cast<Eigen::Index>(n_out);
  Vector s(std::min(p, q));
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = uniform(rng);
  Matrix padded = Matrix::Zero(q, p);
  padded.diagonal().head(s.size()) = s;
  Matrix a = random_rotation(q, rng) * padded * random_rotation(p, rng);

  Matrix root = psd_sqrt(Matrix(Matrix::Identity(q, q) - a * a.transpose()));
  CovarianceMatrix gamma = random_cm(n_out, rng, opts.pure_environment);
  Matrix b = root * gamma.mat * root;
  b = 0.5 * (b - b.transpose());
  return make_channel(a, b);
}

}  // namespace fgc
