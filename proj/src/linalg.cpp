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

#include "fgc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

namespace fgc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::OddDimension: return "OddDimension";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::Indefinite: return "Indefinite";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
    case Errc::BadPartition: return "BadPartition";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidCM: return "InvalidCM";
    case Errc::NotPure: return "NotPure";
    case Errc::InvalidChannel: return "InvalidChannel";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotAntisymmetricB: return "NotAntisymmetricB";
    case Errc::NotSquareChannel: return "NotSquareChannel";
    case Errc::NotStandardForm: return "NotStandardForm";
    case Errc::SingularA: return "SingularA";
    case Errc::SingularD: return "SingularD";
    case Errc::ChoiRankTooLarge: return "ChoiRankTooLarge";
    case Errc::TooManyModes: return "TooManyModes";
    case Errc::NotDensityMatrix: return "NotDensityMatrix";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Matrix j_block() {
  Matrix j(2, 2);
  j << 0, -1, 1, 0;
  return j;
}

Matrix j_matrix(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) j.block<2, 2>(2 * k, 2 * k) = j_block();
  return j;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_antisymmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(Matrix(m + m.transpose())) <= rel_tol * std::max(1.0, max_abs(m));
}

OrthogonalFactor make_orthogonal(const Matrix& m) {
  if (m.rows() != m.cols()) raise(Errc::NotOrthogonal, "matrix is not square");
  Matrix gram = m.transpose() * m;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > tol::orthogonality) {
    raise(Errc::NotOrthogonal, "O^T O deviates from identity by " + std::to_string(max_abs(gram)));
  }
  OrthogonalFactor f;
  f.matrix = m;
  f.det_sign = m.determinant() >= 0 ? 1 : -1;
  return f;
}

Matrix AntisymCanonical::reconstruct() const {
  const int n = static_cast<int>(lambdas.size());
  Matrix lam = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) lam.block<2, 2>(2 * k, 2 * k) = lambdas[k] * j_block();
  return rotation.matrix * lam * rotation.matrix.transpose();
}

AntisymCanonical antisym_canonical(const Matrix& m) {
  if (m.rows() != m.cols()) raise(Errc::NotAntisymmetric, "matrix is not square");
  if (m.rows() % 2 != 0) raise(Errc::OddDimension, "antisymmetric canonical form needs even dimension");
  if (!is_antisymmetric(m)) raise(Errc::NotAntisymmetric, "matrix is not antisymmetric");
  const Eigen::Index dim = m.rows();
  const int n = static_cast<int>(dim / 2);

  Matrix w = 0.5 * (m - m.transpose());  // remove rounding asymmetry
  // -W^2 is symmetric PSD with doubly degenerate eigenvalues lambda_j^2.
  Eigen::SelfAdjointEigenSolver<Matrix> es(-w * w);
  Vector evals = es.eigenvalues().cwiseMax(0.0);
  Matrix evecs = es.eigenvectors();

  // Walk eigenvectors from the largest eigenvalue down (ties broken by the
  // original column order, which keeps already-canonical input unchanged),
  // pairing each basis vector u with W u / |W u|. Later vectors are
  // re-orthogonalized against the pairs already collected (needed within
  // degenerate clusters).
  std::vector<Eigen::Index> visit(dim);
  std::iota(visit.begin(), visit.end(), 0);
  std::sort(visit.begin(), visit.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (evals(a) != evals(b)) return evals(a) > evals(b);
    return a < b;
  });
  Matrix cols(dim, dim);
  std::vector<double> lambdas;
  Eigen::Index used = 0;
  const double zero_tol = 1e-13 * std::max(1.0, evals.maxCoeff());
  for (Eigen::Index step = 0; step < dim && used < dim; ++step) {
    Eigen::Index idx = visit[step];
    Vector u = evecs.col(idx);
    if (used > 0) {
      u -= cols.leftCols(used) * (cols.leftCols(used).transpose() * u);
    }
    double norm = u.norm();
    if (norm < 0.5) continue;  // already absorbed into an earlier pair
    u /= norm;
    Vector wu = w * u;
    double lam = wu.norm();
    Vector v;
    if (lam * lam > zero_tol) {
      v = wu / lam;
      if (used > 0) v -= cols.leftCols(used) * (cols.leftCols(used).transpose() * v);
      v -= u * (u.dot(v));  // exact numerics already give u.v = 0
      v.normalize();
    } else {
      // Kernel direction: pair with the next free basis vector.
      lam = 0.0;
      v = Vector::Zero(dim);
      for (Eigen::Index jstep = step + 1; jstep < dim; ++jstep) {
        Vector cand = evecs.col(visit[jstep]);
        cand -= cols.leftCols(used) * (cols.leftCols(used).transpose() * cand);
        cand -= u * (u.dot(cand));
        if (cand.norm() > 0.5) {
          v = cand.normalized();
          break;
        }
      }
      if (v.norm() < 0.5) raise(Errc::NotAntisymmetric, "failed to pair kernel directions");
    }
    cols.col(used) = u;
    cols.col(used + 1) = v;
    used += 2;
    lambdas.push_back(lam);
  }
  if (used != dim) raise(Errc::NotAntisymmetric, "pairing did not exhaust the space");

  // Pairs were collected in descending order of lambda^2 already; enforce it.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambdas[a] > lambdas[b]; });
  Matrix o(dim, dim);
  std::vector<double> sorted(n);
  for (int k = 0; k < n; ++k) {
    o.col(2 * k) = cols.col(2 * order[k]);
    o.col(2 * k + 1) = cols.col(2 * order[k] + 1);
    sorted[k] = lambdas[order[k]];
  }
  // The construction gives lambda >= 0; if det O = -1, swap the last pair,
  // which flips the sign of the smallest lambda.
  if (o.determinant() < 0) {
    o.col(dim - 2).swap(o.col(dim - 1));
    sorted[n - 1] = -sorted[n - 1];
  }

  AntisymCanonical result;
  result.rotation = make_orthogonal(o);
  result.lambdas = std::move(sorted);
  return result;
}

Matrix SvdSo::padded_d(Eigen::Index rows, Eigen::Index cols) const {
  Matrix padded = Matrix::Zero(rows, cols);
  padded.diagonal().head(d.size()) = d;
  return padded;
}

Matrix SvdSo::reconstruct() const {
  return o1.matrix * padded_d(o1.matrix.rows(), o2.matrix.rows()) * o2.matrix;
}

SvdSo svd_so(const Matrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix u = svd.matrixU();
  Matrix v = svd.matrixV();
  Vector d = Vector::Zero(std::min(rows, cols));
  d.head(svd.singularValues().size()) = svd.singularValues();

  bool u_neg = u.determinant() < 0;
  bool v_neg = v.determinant() < 0;
  const Eigen::Index k = std::min(rows, cols);
  if (rows == cols) {
    if (u_neg && v_neg) {
      u.col(rows - 1) *= -1;
      v.col(rows - 1) *= -1;
    } else if (u_neg) {
      u.col(rows - 1) *= -1;
      d(k - 1) = -d(k - 1);
    } else if (v_neg) {
      v.col(rows - 1) *= -1;
      d(k - 1) = -d(k - 1);
    }
  } else if (rows < cols) {
    // Wide: columns of V beyond the first `rows` multiply zero padding.
    if (u_neg) {
      u.col(rows - 1) *= -1;
      v.col(rows - 1) *= -1;
      v_neg = !v_neg;
    }
    if (v_neg) v.col(cols - 1) *= -1;
  } else {
    if (v_neg) {
      v.col(cols - 1) *= -1;
      u.col(cols - 1) *= -1;
      u_neg = !u_neg;
    }
    if (u_neg) u.col(rows - 1) *= -1;
  }

  SvdSo out;
  out.o1 = make_orthogonal(u);
  out.d = d;
  out.o2 = make_orthogonal(Matrix(v.transpose()));
  return out;
}

PsdVerdict psd_min_eig(const CMatrix& h, double tolerance) {
  if (h.rows() != h.cols()) raise(Errc::NotHermitian, "matrix is not square");
  if (h.rows() == 0) return PsdVerdict{true, 0.0};
  if (max_abs(CMatrix(h - h.adjoint())) > 1e-10 * std::max(1.0, max_abs(h))) {
    raise(Errc::NotHermitian, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  PsdVerdict v;
  v.min_eig = es.eigenvalues().minCoeff();
  double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  v.is_psd = v.min_eig >= -tolerance * std::max(1.0, scale);
  return v;
}

PsdVerdict psd_min_eig(const Matrix& h, double tolerance) {
  return psd_min_eig(CMatrix(h.cast<std::complex<double>>()), tolerance);
}

bool complex_form_psd(const Matrix& x, const Matrix& y, double tolerance) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    raise(Errc::ShapeMismatch, "X and Y must be square with equal dimensions");
  }
  CMatrix h = x.cast<std::complex<double>>() + std::complex<double>(0, 1) * y.cast<std::complex<double>>();
  return psd_min_eig(h, tolerance).is_psd;
}

namespace {

Matrix symmetric_eig_apply(const Matrix& s, const std::function<double(double)>& f, Errc errc,
                           const char* what) {
  if (s.rows() != s.cols()) raise(errc, what);
  if (max_abs(Matrix(s - s.transpose())) > 1e-9 * std::max(1.0, max_abs(s))) {
    raise(Errc::NotSymmetric, "matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s + s.transpose()));
  Vector evals = es.eigenvalues();
  double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  if (evals.minCoeff() < -1e-8 * scale) {
    raise(Errc::Indefinite, "matrix has a negative eigenvalue " + std::to_string(evals.minCoeff()));
  }
  const double rank_tol = 1e-10 * std::max(0.0, evals.maxCoeff());
  Vector mapped(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    double e = std::max(evals(i), 0.0);
    mapped(i) = e > rank_tol ? f(e) : 0.0;
  }
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

Matrix pinv_sqrt(const Matrix& s) {
  return symmetric_eig_apply(
      s, [](double e) { return 1.0 / std::sqrt(e); }, Errc::NotSymmetric, "pinv_sqrt needs a square matrix");
}

Matrix psd_sqrt(const Matrix& s) {
  return symmetric_eig_apply(
      s, [](double e) { return std::sqrt(e); }, Errc::NotSymmetric, "psd_sqrt needs a square matrix");
}

Matrix CsDecomposition::middle_factor() const {
  const Eigen::Index p = q1.rows();
  const Eigen::Index q = q2.rows();
  Matrix mid = Matrix::Zero(p + q, p + q);
  Vector s = (Vector::Ones(p) - d.cwiseProduct(d)).cwiseMax(0.0).cwiseSqrt();
  mid.topLeftCorner(p, p) = Matrix(d.asDiagonal());
  mid.block(0, p, p, p) = Matrix(s.asDiagonal());
  mid.block(p, 0, p, p) = -Matrix(s.asDiagonal());
  mid.block(p, p, p, p) = Matrix(d.asDiagonal());
  mid.bottomRightCorner(q - p, q - p).setIdentity();
  return mid;
}

Matrix CsDecomposition::reconstruct() const {
  const Eigen::Index p = q1.rows();
  const Eigen::Index q = q2.rows();
  Matrix left = Matrix::Zero(p + q, p + q);
  left.topLeftCorner(p, p) = q1;
  left.bottomRightCorner(q, q) = q2;
  Matrix right = Matrix::Zero(p + q, p + q);
  right.topLeftCorner(p, p) = r1;
  right.bottomRightCorner(q, q) = r2;
  return left * middle_factor() * right;
}

namespace {

// Nearest orthogonal matrix in Frobenius norm.
Matrix polar_orthogonal(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

CsDecomposition cs_decompose(const Matrix& o, int n, int m) {
  if (n < 1 || m < n) raise(Errc::BadPartition, "partition requires 1 <= n <= m");
  const Eigen::Index p = 2 * static_cast<Eigen::Index>(n);
  const Eigen::Index q = 2 * static_cast<Eigen::Index>(m);
  if (o.rows() != p + q || o.cols() != p + q) raise(Errc::BadPartition, "matrix size does not match partition");
  Matrix gram = o.transpose() * o;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > 1e-8) raise(Errc::NotOrthogonal, "input is not orthogonal");

  // SVD of the upper-left block pins Q1, R1 and the cosines.
  Eigen::JacobiSVD<Matrix> svd(o.topLeftCorner(p, p), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix q1 = svd.matrixU();
  Matrix r1 = svd.matrixV().transpose();
  Vector d = svd.singularValues().cwiseMin(1.0).cwiseMax(0.0);
  Vector s = (Vector::Ones(p) - d.cwiseProduct(d)).cwiseMax(0.0).cwiseSqrt();

  // Rows of R2 / columns of Q2 follow from the off-diagonal blocks where the
  // sines are safely away from zero; everything else is completed from the
  // lower-right block.
  const double sin_floor = 1e-6;
  Matrix x = q1.transpose() * o.topRightCorner(p, q);   // = diag(s) R2_top
  Matrix y = o.bottomLeftCorner(q, p) * r1.transpose(); // = Q2_left (-diag(s))
  Matrix q2 = Matrix::Zero(q, q);
  Matrix r2 = Matrix::Zero(q, q);
  std::vector<Eigen::Index> determined, undetermined;
  for (Eigen::Index i = 0; i < p; ++i) {
    if (s(i) >= sin_floor) {
      r2.row(i) = x.row(i) / s(i);
      q2.col(i) = -y.col(i) / s(i);
      determined.push_back(i);
    } else {
      // A sine this small is numerical fuzz around an uncoupled direction;
      // snap the cosine so the middle factor is exact there.
      d(i) = 1.0;
      s(i) = 0.0;
      undetermined.push_back(i);
    }
  }
  for (Eigen::Index i = p; i < q; ++i) undetermined.push_back(i);

  // Z = O22 - Q2_det diag(d) R2_det is (approximately) the partial isometry
  // carried by the remaining columns; its SVD supplies matched pairs.
  Matrix z = o.bottomRightCorner(q, q);
  for (Eigen::Index i : determined) z -= d(i) * q2.col(i) * r2.row(i);
  if (!undetermined.empty()) {
    Eigen::JacobiSVD<Matrix> zsvd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Index k = 0;
    for (Eigen::Index i : undetermined) {
      q2.col(i) = zsvd.matrixU().col(k);
      r2.row(i) = zsvd.matrixV().col(k).transpose();
      ++k;
    }
  }
  q2 = polar_orthogonal(q2);
  r2 = polar_orthogonal(r2);

  CsDecomposition out;
  out.q1 = q1;
  out.q2 = q2;
  out.d = d;
  out.r1 = r1;
  out.r2 = r2;
  return out;
}

Matrix so_log(const Matrix& o) {
  if (o.rows() != o.cols()) raise(Errc::NotSpecialOrthogonal, "matrix is not square");
  Matrix gram = o.transpose() * o;
  gram.diagonal().array() -= 1.0;
  if (max_abs(gram) > 1e-8) raise(Errc::NotSpecialOrthogonal, "matrix is not orthogonal");
  if (o.determinant() < 0) raise(Errc::NotSpecialOrthogonal, "matrix has determinant -1");
  const Eigen::Index dim = o.rows();

  Eigen::RealSchur<Matrix> schur(o);
  const Matrix& t = schur.matrixT();
  const Matrix& qmat = schur.matrixU();

  // The Schur form of an orthogonal matrix is block diagonal with 2x2
  // rotation blocks and 1x1 blocks of +-1; -1 entries pair up (det +1) and
  // each pair is a rotation by pi.
  Matrix ht = Matrix::Zero(dim, dim);
  std::vector<Eigen::Index> minus_ones;
  Eigen::Index i = 0;
  while (i < dim) {
    if (i + 1 < dim && t(i + 1, i) != 0.0) {
      double theta = std::atan2(t(i + 1, i), t(i, i));
      ht(i, i + 1) = -theta;
      ht(i + 1, i) = theta;
      i += 2;
    } else {
      if (t(i, i) < 0.0) minus_ones.push_back(i);
      ++i;
    }
  }
  if (minus_ones.size() % 2 != 0) {
    raise(Errc::NotSpecialOrthogonal, "odd number of -1 eigenvalues");
  }
  for (std::size_t k = 0; k + 1 < minus_ones.size(); k += 2) {
    const Eigen::Index a = minus_ones[k];
    const Eigen::Index b = minus_ones[k + 1];
    ht(a, b) = -M_PI;
    ht(b, a) = M_PI;
  }
  return qmat * ht * qmat.transpose();
}

Matrix antisym_exp(const Matrix& h) {
  AntisymCanonical canon = antisym_canonical(h);
  const int n = static_cast<int>(canon.lambdas.size());
  Matrix rot = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double theta = canon.lambdas[k];
    rot(2 * k, 2 * k) = std::cos(theta);
    rot(2 * k, 2 * k + 1) = -std::sin(theta);
    rot(2 * k + 1, 2 * k) = std::sin(theta);
    rot(2 * k + 1, 2 * k + 1) = std::cos(theta);
  }
  const Matrix& o = canon.rotation.matrix;
  return o * rot * o.transpose();
}

bool horn_check(const CMatrix& x, const CMatrix& y, int i, int j, int k) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    raise(Errc::ShapeMismatch, "X and Y must be square with equal dimensions");
  }
  const int dim = static_cast<int>(x.rows());
  if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim) {
    raise(Errc::IndexOutOfRange, "eigenvalue indices must lie in [1, dim]");
  }
  if (i + j != k + 1) raise(Errc::IndexOutOfRange, "indices must satisfy i + j = k + 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> ex(x, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<CMatrix> ey(y, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<CMatrix> exy(CMatrix(x + y), Eigen::EigenvaluesOnly);
  // Eigen returns ascending order; index from the top.
  const double lam = ex.eigenvalues()(dim - i);
  const double mu = ey.eigenvalues()(dim - j);
  const double nu = exy.eigenvalues()(dim - k);
  const double scale = std::max({1.0, ex.eigenvalues().cwiseAbs().maxCoeff(),
                                 ey.eigenvalues().cwiseAbs().maxCoeff()});
  return nu <= lam + mu + 1e-10 * scale;
}

}  // namespace fgc
