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

#include "fgc/degradability.hpp"

#include <cmath>
#include <complex>

namespace fgc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Degradable: return "degradable";
    case Verdict::Antidegradable: return "antidegradable";
    case Verdict::Neither: return "neither";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

DegradingCandidate degrading_candidate(const GaussianChannel& t) {
  if (!validate(t).valid) raise(Errc::InvalidChannel, "channel violates complete positivity");
  Eigen::JacobiSVD<Matrix> svd(t.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (t.a.rows() < t.a.cols() || svd.singularValues().size() == 0 ||
      svd.singularValues().minCoeff() < 1e-9) {
    raise(Errc::SingularA, "degrading map needs A without kernel");
  }
  const Eigen::Index p = t.a.cols();
  const Eigen::Index q = t.a.rows();

  // Left pseudo-inverse of A (the inverse for square channels).
  Vector inv_s = svd.singularValues().cwiseInverse();
  Matrix a_inv = svd.matrixV() * inv_s.asDiagonal() * svd.matrixU().leftCols(p).transpose();

  Dilation dil = dilation(t);
  const Eigen::Index env = 2 * static_cast<Eigen::Index>(dil.gamma_env.modes);
  const Eigen::Index rows_out = p + env - q;

  Matrix root_in = psd_sqrt(Matrix(Matrix::Identity(p, p) - t.a.transpose() * t.a));
  Matrix a_tilde = Matrix::Zero(rows_out, q);
  a_tilde.topLeftCorner(p, q) = root_in * a_inv;

  Matrix left1 = Matrix::Zero(rows_out, env);
  left1.topLeftCorner(p, q) = t.a.transpose();
  left1.bottomRightCorner(env - q, env - q).setIdentity();
  Matrix left2 = Matrix::Zero(rows_out, env);
  left2.topLeftCorner(p, q) = a_inv - t.a.transpose();
  Matrix b_tilde = left1 * dil.gamma_env.mat * left1.transpose() -
                   left2 * dil.gamma_env.mat * left2.transpose();
  b_tilde = 0.5 * (b_tilde - b_tilde.transpose());

  const std::complex<double> im(0, 1);
  CMatrix m = CMatrix::Identity(rows_out, rows_out) -
              (a_tilde * a_tilde.transpose()).cast<std::complex<double>>() -
              im * b_tilde.cast<std::complex<double>>();

  DegradingCandidate cand;
  cand.a_tilde = a_tilde;
  cand.b_tilde = b_tilde;
  cand.cp_min_eig = psd_min_eig(m).min_eig;
  return cand;
}

std::vector<std::pair<double, int>> group_singular_values(const Vector& d) {
  std::vector<std::pair<double, int>> groups;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!groups.empty() && groups.back().first - d(i) <= tol::degeneracy_group) {
      ++groups.back().second;
    } else {
      groups.emplace_back(d(i), 1);
    }
  }
  return groups;
}

namespace {

enum class Tri { Yes, No, Unknown };

struct Status {
  Tri value = Tri::Unknown;
  std::string reason;
};

bool cross_block_entries_vanish(const Matrix& b, const std::vector<std::pair<double, int>>& groups) {
  Eigen::Index row_start = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const Eigen::Index rows = groups[gi].second;
    Eigen::Index col_start = row_start + rows;
    for (std::size_t gj = gi + 1; gj < groups.size(); ++gj) {
      const Eigen::Index cols = groups[gj].second;
      if (max_abs(Matrix(b.block(row_start, col_start, rows, cols))) > tol::block_zero) {
        return false;
      }
      col_start += cols;
    }
    row_start += rows;
  }
  return true;
}

bool even_multiplicities(const std::vector<std::pair<double, int>>& groups) {
  for (const auto& g : groups) {
    if (g.second % 2 != 0) return false;
  }
  return true;
}

Status degradable_status(const GaussianChannel& t);

// Antidegradability of T is degradability of its complement (the complement
// of the complement is T again, up to isometries). Used where no closed form
// applies.
Status antidegradable_via_complement(const GaussianChannel& t) {
  Status s = degradable_status(complement(t));
  if (s.value == Tri::Yes) s.reason = "complement degradable (" + s.reason + ")";
  if (s.value == Tri::No) s.value = Tri::Unknown;  // candidate failure is not a proof here
  return s;
}

Status degradable_status(const GaussianChannel& t) {
  if (t.n_in == 0 && t.n_out == 0) return {Tri::Yes, "unitary"};
  if (t.n_in == 0) return {Tri::Yes, "state preparation"};
  ChannelStandardForm sf = standard_form(t);
  PerfectSplit split = split_perfect_modes(sf.standard_channel());
  const GaussianChannel& r = split.remainder;
  const int n = r.n_in;
  const int m = r.n_out;
  if (n == 0 && m == 0) return {Tri::Yes, "unitary"};
  if (n == 0) return {Tri::Yes, "state preparation"};
  if (m < n) return {Tri::No, "output smaller than input"};
  if (m == n) {
    if (choi_rank_modes(r) > n) return {Tri::No, "choi rank exceeds mode count"};
    Vector d = r.a.diagonal();
    auto groups = group_singular_values(d);
    if (!even_multiplicities(groups)) return {Tri::No, "odd singular-value degeneracy"};
    if (d.size() > 0 && d(d.size() - 1) < kInvSqrt2 - tol::cp_eig) {
      return {Tri::No, "singular value below 1/sqrt(2)"};
    }
    if (!cross_block_entries_vanish(r.b, groups)) return {Tri::No, "cross-block correlations in B"};
    return {Tri::Yes, "constant-loss blocks"};
  }
  // More output than input modes: no closed form; the Gaussian candidate can
  // still certify degradability.
  try {
    DegradingCandidate cand = degrading_candidate(r);
    if (cand.is_cp()) return {Tri::Yes, "degrading candidate is CP"};
  } catch (const Error&) {
  }
  return {Tri::Unknown, "no closed form for n_out > n_in"};
}

Status antidegradable_status(const GaussianChannel& t) {
  if (t.n_in == 0 && t.n_out == 0) return {Tri::No, "unitary"};
  if (t.n_in == 0) return {Tri::Yes, "state preparation"};
  ChannelStandardForm sf = standard_form(t);
  PerfectSplit split = split_perfect_modes(sf.standard_channel());
  const GaussianChannel& r = split.remainder;
  const int n = r.n_in;
  const int m = r.n_out;
  if (split.perfect_modes >= 1) return {Tri::No, "perfectly transmitted modes"};
  if (n == 0 && m == 0) return {Tri::No, "unitary"};
  if (n == 0) return {Tri::Yes, "state preparation"};
  if (m == n) {
    if (choi_rank_modes(r) <= n) {
      Vector d = r.a.diagonal();
      auto groups = group_singular_values(d);
      if (!even_multiplicities(groups)) return {Tri::No, "odd singular-value degeneracy"};
      if (d.size() > 0 && d(0) > kInvSqrt2 + tol::cp_eig) {
        return {Tri::No, "singular value above 1/sqrt(2)"};
      }
      if (!cross_block_entries_vanish(r.b, groups)) return {Tri::No, "cross-block correlations in B"};
      return {Tri::Yes, "constant-loss blocks"};
    }
    return antidegradable_via_complement(r);
  }
  return antidegradable_via_complement(r);
}

}  // namespace

ClassificationReport classify(const GaussianChannel& t) {
  if (!validate(t).valid) raise(Errc::InvalidChannel, "channel violates complete positivity");
  ChannelStandardForm sf = standard_form(t);
  PerfectSplit split = split_perfect_modes(sf.standard_channel());

  ClassificationReport report;
  report.blocks = group_singular_values(sf.d);

  Status deg = degradable_status(split.remainder);
  Status anti;
  if (split.perfect_modes >= 1) {
    anti = {Tri::No, "perfectly transmitted modes"};
  } else {
    anti = antidegradable_status(split.remainder);
  }

  report.degradable = deg.value == Tri::Yes;
  report.antidegradable = anti.value == Tri::Yes;
  if (report.degradable && report.antidegradable) {
    report.verdict = Verdict::Degradable;
    report.reason = "boundary";
  } else if (report.degradable) {
    report.verdict = Verdict::Degradable;
    report.reason = deg.reason;
  } else if (report.antidegradable) {
    report.verdict = Verdict::Antidegradable;
    report.reason = anti.reason;
  } else if (deg.value == Tri::Unknown || anti.value == Tri::Unknown) {
    report.verdict = Verdict::Undetermined;
    report.reason = deg.value == Tri::Unknown ? deg.reason : anti.reason;
  } else {
    report.verdict = Verdict::Neither;
    report.reason = deg.reason + "; " + anti.reason;
  }

  // Numeric cross-check data for square channels with invertible A.
  if (t.n_in == t.n_out) {
    try {
      report.witness = degrading_candidate(t);
    } catch (const Error&) {
    }
  }
  return report;
}

bool is_antidegradable(const GaussianChannel& t) {
  if (t.n_in != t.n_out) raise(Errc::NotSquareChannel, "criterion applies to square channels");
  if (!validate(t).valid) raise(Errc::InvalidChannel, "channel violates complete positivity");
  if (choi_rank_modes(t) > t.n_in) {
    raise(Errc::ChoiRankTooLarge, "criterion requires Choi rank at most the mode count");
  }
  Status s = antidegradable_status(t);
  return s.value == Tri::Yes;
}

NecessaryCondition small_env_necessary(const ChannelStandardForm& sf) {
  if (sf.n_in != sf.n_out) raise(Errc::NotSquareChannel, "condition applies to square channels");
  if (sf.d.size() == 0 || sf.d.minCoeff() < 1e-6) {
    raise(Errc::SingularD, "condition needs invertible D");
  }
  GaussianChannel t_std = sf.standard_channel();
  Dilation dil = dilation(t_std);
  AntisymCanonical canon = antisym_canonical(dil.b_prime.mat);

  const Eigen::Index dim = sf.d.size();
  Matrix p_mixed = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < canon.lambdas.size(); ++j) {
    if (std::abs(canon.lambdas[j]) < 1.0 - tol::pure_mode) {
      const auto& o = canon.rotation.matrix;
      p_mixed += o.col(2 * j) * o.col(2 * j).transpose() +
                 o.col(2 * j + 1) * o.col(2 * j + 1).transpose();
    }
  }
  Vector d2 = sf.d.cwiseProduct(sf.d);
  Matrix lhs = Matrix(
      (2.0 * d2.cwiseInverse() - d2.cwiseProduct(d2).cwiseInverse()).asDiagonal());
  lhs -= p_mixed;
  PsdVerdict v = psd_min_eig(lhs);
  return NecessaryCondition{v.min_eig >= -tol::cp_eig, v.min_eig};
}

}  // namespace fgc
