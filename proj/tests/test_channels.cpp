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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fgc/capacity.hpp"
#include "fgc/channels.hpp"
#include "fgc/sampling.hpp"

using namespace fgc;

namespace {

GaussianChannel constant_to_vacuum() { return make_channel(Matrix::Zero(2, 2), j_block()); }

std::vector<double> sorted_abs_canonical(const CovarianceMatrix& cm) {
  AntisymCanonical canon = antisym_canonical(cm.mat);
  std::vector<double> values;
  for (double lam : canon.lambdas) values.push_back(std::abs(lam));
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

TEST_CASE("validate identity, lossy, and B on the unit eigenspace") {
  CHECK(validate(identity_channel(1)).valid);
  CHECK(validate(lossy_channel(0.5)).valid);
  // B must vanish where A transmits perfectly.
  GaussianChannel bad = make_channel(Matrix::Identity(2, 2), Matrix(0.1 * j_block()));
  CHECK_FALSE(validate(bad).valid);
  GaussianChannel expanding = make_channel(Matrix(1.5 * Matrix::Identity(2, 2)), Matrix::Zero(2, 2));
  CHECK_FALSE(validate(expanding).valid);
  CHECK(validate(expanding).min_eig < 0.0);
}

TEST_CASE("apply basics") {
  CovarianceMatrix filled = make_cm(Matrix(-j_block()));
  CovarianceMatrix out = apply(lossy_channel(0.5), filled);
  CHECK(max_abs(out.mat) < 1e-15);  // t lambda + (1 - t) = 0

  CovarianceMatrix any = make_cm(Matrix(0.7 * j_block()));
  CHECK(max_abs(Matrix(apply(identity_channel(1), any).mat - any.mat)) == 0.0);

  CHECK_THROWS_WITH_AS(apply(make_channel(Matrix(2.0 * Matrix::Identity(2, 2)), Matrix::Zero(2, 2)), any),
                       doctest::Contains("InvalidChannel"), Error);
  CHECK_THROWS_WITH_AS(apply(identity_channel(2), any), doctest::Contains("InvalidInput"), Error);
  CHECK_THROWS_WITH_AS(apply(identity_channel(1), CovarianceMatrix{1, 1.4 * j_block()}),
                       doctest::Contains("InvalidInput"), Error);
}

TEST_CASE("B vanishes on perfectly transmitted directions of valid channels") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    GaussianChannel base = direct_sum(identity_channel(1), lossy_channel(0.6));
    Matrix o = random_rotation(4, rng, false);
    GaussianChannel rotated = rotate_channel(base, o, Matrix(random_rotation(4, rng, false)));
    REQUIRE(validate(rotated).valid);
    Matrix g = Matrix::Identity(4, 4) - rotated.a * rotated.a.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (g + g.transpose())));
    for (Eigen::Index i = 0; i < 4; ++i) {
      if (es.eigenvalues()(i) < 1e-10) {
        CHECK((rotated.b * es.eigenvectors().col(i)).norm() < 1e-8);
      }
    }
  }
}

TEST_CASE("apply preserves validity on random channels") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    GaussianChannel t = random_channel(n, m, rng);
    REQUIRE(validate(t).valid);
    CovarianceMatrix out = apply(t, random_cm(n, rng));
    CHECK(is_valid_cm(out));
  }
}

TEST_CASE("compose matches sequential application and the lossy semigroup") {
  GaussianChannel both = compose(lossy_channel(0.6), lossy_channel(0.8));
  GaussianChannel direct = lossy_channel(0.6 * 0.8);
  CHECK(max_abs(Matrix(both.a - direct.a)) < 1e-12);
  CHECK(max_abs(Matrix(both.b - direct.b)) < 1e-12);

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    GaussianChannel t1 = random_channel(1 + rng() % 2, 1 + rng() % 2, rng);
    GaussianChannel t2 = random_channel(t1.n_out, 1 + rng() % 2, rng);
    CovarianceMatrix gamma = random_cm(t1.n_in, rng);
    CovarianceMatrix chained = apply(t2, apply(t1, gamma));
    CovarianceMatrix fused = apply(compose(t2, t1), gamma);
    CHECK(max_abs(Matrix(chained.mat - fused.mat)) < 1e-10);
  }
  CHECK_THROWS_AS(compose(identity_channel(2), identity_channel(1)), Error);
}

TEST_CASE("direct sum") {
  GaussianChannel two = direct_sum(identity_channel(1), identity_channel(1));
  CHECK(max_abs(Matrix(two.a - Matrix::Identity(4, 4))) == 0.0);

  GaussianChannel mix = direct_sum(lossy_channel(0.9), lossy_channel(0.6));
  Vector expected_diag(4);
  expected_diag << std::sqrt(0.9), std::sqrt(0.9), std::sqrt(0.6), std::sqrt(0.6);
  CHECK(max_abs(Matrix(mix.a - Matrix(expected_diag.asDiagonal()))) < 1e-15);
  CHECK(mix.b(0, 1) == doctest::Approx(-0.1));
  CHECK(mix.b(2, 3) == doctest::Approx(-0.4));
  CHECK(validate(mix).valid);

  // Block action on block-diagonal inputs.
  Rng rng(17);
  CovarianceMatrix g1 = random_cm(1, rng);
  CovarianceMatrix g2 = random_cm(1, rng);
  Matrix joint = Matrix::Zero(4, 4);
  joint.topLeftCorner(2, 2) = g1.mat;
  joint.bottomRightCorner(2, 2) = g2.mat;
  CovarianceMatrix out = apply(mix, make_cm(joint));
  CHECK(max_abs(Matrix(out.mat.topLeftCorner(2, 2) - apply(lossy_channel(0.9), g1).mat)) < 1e-12);
  CHECK(max_abs(Matrix(out.mat.bottomRightCorner(2, 2) - apply(lossy_channel(0.6), g2).mat)) < 1e-12);
}

TEST_CASE("standard form examples") {
  ChannelStandardForm sf = standard_form(lossy_channel(0.5));
  CHECK(sf.d(0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(sf.d(1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(max_abs(Matrix(sf.b_std - 0.5 * j_block())) < 1e-12);

  // Already standard: rotations stay trivial up to sign conventions.
  Matrix a = Matrix::Zero(2, 2);
  a.diagonal() << 0.9, 0.7;
  ChannelStandardForm plain = standard_form(make_channel(a, Matrix::Zero(2, 2)));
  CHECK(plain.d(0) == doctest::Approx(0.9));
  CHECK(plain.d(1) == doctest::Approx(0.7));
  CHECK(max_abs(Matrix(plain.reconstruct().a - a)) < 1e-12);
}

TEST_CASE("standard form round-trips on random channels") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    GaussianChannel t = random_channel(n, m, rng);
    ChannelStandardForm sf = standard_form(t);
    CHECK(sf.d.minCoeff() >= 0.0);
    CHECK(sf.d.maxCoeff() <= 1.0 + 1e-12);
    GaussianChannel rebuilt = sf.reconstruct();
    CovarianceMatrix gamma = random_cm(n, rng);
    CHECK(max_abs(Matrix(apply(t, gamma).mat - apply(rebuilt, gamma).mat)) < 1e-9);
  }
}

TEST_CASE("standard form of a rotated degenerate singular spectrum") {
  Rng rng(27);
  Matrix d = Matrix::Zero(2, 2);
  d.diagonal() << 0.8, 0.8;
  Matrix a = random_rotation(2, rng) * d * random_rotation(2, rng);
  ChannelStandardForm sf = standard_form(make_channel(a, Matrix::Zero(2, 2)));
  CHECK(sf.d(0) == doctest::Approx(0.8));
  CHECK(sf.d(1) == doctest::Approx(0.8));
}

TEST_CASE("choi state of the basic channels") {
  CovarianceMatrix id_choi = choi_cm(identity_channel(1));
  CHECK(max_abs(Matrix(id_choi.mat - max_entangled(1).mat)) < 1e-15);

  CovarianceMatrix const_choi = choi_cm(constant_to_vacuum());
  Matrix expected = Matrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = j_block();
  CHECK(max_abs(Matrix(const_choi.mat - expected)) < 1e-15);
}

TEST_CASE("channel validity coincides with Choi-state validity") {
  Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 2);
    // Raw (A, B) pairs, often invalid.
    Matrix a = 0.8 * random_gaussian_matrix(2 * m, 2 * n, rng);
    Matrix b = random_antisymmetric(2 * m, rng, 0.7);
    bool channel_valid = false;
    try {
      channel_valid = validate(make_channel(a, b)).valid;
    } catch (const Error&) {
      continue;
    }
    // Build the Choi covariance matrix directly from the action.
    CovarianceMatrix me = max_entangled(n);
    Matrix ext = Matrix::Zero(2 * (m + n), 4 * n);
    ext.topLeftCorner(2 * m, 2 * n) = a;
    ext.bottomRightCorner(2 * n, 2 * n).setIdentity();
    Matrix cj = ext * me.mat * ext.transpose();
    cj.topLeftCorner(2 * m, 2 * m) += b;
    CHECK(channel_valid == is_valid_cm(make_cm(cj)));
  }
}

TEST_CASE("choi rank of the named channels") {
  CHECK(choi_rank_modes(identity_channel(1)) == 0);
  CHECK(choi_rank_modes(identity_channel(3)) == 0);
  CHECK(choi_rank_modes(lossy_channel(0.3)) == 1);
  CHECK(choi_rank_modes(lossy_channel(0.999)) == 1);
  CHECK(choi_rank_modes(constant_to_vacuum()) == 1);
  Rng rng(1);
  CHECK_THROWS_AS(choi_rank_modes(random_channel(1, 2, rng)), Error);
}

TEST_CASE("dilation of the lossy channel uses a one-mode vacuum environment") {
  Dilation dil = dilation(lossy_channel(0.4));
  CHECK(dil.pure_env_modes == 1);
  CHECK(dil.gamma_env.modes == 1);
  CHECK(max_abs(Matrix(dil.b_prime.mat - j_block())) < 1e-12);
  CHECK(max_abs(Matrix(dil.gamma_env.mat - j_block())) < 1e-12);
}

TEST_CASE("dilation of the identity keeps the environment in the vacuum") {
  Dilation dil = dilation(identity_channel(2));
  CHECK(dil.pure_env_modes == 2);
  CHECK(dil.gamma_env.modes == 2);
  CHECK(purity_defect(dil.gamma_env) < 1e-9);
  CHECK(max_abs(Matrix(dil.o_se.topLeftCorner(4, 4) - Matrix::Identity(4, 4))) < 1e-12);
}

TEST_CASE("dilation reproduces the channel at the covariance level") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    GaussianChannel t = random_channel(n, n, rng);
    Dilation dil = dilation(t);

    Matrix gram = dil.o_se.transpose() * dil.o_se;
    gram.diagonal().array() -= 1.0;
    CHECK(max_abs(gram) < 1e-9);
    CHECK(purity_defect(dil.gamma_env) < 1e-9);

    CovarianceMatrix gamma = random_cm(n, rng);
    Matrix joint = Matrix::Zero(2 * n + 2 * dil.gamma_env.modes, 2 * n + 2 * dil.gamma_env.modes);
    joint.topLeftCorner(2 * n, 2 * n) = gamma.mat;
    joint.bottomRightCorner(2 * dil.gamma_env.modes, 2 * dil.gamma_env.modes) = dil.gamma_env.mat;
    Matrix evolved = dil.o_se * joint * dil.o_se.transpose();
    CHECK(max_abs(Matrix(evolved.topLeftCorner(2 * n, 2 * n) - apply(t, gamma).mat)) < 1e-8);
  }
}

TEST_CASE("complement of the named channels") {
  // Complement of a constant channel is the identity.
  GaussianChannel c = complement(constant_to_vacuum());
  CHECK(c.n_out == 1);
  CHECK(max_abs(Matrix(c.a - Matrix::Identity(2, 2))) < 1e-12);
  CHECK(max_abs(c.b) < 1e-12);

  // Complement of the identity is a constant channel onto a pure state.
  GaussianChannel cid = complement(identity_channel(1));
  CHECK(max_abs(cid.a) < 1e-12);
  CHECK(purity_defect(make_cm(cid.b)) < 1e-12);

  for (double t : {0.1, 0.4, 0.75, 0.9}) {
    GaussianChannel comp = complement(lossy_channel(t));
    GaussianChannel expected = lossy_channel(1.0 - t);
    CHECK(max_abs(Matrix(comp.a - expected.a)) < 1e-10);
    CHECK(max_abs(Matrix(comp.b - expected.b)) < 1e-10);
  }
}

TEST_CASE("complement outputs valid channels on random input") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 2);
    GaussianChannel t = random_channel(n, m, rng);
    GaussianChannel comp = complement(t);
    CHECK(validate(comp).valid);
  }
}

TEST_CASE("double complement preserves the Choi spectrum for minimal-environment channels") {
  Rng rng(41);
  ChannelOptions opts;
  opts.pure_environment = true;
  opts.min_singular = 0.05;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    GaussianChannel t = random_channel(n, n, rng, opts);
    if (choi_rank_modes(t) > n) continue;
    GaussianChannel cc = complement(complement(t));
    REQUIRE(cc.n_out == t.n_out);
    std::vector<double> original = sorted_abs_canonical(choi_cm(t));
    std::vector<double> doubled = sorted_abs_canonical(choi_cm(cc));
    REQUIRE(original.size() == doubled.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
      CHECK(original[i] == doctest::Approx(doubled[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("split of perfectly transmitted modes") {
  GaussianChannel with_perfect = direct_sum(identity_channel(1), lossy_channel(0.8));
  PerfectSplit split = split_perfect_modes(with_perfect);
  CHECK(split.perfect_modes == 1);
  CHECK(split.remainder.n_in == 1);
  CHECK(max_abs(Matrix(split.remainder.a - lossy_channel(0.8).a)) < 1e-12);

  PerfectSplit none = split_perfect_modes(lossy_channel(0.8));
  CHECK(none.perfect_modes == 0);
  CHECK(max_abs(Matrix(none.remainder.a - lossy_channel(0.8).a)) == 0.0);

  Rng rng(3);
  CHECK_THROWS_WITH_AS(split_perfect_modes(make_channel(Matrix(random_rotation(2, rng) * 0.5),
                                                        Matrix::Zero(2, 2))),
                       doctest::Contains("NotStandardForm"), Error);
}

TEST_CASE("split reassembly acts identically") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    GaussianChannel base = random_channel(1 + rng() % 2, 1 + rng() % 2, rng);
    ChannelStandardForm sf = standard_form(base);
    GaussianChannel t_std = sf.standard_channel();
    GaussianChannel padded = direct_sum(identity_channel(1), t_std);
    PerfectSplit split = split_perfect_modes(padded);
    REQUIRE(split.perfect_modes >= 1);
    GaussianChannel rebuilt = direct_sum(identity_channel(split.perfect_modes), split.remainder);
    CovarianceMatrix gamma = random_cm(padded.n_in, rng);
    CHECK(max_abs(Matrix(apply(padded, gamma).mat - apply(rebuilt, gamma).mat)) < 1e-9);
  }
}
