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

#include <cmath>
#include <sstream>

#include "fgc/capacity.hpp"
#include "fgc/degradability.hpp"
#include "fgc/sampling.hpp"

using namespace fgc;

namespace {

// Independent route to the coherent information: entropies of the actual
// channel output and of the channel-plus-reference output.
double coherent_information_via_states(double t, double lambda) {
  GaussianChannel channel = lossy_channel(t);
  CovarianceMatrix input = make_cm(Matrix(lambda * j_block()));
  const double out_entropy = entropy_bits(apply(channel, input));

  const double kappa = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
  Matrix purified = Matrix::Zero(4, 4);
  purified.block<2, 2>(0, 0) = lambda * j_block();
  purified.block<2, 2>(2, 2) = lambda * j_block();
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  purified.block<2, 2>(0, 2) = kappa * x;
  purified.block<2, 2>(2, 0) = -kappa * x;
  GaussianChannel extended = direct_sum(channel, identity_channel(1));
  const double joint_entropy = entropy_bits(apply(extended, make_cm(purified)));
  return out_entropy - joint_entropy;
}

}  // namespace

TEST_CASE("lossy channel endpoints") {
  GaussianChannel id = lossy_channel(1.0);
  CHECK(max_abs(Matrix(id.a - Matrix::Identity(2, 2))) == 0.0);
  CHECK(max_abs(id.b) == 0.0);

  GaussianChannel constant = lossy_channel(0.0);
  CHECK(max_abs(constant.a) == 0.0);
  CHECK(max_abs(Matrix(constant.b - j_block())) == 0.0);

  CHECK(classify(lossy_channel(0.5)).verdict == Verdict::Degradable);
  CHECK_THROWS_WITH_AS(lossy_channel(1.5), doctest::Contains("OutOfRange"), Error);

  GaussianChannel wide = lossy_channel(0.7, 3);
  CHECK(wide.n_in == 3);
  CHECK(validate(wide).valid);
}

TEST_CASE("coherent information closed form") {
  CHECK(coherent_information(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double lambda : {-0.9, -0.4, 0.0, 0.3, 0.8}) {
    CHECK(coherent_information(0.5, lambda) == doctest::Approx(0.0).epsilon(1e-12));
  }
  const double expected = binary_entropy(0.625) - binary_entropy(0.875);
  CHECK(coherent_information(0.75, 0.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(coherent_information(0.75, 1.5), Error);
}

TEST_CASE("coherent information equals the entropy-difference route") {
  for (double t : {0.05, 0.3, 0.5, 0.62, 0.75, 0.9, 1.0}) {
    for (double lambda : {-0.95, -0.5, 0.0, 0.25, 0.7, 0.99}) {
      CHECK(coherent_information(t, lambda) ==
            doctest::Approx(coherent_information_via_states(t, lambda)).epsilon(1e-10));
    }
  }
}

TEST_CASE("coherent information is antisymmetric in the transmission") {
  for (double t : {0.1, 0.35, 0.5, 0.8}) {
    for (double lambda : {-0.7, 0.0, 0.4, 0.95}) {
      CHECK(coherent_information(t, lambda) ==
            doctest::Approx(-coherent_information(1.0 - t, lambda)).epsilon(1e-12));
    }
  }
}

TEST_CASE("capacity endpoints") {
  CapacityResult full = quantum_capacity_lossy(1.0);
  CHECK(full.q == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(full.lambda_opt) < 1e-6);

  CapacityResult half = quantum_capacity_lossy(0.5);
  CHECK(half.q == 0.0);
  CHECK(half.reason == "antidegradable");

  CHECK(quantum_capacity_lossy(0.2).q == 0.0);
}

TEST_CASE("capacity against a dense brute-force grid") {
  const double t = 0.75;
  double best = 0.0;
  const int points = 1000001;
  for (int i = 0; i < points; ++i) {
    const double lambda = -1.0 + 2.0 * i / (points - 1);
    best = std::max(best, coherent_information(t, lambda));
  }
  CapacityResult r = quantum_capacity_lossy(t);
  CHECK(r.q == doctest::Approx(best).epsilon(1e-6));
  CHECK(r.q >= best - 1e-9);
}

TEST_CASE("capacity curve endpoints and monotonicity") {
  auto points = capacity_curve(0.5, 1.0, 6);
  REQUIRE(points.size() == 6);
  CHECK(points.front().q == doctest::Approx(0.0));
  CHECK(points.back().q == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    CHECK(points[i].q <= points[i + 1].q + 1e-10);
  }

  auto flat = capacity_curve(0.0, 0.5, 6);
  for (const auto& p : flat) CHECK(p.q == 0.0);

  // The optimal input approaches the maximally mixed state for t -> 1.
  auto tail = capacity_curve(0.9, 1.0, 11);
  CHECK(std::abs(tail.back().lambda_opt) < 1e-6);
  CHECK(std::abs(tail.back().lambda_opt) <= std::abs(tail.front().lambda_opt) + 1e-9);

  CHECK_THROWS_AS(capacity_curve(0.5, 1.5, 6), Error);
}

TEST_CASE("capacity data-processing consistency") {
  // Composing lossy channels multiplies transmissions, so Q must be monotone.
  GaussianChannel t1 = lossy_channel(0.9);
  GaussianChannel t2 = lossy_channel(0.8);
  GaussianChannel fused = compose(t2, t1);
  ChannelStandardForm sf = standard_form(fused);
  CHECK(sf.d(0) == doctest::Approx(std::sqrt(0.72)));
  CHECK(quantum_capacity_lossy(0.72).q <= quantum_capacity_lossy(0.9).q);
  CHECK(quantum_capacity_lossy(0.72).q <= quantum_capacity_lossy(0.8).q);
}

TEST_CASE("capacity csv format") {
  auto points = capacity_curve(1.0, 1.0, 1);
  REQUIRE(points.size() == 1);
  CHECK(points[0].q == doctest::Approx(1.0));
  std::string csv = capacity_curve_csv(points);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,Q,lambda_opt");
  std::getline(lines, row);
  CHECK(row.substr(0, 2) == "1,");
  CHECK(csv.find('\r') == std::string::npos);
}
