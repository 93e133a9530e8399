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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fgc/capacity.hpp"
#include "fgc/degradability.hpp"
#include "fgc/fock.hpp"
#include "fgc/json_io.hpp"
#include "fgc/sampling.hpp"

namespace {

using fgc::Json;

// Exit contract: 0 success, 1 usage or I/O error, 2 mathematical invalidity.
int exit_code_for(const fgc::Error& e) {
  switch (e.code()) {
    case fgc::Errc::ParseError:
    case fgc::Errc::OutOfRange:
    case fgc::Errc::TooManyModes:
      return 1;
    default:
      return 2;
  }
}

int cmd_validate(const std::string& path) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  fgc::ChannelValidity v = fgc::validate(t);
  std::cout << Json{{"valid", v.valid}, {"min_eig", v.min_eig}}.dump() << "\n";
  return v.valid ? 0 : 2;
}

int cmd_classify(const std::string& path, bool pretty) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  fgc::ClassificationReport report = fgc::classify(t);
  Json j = fgc::report_to_json(report);
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

int cmd_standard_form(const std::string& path) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  fgc::ChannelStandardForm sf = fgc::standard_form(t);
  Json d = Json::array();
  for (Eigen::Index i = 0; i < sf.d.size(); ++i) d.push_back(sf.d(i));
  std::cout << Json{{"pre_rotation", fgc::matrix_to_json(sf.pre_rotation.matrix)},
                    {"post_rotation", fgc::matrix_to_json(sf.post_rotation.matrix)},
                    {"D", d},
                    {"B_std", fgc::matrix_to_json(sf.b_std)}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_complement(const std::string& path) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  std::cout << fgc::channel_to_json(fgc::complement(t)).dump() << "\n";
  return 0;
}

int cmd_dilate(const std::string& path) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  fgc::Dilation dil = fgc::dilation(t);
  std::cout << Json{{"O_SE", fgc::matrix_to_json(dil.o_se)},
                    {"gamma_E", fgc::cm_to_json(dil.gamma_env)},
                    {"pure_env_modes", dil.pure_env_modes},
                    {"B_prime", fgc::cm_to_json(dil.b_prime)}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_choi(const std::string& path) {
  fgc::GaussianChannel t = fgc::channel_from_json(fgc::load_json_file(path));
  std::cout << fgc::cm_to_json(fgc::choi_cm(t)).dump() << "\n";
  return 0;
}

int cmd_capacity(double t_min, double t_max, int steps, const std::string& out_path) {
  auto points = fgc::capacity_curve(t_min, t_max, steps);
  const std::string csv = fgc::capacity_curve_csv(points);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fgc::raise(fgc::Errc::ParseError, "cannot write " + out_path);
    out << csv;
  }
  return 0;
}

int cmd_oracle_check(int modes, int trials, unsigned long long seed) {
  if (modes < 1 || modes > 3) fgc::raise(fgc::Errc::TooManyModes, "oracle check is capped at 3 modes");
  if (trials < 1) fgc::raise(fgc::Errc::OutOfRange, "need at least one trial");
  fgc::Rng rng(seed);
  fgc::ChannelOptions opts;
  // Three-mode sweeps need small environments to stay under the dense cap.
  opts.pure_environment = modes >= 3;
  double max_cm_dev = 0.0;
  double max_entropy_dev = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    fgc::GaussianChannel t = fgc::random_channel(modes, modes, rng, opts);
    fgc::CovarianceMatrix gamma = fgc::random_cm(modes, rng);
    fgc::CovarianceMatrix expected = fgc::apply(t, gamma);

    fgc::CMatrix rho = fgc::fock::state_from_cm(gamma);
    fgc::CMatrix out = fgc::fock::apply_channel_dense(t, rho);
    fgc::fock::MajoranaSet maj = fgc::fock::majoranas(modes);
    fgc::CovarianceMatrix dense_cm = fgc::fock::cm_from_state(out, maj);

    max_cm_dev = std::max(max_cm_dev, fgc::max_abs(fgc::Matrix(dense_cm.mat - expected.mat)));
    max_entropy_dev = std::max(max_entropy_dev, std::abs(fgc::fock::entropy_dense(out) -
                                                         fgc::entropy_bits(expected)));
  }
  const bool pass = max_cm_dev < 1e-8 && max_entropy_dev < 1e-8;
  std::cout << Json{{"modes", modes},
                    {"trials", trials},
                    {"seed", seed},
                    {"max_cm_deviation", max_cm_dev},
                    {"max_entropy_deviation", max_entropy_dev},
                    {"pass", pass}}
                   .dump()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Gaussian channel toolkit"};
  app.require_subcommand(1);

  std::string path;
  bool pretty = false;
  auto* validate_cmd = app.add_subcommand("validate", "check complete positivity of a channel file");
  validate_cmd->add_option("path", path, "channel JSON file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "degradability classification");
  classify_cmd->add_option("path", path, "channel JSON file")->required();
  classify_cmd->add_flag("--json", pretty, "pretty-print the JSON report");
  auto* sf_cmd = app.add_subcommand("standard-form", "orthogonal standard form");
  sf_cmd->add_option("path", path, "channel JSON file")->required();
  auto* comp_cmd = app.add_subcommand("complement", "complementary channel");
  comp_cmd->add_option("path", path, "channel JSON file")->required();
  auto* dilate_cmd = app.add_subcommand("dilate", "pure-environment dilation");
  dilate_cmd->add_option("path", path, "channel JSON file")->required();
  auto* choi_cmd = app.add_subcommand("choi", "Choi-Jamiolkowski covariance matrix");
  choi_cmd->add_option("path", path, "channel JSON file")->required();

  double t_min = 0.5, t_max = 1.0;
  int steps = 51;
  std::string out_path;
  auto* capacity_cmd = app.add_subcommand("capacity", "quantum capacity curve of the lossy channel");
  capacity_cmd->add_option("--t-min", t_min, "lower transmission bound");
  capacity_cmd->add_option("--t-max", t_max, "upper transmission bound");
  capacity_cmd->add_option("--steps", steps, "number of grid points");
  capacity_cmd->add_option("--out", out_path, "CSV output file (stdout if absent)");

  int modes = 1, trials = 20;
  unsigned long long seed = 0;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "dense Fock-space equivalence sweep");
  oracle_cmd->add_option("--modes", modes, "mode count (at most 3)");
  oracle_cmd->add_option("--trials", trials, "number of random trials");
  auto* seed_opt = oracle_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (classify_cmd->parsed()) return cmd_classify(path, pretty);
    if (sf_cmd->parsed()) return cmd_standard_form(path);
    if (comp_cmd->parsed()) return cmd_complement(path);
    if (dilate_cmd->parsed()) return cmd_dilate(path);
    if (choi_cmd->parsed()) return cmd_choi(path);
    if (capacity_cmd->parsed()) return cmd_capacity(t_min, t_max, steps, out_path);
    if (oracle_cmd->parsed()) {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("FGC_SEED")) seed = std::strtoull(env, nullptr, 10);
      }
      return cmd_oracle_check(modes, trials, seed);
    }
  } catch (const fgc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
