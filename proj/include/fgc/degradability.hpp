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

#ifndef FGC_DEGRADABILITY_HPP_
#define FGC_DEGRADABILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fgc/channels.hpp"

namespace fgc {

// The Gaussian map W with W o T = complement(T), which exists whenever A has
// no kernel. The channel is degradable iff this candidate is completely
// positive, i.e. cp_min_eig >= -tol.
struct DegradingCandidate {
  Matrix a_tilde;
  Matrix b_tilde;
  double cp_min_eig = 0.0;

  GaussianChannel channel() const { return make_channel(a_tilde, b_tilde); }
  bool is_cp() const { return cp_min_eig >= -tol::cp_eig; }
};

DegradingCandidate degrading_candidate(const GaussianChannel& t);

enum class Verdict { Degradable, Antidegradable, Neither, Undetermined };

const char* verdict_name(Verdict v);

struct ClassificationReport {
  Verdict verdict = Verdict::Undetermined;
  bool degradable = false;
  bool antidegradable = false;
  // Grouped singular values of A: (value, Majorana multiplicity).
  std::vector<std::pair<double, int>> blocks;
  std::optional<DegradingCandidate> witness;
  std::string reason;
};

// Structural classification for square channels, cross-checked against the
// complete-positivity of the Gaussian degrading candidate:
//  - n_out < n_in: never degradable.
//  - n_out = n_in: degradable iff the singular values form even-degeneracy
//    blocks d_k >= 1/sqrt(2), B has no cross-block correlations, and the
//    Choi rank is at most n; antidegradable under the mirrored criterion
//    d_k <= 1/sqrt(2) (Choi rank <= n required; otherwise decided by the
//    degrading candidate of the complement when available).
//  - n_out > n_in: undetermined unless the degrading candidate certifies
//    degradability.
ClassificationReport classify(const GaussianChannel& t);

// Mirrored criterion for square channels with Choi rank <= n; errors with
// ChoiRankTooLarge beyond that.
bool is_antidegradable(const GaussianChannel& t);

// Necessary condition for degradability of a square standard-form channel:
// 2 D^-2 - D^-4 - (projector onto the mixed environment directions) >= 0.
struct NecessaryCondition {
  bool holds = false;
  double min_eig = 0.0;
};

NecessaryCondition small_env_necessary(const ChannelStandardForm& sf);

// Groups a descending list of singular values with the shared degeneracy
// tolerance; exposed for tests.
std::vector<std::pair<double, int>> group_singular_values(const Vector& d);

}  // namespace fgc

#endif  // FGC_DEGRADABILITY_HPP_
