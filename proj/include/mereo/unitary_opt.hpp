// Copyright 2026 The Mereo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mereo/types.hpp"

namespace mereo {

using FrameObjective = std::function<double(const Matrix&)>;

/// Gradient-free minimization over the unitary group: proposals are
/// U <- U exp(s A) with A a random normalized skew-Hermitian direction and s
/// an adaptive step (grown on acceptance, shrunk geometrically on
/// rejection). Long stalls trigger a kick away from the incumbent best so a
/// restart can leave shallow basins; after all restarts a pure descent
/// polishes the overall best frame. Restart r draws every random number from
/// stream (seed, r), so results are bit-identical at any thread count.
struct FrameSearchOptions {
  int restarts = 4;
  int steps = 2000;  // objective evaluations per restart
  std::uint64_t seed = 0;
  int threads = 1;
  double step_init = 0.15;
  double step_grow = 1.3;
  double step_shrink = 0.97;
  double step_floor = 1e-8;
  double step_cap = 0.4;
  int kick_after = 250;     // rejected proposals in a row before kicking
  double kick_size = 0.35;
  double polish_fraction = 0.35;  // of restarts*steps, spent polishing the best
  bool identity_first = true;     // restart 0 starts from the identity frame
};

struct FrameSearchResult {
  Matrix frame;
  double objective = 0.0;
  // (cumulative evaluation index, best objective so far); non-increasing.
  std::vector<std::pair<std::int64_t, double>> trace;
  std::int64_t evaluations = 0;
};

FrameSearchResult minimize_over_unitaries(Index dim, const FrameObjective& objective,
                                          const FrameSearchOptions& options);

}  // namespace mereo
