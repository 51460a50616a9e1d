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

#include "mereo/unitary_opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/QR>

#include "mereo/linalg.hpp"
#include "mereo/rng.hpp"

namespace mereo {

namespace {

struct RestartOutcome {
  Matrix frame;
  double objective = 0.0;
  std::vector<std::pair<std::int64_t, double>> improvements;  // local eval index
  std::int64_t evaluations = 0;
};

// Numerical hygiene for long products of exponentials: project back onto the
// unitary group via QR with the positive-diagonal phase convention.
Matrix reunitarize(const Matrix& u) {
  Eigen::HouseholderQR<Matrix> qr(u);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < u.rows(); ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    q.col(k) *= (mag > 0.0) ? rkk / mag : Complex(1.0, 0.0);
  }
  return q;
}

RestartOutcome run_restart(Index dim, const FrameObjective& objective,
                           const FrameSearchOptions& opts, int restart_index) {
  CounterRng rng(opts.seed, static_cast<std::uint64_t>(restart_index) + 1);
  RestartOutcome out;

  Matrix u = (restart_index == 0 && opts.identity_first) ? Matrix::Identity(dim, dim)
                                                         : haar_unitary(dim, rng);
  double f = objective(u);
  ++out.evaluations;
  out.frame = u;
  out.objective = f;
  out.improvements.emplace_back(out.evaluations, f);

  double step = opts.step_init;
  int stalled = 0;
  int accepted = 0;

  while (out.evaluations < opts.steps) {
    const Matrix direction = random_skew(dim, rng);
    const Matrix candidate = u * unitary_exp_skew(step * direction);
    const double fc = objective(candidate);
    ++out.evaluations;

    if (fc < f) {
      u = candidate;
      f = fc;
      step = std::min(step * opts.step_grow, opts.step_cap);
      stalled = 0;
      if (++accepted % 4096 == 0) u = reunitarize(u);
      if (f < out.objective) {
        out.objective = f;
        out.frame = u;
        out.improvements.emplace_back(out.evaluations, f);
      }
    } else {
      step = std::max(step * opts.step_shrink, opts.step_floor);
      ++stalled;
    }

    if (stalled > opts.kick_after && out.evaluations + 1 < opts.steps) {
      // Leave the current basin: restart the walk near the best frame found.
      u = out.frame * unitary_exp_skew(opts.kick_size * random_skew(dim, rng));
      f = objective(u);
      ++out.evaluations;
      step = 0.75 * opts.step_init;
      stalled = 0;
      if (f < out.objective) {
        out.objective = f;
        out.frame = u;
        out.improvements.emplace_back(out.evaluations, f);
      }
    }
  }
  return out;
}

// Pure descent (no kicks) from a warm start; used for the final polish.
RestartOutcome run_polish(const Matrix& start, double start_objective,
                          const FrameObjective& objective, const FrameSearchOptions& opts,
                          std::int64_t budget) {
  const Index dim = start.rows();
  CounterRng rng(opts.seed, static_cast<std::uint64_t>(opts.restarts) + 1);
  RestartOutcome out;
  out.frame = start;
  out.objective = start_objective;

  Matrix u = start;
  double f = start_objective;
  double step = std::min(0.05, opts.step_init);
  int accepted = 0;

  while (out.evaluations < budget) {
    const Matrix direction = random_skew(dim, rng);
    const Matrix candidate = u * unitary_exp_skew(step * direction);
    const double fc = objective(candidate);
    ++out.evaluations;
    if (fc < f) {
      u = candidate;
      f = fc;
      step = std::min(step * opts.step_grow, opts.step_cap);
      if (++accepted % 4096 == 0) u = reunitarize(u);
      if (f < out.objective) {
        out.objective = f;
        out.frame = u;
        out.improvements.emplace_back(out.evaluations, f);
      }
    } else {
      step = std::max(step * opts.step_shrink, 1e-9);
    }
  }
  return out;
}

}  // namespace

FrameSearchResult minimize_over_unitaries(Index dim, const FrameObjective& objective,
                                          const FrameSearchOptions& options) {
  if (options.restarts < 1 || options.steps < 1)
    throw std::invalid_argument("restarts and steps must be at least 1");

  std::vector<RestartOutcome> outcomes(options.restarts);
  const int workers = std::clamp(options.threads, 1, options.restarts);
  if (workers <= 1) {
    for (int r = 0; r < options.restarts; ++r) outcomes[r] = run_restart(dim, objective, options, r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < options.restarts; r = next.fetch_add(1))
          outcomes[r] = run_restart(dim, objective, options, r);
      });
    }
    for (auto& th : pool) th.join();
  }

  int best = 0;
  for (int r = 1; r < options.restarts; ++r)
    if (outcomes[r].objective < outcomes[best].objective) best = r;

  const auto polish_budget = static_cast<std::int64_t>(
      options.polish_fraction * static_cast<double>(options.restarts) * options.steps);
  RestartOutcome polished =
      (polish_budget > 0)
          ? run_polish(outcomes[best].frame, outcomes[best].objective, objective, options,
                       polish_budget)
          : RestartOutcome{outcomes[best].frame, outcomes[best].objective, {}, 0};

  // Merge traces in restart order (thread-count independent), then keep the
  // monotone best-so-far envelope.
  FrameSearchResult result;
  result.frame = polished.objective <= outcomes[best].objective ? polished.frame
                                                                : outcomes[best].frame;
  result.objective = std::min(polished.objective, outcomes[best].objective);

  std::int64_t offset = 0;
  double running = std::numeric_limits<double>::infinity();
  for (const auto& oc : outcomes) {
    for (const auto& [it, val] : oc.improvements) {
      if (val < running) {
        running = val;
        result.trace.emplace_back(offset + it, val);
      }
    }
    offset += oc.evaluations;
  }
  for (const auto& [it, val] : polished.improvements) {
    if (val < running) {
      running = val;
      result.trace.emplace_back(offset + it, val);
    }
  }
  result.evaluations = offset + polished.evaluations;
  return result;
}

}  // namespace mereo
