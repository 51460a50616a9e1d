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

#include "mereo/types.hpp"

namespace mereo {

/// Deterministic counter-based random generator: the SplitMix64 output
/// function (Steele, Lea & Vigna) evaluated at key + n * golden gamma for
/// n = 1, 2, .... Pure 64-bit integer arithmetic, so streams are identical
/// across platforms and independent of evaluation order elsewhere. Distinct
/// (seed, stream) pairs give statistically independent streams; every seeded
/// construction in the toolkit derives its stream id from its work unit so
/// that results do not depend on thread count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double();

  /// Standard normal via Box-Muller; consumes two words per call.
  double next_gaussian();

  /// Re(z), Im(z) independent standard normals.
  Complex next_complex_gaussian();

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

  /// Derived independent stream (does not advance this generator).
  CounterRng substream(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace mereo
