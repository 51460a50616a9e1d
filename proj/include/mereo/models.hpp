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

namespace mereo::models {

/// H = -J sum sigma_z(i) sigma_z(i+1) - g sum sigma_x(i) on n qubits,
/// 2 <= n <= 12. Site i maps to bit n-1-i, i.e. factor 0 is the slowest
/// tensor index, so basis index 0 is |00...0>.
HermitianOperator transverse_field_ising(int n, double coupling, double field, bool periodic);

/// Harmonic oscillator p^2/2m + m w^2 x^2 / 2 in the truncated number basis,
/// with x and p built from truncated ladder operators. Eigenvalues below the
/// truncation boundary are exactly w(n + 1/2).
HermitianOperator truncated_sho(Index dim, double mass, double omega);

/// (A + A^dag)/2 with A filled row-major with iid complex standard normals
/// from CounterRng(seed). Deterministic per seed.
HermitianOperator gue_random(Index dim, std::uint64_t seed);

struct Scrambled {
  HermitianOperator h;  // U H U^dag
  Matrix frame;         // the Haar unitary U, for known-answer checks
};

/// Conjugates H by a seeded Haar-random unitary and returns both. The
/// spectrum is preserved; any basis-dependent structure is destroyed.
Scrambled scramble(const HermitianOperator& h, std::uint64_t seed);

}  // namespace mereo::models
