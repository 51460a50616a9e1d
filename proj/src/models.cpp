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

#include "mereo/models.hpp"

#include <cmath>

#include "mereo/linalg.hpp"
#include "mereo/rng.hpp"

namespace mereo::models {

HermitianOperator transverse_field_ising(int n, double coupling, double field, bool periodic) {
  if (n < 2 || n > 12) throw std::invalid_argument("site count must be in [2, 12]");
  const Index dim = Index(1) << n;
  Matrix h = Matrix::Zero(dim, dim);

  // sigma_z eigenvalue of site i in basis state s (site i <-> bit n-1-i).
  const auto z = [n](Index s, int i) { return ((s >> (n - 1 - i)) & 1) ? -1.0 : 1.0; };

  const int n_bonds = periodic ? n : n - 1;
  for (Index s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i < n_bonds; ++i) diag -= coupling * z(s, i) * z(s, (i + 1) % n);
    h(s, s) = diag;
    for (int i = 0; i < n; ++i) {
      const Index flipped = s ^ (Index(1) << (n - 1 - i));
      h(flipped, s) += -field;
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator truncated_sho(Index dim, double mass, double omega) {
  if (dim < 4) throw std::invalid_argument("oscillator truncation needs dim >= 4");
  if (mass <= 0.0 || omega <= 0.0)
    throw std::invalid_argument("mass and frequency must be positive");

  Matrix lower = Matrix::Zero(dim, dim);  // a |n> = sqrt(n) |n-1>
  for (Index k = 0; k + 1 < dim; ++k) lower(k, k + 1) = std::sqrt(double(k + 1));
  const Matrix raise = lower.adjoint();

  const Matrix x = std::sqrt(1.0 / (2.0 * mass * omega)) * (lower + raise);
  const Matrix p = Complex(0.0, 1.0) * std::sqrt(mass * omega / 2.0) * (raise - lower);
  Matrix h = p * p / (2.0 * mass) + 0.5 * mass * omega * omega * x * x;
  h = 0.5 * (h + h.adjoint().eval());
  return HermitianOperator(std::move(h));
}

HermitianOperator gue_random(Index dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("dim must be at least 2");
  CounterRng rng(seed);
  Matrix a(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) a(i, j) = rng.next_complex_gaussian();
  Matrix h = 0.5 * (a + a.adjoint().eval());
  return HermitianOperator(std::move(h));
}

Scrambled scramble(const HermitianOperator& h, std::uint64_t seed) {
  CounterRng rng(seed, /*stream=*/1);
  Matrix u = haar_unitary(h.dim(), rng);
  Matrix conj = u * h.entries() * u.adjoint();
  conj = 0.5 * (conj + conj.adjoint().eval());
  return Scrambled{HermitianOperator(std::move(conj)), std::move(u)};
}

}  // namespace mereo::models
