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

#include "mereo/rng.hpp"
#include "mereo/types.hpp"

namespace mereo {

struct EigenSystem {
  Spectrum spectrum;
  Matrix frame;  // columns are orthonormal eigenvectors, ascending eigenvalue
};

/// Dense Hermitian eigendecomposition. The frame diagonalizes:
/// frame^dag H frame = diag(spectrum). Degenerate spectra are flagged, not
/// resolved; under degeneracy the eigenvector choice is an arbitrary
/// orthonormal basis of each eigenspace.
EigenSystem diagonalize(const HermitianOperator& h);

Matrix dagger(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// phase convention that R has a positive real diagonal.
Matrix haar_unitary(Index dim, CounterRng& rng);

/// exp(A) for skew-Hermitian A, computed through the eigendecomposition of
/// iA so the result is unitary to machine precision.
Matrix unitary_exp_skew(const Matrix& a);

/// Frobenius-normalized random skew-Hermitian direction.
Matrix random_skew(Index dim, CounterRng& rng);

}  // namespace mereo
