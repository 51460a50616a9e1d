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

#include "mereo/linalg.hpp"
#include "mereo/types.hpp"

namespace mereo {

/// Phase evolution in the energy eigenbasis: out_n = coeffs_n exp(-i E_n t).
Vector spectral_evolve(const Spectrum& spectrum, const Vector& coeffs, double t);

/// Evolution of a computational-basis state through a precomputed
/// eigensystem: frame * phases * frame^dag * psi.
Vector evolve_with(const EigenSystem& es, const Vector& psi, double t);

/// exp(-iHt) psi by adaptive Dormand-Prince 5(4) integration of the
/// Schrodinger equation. Independent of the spectral route; the two are
/// cross-checked against each other in the tests and the acceptance suite.
StateVector schrodinger_evolve_dense(const HermitianOperator& h, const StateVector& psi,
                                     double t, double tolerance = 1e-13);

}  // namespace mereo
