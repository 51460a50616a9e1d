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

#include <vector>

#include "mereo/types.hpp"

namespace mereo {

/// Reduced density operator on the kept factors (ascending factor order).
/// The state is first expressed in the factorized basis, so with a
/// non-identity frame keeping every factor returns frame^dag rho frame.
DensityOperator partial_trace(const DensityOperator& rho, const Factorization& f,
                              const std::vector<Index>& keep);

/// Reduced density matrix of a pure state given directly by its
/// factor-basis amplitudes. Cheaper than forming |psi><psi| first.
Matrix reduced_density(const Vector& factor_amplitudes, const std::vector<Index>& dims,
                       const std::vector<Index>& keep);

/// -tr(rho ln rho) in nats. Eigenvalues below tol::entropy_floor contribute
/// nothing (they are numerical noise around the log singularity).
double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of an eigenvalue list, same floor convention.
double entropy_of_eigenvalues(const RealVector& eigenvalues);

/// 1 - tr(rho^2); cheap entanglement proxy used for growth-rate fits.
double linear_entropy(const Matrix& rho);

/// I(alpha:beta) = S_alpha + S_beta - S_{alpha,beta} for a pure global
/// state, in nats. The index sets must be disjoint and nonempty.
double mutual_information(const StateVector& psi, const Factorization& f,
                          const std::vector<Index>& alpha, const std::vector<Index>& beta);

struct Purification {
  StateVector state;       // pure state on system (x) ancilla, both of dim d
  Factorization split;     // dims {d, d}, identity frame
};

/// Pure state on d (x) d whose partial trace over the ancilla reproduces
/// rho. Convention: psi = sum_k sqrt(lambda_k) v_k (x) |k> with eigenvalues
/// descending and eigenvector phases fixed (largest-magnitude component real
/// positive), so a pure input |a><a| purifies to |a> (x) |0>.
Purification purify(const DensityOperator& rho);

}  // namespace mereo
