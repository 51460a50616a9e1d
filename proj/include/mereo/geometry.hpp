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

namespace mereo::geometry {

/// Pairwise quantum mutual information between single factors, in nats.
/// Symmetric, zero diagonal by convention.
struct MIGraph {
  RealMatrix values;

  Index n_regions() const { return values.rows(); }
};

MIGraph mi_graph(const StateVector& psi, const Factorization& p);

struct DistanceMatrix {
  RealMatrix d;  // symmetric, zero diagonal, entries in [0, d_cap]

  Index size() const { return d.rows(); }
};

/// Distance from mutual information:
///   d = min(d_cap, -l0 * ln(max(I, i_floor) / I_max)),
/// I_max the largest off-diagonal MI. Entanglement decaying exponentially
/// with separation then maps to distance linearly. Throws if the graph has
/// no entanglement structure (I_max <= i_floor).
DistanceMatrix mi_to_distance(const MIGraph& g, double l0 = 1.0, double i_floor = 1e-12,
                              double d_cap = 50.0);

struct Embedding {
  RealMatrix coordinates;      // n x m, centroid at the origin
  RealVector gram_eigenvalues; // all n, descending; negatives reported, not used
  double stress;               // sqrt(sum (d - dhat)^2 / sum d^2) over pairs
  int estimated_dimension;
};

/// Count of eigenvalues above tau * max(lambda_max, 0).
int dimension_estimate(const RealVector& descending_eigenvalues, double tau = 0.05);

/// Classical (Torgerson) multidimensional scaling: double-center -D^2/2,
/// eigendecompose, take coordinates from the leading positive eigenpairs.
/// The embedding dimension is min(estimated dimension, m_max). MI distances
/// need not be Euclidean-embeddable; negative Gram eigenvalues are dropped
/// and reported. An all-zero D yields the degenerate zero embedding.
Embedding classical_mds(const DistanceMatrix& dist, int m_max, double tau = 0.05);

/// Change in entanglement entropy across the cut around `region`:
/// S_region(psi_after) - S_region(psi_before), in nats.
double entanglement_perturbation(const StateVector& psi_before, const StateVector& psi_after,
                                 const Factorization& p, const std::vector<Index>& region);

}  // namespace mereo::geometry
