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
#include <utility>
#include <vector>

#include "mereo/types.hpp"

namespace mereo::locality {

using Multipartition = Factorization;

/// Orthonormal Hermitian operator basis for one factor of dimension q:
/// index 0 is I/sqrt(q), then for each pair j<k (lexicographic) the
/// symmetric and antisymmetric generalized Gell-Mann matrices, then the
/// q-1 diagonal ones. All unit Hilbert-Schmidt norm, so expansions satisfy
/// Parseval and Hermitian operators get real coefficients. For q = 2 this is
/// {I, sigma_x, sigma_y, sigma_z}/sqrt(2).
std::vector<Matrix> hermitian_basis(Index q);

/// Expansion of an operator over the tensor products of per-factor bases.
/// Coefficients are stored flat in mixed radix: the label of factor alpha
/// runs over [0, q_alpha^2), label 0 = identity, factor 0 slowest.
class OperatorExpansion {
 public:
  OperatorExpansion(std::vector<Index> dims, RealVector coefficients);

  const std::vector<Index>& dims() const { return dims_; }
  const RealVector& coefficients() const { return coefficients_; }
  Index n_terms() const { return coefficients_.size(); }

  double coefficient(const std::vector<Index>& labels) const;
  std::vector<Index> labels_of(Index flat) const;
  /// Number of non-identity labels of term `flat`.
  int order_of(Index flat) const;

 private:
  std::vector<Index> dims_;        // factor dimensions q_alpha
  std::vector<Index> strides_;     // mixed-radix strides over q_alpha^2
  RealVector coefficients_;
};

/// Expands frame^dag H frame over the per-factor Hermitian bases.
OperatorExpansion operator_expansion(const HermitianOperator& h, const Multipartition& p);

/// Inverse of operator_expansion (factor-basis operator).
Matrix expansion_reconstruct(const OperatorExpansion& e);

/// w_k = sum of squared coefficients with exactly k non-identity labels.
/// sum_k w_k = ||H||_F^2 (Parseval).
struct LocalityProfile {
  RealVector weight_by_order;  // k = 0 .. n_factors

  double total() const { return weight_by_order.sum(); }
};

LocalityProfile locality_profile(const OperatorExpansion& e);

struct KLocalityResult {
  bool is_k_local;
  double nonlocal_fraction;  // weight above order k over total weight
};

KLocalityResult k_locality_test(const HermitianOperator& h, const Multipartition& p, int k,
                                double tolerance = 1e-6);

struct LocalitySearchResult {
  Multipartition partition;
  double nonlocal_fraction;
  std::vector<std::pair<std::int64_t, double>> trace;  // non-increasing best fraction
};

/// Minimizes the non-local weight fraction over the frame unitary (same
/// optimizer family as the mereology search). Failure to reach a target is
/// reported through the residual fraction, never thrown.
LocalitySearchResult local_factorization_search(const HermitianOperator& h,
                                                const std::vector<Index>& dims, int k,
                                                int restarts, int steps, std::uint64_t seed,
                                                int threads = 1);

}  // namespace mereo::locality
