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

#include "mereo/entropy.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace mereo {

namespace {

struct KeepLayout {
  std::vector<Index> keep;      // ascending, validated
  Index kept_dim = 1;
  Index rest_dim = 1;
  std::vector<Index> kept_stride;  // stride of each kept factor in the kept index
  std::vector<Index> rest_stride;  // stride of each traced factor in the rest index
  std::vector<Index> full_stride;  // stride of each factor in the full index
};

KeepLayout make_layout(const std::vector<Index>& dims, const std::vector<Index>& keep_in) {
  const Index n = static_cast<Index>(dims.size());
  if (keep_in.empty()) throw std::invalid_argument("keep set must be nonempty");
  std::vector<Index> keep = keep_in;
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("keep set has repeated indices");
  if (keep.front() < 0 || keep.back() >= n)
    throw std::invalid_argument("keep index out of range");

  KeepLayout layout;
  layout.keep = keep;
  layout.full_stride.assign(n, 1);
  for (Index f = n - 2; f >= 0; --f)
    layout.full_stride[f] = layout.full_stride[f + 1] * dims[f + 1];

  std::vector<bool> kept(n, false);
  for (Index f : keep) kept[f] = true;

  // Row-major strides of each factor inside the kept / traced sub-index,
  // both in ascending original factor order.
  layout.kept_stride.assign(n, 0);
  layout.rest_stride.assign(n, 0);
  for (Index f = n - 1; f >= 0; --f) {
    if (kept[f]) {
      layout.kept_stride[f] = layout.kept_dim;
      layout.kept_dim *= dims[f];
    } else {
      layout.rest_stride[f] = layout.rest_dim;
      layout.rest_dim *= dims[f];
    }
  }
  return layout;
}

// Splits a full row-major index into (kept, rest) row-major sub-indices.
inline void split_index(Index full, const std::vector<Index>& dims, const KeepLayout& layout,
                        Index& kept, Index& rest) {
  kept = 0;
  rest = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    const Index digit = (full / layout.full_stride[f]) % dims[f];
    kept += digit * layout.kept_stride[f];
    rest += digit * layout.rest_stride[f];
  }
}

}  // namespace

Matrix reduced_density(const Vector& amps, const std::vector<Index>& dims,
                       const std::vector<Index>& keep) {
  Index total = 1;
  for (Index d : dims) total *= d;
  if (amps.size() != total) throw std::invalid_argument("amplitude count does not match dims");
  const KeepLayout layout = make_layout(dims, keep);

  // Gather psi into a kept x rest matrix, then contract the rest index.
  Matrix reshaped = Matrix::Zero(layout.kept_dim, layout.rest_dim);
  for (Index i = 0; i < total; ++i) {
    Index kept, rest;
    split_index(i, dims, layout, kept, rest);
    reshaped(kept, rest) = amps[i];
  }
  return reshaped * reshaped.adjoint();
}

DensityOperator partial_trace(const DensityOperator& rho, const Factorization& f,
                              const std::vector<Index>& keep) {
  if (rho.dim() != f.dim())
    throw std::invalid_argument("factorization does not match the density operator");
  const std::vector<Index>& dims = f.dims();
  const KeepLayout layout = make_layout(dims, keep);

  const Matrix coords =
      f.identity_frame() ? rho.entries() : Matrix(f.frame().adjoint() * rho.entries() * f.frame());

  const Index total = rho.dim();
  std::vector<Index> kept_of(total), rest_of(total);
  for (Index i = 0; i < total; ++i) split_index(i, dims, layout, kept_of[i], rest_of[i]);

  Matrix out = Matrix::Zero(layout.kept_dim, layout.kept_dim);
  for (Index i = 0; i < total; ++i) {
    for (Index j = 0; j < total; ++j) {
      if (rest_of[i] != rest_of[j]) continue;
      out(kept_of[i], kept_of[j]) += coords(i, j);
    }
  }
  out = 0.5 * (out + out.adjoint().eval());  // strip roundoff skew
  return DensityOperator(std::move(out));
}

double entropy_of_eigenvalues(const RealVector& eigenvalues) {
  double s = 0.0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double lam = eigenvalues[i];
    if (lam > tol::entropy_floor) s -= lam * std::log(lam);
  }
  return s;
}

double von_neumann_entropy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries(), Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(solver.eigenvalues());
}

double linear_entropy(const Matrix& rho) {
  return 1.0 - (rho * rho).trace().real();
}

namespace {

double entropy_of_reduced(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(solver.eigenvalues());
}

}  // namespace

double mutual_information(const StateVector& psi, const Factorization& f,
                          const std::vector<Index>& alpha, const std::vector<Index>& beta) {
  if (psi.dim() != f.dim())
    throw std::invalid_argument("factorization does not match the state");
  if (alpha.empty() || beta.empty())
    throw std::invalid_argument("region index sets must be nonempty");
  for (Index a : alpha)
    for (Index b : beta)
      if (a == b) throw std::invalid_argument("region index sets must be disjoint");

  const Vector coords =
      f.identity_frame() ? psi.amplitudes() : Vector(f.frame().adjoint() * psi.amplitudes());

  std::vector<Index> both = alpha;
  both.insert(both.end(), beta.begin(), beta.end());

  const double s_a = entropy_of_reduced(reduced_density(coords, f.dims(), alpha));
  const double s_b = entropy_of_reduced(reduced_density(coords, f.dims(), beta));
  const double s_ab = entropy_of_reduced(reduced_density(coords, f.dims(), both));
  return s_a + s_b - s_ab;
}

Purification purify(const DensityOperator& rho) {
  const Index d = rho.dim();
  if (d < 2) throw std::invalid_argument("purification needs dim >= 2");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries());
  if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");

  Vector psi = Vector::Zero(d * d);
  // Eigen returns ascending order; walk it backwards so the ancilla label 0
  // carries the largest weight.
  for (Index k = 0; k < d; ++k) {
    const Index src = d - 1 - k;
    const double lam = std::max(solver.eigenvalues()[src], 0.0);
    if (lam <= 0.0) continue;
    Vector v = solver.eigenvectors().col(src);
    // Phase convention: largest-magnitude component real positive.
    Index arg_max = 0;
    for (Index i = 1; i < d; ++i)
      if (std::abs(v[i]) > std::abs(v[arg_max])) arg_max = i;
    if (std::abs(v[arg_max]) > 0.0) v *= std::conj(v[arg_max]) / std::abs(v[arg_max]);
    const double w = std::sqrt(lam);
    for (Index i = 0; i < d; ++i) psi[i * d + k] = w * v[i];
  }
  psi /= psi.norm();
  return Purification{StateVector(std::move(psi)),
                      Factorization(std::vector<Index>{d, d})};
}

}  // namespace mereo
