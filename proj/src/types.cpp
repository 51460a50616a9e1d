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

#include "mereo/types.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace mereo {

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.norm();
  const double diff = (m - m.adjoint()).norm();
  if (scale == 0.0) return diff == 0.0;
  return diff <= rel_tol * scale;
}

bool is_unitary(const Matrix& m, double abs_tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m * m.adjoint();
  return (gram - Matrix::Identity(m.rows(), m.cols())).norm() <= abs_tol;
}

Spectrum make_spectrum(RealVector energies, double norm_scale) {
  for (Index i = 0; i < energies.size(); ++i) {
    if (!std::isfinite(energies[i])) throw numeric_error("spectrum contains non-finite energy");
    if (i > 0 && energies[i] < energies[i - 1])
      throw std::invalid_argument("spectrum must be sorted ascending");
  }
  Spectrum s;
  s.energies = std::move(energies);
  const double gap_tol = tol::degeneracy * std::max(1.0, norm_scale);
  for (Index i = 1; i < s.energies.size(); ++i) {
    if (s.energies[i] - s.energies[i - 1] < gap_tol) {
      s.degenerate = true;
      break;
    }
  }
  return s;
}

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw std::invalid_argument("operator must be square and non-empty");
  if (!entries_.allFinite()) throw numeric_error("operator has non-finite entries");
  if (!is_hermitian(entries_)) throw numeric_error("operator is not Hermitian");
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw std::invalid_argument("state must be non-empty");
  if (!amplitudes_.allFinite()) throw numeric_error("state has non-finite amplitudes");
  if (std::abs(amplitudes_.norm() - 1.0) > tol::state_norm)
    throw numeric_error("state is not normalized");
}

DensityOperator::DensityOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw std::invalid_argument("density operator must be square and non-empty");
  if (!entries_.allFinite()) throw numeric_error("density operator has non-finite entries");
  if (!is_hermitian(entries_)) throw numeric_error("density operator is not Hermitian");
  if (std::abs(entries_.trace().real() - 1.0) > tol::density_trace ||
      std::abs(entries_.trace().imag()) > tol::density_trace)
    throw numeric_error("density operator trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::density_psd)
    throw numeric_error("density operator is not positive semidefinite");
}

Factorization::Factorization(std::vector<Index> dims, Matrix frame)
    : dims_(std::move(dims)), frame_(std::move(frame)) {
  if (dims_.empty()) throw std::invalid_argument("factorization needs at least one factor");
  Index product = 1;
  for (Index d : dims_) {
    if (d < 2) throw std::invalid_argument("factor dimensions must be at least 2");
    product *= d;
  }
  if (frame_.rows() != product || frame_.cols() != product)
    throw std::invalid_argument("frame dimension does not match the product of factor dims");
  if (!is_unitary(frame_)) throw numeric_error("frame is not unitary");
  identity_frame_ = frame_.isIdentity(1e-14);
}

Factorization::Factorization(std::vector<Index> dims) {
  Index product = 1;
  for (Index d : dims) {
    if (d < 2) throw std::invalid_argument("factor dimensions must be at least 2");
    product *= d;
  }
  dims_ = std::move(dims);
  frame_ = Matrix::Identity(product, product);
  identity_frame_ = true;
}

}  // namespace mereo
