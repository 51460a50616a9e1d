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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace mereo {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when an input fails a numerical validity contract (as opposed to a
/// structural one such as a dimension mismatch, which throws
/// std::invalid_argument).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double state_norm = 1e-10;     // |norm - 1| bound for states
inline constexpr double hermiticity = 1e-12;    // relative Frobenius bound
inline constexpr double unitarity = 1e-10;      // ||U U^dag - I||_F bound
inline constexpr double density_trace = 1e-10;  // |tr(rho) - 1| bound
inline constexpr double density_psd = 1e-10;    // admissible negative eigenvalue
inline constexpr double entropy_floor = 1e-12;  // eigenvalues below contribute 0
inline constexpr double degeneracy = 1e-9;      // gap flag scale, times max(1, ||H||_F)
}  // namespace tol

/// Sorted energy eigenvalues. Per the toolkit's premise these numbers are the
/// complete specification of the dynamics; everything else is a choice of
/// basis. `degenerate` is set when any gap falls below the degeneracy
/// tolerance, in which case the eigenbasis is not unique and callers that
/// need one must decide for themselves.
struct Spectrum {
  RealVector energies;
  bool degenerate = false;

  Index size() const { return energies.size(); }
};

/// Validates that `energies` is finite and ascending and computes the
/// degeneracy flag with scale `norm_scale` (typically ||H||_F).
Spectrum make_spectrum(RealVector energies, double norm_scale);

class HermitianOperator {
 public:
  /// Rejects matrices that are not square or differ from their conjugate
  /// transpose by more than tol::hermiticity relative to the Frobenius norm.
  explicit HermitianOperator(Matrix entries);

  Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double frobenius_norm() const { return entries_.norm(); }

 private:
  Matrix entries_;
};

class StateVector {
 public:
  /// Rejects amplitude vectors whose Euclidean norm differs from 1 by more
  /// than tol::state_norm.
  explicit StateVector(Vector amplitudes);

  Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  Vector amplitudes_;
};

class DensityOperator {
 public:
  /// Rejects matrices that are not Hermitian, not positive semidefinite
  /// (eigenvalues below -tol::density_psd), or whose trace differs from 1
  /// by more than tol::density_trace.
  explicit DensityOperator(Matrix entries);

  Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// A tensor-product structure on a Hilbert space: subsystem dimensions plus a
/// global unitary frame. The columns of `frame` are the factorized basis
/// vectors expressed in the computational basis, so a state psi has
/// factor-basis amplitudes frame^dag * psi and an operator A has factor-basis
/// entries frame^dag * A * frame. Factor 0 is the slowest (leftmost) tensor
/// index.
class Factorization {
 public:
  Factorization(std::vector<Index> dims, Matrix frame);

  /// Identity-frame factorization.
  explicit Factorization(std::vector<Index> dims);

  Index dim() const { return frame_.rows(); }
  Index n_factors() const { return static_cast<Index>(dims_.size()); }
  const std::vector<Index>& dims() const { return dims_; }
  const Matrix& frame() const { return frame_; }
  bool identity_frame() const { return identity_frame_; }

 private:
  std::vector<Index> dims_;
  Matrix frame_;
  bool identity_frame_ = false;
};

bool is_hermitian(const Matrix& m, double rel_tol = tol::hermiticity);
bool is_unitary(const Matrix& m, double abs_tol = tol::unitarity);

}  // namespace mereo
