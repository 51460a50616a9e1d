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

#include "mereo/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace mereo {

EigenSystem diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
  if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");
  EigenSystem es;
  es.spectrum = make_spectrum(solver.eigenvalues(), h.frobenius_norm());
  es.frame = solver.eigenvectors();
  return es;
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix haar_unitary(Index dim, CounterRng& rng) {
  Matrix z(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) z(i, j) = rng.next_complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase gauge: make the diagonal of R real positive.
  for (Index k = 0; k < dim; ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    q.col(k) *= (mag > 0.0) ? rkk / mag : Complex(1.0, 0.0);
  }
  return q;
}

Matrix unitary_exp_skew(const Matrix& a) {
  // iA is Hermitian; exp(A) = V exp(-i diag) V^dag.
  const Matrix herm = Complex(0.0, 1.0) * a;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  if (solver.info() != Eigen::Success) throw numeric_error("exp of skew-Hermitian failed");
  const RealVector& lam = solver.eigenvalues();
  Vector phases(lam.size());
  for (Index k = 0; k < lam.size(); ++k)
    phases[k] = std::polar(1.0, -lam[k]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix random_skew(Index dim, CounterRng& rng) {
  Matrix z(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) z(i, j) = rng.next_complex_gaussian();
  Matrix a = 0.5 * (z - z.adjoint().eval());
  const double norm = a.norm();
  if (norm > 0.0) a /= norm;
  return a;
}

}  // namespace mereo
