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

#include "mereo/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "mereo/entropy.hpp"

namespace mereo::geometry {

namespace {

double entropy_of(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(solver.eigenvalues());
}

}  // namespace

MIGraph mi_graph(const StateVector& psi, const Factorization& p) {
  if (psi.dim() != p.dim()) throw std::invalid_argument("state does not match the partition");
  const Index n = p.n_factors();
  const Vector coords =
      p.identity_frame() ? psi.amplitudes() : Vector(p.frame().adjoint() * psi.amplitudes());

  std::vector<double> single(n);
  for (Index a = 0; a < n; ++a)
    single[a] = entropy_of(reduced_density(coords, p.dims(), {a}));

  MIGraph g;
  g.values = RealMatrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const double joint = entropy_of(reduced_density(coords, p.dims(), {a, b}));
      const double mi = single[a] + single[b] - joint;
      g.values(a, b) = mi;
      g.values(b, a) = mi;
    }
  }
  return g;
}

DistanceMatrix mi_to_distance(const MIGraph& g, double l0, double i_floor, double d_cap) {
  if (l0 <= 0.0) throw std::invalid_argument("length scale must be positive");
  if (i_floor <= 0.0) throw std::invalid_argument("mutual-information floor must be positive");
  if (d_cap <= 0.0) throw std::invalid_argument("distance cap must be positive");
  const Index n = g.n_regions();

  double i_max = 0.0;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b) i_max = std::max(i_max, g.values(a, b));
  if (i_max <= i_floor) throw numeric_error("no entanglement structure");

  DistanceMatrix dist;
  dist.d = RealMatrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const double i_ab = std::max(g.values(a, b), i_floor);
      const double d = std::min(d_cap, -l0 * std::log(i_ab / i_max));
      dist.d(a, b) = std::max(d, 0.0);
      dist.d(b, a) = dist.d(a, b);
    }
  }
  return dist;
}

int dimension_estimate(const RealVector& descending_eigenvalues, double tau) {
  if (descending_eigenvalues.size() == 0) return 0;
  const double threshold = tau * std::max(descending_eigenvalues[0], 0.0);
  int count = 0;
  for (Index i = 0; i < descending_eigenvalues.size(); ++i)
    if (descending_eigenvalues[i] > threshold && descending_eigenvalues[i] > 0.0) ++count;
  return count;
}

Embedding classical_mds(const DistanceMatrix& dist, int m_max, double tau) {
  const Index n = dist.size();
  if (n < 1) throw std::invalid_argument("empty distance matrix");
  if (n == 1) {
    Embedding e;
    e.coordinates = RealMatrix::Zero(1, 0);
    e.gram_eigenvalues = RealVector::Zero(1);
    e.stress = 0.0;
    e.estimated_dimension = 0;
    return e;
  }
  if (m_max < 1 || m_max > static_cast<int>(n - 1))
    throw std::invalid_argument("m_max must be in [1, n-1]");

  const Eigen::MatrixXd d2 = dist.d.cwiseProduct(dist.d);
  const Eigen::MatrixXd centering =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / double(n));
  Eigen::MatrixXd gram = -0.5 * centering * d2 * centering;
  gram = 0.5 * (gram + gram.transpose().eval());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");

  Embedding e;
  e.gram_eigenvalues = RealVector(n);
  for (Index i = 0; i < n; ++i) e.gram_eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
  e.estimated_dimension = dimension_estimate(e.gram_eigenvalues, tau);

  const int m = std::min(e.estimated_dimension, m_max);
  e.coordinates = RealMatrix::Zero(n, m);
  for (int k = 0; k < m; ++k) {
    const double lam = e.gram_eigenvalues[k];
    if (lam <= 0.0) break;
    e.coordinates.col(k) = solver.eigenvectors().col(n - 1 - k) * std::sqrt(lam);
  }

  double num = 0.0, den = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double dhat = (e.coordinates.row(i) - e.coordinates.row(j)).norm();
      num += (dist.d(i, j) - dhat) * (dist.d(i, j) - dhat);
      den += dist.d(i, j) * dist.d(i, j);
    }
  }
  e.stress = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return e;
}

double entanglement_perturbation(const StateVector& psi_before, const StateVector& psi_after,
                                 const Factorization& p, const std::vector<Index>& region) {
  if (psi_before.dim() != p.dim() || psi_after.dim() != p.dim())
    throw std::invalid_argument("state does not match the partition");
  const Vector before = p.identity_frame()
                            ? psi_before.amplitudes()
                            : Vector(p.frame().adjoint() * psi_before.amplitudes());
  const Vector after = p.identity_frame()
                           ? psi_after.amplitudes()
                           : Vector(p.frame().adjoint() * psi_after.amplitudes());
  const double s_before = entropy_of(reduced_density(before, p.dims(), region));
  const double s_after = entropy_of(reduced_density(after, p.dims(), region));
  return s_after - s_before;
}

}  // namespace mereo::geometry
