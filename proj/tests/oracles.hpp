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

// Test-only independent oracles. These deliberately avoid the library's
// implementation paths: the integrator is fixed-step classic RK4, the
// partial trace is an explicit index sum, the pointer search is a dense grid
// over the Bloch sphere, and the bipartite decomposition is a least-squares
// projection. They exist so the fast paths have something independent to be
// checked against.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "mereo/rng.hpp"
#include "mereo/types.hpp"

namespace oracles {

using mereo::Complex;
using mereo::Index;
using mereo::Matrix;
using mereo::RealVector;
using mereo::Vector;

inline Matrix pauli_x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
inline Matrix pauli_y() {
  return (Matrix(2, 2) << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)).finished();
}
inline Matrix pauli_z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }

inline Matrix random_hermitian(Index dim, mereo::CounterRng& rng) {
  Matrix a(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) a(i, j) = rng.next_complex_gaussian();
  return 0.5 * (a + a.adjoint().eval());
}

inline Vector random_state(Index dim, mereo::CounterRng& rng) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = rng.next_complex_gaussian();
  v /= v.norm();
  return v;
}

/// Classic fixed-step RK4 for i d/dt psi = H psi.
inline Vector rk4_evolve(const Matrix& h, Vector y, double t, double dt) {
  if (t == 0.0) return y;
  const int steps = static_cast<int>(std::ceil(std::abs(t) / dt));
  const double hs = t / steps;
  const Complex mi(0.0, -1.0);
  for (int s = 0; s < steps; ++s) {
    const Vector k1 = mi * (h * y);
    const Vector k2 = mi * (h * (y + 0.5 * hs * k1).eval());
    const Vector k3 = mi * (h * (y + 0.5 * hs * k2).eval());
    const Vector k4 = mi * (h * (y + hs * k3).eval());
    y += (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

/// Partial trace of |psi><psi| by explicit index summation over the traced
/// digits, written against the same convention (factor 0 slowest, kept
/// factors in ascending order).
inline Matrix brute_force_reduced(const Vector& psi, const std::vector<Index>& dims,
                                  const std::vector<Index>& keep_sorted) {
  const Index n = static_cast<Index>(dims.size());
  std::vector<Index> stride(n, 1);
  for (Index f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  std::vector<bool> kept(n, false);
  for (Index f : keep_sorted) kept[f] = true;
  std::vector<Index> rest;
  Index dk = 1, dr = 1;
  for (Index f : keep_sorted) dk *= dims[f];
  for (Index f = 0; f < n; ++f)
    if (!kept[f]) {
      rest.push_back(f);
      dr *= dims[f];
    }

  const auto full_index = [&](Index kept_idx, Index rest_idx) {
    Index out = 0;
    for (Index k = static_cast<Index>(keep_sorted.size()) - 1; k >= 0; --k) {
      const Index f = keep_sorted[k];
      out += (kept_idx % dims[f]) * stride[f];
      kept_idx /= dims[f];
    }
    for (Index k = static_cast<Index>(rest.size()) - 1; k >= 0; --k) {
      const Index f = rest[k];
      out += (rest_idx % dims[f]) * stride[f];
      rest_idx /= dims[f];
    }
    return out;
  };

  Matrix rho = Matrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a)
    for (Index b = 0; b < dk; ++b)
      for (Index r = 0; r < dr; ++r)
        rho(a, b) += psi[full_index(a, r)] * std::conj(psi[full_index(b, r)]);
  return rho;
}

/// Hand-rolled Frobenius norm of [A, B] through explicit loops (no library
/// matrix product), for the small commutator arithmetic checks.
inline double commutator_norm_by_loops(const Matrix& a, const Matrix& b) {
  const Index d = a.rows();
  double sum = 0.0;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (Index k = 0; k < d; ++k) acc += a(i, k) * b(k, j) - b(i, k) * a(k, j);
      sum += std::norm(acc);
    }
  }
  return std::sqrt(sum);
}

struct GridPointerResult {
  Matrix basis;   // 2x2, columns orthonormal
  double objective;
};

/// Dense grid over the Bloch sphere for the d_s = 2 pointer problem:
/// minimizes sum_n ||[H_int, P_n (x) I]||_F^2 over bases {phi, phi_perp}.
inline GridPointerResult grid_pointer_search(const Matrix& h_int, Index d_e, int n_theta = 181,
                                             int n_phi = 360) {
  const Matrix identity_env = Matrix::Identity(d_e, d_e);
  GridPointerResult best{Matrix::Identity(2, 2), std::numeric_limits<double>::infinity()};
  for (int it = 0; it <= n_theta; ++it) {
    const double theta = std::numbers::pi * it / n_theta;
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * std::numbers::pi * ip / n_phi;
      Matrix v(2, 2);
      v(0, 0) = std::cos(theta / 2);
      v(1, 0) = std::polar(std::sin(theta / 2), phi);
      v(0, 1) = -std::sin(theta / 2);
      v(1, 1) = std::polar(std::cos(theta / 2), phi);
      double f = 0.0;
      for (int n = 0; n < 2; ++n) {
        const Matrix p = v.col(n) * v.col(n).adjoint();
        Matrix pfull = Matrix::Zero(2 * d_e, 2 * d_e);
        for (Index a = 0; a < 2; ++a)
          for (Index b = 0; b < 2; ++b)
            pfull.block(a * d_e, b * d_e, d_e, d_e) = p(a, b) * identity_env;
        f += (h_int * pfull - pfull * h_int).squaredNorm();
      }
      if (f < best.objective) {
        best.objective = f;
        best.basis = v;
      }
    }
  }
  return best;
}

/// Least-squares route for the bipartite decomposition: projects H onto
/// span{A (x) I, I (x) B, I} by solving the normal equations over an
/// orthonormal Hermitian basis of that subspace, then takes the residual as
/// the interaction. Independent of the projector-formula implementation.
struct LeastSquaresDecomposition {
  Matrix h_system;
  Matrix h_environment;
  Matrix h_interaction;
  double trace_offset;
};

inline LeastSquaresDecomposition least_squares_decompose(const Matrix& ht, Index d_s, Index d_e) {
  const Index d = d_s * d_e;
  // Real orthonormal basis of the self-Hamiltonian subspace under the
  // Hilbert-Schmidt inner product: traceless Hermitian A (x) I/sqrt(d_e),
  // I/sqrt(d_s) (x) traceless Hermitian B, and I/sqrt(d).
  std::vector<Matrix> span;
  const auto add_traceless_basis = [&span](Index q, bool system, Index d_s2, Index d_e2) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Matrix> small;
    for (Index j = 0; j < q; ++j)
      for (Index k = j + 1; k < q; ++k) {
        Matrix sym = Matrix::Zero(q, q);
        sym(j, k) = inv_sqrt2;
        sym(k, j) = inv_sqrt2;
        small.push_back(sym);
        Matrix anti = Matrix::Zero(q, q);
        anti(j, k) = Complex(0, -inv_sqrt2);
        anti(k, j) = Complex(0, inv_sqrt2);
        small.push_back(anti);
      }
    for (Index l = 1; l < q; ++l) {
      Matrix diag = Matrix::Zero(q, q);
      const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
      for (Index m = 0; m < l; ++m) diag(m, m) = norm;
      diag(l, l) = -static_cast<double>(l) * norm;
      small.push_back(diag);
    }
    for (const Matrix& s : small) {
      Matrix full = Matrix::Zero(d_s2 * d_e2, d_s2 * d_e2);
      for (Index a = 0; a < d_s2; ++a)
        for (Index b = 0; b < d_s2; ++b) {
          const Complex factor = system ? s(a, b) : (a == b ? Complex(1, 0) : Complex(0, 0));
          if (factor == Complex(0, 0)) continue;
          for (Index i = 0; i < d_e2; ++i)
            for (Index j = 0; j < d_e2; ++j) {
              const Complex env = system ? (i == j ? Complex(1, 0) : Complex(0, 0)) : s(i, j);
              full(a * d_e2 + i, b * d_e2 + j) += factor * env;
            }
        }
      span.push_back(full / full.norm());
    }
  };
  add_traceless_basis(d_s, true, d_s, d_e);
  add_traceless_basis(d_e, false, d_s, d_e);
  span.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));

  // Orthonormal span: projection coefficients are plain inner products.
  Matrix projection = Matrix::Zero(d, d);
  std::vector<double> coeff(span.size());
  for (std::size_t k = 0; k < span.size(); ++k) {
    coeff[k] = (span[k].adjoint() * ht).trace().real();
    projection += coeff[k] * span[k];
  }

  LeastSquaresDecomposition out{Matrix::Zero(d_s, d_s), Matrix::Zero(d_e, d_e),
                                ht - projection, 0.0};
  const Index n_sys = d_s * d_s - 1;
  const Index n_env = d_e * d_e - 1;
  std::size_t k = 0;
  // Recover the small factors from the same coefficients.
  {
    const double scale = 1.0 / std::sqrt(static_cast<double>(d_e));
    std::vector<Matrix> small;  // rebuild the traceless system basis
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index j = 0; j < d_s; ++j)
      for (Index kk = j + 1; kk < d_s; ++kk) {
        Matrix sym = Matrix::Zero(d_s, d_s);
        sym(j, kk) = inv_sqrt2;
        sym(kk, j) = inv_sqrt2;
        small.push_back(sym);
        Matrix anti = Matrix::Zero(d_s, d_s);
        anti(j, kk) = Complex(0, -inv_sqrt2);
        anti(kk, j) = Complex(0, inv_sqrt2);
        small.push_back(anti);
      }
    for (Index l = 1; l < d_s; ++l) {
      Matrix diag = Matrix::Zero(d_s, d_s);
      const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
      for (Index m = 0; m < l; ++m) diag(m, m) = norm;
      diag(l, l) = -static_cast<double>(l) * norm;
      small.push_back(diag);
    }
    for (Index i = 0; i < n_sys; ++i, ++k) out.h_system += coeff[k] * scale * small[i];
  }
  {
    const double scale = 1.0 / std::sqrt(static_cast<double>(d_s));
    std::vector<Matrix> small;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index j = 0; j < d_e; ++j)
      for (Index kk = j + 1; kk < d_e; ++kk) {
        Matrix sym = Matrix::Zero(d_e, d_e);
        sym(j, kk) = inv_sqrt2;
        sym(kk, j) = inv_sqrt2;
        small.push_back(sym);
        Matrix anti = Matrix::Zero(d_e, d_e);
        anti(j, kk) = Complex(0, -inv_sqrt2);
        anti(kk, j) = Complex(0, inv_sqrt2);
        small.push_back(anti);
      }
    for (Index l = 1; l < d_e; ++l) {
      Matrix diag = Matrix::Zero(d_e, d_e);
      const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
      for (Index m = 0; m < l; ++m) diag(m, m) = norm;
      diag(l, l) = -static_cast<double>(l) * norm;
      small.push_back(diag);
    }
    for (Index i = 0; i < n_env; ++i, ++k) out.h_environment += coeff[k] * scale * small[i];
  }
  out.trace_offset = coeff[k] / std::sqrt(static_cast<double>(d));
  return out;
}

}  // namespace oracles
