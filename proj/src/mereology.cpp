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

#include "mereo/mereology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "mereo/entropy.hpp"
#include "mereo/evolve.hpp"
#include "mereo/linalg.hpp"
#include "mereo/models.hpp"
#include "mereo/rng.hpp"
#include "mereo/unitary_opt.hpp"

namespace mereo::mereology {

namespace {

// Block partial traces for a bipartite operator (system index slow).
Matrix trace_environment(const Matrix& m, Index d_s, Index d_e) {
  Matrix out = Matrix::Zero(d_s, d_s);
  for (Index a = 0; a < d_s; ++a)
    for (Index b = 0; b < d_s; ++b)
      out(a, b) = m.block(a * d_e, b * d_e, d_e, d_e).trace();
  return out;
}

Matrix trace_system(const Matrix& m, Index d_s, Index d_e) {
  Matrix out = Matrix::Zero(d_e, d_e);
  for (Index a = 0; a < d_s; ++a) out += m.block(a * d_e, a * d_e, d_e, d_e);
  return out;
}

Matrix to_factor_basis(const HermitianOperator& h, const Matrix& frame) {
  Matrix ht = frame.adjoint() * h.entries() * frame;
  ht = 0.5 * (ht + ht.adjoint().eval());
  return ht;
}

}  // namespace

BipartiteSplit::BipartiteSplit(Index system_dim, Index environment_dim, Matrix frame)
    : d_s_(system_dim), d_e_(environment_dim), frame_(std::move(frame)) {
  if (d_s_ < 2) throw std::invalid_argument("system dimension must be at least 2");
  if (d_s_ > d_e_)
    throw std::invalid_argument("convention requires system dim <= environment dim");
  if (frame_.rows() != d_s_ * d_e_ || frame_.cols() != d_s_ * d_e_)
    throw std::invalid_argument("frame does not match d_s * d_e");
  if (!is_unitary(frame_)) throw numeric_error("split frame is not unitary");
}

BipartiteSplit::BipartiteSplit(Index system_dim, Index environment_dim)
    : BipartiteSplit(system_dim, environment_dim,
                     Matrix::Identity(system_dim * environment_dim,
                                      system_dim * environment_dim)) {}

Factorization BipartiteSplit::as_factorization() const {
  return Factorization({d_s_, d_e_}, frame_);
}

Matrix HamiltonianDecomposition::reconstruct() const {
  const Index d_s = h_system.dim();
  const Index d_e = h_environment.dim();
  return kron(h_system.entries(), Matrix::Identity(d_e, d_e)) +
         kron(Matrix::Identity(d_s, d_s), h_environment.entries()) + h_interaction.entries() +
         trace_offset * Matrix::Identity(d_s * d_e, d_s * d_e);
}

HamiltonianDecomposition decompose_hamiltonian(const HermitianOperator& h,
                                               const BipartiteSplit& split) {
  if (h.dim() != split.dim()) throw std::invalid_argument("dimension mismatch");
  const Index d_s = split.system_dim();
  const Index d_e = split.environment_dim();
  const Index d = h.dim();

  const Matrix ht = to_factor_basis(h, split.frame());
  const double offset = ht.trace().real() / static_cast<double>(d);

  Matrix h_s = trace_environment(ht, d_s, d_e) / static_cast<double>(d_e) -
               offset * Matrix::Identity(d_s, d_s);
  Matrix h_e = trace_system(ht, d_s, d_e) / static_cast<double>(d_s) -
               offset * Matrix::Identity(d_e, d_e);
  Matrix h_int = ht - kron(h_s, Matrix::Identity(d_e, d_e)) -
                 kron(Matrix::Identity(d_s, d_s), h_e) - offset * Matrix::Identity(d, d);

  h_s = 0.5 * (h_s + h_s.adjoint().eval());
  h_e = 0.5 * (h_e + h_e.adjoint().eval());
  h_int = 0.5 * (h_int + h_int.adjoint().eval());
  return HamiltonianDecomposition{HermitianOperator(std::move(h_s)),
                                  HermitianOperator(std::move(h_e)),
                                  HermitianOperator(std::move(h_int)), offset};
}

double commutator_defect(const HermitianOperator& q_system, const HermitianOperator& h_interaction,
                         Index system_dim, Index environment_dim) {
  if (q_system.dim() != system_dim || h_interaction.dim() != system_dim * environment_dim)
    throw std::invalid_argument("dimension mismatch");
  const double denom = h_interaction.frobenius_norm() * q_system.frobenius_norm();
  if (denom == 0.0) return 0.0;
  const Matrix q_full =
      kron(q_system.entries(), Matrix::Identity(environment_dim, environment_dim));
  return commutator(h_interaction.entries(), q_full).norm() / denom;
}

Matrix PointerBasis::label_observable() const {
  const Index d_s = vectors.rows();
  Matrix q = Matrix::Zero(d_s, d_s);
  for (Index n = 0; n < d_s; ++n)
    q += static_cast<double>(n) * (vectors.col(n) * vectors.col(n).adjoint());
  return q;
}

namespace {

// sum_n ||[H_int, P_n (x) I]||_F^2 for the basis given by the columns of v.
double pointer_objective(const Matrix& h_int, const Matrix& v, Index d_e) {
  const Index d_s = v.cols();
  double total = 0.0;
  for (Index n = 0; n < d_s; ++n) {
    const Matrix p = v.col(n) * v.col(n).adjoint();
    total += commutator(h_int, kron(p, Matrix::Identity(d_e, d_e))).squaredNorm();
  }
  return total;
}

const Matrix& pauli(int i) {
  static const Matrix sx = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix sy =
      (Matrix(2, 2) << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)).finished();
  static const Matrix sz = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  switch (i) {
    case 0: return sx;
    case 1: return sy;
    default: return sz;
  }
}

// Exact minimizer over rotations of one column pair: restricted to the span
// W = [v_p v_q], each projector is (W W^dag +/- n.S)/2 with S_i = W sigma_i
// W^dag, so the pair objective is const + n^T M n / 2 over the unit Bloch
// vector n and the optimum is the lowest eigenvector of the 3x3 matrix M.
void pair_update(const Matrix& h_int, Index d_e, Matrix& v, Index p, Index q) {
  Matrix w(v.rows(), 2);
  w.col(0) = v.col(p);
  w.col(1) = v.col(q);

  Matrix c[3];
  for (int i = 0; i < 3; ++i) {
    const Matrix s_i = w * pauli(i) * w.adjoint();
    c[i] = commutator(h_int, kron(s_i, Matrix::Identity(d_e, d_e)));
  }
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = (c[i].adjoint() * c[j]).trace().real();
  m = 0.5 * (m + m.transpose().eval());

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m);
  const Eigen::Vector3d n = solver.eigenvectors().col(0);

  Matrix bloch(2, 2);
  bloch << n[2], Complex(n[0], -n[1]), Complex(n[0], n[1]), -n[2];
  Eigen::SelfAdjointEigenSolver<Matrix> dir(bloch);
  // +1 eigenvector to column p, -1 to column q.
  v.col(p) = w * dir.eigenvectors().col(1);
  v.col(q) = w * dir.eigenvectors().col(0);
}

double jacobi_descend(const Matrix& h_int, Index d_e, Matrix& v, int max_sweeps) {
  const Index d_s = v.cols();
  double f = pointer_objective(h_int, v, d_e);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (Index p = 0; p < d_s; ++p)
      for (Index q = p + 1; q < d_s; ++q) pair_update(h_int, d_e, v, p, q);
    const double f_new = pointer_objective(h_int, v, d_e);
    const bool converged = f - f_new <= 1e-13 * std::max(1.0, f);
    f = f_new;
    if (converged) break;
  }
  return f;
}

// Deterministic column order: decreasing monitoring weight
// <phi| tr_E(H_int^2) |phi>, coordinate tie-break on phase-fixed components.
void canonicalize_pointer_columns(const Matrix& h_int, Index d_s, Index d_e, Matrix& v) {
  const Matrix monitor = trace_environment(h_int * h_int, d_s, d_e);

  Matrix fixed = v;
  std::vector<double> weight(d_s);
  for (Index n = 0; n < d_s; ++n) {
    weight[n] = (v.col(n).adjoint() * monitor * v.col(n))(0, 0).real();
    Index arg_max = 0;
    for (Index i = 1; i < d_s; ++i)
      if (std::abs(fixed(i, n)) > std::abs(fixed(arg_max, n))) arg_max = i;
    if (std::abs(fixed(arg_max, n)) > 0.0)
      fixed.col(n) *= std::conj(fixed(arg_max, n)) / std::abs(fixed(arg_max, n));
  }
  std::vector<Index> order(d_s);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (std::abs(weight[a] - weight[b]) > 1e-12 * std::max(1.0, std::abs(weight[a])))
      return weight[a] > weight[b];
    for (Index i = 0; i < d_s; ++i) {
      const Complex za = fixed(i, a), zb = fixed(i, b);
      if (std::abs(za.real() - zb.real()) > 1e-12) return za.real() > zb.real();
      if (std::abs(za.imag() - zb.imag()) > 1e-12) return za.imag() > zb.imag();
    }
    return false;
  });
  Matrix sorted(v.rows(), v.cols());
  for (Index n = 0; n < d_s; ++n) sorted.col(n) = fixed.col(order[n]);
  v = std::move(sorted);
}

}  // namespace

PointerBasis pointer_basis_search(const HermitianOperator& h_interaction, Index system_dim,
                                  Index environment_dim, int budget, std::uint64_t seed) {
  if (h_interaction.dim() != system_dim * environment_dim)
    throw std::invalid_argument("dimension mismatch");
  if (system_dim < 2) throw std::invalid_argument("system dimension must be at least 2");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");

  const Matrix& h_int = h_interaction.entries();
  if (h_int.norm() < 1e-14) {
    // Any basis is optimal; return the canonical one.
    return PointerBasis{Matrix::Identity(system_dim, system_dim), 0.0};
  }

  constexpr int kMaxSweeps = 40;
  Matrix best_v = Matrix::Identity(system_dim, system_dim);
  double best_f = jacobi_descend(h_int, environment_dim, best_v, kMaxSweeps);

  CounterRng rng(seed, /*stream=*/0x706F696E);
  for (int r = 1; r < budget; ++r) {
    Matrix v = haar_unitary(system_dim, rng);
    const double f = jacobi_descend(h_int, environment_dim, v, kMaxSweeps);
    if (f < best_f) {
      best_f = f;
      best_v = v;
    }
  }

  // Sanity floor: never lose to cheap random guessing.
  CounterRng floor_rng(seed, /*stream=*/0x666C6F6F);
  for (Index k = 0; k < system_dim * 10; ++k) {
    Matrix v = haar_unitary(system_dim, floor_rng);
    if (pointer_objective(h_int, v, environment_dim) < best_f) {
      const double f = jacobi_descend(h_int, environment_dim, v, kMaxSweeps);
      if (f < best_f) {
        best_f = f;
        best_v = v;
      }
    }
  }

  canonicalize_pointer_columns(h_int, system_dim, environment_dim, best_v);

  PointerBasis pb{best_v, 0.0};
  pb.defect = commutator_defect(HermitianOperator(pb.label_observable()), h_interaction,
                                system_dim, environment_dim);
  return pb;
}

namespace {

constexpr int kRateSamples = 20;

void check_product_state(const Vector& factor_amps, Index d_s, Index d_e) {
  Matrix reshaped(d_s, d_e);
  for (Index a = 0; a < d_s; ++a)
    for (Index j = 0; j < d_e; ++j) reshaped(a, j) = factor_amps[a * d_e + j];
  Eigen::SelfAdjointEigenSolver<Matrix> solver(reshaped * reshaped.adjoint(),
                                               Eigen::EigenvaluesOnly);
  if (1.0 - solver.eigenvalues().maxCoeff() > 1e-8)
    throw std::invalid_argument("initial state is not a product across the split");
}

RealVector sample_times(double window) {
  RealVector t(kRateSamples);
  for (int i = 0; i < kRateSamples; ++i)
    t[i] = window * static_cast<double>(i + 1) / kRateSamples;
  return t;
}

double fit_pure_quadratic(const RealVector& t, const RealVector& y) {
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < t.size(); ++i) {
    num += y[i] * t[i] * t[i];
    den += t[i] * t[i] * t[i] * t[i];
  }
  return den > 0.0 ? num / den : 0.0;
}

// Least squares y ~ a t + b t^2; returns b.
double fit_quadratic_coefficient(const RealVector& t, const RealVector& y) {
  double s2 = 0.0, s3 = 0.0, s4 = 0.0, r1 = 0.0, r2 = 0.0;
  for (Index i = 0; i < t.size(); ++i) {
    const double ti = t[i];
    s2 += ti * ti;
    s3 += ti * ti * ti;
    s4 += ti * ti * ti * ti;
    r1 += ti * y[i];
    r2 += ti * ti * y[i];
  }
  const double det = s2 * s4 - s3 * s3;
  if (std::abs(det) < 1e-300) return 0.0;
  return (s2 * r2 - s3 * r1) / det;
}

Matrix reduced_system_of_pure(const Vector& amps, Index d_s, Index d_e) {
  Matrix reshaped(d_s, d_e);
  for (Index a = 0; a < d_s; ++a)
    for (Index j = 0; j < d_e; ++j) reshaped(a, j) = amps[a * d_e + j];
  return reshaped * reshaped.adjoint();
}

}  // namespace

double entanglement_growth_rate(const HermitianOperator& h, const BipartiteSplit& split,
                                const StateVector& psi0, double window) {
  if (h.dim() != split.dim() || psi0.dim() != split.dim())
    throw std::invalid_argument("dimension mismatch");
  if (window <= 0.0) throw std::invalid_argument("window must be positive");
  const Index d_s = split.system_dim();
  const Index d_e = split.environment_dim();

  const Matrix ht = to_factor_basis(h, split.frame());
  const Vector amps0 = split.frame().adjoint() * psi0.amplitudes();
  check_product_state(amps0, d_s, d_e);

  const EigenSystem es = diagonalize(HermitianOperator(ht));
  const Vector coeffs = es.frame.adjoint() * amps0;

  const RealVector t = sample_times(window);
  RealVector y(kRateSamples);
  for (int i = 0; i < kRateSamples; ++i) {
    const Vector amps = es.frame * spectral_evolve(es.spectrum, coeffs, t[i]);
    y[i] = linear_entropy(reduced_system_of_pure(amps, d_s, d_e));
  }
  return fit_pure_quadratic(t, y);
}

double delocalization_rate(const HermitianOperator& h, const BipartiteSplit& split,
                           const StateVector& psi0, const PointerBasis& pointer, double window) {
  if (h.dim() != split.dim() || psi0.dim() != split.dim())
    throw std::invalid_argument("dimension mismatch");
  if (pointer.vectors.rows() != split.system_dim())
    throw std::invalid_argument("pointer basis does not match the system dimension");
  if (window <= 0.0) throw std::invalid_argument("window must be positive");
  const Index d_s = split.system_dim();
  const Index d_e = split.environment_dim();

  const Matrix ht = to_factor_basis(h, split.frame());
  const Vector amps0 = split.frame().adjoint() * psi0.amplitudes();
  check_product_state(amps0, d_s, d_e);

  const HamiltonianDecomposition dec =
      decompose_hamiltonian(HermitianOperator(ht), BipartiteSplit(d_s, d_e));
  const EigenSystem es_full = diagonalize(HermitianOperator(ht));
  const EigenSystem es_sys = diagonalize(dec.h_system);
  const EigenSystem es_env = diagonalize(dec.h_environment);

  const Vector coeffs = es_full.frame.adjoint() * amps0;
  const Matrix self_frame = kron(es_sys.frame, es_env.frame);
  RealVector self_energy(d_s * d_e);
  for (Index a = 0; a < d_s; ++a)
    for (Index j = 0; j < d_e; ++j)
      self_energy[a * d_e + j] = es_sys.spectrum.energies[a] + es_env.spectrum.energies[j];

  // Pointer-label moments of a state, via its coordinates in the pointer basis.
  const Matrix pointer_adj = pointer.vectors.adjoint();
  const auto label_variance = [&](const Vector& amps) {
    double m1 = 0.0, m2 = 0.0;
    for (Index n = 0; n < d_s; ++n) {
      double block = 0.0;
      for (Index j = 0; j < d_e; ++j) {
        Complex c = 0.0;
        for (Index a = 0; a < d_s; ++a) c += pointer_adj(n, a) * amps[a * d_e + j];
        block += std::norm(c);
      }
      m1 += static_cast<double>(n) * block;
      m2 += static_cast<double>(n) * static_cast<double>(n) * block;
    }
    return m2 - m1 * m1;
  };

  const double var0 = label_variance(amps0);
  const RealVector t = sample_times(window);
  RealVector y(kRateSamples);
  for (int i = 0; i < kRateSamples; ++i) {
    Vector amps = es_full.frame * spectral_evolve(es_full.spectrum, coeffs, t[i]);
    // Interaction picture: undo the self-Hamiltonian motion.
    Vector coords = self_frame.adjoint() * amps;
    for (Index k = 0; k < coords.size(); ++k)
      coords[k] *= std::polar(1.0, self_energy[k] * t[i]);
    amps = self_frame * coords;
    y[i] = label_variance(amps) - var0;
  }
  return fit_quadratic_coefficient(t, y);
}

namespace {

struct SplitEvaluation {
  PointerBasis pointer;
  double entanglement_rate = 0.0;
  double delocalization_rate = 0.0;
  double generic_rate = 0.0;
};

// Seeded random global vector anchoring the objective's initial state. It is
// drawn once per seed in the computational basis, so it does not rotate with
// the candidate frame.
Vector seeded_anchor_vector(Index dim, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  Vector g(dim);
  for (Index i = 0; i < dim; ++i) g[i] = rng.next_complex_gaussian();
  return g;
}

constexpr std::uint64_t kEnvAnchorStream = 0x656E7653;

// Shared evaluation path of the factorization objective. Three rates:
//
//  - entanglement and delocalization of the median-label pointer state
//    tensored with a seeded random environment state, evolved in the
//    interaction picture. The environment state is the anchor vector
//    contracted against the pointer state, e ~ (<phi_m| (x) I) frame^dag g,
//    which transforms as e -> u_E^dag e when the frame absorbs local
//    unitaries, so the evaluation is exactly covariant;
//
//  - the Haar average over all product states of the same early-time
//    entanglement growth, which has the closed form
//      2 ||H_int||_F^2 / ((d_s+1)(d_e+1))
//    in the doubly-traceless gauge. Product evolution never entangles, so
//    this vanishes exactly when H_int = 0; and it keeps the search honest:
//    the energy eigenframe freezes the pointer state (both pointer rates are
//    identically zero there for any Hamiltonian), but generic states still
//    dephase, so the frozen factorization gets no free pass.
SplitEvaluation evaluate_split_rates(const Matrix& ht, const Vector& env_anchor, Index d_s,
                                     Index d_e, int pointer_budget, std::uint64_t seed) {
  const Index d = d_s * d_e;
  const HamiltonianDecomposition dec =
      decompose_hamiltonian(HermitianOperator(ht), BipartiteSplit(d_s, d_e));

  SplitEvaluation ev;
  ev.pointer = pointer_basis_search(dec.h_interaction, d_s, d_e, pointer_budget, seed);

  const Vector phi = ev.pointer.vectors.col(d_s / 2);
  Vector env = Vector::Zero(d_e);
  for (Index j = 0; j < d_e; ++j)
    for (Index a = 0; a < d_s; ++a)
      env[j] += std::conj(phi[a]) * env_anchor[a * d_e + j];
  if (env.norm() < 1e-12) env = Vector::Unit(d_e, 0);  // measure-zero anchor collision
  env /= env.norm();

  Vector psi0(d);
  for (Index a = 0; a < d_s; ++a)
    for (Index j = 0; j < d_e; ++j) psi0[a * d_e + j] = phi[a] * env[j];

  const EigenSystem es_full = diagonalize(HermitianOperator(ht));
  const EigenSystem es_sys = diagonalize(dec.h_system);
  const EigenSystem es_env = diagonalize(dec.h_environment);
  const Matrix self_frame = kron(es_sys.frame, es_env.frame);
  RealVector self_energy(d);
  for (Index a = 0; a < d_s; ++a)
    for (Index j = 0; j < d_e; ++j)
      self_energy[a * d_e + j] = es_sys.spectrum.energies[a] + es_env.spectrum.energies[j];

  const Vector coeffs = es_full.frame.adjoint() * psi0;
  const Matrix pointer_adj = ev.pointer.vectors.adjoint();
  const auto label_variance = [&](const Vector& amps) {
    double m1 = 0.0, m2 = 0.0;
    for (Index n = 0; n < d_s; ++n) {
      double block = 0.0;
      for (Index j = 0; j < d_e; ++j) {
        Complex ccomp = 0.0;
        for (Index a = 0; a < d_s; ++a) ccomp += pointer_adj(n, a) * amps[a * d_e + j];
        block += std::norm(ccomp);
      }
      m1 += static_cast<double>(n) * block;
      m2 += static_cast<double>(n) * static_cast<double>(n) * block;
    }
    return m2 - m1 * m1;
  };
  const double var0 = label_variance(psi0);

  const double window = 0.1 / std::max(ht.norm(), 1e-30);
  const RealVector t = sample_times(window);
  RealVector y_ent(kRateSamples), y_var(kRateSamples);
  for (int i = 0; i < kRateSamples; ++i) {
    Vector amps = es_full.frame * spectral_evolve(es_full.spectrum, coeffs, t[i]);
    Vector coords = self_frame.adjoint() * amps;
    for (Index k = 0; k < d; ++k) coords[k] *= std::polar(1.0, self_energy[k] * t[i]);
    amps = self_frame * coords;

    y_ent[i] = linear_entropy(reduced_system_of_pure(amps, d_s, d_e));
    y_var[i] = label_variance(amps) - var0;
  }
  ev.entanglement_rate = fit_pure_quadratic(t, y_ent);
  ev.delocalization_rate = fit_quadratic_coefficient(t, y_var);

  // Haar-averaged product-state entanglement growth, closed form.
  ev.generic_rate = 2.0 * dec.h_interaction.entries().squaredNorm() /
                    (static_cast<double>(d_s + 1) * static_cast<double>(d_e + 1));
  return ev;
}

std::uint64_t reference_seed(Index d_s, Index d_e) {
  return 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(d_s) << 32) ^
         static_cast<std::uint64_t>(d_e);
}

}  // namespace

ObjectiveContext make_objective_context(Index system_dim, Index environment_dim,
                                        int pointer_budget) {
  ObjectiveContext ctx;
  ctx.system_dim = system_dim;
  ctx.environment_dim = environment_dim;
  ctx.pointer_budget = pointer_budget;

  const std::uint64_t ref = reference_seed(system_dim, environment_dim);
  const HermitianOperator h_ref = models::gue_random(system_dim * environment_dim, ref);
  const Vector anchor = seeded_anchor_vector(h_ref.dim(), ref, kEnvAnchorStream);
  const SplitEvaluation ev = evaluate_split_rates(h_ref.entries(), anchor, system_dim,
                                                  environment_dim, pointer_budget, ref);
  ctx.scale_entanglement = std::max(ev.entanglement_rate, 1e-14);
  ctx.scale_delocalization = std::max(ev.delocalization_rate, 1e-14);
  ctx.scale_generic = std::max(ev.generic_rate, 1e-14);
  return ctx;
}

namespace {

double combine(const SplitEvaluation& ev, const ObjectiveContext& ctx) {
  return ctx.weight_entanglement * ev.entanglement_rate / ctx.scale_entanglement +
         ctx.weight_delocalization * ev.delocalization_rate / ctx.scale_delocalization +
         ctx.weight_generic * ev.generic_rate / ctx.scale_generic;
}

}  // namespace

double evaluate_objective(const HermitianOperator& h, const BipartiteSplit& split,
                          const ObjectiveContext& ctx, std::uint64_t seed) {
  if (h.dim() != split.dim() || split.system_dim() != ctx.system_dim ||
      split.environment_dim() != ctx.environment_dim)
    throw std::invalid_argument("dimension mismatch");
  const Matrix ht = to_factor_basis(h, split.frame());
  const Vector anchor =
      split.frame().adjoint() * seeded_anchor_vector(h.dim(), seed, kEnvAnchorStream);
  const SplitEvaluation ev = evaluate_split_rates(ht, anchor, ctx.system_dim,
                                                  ctx.environment_dim, ctx.pointer_budget, seed);
  return combine(ev, ctx);
}

std::pair<double, MereologyReport> factorization_objective(const HermitianOperator& h,
                                                           const BipartiteSplit& split, int budget,
                                                           std::uint64_t seed) {
  const ObjectiveContext ctx =
      make_objective_context(split.system_dim(), split.environment_dim(), std::max(budget, 1));
  const Matrix ht = to_factor_basis(h, split.frame());
  const Vector anchor =
      split.frame().adjoint() * seeded_anchor_vector(h.dim(), seed, kEnvAnchorStream);
  const SplitEvaluation ev = evaluate_split_rates(ht, anchor, ctx.system_dim,
                                                  ctx.environment_dim, ctx.pointer_budget, seed);
  const double objective = combine(ev, ctx);

  MereologyReport report{split,
                         ev.pointer,
                         ev.entanglement_rate,
                         ev.delocalization_rate,
                         ev.generic_rate,
                         objective,
                         {{0, objective}}};
  return {objective, std::move(report)};
}

MereologyReport mereology_search(const HermitianOperator& h, Index system_dim,
                                 Index environment_dim, int restarts, int steps,
                                 std::uint64_t seed, int threads) {
  if (h.dim() != system_dim * environment_dim) throw std::invalid_argument("dimension mismatch");
  if (restarts < 1 || steps < 1)
    throw std::invalid_argument("restarts and steps must be at least 1");

  const ObjectiveContext ctx = make_objective_context(system_dim, environment_dim);
  const Vector anchor_global = seeded_anchor_vector(h.dim(), seed, kEnvAnchorStream);

  const Matrix& hm = h.entries();
  const auto objective = [&](const Matrix& frame) {
    Matrix ht = frame.adjoint() * hm * frame;
    ht = 0.5 * (ht + ht.adjoint().eval());
    const Vector anchor = frame.adjoint() * anchor_global;
    const SplitEvaluation ev = evaluate_split_rates(ht, anchor, system_dim, environment_dim,
                                                    ctx.pointer_budget, seed);
    return combine(ev, ctx);
  };

  FrameSearchOptions opts;
  opts.restarts = restarts;
  opts.steps = steps;
  opts.seed = seed;
  opts.threads = threads;
  const FrameSearchResult res = minimize_over_unitaries(h.dim(), objective, opts);

  BipartiteSplit best_split(system_dim, environment_dim, res.frame);
  const Matrix ht = to_factor_basis(h, best_split.frame());
  const Vector anchor = best_split.frame().adjoint() * anchor_global;
  const SplitEvaluation ev = evaluate_split_rates(ht, anchor, system_dim, environment_dim,
                                                  ctx.pointer_budget, seed);

  return MereologyReport{std::move(best_split),  ev.pointer,    ev.entanglement_rate,
                         ev.delocalization_rate, ev.generic_rate, res.objective,
                         res.trace};
}

}  // namespace mereo::mereology
