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

#include "mereo/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace mereo {

Vector spectral_evolve(const Spectrum& spectrum, const Vector& coeffs, double t) {
  if (spectrum.size() != coeffs.size())
    throw std::invalid_argument("coefficient count does not match spectrum size");
  Vector out(coeffs.size());
  for (Index n = 0; n < coeffs.size(); ++n)
    out[n] = coeffs[n] * std::polar(1.0, -spectrum.energies[n] * t);
  return out;
}

Vector evolve_with(const EigenSystem& es, const Vector& psi, double t) {
  if (es.frame.rows() != psi.size()) throw std::invalid_argument("dimension mismatch");
  const Vector coeffs = es.frame.adjoint() * psi;
  return es.frame * spectral_evolve(es.spectrum, coeffs, t);
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192, kB5 = -2187.0 / 6784,
                 kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

}  // namespace

StateVector schrodinger_evolve_dense(const HermitianOperator& h, const StateVector& psi,
                                     double t, double tolerance) {
  if (h.dim() != psi.dim()) throw std::invalid_argument("dimension mismatch");
  if (t == 0.0) return psi;

  const Matrix& hm = h.entries();
  const auto rhs = [&hm](const Vector& y) -> Vector { return Complex(0.0, -1.0) * (hm * y); };

  const double direction = (t > 0.0) ? 1.0 : -1.0;
  const double t_end = std::abs(t);
  double time = 0.0;
  Vector y = psi.amplitudes();
  Vector k1 = rhs(y) * direction;

  const double hnorm = std::max(h.frobenius_norm(), 1e-30);
  double step = std::min(0.1 / hnorm, t_end);
  constexpr int kMaxSteps = 20'000'000;

  for (int iter = 0; iter < kMaxSteps; ++iter) {
    if (time >= t_end) break;
    step = std::min(step, t_end - time);

    const Vector k2 = rhs(y + step * (kA21 * k1)) * direction;
    const Vector k3 = rhs(y + step * (kA31 * k1 + kA32 * k2)) * direction;
    const Vector k4 = rhs(y + step * (kA41 * k1 + kA42 * k2 + kA43 * k3)) * direction;
    const Vector k5 = rhs(y + step * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4)) * direction;
    const Vector k6 =
        rhs(y + step * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5)) * direction;
    const Vector y5 = y + step * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const Vector k7 = rhs(y5) * direction;

    const Vector err_vec =
        step * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
    const double err = err_vec.norm();

    if (err <= tolerance) {
      time += step;
      y = y5;
      k1 = k7;  // FSAL
    }
    const double shrink =
        (err > 0.0) ? 0.9 * std::pow(tolerance / err, 0.2) : 5.0;
    step *= std::clamp(shrink, 0.2, 5.0);
    if (step < 1e-14 * t_end) throw numeric_error("integrator step size underflow");
  }
  if (time < t_end) throw numeric_error("integrator exceeded the step budget");
  return StateVector(std::move(y));
}

}  // namespace mereo
