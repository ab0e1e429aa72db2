// Copyright 2026 The jumpfeed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jumpfeed/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jumpfeed/errors.hpp"

namespace jumpfeed {

void SystemParams::validate() const {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) {
    throw InvalidArgument("qubit frequencies must be positive");
  }
  if (!(g >= 0.0)) throw InvalidArgument("coupling g must be non-negative");
  if (!(gamma >= 0.0)) throw InvalidArgument("decay rate gamma must be non-negative");
  if (!std::isfinite(omega1) || !std::isfinite(omega2) || !std::isfinite(g) ||
      !std::isfinite(gamma)) {
    throw InvalidArgument("system parameters must be finite");
  }
}

double FeedbackVector::norm() const { return std::sqrt(ax * ax + ay * ay + az * az); }

void FeedbackVector::validate() const {
  if (!std::isfinite(ax) || !std::isfinite(ay) || !std::isfinite(az)) {
    throw InvalidArgument("feedback amplitudes must be finite");
  }
}

void RotationForm::validate() const {
  if (!std::isfinite(angle)) throw InvalidArgument("rotation angle must be finite");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw InvalidArgument("theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw InvalidArgument("phi must lie in [0, 2pi)");
  }
}

FeedbackVector rotation_to_amplitudes(const RotationForm& r) {
  const double half = r.angle / 2.0;
  return {-half * std::sin(r.theta) * std::cos(r.phi), -half * std::sin(r.theta) * std::sin(r.phi),
          -half * std::cos(r.theta)};
}

Mat2 rotation_unitary(const RotationForm& r) {
  const double nx = std::sin(r.theta) * std::cos(r.phi);
  const double ny = std::sin(r.theta) * std::sin(r.phi);
  const double nz = std::cos(r.theta);
  const Mat2 n_sigma = nx * pauli::x() + ny * pauli::y() + nz * pauli::z();
  const double half = r.angle / 2.0;
  return std::cos(half) * Mat2::identity() - pauli::kI * std::sin(half) * n_sigma;
}

Mat2 build_feedback_unitary(const FeedbackVector& f) {
  const double a = f.norm();
  // sin|A|/|A| with its Taylor limit near zero.
  const double sinc = a < 1e-8 ? 1.0 - a * a / 6.0 : std::sin(a) / a;
  const Mat2 a_sigma = f.ax * pauli::x() + f.ay * pauli::y() + f.az * pauli::z();
  return std::cos(a) * Mat2::identity() + pauli::kI * sinc * a_sigma;
}

Mat4 lift_to_qubit2(const Mat2& op) { return kron(Mat2::identity(), op); }

Mat4 build_hamiltonian(const SystemParams& p) {
  const Mat2 id = Mat2::identity();
  Mat4 h = (p.omega1 / 2.0) * kron(pauli::z(), id) + (p.omega2 / 2.0) * kron(id, pauli::z());
  h += p.g * (kron(pauli::raising(), pauli::lowering()) + kron(pauli::lowering(), pauli::raising()));
  return h;
}

Mat4 qubit2_lowering() { return lift_to_qubit2(pauli::lowering()); }

Mat4 qubit2_excitation() { return lift_to_qubit2(pauli::raising() * pauli::lowering()); }

DensityMatrix4 DensityMatrix4::from_pure(const CVector<4>& psi) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix4(m);
}

void DensityMatrix4::check() const {
  const double defect = hermiticity_defect(m_);
  if (defect > 1e-9) {
    throw InvalidArgument("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double trace_error = std::abs(m_.trace() - 1.0);
  if (trace_error > 1e-9) {
    throw InvalidArgument("density matrix trace differs from 1 by " + std::to_string(trace_error));
  }
  const double min_eig = hermitian_eigenvalues(hermitian_part(m_)).back();
  if (min_eig < -1e-7) {
    throw InvalidArgument("density matrix has eigenvalue " + std::to_string(min_eig));
  }
}

MasterEquation::MasterEquation(const SystemParams& p, const FeedbackVector& f)
    : params_(p), feedback_(f) {
  p.validate();
  f.validate();
  h_ = build_hamiltonian(p);
  h_eff_ = h_ - (pauli::kI * (p.gamma / 2.0)) * qubit2_excitation();
  h_eff_dag_ = dagger(h_eff_);
  jump_ = lift_to_qubit2(build_feedback_unitary(f)) * qubit2_lowering();
  jump_dag_ = dagger(jump_);
}

MasterEquation::MasterEquation(const SystemParams& p) : MasterEquation(p, FeedbackVector{}) {}

Mat4 MasterEquation::operator()(const Mat4& rho) const {
  // -i (H_eff rho - rho H_eff^dagger) + gamma J rho J^dagger
  Mat4 out = h_eff_ * rho - rho * h_eff_dag_;
  out *= -pauli::kI;
  if (params_.gamma != 0.0) out += params_.gamma * (jump_ * rho * jump_dag_);
  return out;
}

Mat4 lindblad_rhs(const DensityMatrix4& rho, const SystemParams& p) {
  return MasterEquation(p)(rho.matrix());
}

Mat4 feedback_rhs(const DensityMatrix4& rho, const SystemParams& p, const FeedbackVector& f) {
  return MasterEquation(p, f)(rho.matrix());
}

}  // namespace jumpfeed
