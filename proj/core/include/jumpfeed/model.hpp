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

#pragma once

// Two coupled qubits, qubit 2 decaying at rate gamma, with optional
// quantum-jump feedback F applied to qubit 2 after every detected emission.
//
// Basis order is fixed everywhere: |ee>, |eg>, |ge>, |gg> (qubit 1 (x)
// qubit 2, local order |e> then |g>). hbar = 1 and frequencies are in
// units of the reference frequency omega.

#include "jumpfeed/linalg.hpp"

namespace jumpfeed {

namespace pauli {

inline constexpr Complex kI{0.0, 1.0};

inline Mat2 identity() { return Mat2::identity(); }
inline Mat2 x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}
inline Mat2 y() {
  Mat2 m;
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return m;
}
inline Mat2 z() { return Mat2::diagonal({1.0, -1.0}); }
/// sigma^+ = |e><g|
inline Mat2 raising() {
  Mat2 m;
  m(0, 1) = 1.0;
  return m;
}
/// sigma^- = |g><e|
inline Mat2 lowering() {
  Mat2 m;
  m(1, 0) = 1.0;
  return m;
}

}  // namespace pauli

/// Basis indices of the two-qubit product states.
enum BasisIndex : std::size_t { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };

struct SystemParams {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double g = 1.0;
  double gamma = 0.5;

  /// Throws InvalidArgument unless omega1, omega2 > 0 and g, gamma >= 0.
  void validate() const;
};

/// Feedback amplitudes A = (ax, ay, az) of H_f = A . sigma; F = exp(i H_f).
struct FeedbackVector {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  double norm() const;
  void validate() const;
};

/// F = exp(-i (angle/2) n . sigma), n = (sin theta cos phi, sin theta sin phi, cos theta).
struct RotationForm {
  double angle = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  void validate() const;
};

FeedbackVector rotation_to_amplitudes(const RotationForm& r);

/// exp(-i (angle/2) n . sigma) evaluated directly from the rotation form.
Mat2 rotation_unitary(const RotationForm& r);

/// 2x2 feedback unitary cos|A| I + i sin|A|/|A| (A . sigma); identity at A = 0.
Mat2 build_feedback_unitary(const FeedbackVector& f);

/// I (x) F acting on qubit 2.
Mat4 lift_to_qubit2(const Mat2& op);

/// (w1/2) sz (x) I + (w2/2) I (x) sz + g (s+ (x) s- + s- (x) s+).
Mat4 build_hamiltonian(const SystemParams& p);

/// sigma_2^- = I (x) sigma^-.
Mat4 qubit2_lowering();

/// sigma_2^+ sigma_2^- = I (x) |e><e|.
Mat4 qubit2_excitation();

/// Density matrix of the two-qubit system.
///
/// Holds any 4x4 matrix; `check()` enforces the physical invariants
/// (Hermitian, unit trace, eigenvalues above a floor).
class DensityMatrix4 {
 public:
  DensityMatrix4() = default;
  explicit DensityMatrix4(const Mat4& m) : m_(m) {}

  static DensityMatrix4 from_pure(const CVector<4>& psi);

  const Mat4& matrix() const { return m_; }
  Mat4& matrix() { return m_; }

  /// Throws InvalidArgument when the state is not Hermitian within 1e-9,
  /// trace differs from one by more than 1e-9, or an eigenvalue is below -1e-7.
  void check() const;

 private:
  Mat4 m_;
};

/// Generator of a Lindblad flow with a single channel: qubit-2 emission
/// followed by the feedback unitary F.
///
///   drho/dt = -i [H, rho] + gamma (J rho J^dagger - 1/2 {N, rho}),
///   J = F sigma_2^-,  N = sigma_2^+ sigma_2^-.
///
/// Precomputes the effective non-Hermitian Hamiltonian so one evaluation
/// costs four 4x4 products.
class MasterEquation {
 public:
  MasterEquation(const SystemParams& p, const FeedbackVector& f);
  /// Uncontrolled dissipative flow (F = I).
  explicit MasterEquation(const SystemParams& p);

  Mat4 operator()(const Mat4& rho) const;

  const Mat4& hamiltonian() const { return h_; }
  /// H - (i gamma / 2) sigma_2^+ sigma_2^-
  const Mat4& effective_hamiltonian() const { return h_eff_; }
  /// F sigma_2^- (lifted), without the sqrt(gamma) factor.
  const Mat4& jump_operator() const { return jump_; }
  const SystemParams& params() const { return params_; }
  const FeedbackVector& feedback() const { return feedback_; }

 private:
  SystemParams params_;
  FeedbackVector feedback_;
  Mat4 h_;
  Mat4 h_eff_;
  Mat4 jump_;
  Mat4 jump_dag_;
  Mat4 h_eff_dag_;
};

/// Uncontrolled right-hand side.
Mat4 lindblad_rhs(const DensityMatrix4& rho, const SystemParams& p);

/// Feedback right-hand side.
Mat4 feedback_rhs(const DensityMatrix4& rho, const SystemParams& p, const FeedbackVector& f);

}  // namespace jumpfeed
