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

// Monte-Carlo unraveling of the feedback master equation. Each step either
// detects an emission from qubit 2 (apply sigma_2^-, then the feedback
// unitary F) or evolves under the no-detection operator, and renormalizes.
// The ensemble mean of |psi><psi| converges to the master-equation solution.
//
// Seeding: trajectory k of an ensemble with seed s draws from a
// std::mt19937_64 seeded with the (k+1)-th output of a SplitMix64 generator
// whose state starts at s, i.e. mix64(s + (k+1) * 0x9E3779B97F4A7C15).
// Each step consumes exactly one 53-bit uniform, (x >> 11) * 2^-53.

#include <cstdint>
#include <random>
#include <vector>

#include "jumpfeed/integrator.hpp"
#include "jumpfeed/linalg.hpp"
#include "jumpfeed/model.hpp"

namespace jumpfeed {

class PureState4 {
 public:
  PureState4() = default;
  /// Throws InvalidArgument unless | |psi| - 1 | <= 1e-9.
  explicit PureState4(const CVector<4>& amplitudes);

  /// Normalizes v; throws ZeroNorm when v vanishes.
  static PureState4 normalized(const CVector<4>& v);

  const CVector<4>& amplitudes() const { return amp_; }
  double norm() const;
  Mat4 projector() const;

 private:
  CVector<4> amp_{};
};

/// How the no-detection branch propagates the state over one step.
enum class NoJumpScheme {
  /// Literal Omega_0 = I - (iH + gamma/2 sigma_2^+ sigma_2^-) dt.
  kFirstOrder,
  /// RK4 step of d psi/dt = -i H_eff psi; agrees with Omega_0 to first order in dt.
  kRungeKutta4,
};

std::uint64_t splitmix64_mix(std::uint64_t z);
std::uint64_t trajectory_seed(std::uint64_t ensemble_seed, std::uint64_t index);

/// Uniform double in [0, 1) from one 64-bit draw.
double uniform01(std::mt19937_64& rng);

struct StepResult {
  PureState4 state;
  bool jumped = false;
};

/// Precomputed single-trajectory propagator for one (params, feedback, dt).
class TrajectoryStepper {
 public:
  TrajectoryStepper(const SystemParams& p, const FeedbackVector& f, double dt,
                    NoJumpScheme scheme = NoJumpScheme::kRungeKutta4);

  double dt() const { return dt_; }

  /// gamma dt <psi| sigma_2^+ sigma_2^- |psi>
  double jump_probability(const PureState4& psi) const;

  /// Applies J = F sigma_2^- and normalizes; throws ZeroNorm if J psi = 0.
  PureState4 apply_jump(const PureState4& psi) const;
  PureState4 apply_no_jump(const PureState4& psi) const;

  /// One step with an explicit uniform draw u in [0, 1): jumps iff u < p1.
  StepResult step(const PureState4& psi, double u) const;
  StepResult step(const PureState4& psi, std::mt19937_64& rng) const {
    return step(psi, uniform01(rng));
  }

 private:
  double gamma_;
  double dt_;
  Mat4 jump_;
  Mat4 no_jump_;
};

StepResult trajectory_step(const PureState4& psi, const SystemParams& p, const FeedbackVector& f,
                           double dt, std::mt19937_64& rng,
                           NoJumpScheme scheme = NoJumpScheme::kRungeKutta4);

struct EnsembleConfig {
  std::int64_t n_traj = 1000;
  double dt = 1e-3;
  double t_end = 10.0;
  std::uint64_t seed = 20260101;
  std::int64_t sample_every = 10;
  NoJumpScheme scheme = NoJumpScheme::kRungeKutta4;

  void validate() const;
  IntegrationConfig integration() const { return {dt, t_end, sample_every}; }
};

struct JumpSummary {
  std::int64_t total = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double standard_error = 0.0;
};

struct EnsembleResult {
  /// Averaged |psi><psi| and its observables at each sample time.
  TimeSeries series;
  /// Jumps per trajectory over [0, t_end], indexed by trajectory.
  std::vector<std::int64_t> jump_counts;
  JumpSummary jumps;
};

/// Extracts the state vector of a rank-1 density matrix; throws NotPure when
/// the second eigenvalue exceeds 1e-9.
PureState4 to_pure_state(const DensityMatrix4& rho);

/// Runs one trajectory, adding |psi><psi| at each sample step into `sums`
/// (which must have one entry per sample step). Returns the jump count.
std::int64_t run_trajectory(const TrajectoryStepper& stepper, const PureState4& psi0,
                            const EnsembleConfig& cfg, std::uint64_t index,
                            const std::vector<std::int64_t>& samples, std::vector<Mat4>& sums);

/// Ensemble mean over cfg.n_traj trajectories. The result does not depend on
/// the number of worker threads: trajectories are summed in fixed blocks that
/// are merged in index order.
EnsembleResult run_ensemble(const DensityMatrix4& rho0, const SystemParams& p,
                            const FeedbackVector& f, const EnsembleConfig& cfg);

}  // namespace jumpfeed
