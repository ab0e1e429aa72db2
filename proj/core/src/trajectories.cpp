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

#include "jumpfeed/trajectories.hpp"

#include <cmath>
#include <mutex>
#include <optional>
#include <string>

#include "jumpfeed/errors.hpp"
#include "jumpfeed/parallel.hpp"

namespace jumpfeed {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::int64_t kTrajectoriesPerBlock = 64;

double squared_norm(const CVector<4>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

PureState4::PureState4(const CVector<4>& amplitudes) : amp_(amplitudes) {
  if (std::abs(norm() - 1.0) > 1e-9) {
    throw InvalidArgument("pure state is not normalized (norm " + std::to_string(norm()) + ")");
  }
}

PureState4 PureState4::normalized(const CVector<4>& v) {
  const double n = std::sqrt(squared_norm(v));
  if (!(n > 0.0)) throw ZeroNorm("cannot normalize a zero state vector");
  CVector<4> out = v;
  for (auto& a : out) a /= n;
  PureState4 s;
  s.amp_ = out;
  return s;
}

double PureState4::norm() const { return std::sqrt(squared_norm(amp_)); }

Mat4 PureState4::projector() const { return DensityMatrix4::from_pure(amp_).matrix(); }

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t trajectory_seed(std::uint64_t ensemble_seed, std::uint64_t index) {
  return splitmix64_mix(ensemble_seed + (index + 1) * kGoldenGamma);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

TrajectoryStepper::TrajectoryStepper(const SystemParams& p, const FeedbackVector& f, double dt,
                                     NoJumpScheme scheme)
    : gamma_(p.gamma), dt_(dt) {
  if (!(dt > 0.0)) throw InvalidArgument("trajectory dt must be positive");
  const MasterEquation eq(p, f);
  jump_ = eq.jump_operator();
  // M = -i H_eff dt
  const Mat4 m = (-pauli::kI * dt) * eq.effective_hamiltonian();
  const Mat4 id = Mat4::identity();
  if (scheme == NoJumpScheme::kFirstOrder) {
    no_jump_ = id + m;
  } else {
    // RK4 applied to a linear system: I + M + M^2/2 + M^3/6 + M^4/24.
    const Mat4 m2 = m * m;
    const Mat4 m3 = m2 * m;
    const Mat4 m4 = m3 * m;
    no_jump_ = id + m + 0.5 * m2 + (1.0 / 6.0) * m3 + (1.0 / 24.0) * m4;
  }
}

double TrajectoryStepper::jump_probability(const PureState4& psi) const {
  // sigma_2^+ sigma_2^- projects qubit 2 on |e>: basis states |ee> and |ge>.
  const auto& a = psi.amplitudes();
  return gamma_ * dt_ * (std::norm(a[kEE]) + std::norm(a[kGE]));
}

PureState4 TrajectoryStepper::apply_jump(const PureState4& psi) const {
  const CVector<4> v = jump_ * psi.amplitudes();
  if (!(squared_norm(v) > 0.0)) {
    throw ZeroNorm("jump applied to a state with qubit 2 in its ground state");
  }
  return PureState4::normalized(v);
}

PureState4 TrajectoryStepper::apply_no_jump(const PureState4& psi) const {
  return PureState4::normalized(no_jump_ * psi.amplitudes());
}

StepResult TrajectoryStepper::step(const PureState4& psi, double u) const {
  const double p1 = jump_probability(psi);
  if (u < p1) return {apply_jump(psi), true};
  return {apply_no_jump(psi), false};
}

StepResult trajectory_step(const PureState4& psi, const SystemParams& p, const FeedbackVector& f,
                           double dt, std::mt19937_64& rng, NoJumpScheme scheme) {
  return TrajectoryStepper(p, f, dt, scheme).step(psi, rng);
}

void EnsembleConfig::validate() const {
  if (n_traj < 1) throw InvalidArgument("n_traj must be at least 1");
  integration().validate();
}

PureState4 to_pure_state(const DensityMatrix4& rho) {
  rho.check();
  const HermitianEigen<4> eig = hermitian_eigen(rho.matrix());
  if (eig.values[1] > 1e-9) {
    throw NotPure("initial state is mixed (second eigenvalue " + std::to_string(eig.values[1]) +
                  ")");
  }
  CVector<4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = eig.vectors(i, 0);
  // Fix the global phase so the largest amplitude is real and positive.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  }
  const Complex phase = std::conj(v[k]) / std::abs(v[k]);
  for (auto& a : v) a *= phase;
  return PureState4::normalized(v);
}

std::int64_t run_trajectory(const TrajectoryStepper& stepper, const PureState4& psi0,
                            const EnsembleConfig& cfg, std::uint64_t index,
                            const std::vector<std::int64_t>& samples, std::vector<Mat4>& sums) {
  std::mt19937_64 rng(trajectory_seed(cfg.seed, index));
  PureState4 psi = psi0;
  std::int64_t jumps = 0;
  std::int64_t step = 0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (; step < samples[s]; ++step) {
      StepResult r = stepper.step(psi, rng);
      jumps += r.jumped ? 1 : 0;
      psi = r.state;
    }
    sums[s] += psi.projector();
  }
  return jumps;
}

EnsembleResult run_ensemble(const DensityMatrix4& rho0, const SystemParams& p,
                            const FeedbackVector& f, const EnsembleConfig& cfg) {
  cfg.validate();
  const PureState4 psi0 = to_pure_state(rho0);
  const TrajectoryStepper stepper(p, f, cfg.dt, cfg.scheme);
  const std::vector<std::int64_t> samples = sample_steps(cfg.integration());

  EnsembleResult out;
  out.jump_counts.assign(static_cast<std::size_t>(cfg.n_traj), 0);

  const std::int64_t n_blocks = (cfg.n_traj + kTrajectoriesPerBlock - 1) / kTrajectoriesPerBlock;
  std::vector<Mat4> total(samples.size());
  std::vector<std::optional<std::vector<Mat4>>> pending(static_cast<std::size_t>(n_blocks));
  std::size_t next_merge = 0;
  std::mutex merge_mutex;

  parallel_for(static_cast<std::size_t>(n_blocks), [&](std::size_t block) {
    std::vector<Mat4> sums(samples.size());
    const std::int64_t first = static_cast<std::int64_t>(block) * kTrajectoriesPerBlock;
    const std::int64_t last = std::min(cfg.n_traj, first + kTrajectoriesPerBlock);
    for (std::int64_t k = first; k < last; ++k) {
      out.jump_counts[static_cast<std::size_t>(k)] =
          run_trajectory(stepper, psi0, cfg, static_cast<std::uint64_t>(k), samples, sums);
    }
    // Merge blocks strictly in index order so the sum is thread-count independent.
    std::lock_guard lock(merge_mutex);
    pending[block] = std::move(sums);
    while (next_merge < pending.size() && pending[next_merge]) {
      for (std::size_t s = 0; s < total.size(); ++s) total[s] += (*pending[next_merge])[s];
      pending[next_merge].reset();
      ++next_merge;
    }
  });

  const double inv_n = 1.0 / static_cast<double>(cfg.n_traj);
  out.series.times.reserve(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const double t = static_cast<double>(samples[s]) * cfg.dt;
    const Mat4 rho = hermitian_part(total[s] * inv_n);
    out.series.times.push_back(t);
    out.series.samples.push_back(measure(t, rho));
    out.series.states.push_back(rho);
  }

  double sum = 0.0;
  for (const auto c : out.jump_counts) {
    out.jumps.total += c;
    sum += static_cast<double>(c);
  }
  out.jumps.mean = sum * inv_n;
  double var = 0.0;
  for (const auto c : out.jump_counts) {
    const double d = static_cast<double>(c) - out.jumps.mean;
    var += d * d;
  }
  if (cfg.n_traj > 1) var /= static_cast<double>(cfg.n_traj - 1);
  out.jumps.stddev = std::sqrt(var);
  out.jumps.standard_error = out.jumps.stddev / std::sqrt(static_cast<double>(cfg.n_traj));
  return out;
}

}  // namespace jumpfeed
