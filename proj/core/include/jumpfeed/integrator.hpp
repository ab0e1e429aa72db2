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

#include <cstdint>
#include <functional>
#include <vector>

#include "jumpfeed/linalg.hpp"
#include "jumpfeed/model.hpp"
#include "jumpfeed/observables.hpp"

namespace jumpfeed {

/// Any density-matrix flow rho -> drho/dt.
using DensityRhs = std::function<Mat4(const Mat4&)>;

struct IntegrationConfig {
  double dt = 1e-3;
  double t_end = 10.0;
  /// Emit a sample every k steps (step 0 and the final step are always sampled).
  std::int64_t sample_every = 1;

  /// Throws InvalidArgument unless 0 < dt <= 0.01, t_end > 0, sample_every >= 1.
  void validate() const;
  /// round(t_end / dt)
  std::int64_t steps() const;
};

/// Sampled trajectory of a density matrix with its observables.
struct TimeSeries {
  std::vector<double> times;
  std::vector<ObservableRecord> samples;
  std::vector<Mat4> states;

  std::size_t size() const { return times.size(); }
};

/// Bounds enforced on every sampled state.
inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kEigenvalueFloor = -1e-7;

/// Classic four-stage Runge-Kutta step followed by re-Hermitization.
Mat4 rk4_step(const DensityRhs& rhs, const Mat4& rho, double dt);

/// Throws StateCorrupted when trace or positivity bounds are violated.
void check_sample(double t, const Mat4& rho);

/// Propagates rho0 with fixed-step RK4 and records observables at the sample
/// times. Trace is monitored, never renormalized.
TimeSeries evolve(const DensityMatrix4& rho0, const DensityRhs& rhs, const IntegrationConfig& cfg);

/// Sample step indices used by evolve() and the trajectory ensemble.
std::vector<std::int64_t> sample_steps(const IntegrationConfig& cfg);

}  // namespace jumpfeed
