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

#include "jumpfeed/integrator.hpp"

#include <cmath>
#include <string>

#include "jumpfeed/errors.hpp"

namespace jumpfeed {

void IntegrationConfig::validate() const {
  if (!(dt > 0.0 && dt <= 0.01)) throw InvalidArgument("dt must lie in (0, 0.01]");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
  if (sample_every < 1) throw InvalidArgument("sample_every must be at least 1");
}

std::int64_t IntegrationConfig::steps() const { return std::llround(t_end / dt); }

std::vector<std::int64_t> sample_steps(const IntegrationConfig& cfg) {
  const std::int64_t n = cfg.steps();
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n / cfg.sample_every + 2));
  for (std::int64_t s = 0; s <= n; s += cfg.sample_every) out.push_back(s);
  if (out.back() != n) out.push_back(n);
  return out;
}

Mat4 rk4_step(const DensityRhs& rhs, const Mat4& rho, double dt) {
  const Mat4 k1 = rhs(rho);
  const Mat4 k2 = rhs(rho + (0.5 * dt) * k1);
  const Mat4 k3 = rhs(rho + (0.5 * dt) * k2);
  const Mat4 k4 = rhs(rho + dt * k3);
  Mat4 next = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return hermitian_part(next);
}

void check_sample(double t, const Mat4& rho) {
  const double trace_error = std::abs(rho.trace() - 1.0);
  if (!(trace_error <= kTraceTolerance)) {
    throw StateCorrupted(t, "|Tr rho - 1| <= 1e-8", trace_error);
  }
  const double min_eig = hermitian_eigenvalues(rho).back();
  if (!(min_eig >= kEigenvalueFloor)) {
    throw StateCorrupted(t, "min eigenvalue >= -1e-7", min_eig);
  }
}

TimeSeries evolve(const DensityMatrix4& rho0, const DensityRhs& rhs, const IntegrationConfig& cfg) {
  cfg.validate();
  rho0.check();

  const std::vector<std::int64_t> samples = sample_steps(cfg);
  TimeSeries out;
  out.times.reserve(samples.size());
  out.samples.reserve(samples.size());
  out.states.reserve(samples.size());

  Mat4 rho = hermitian_part(rho0.matrix());
  std::int64_t step = 0;
  for (const std::int64_t target : samples) {
    for (; step < target; ++step) rho = rk4_step(rhs, rho, cfg.dt);
    const double t = static_cast<double>(step) * cfg.dt;
    check_sample(t, rho);
    out.times.push_back(t);
    try {
      out.samples.push_back(measure(t, rho));
    } catch (const NotPositive& e) {
      throw StateCorrupted(t, std::string("positive semidefinite within 1e-9: ") + e.what(),
                           hermitian_eigenvalues(rho).back());
    }
    out.states.push_back(rho);
  }
  return out;
}

}  // namespace jumpfeed
