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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "jumpfeed/jumpfeed.hpp"
#include "test_support.hpp"

using namespace jumpfeed;

namespace {

const SystemParams kDefaults{1.0, 1.0, 1.0, 0.5};
constexpr double kPi = std::numbers::pi;

// Regression fixtures from converged dt = 1e-3 runs.
constexpr double kFig1ControlledAverage = 0.13891011546427928;
constexpr double kFig1UncontrolledAverage = 0.13416220006066773;
constexpr double kFig5UncontrolledMax = 0.091330290936804392;
constexpr double kFig5DeathStart = 1.569;
constexpr double kFig5DeathEnd = 2.582;
constexpr double kFig5RevivalCross = 5.532;

struct Outcome {
  bool pass;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

DensityMatrix4 rho0() { return InitialState(InitialStateName::kPlusPlus).density(); }

DensityMatrix4 basis_state(std::size_t k) {
  CVector<4> v{};
  v[k] = 1.0;
  return DensityMatrix4::from_pure(v);
}

Outcome exact_identities() {
  const Clock clock;
  double worst_z = 0.0;
  double worst_period = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Mat4 m = i % 2 == 0 ? testing::random_density()
                              : testing::projector(testing::random_state_vector());
    const DensityMatrix4 rho(m);
    const double az = testing::uniform(-2.0 * kPi, 2.0 * kPi);
    const double ax = testing::uniform(-kPi, kPi);
    const double ay = testing::uniform(-kPi, kPi);
    worst_z = std::max(worst_z, max_abs_diff(feedback_rhs(rho, kDefaults, {0.0, 0.0, az}),
                                             lindblad_rhs(rho, kDefaults)));
    worst_period = std::max(worst_period, max_abs_diff(feedback_rhs(rho, kDefaults, {ax, 0.0, 0.0}),
                                                       feedback_rhs(rho, kDefaults, {ax + kPi, 0.0, 0.0})));
    worst_period = std::max(worst_period, max_abs_diff(feedback_rhs(rho, kDefaults, {0.0, ay, 0.0}),
                                                       feedback_rhs(rho, kDefaults, {0.0, ay + kPi, 0.0})));
  }
  const double elapsed = clock.seconds();
  return {worst_z <= 1e-12 && worst_period <= 1e-12 && elapsed < 1.0,
          fmt("sigma_z dev %.3g, pi-period dev %.3g, %.3f s", worst_z, worst_period, elapsed)};
}

Outcome integrator_hygiene() {
  const Clock clock;
  const TimeSeries ts = simulate(kDefaults, {1.2, 0.0, 0.0}, InitialState(InitialStateName::kPlusPlus),
                                 {1e-3, 10.0, 1});
  const double elapsed = clock.seconds();
  double trace_err = 0.0;
  double herm = 0.0;
  double min_eig = 1.0;
  for (const Mat4& s : ts.states) {
    trace_err = std::max(trace_err, std::abs(s.trace() - Complex(1.0)));
    herm = std::max(herm, max_abs_diff(s, dagger(s)));
    min_eig = std::min(min_eig, hermitian_eigenvalues(s).back());
  }
  return {trace_err <= 1e-8 && herm == 0.0 && min_eig >= -1e-7 && elapsed < 5.0 && ts.size() == 10001,
          fmt("|Tr-1| %.3g, max|rho-rho^dag| %.3g, min eig %.3g, %.3f s", trace_err, herm, min_eig,
              elapsed)};
}

Outcome convergence_order() {
  const MasterEquation eq(kDefaults, {1.2, 0.0, 0.0});
  auto at_one = [&](double dt) {
    return evolve(rho0(), std::cref(eq), {dt, 1.0, 1 << 30}).states.back();
  };
  const Mat4 reference = at_one(1e-5);
  const double e4 = max_abs_diff(at_one(4e-3), reference);
  const double e2 = max_abs_diff(at_one(2e-3), reference);
  const double e1 = max_abs_diff(at_one(1e-3), reference);
  const double order = std::min(std::log2(e4 / e2), std::log2(e2 / e1));
  return {order >= 3.8, fmt("errors %.3g %.3g %.3g, order %.3f", e4, e2, e1, order)};
}

Outcome closed_form() {
  const SystemParams closed{1.0, 1.0, 1.0, 0.0};
  const TimeSeries ts = simulate(closed, {}, InitialState(InitialStateName::kGE), {1e-3, 5.0, 1});
  double worst = 0.0;
  double at_half_pi = 0.0;
  double best_gap = 1.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    worst = std::max(worst, std::abs(ts.samples[i].concurrence - std::abs(std::sin(2.0 * ts.times[i]))));
    const double gap = std::abs(ts.times[i] - kPi / 2.0);
    if (gap < best_gap) {
      best_gap = gap;
      at_half_pi = ts.samples[i].rho1_ee;
    }
  }
  // pi/2 is not on the grid; evolve exactly to it for the population check.
  const MasterEquation eq(closed);
  const double dt = kPi / 2.0 / 1571.0;
  const Mat4 end = evolve(basis_state(kGE), std::cref(eq), {dt, kPi / 2.0, 1 << 30}).states.back();
  const double pop = end(kEE, kEE).real() + end(kEG, kEG).real();
  return {worst <= 1e-6 && std::abs(pop - 1.0) <= 1e-6,
          fmt("sup|C-|sin 2t|| %.3g, rho1_ee(pi/2) = %.12f (nearest sample %.9f)", worst, pop, at_half_pi)};
}

Outcome stationarity() {
  const SystemParams closed{1.0, 1.0, 1.0, 0.0};
  double worst = 0.0;
  for (const auto name : {InitialStateName::kEE, InitialStateName::kGG}) {
    const InitialState init(name);
    const Mat4 start = init.density().matrix();
    const TimeSeries ts = simulate(closed, {}, init, {1e-3, 10.0, 1});
    for (const Mat4& s : ts.states) worst = std::max(worst, max_abs_diff(s, start));
  }
  return {worst <= 1e-9, fmt("max deviation %.3g", worst)};
}

double window_average(const TimeSeries& ts, double lo, double hi) {
  double sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts.times[i] >= lo - 1e-12 && ts.times[i] <= hi + 1e-12) {
      sum += ts.samples[i].abs_rho_eg;
      ++n;
    }
  }
  return sum / n;
}

Outcome fig1_claim() {
  const InitialState init(InitialStateName::kPlusPlus);
  const IntegrationConfig cfg{1e-3, 10.0, 1};
  const double ctl = window_average(simulate(kDefaults, {1.2, 0.0, 0.0}, init, cfg), 5.0, 10.0);
  const double unc = window_average(simulate(kDefaults, {}, init, cfg), 5.0, 10.0);
  const bool pass = ctl > unc && std::abs(ctl - kFig1ControlledAverage) <= 1e-6 &&
                    std::abs(unc - kFig1UncontrolledAverage) <= 1e-6;
  return {pass, fmt("controlled %.12f > uncontrolled %.12f", ctl, unc)};
}

Outcome fig3_claim() {
  const TimeSeries ts = simulate(kDefaults, {kPi / 2.0, 0.0, 0.0}, InitialState(InitialStateName::kPlusPlus),
                                 {1e-3, 10.0, 1});
  double worst = 0.0;
  for (const auto& s : ts.samples) {
    worst = std::max({worst, std::abs(s.rho1_ee - 0.5), std::abs(s.rho1_gg - 0.5)});
  }
  return {worst <= 1e-12, fmt("max |rho1 population - 0.5| %.3g", worst)};
}

Outcome fig5_claim() {
  const InitialState init(InitialStateName::kEE);
  const IntegrationConfig cfg{1e-3, 10.0, 1};
  const TimeSeries ctl = simulate(kDefaults, {0.0, 1.2, 0.0}, init, cfg);
  const TimeSeries unc = simulate(kDefaults, {}, init, cfg);
  double unc_max = 0.0;
  for (const auto& s : unc.samples) unc_max = std::max(unc_max, s.concurrence);

  // Death interval: first run of C < 1e-6 after entanglement has appeared.
  std::size_t i = 0;
  while (i < ctl.size() && ctl.samples[i].concurrence <= 1e-3) ++i;
  while (i < ctl.size() && ctl.samples[i].concurrence >= 1e-6) ++i;
  const std::size_t death_begin = i;
  while (i < ctl.size() && ctl.samples[i].concurrence < 1e-6) ++i;
  const std::size_t death_end = i - 1;
  while (i < ctl.size() && ctl.samples[i].concurrence <= unc_max) ++i;
  if (death_begin >= ctl.size() || i >= ctl.size()) {
    return {false, fmt("no death interval followed by revival (uncontrolled max %.9f)", unc_max)};
  }
  const double t0 = ctl.times[death_begin];
  const double t1 = ctl.times[death_end];
  const double tr = ctl.times[i];
  const double tol = 0.5e-3;
  const bool pass = t1 > t0 && std::abs(unc_max - kFig5UncontrolledMax) <= 1e-6 &&
                    std::abs(t0 - kFig5DeathStart) <= tol && std::abs(t1 - kFig5DeathEnd) <= tol &&
                    std::abs(tr - kFig5RevivalCross) <= tol;
  return {pass, fmt("C < 1e-6 on [%.3f, %.3f], C > %.6f from t = %.3f (C(10) = %.6f)", t0, t1, unc_max, tr,
                    ctl.samples.back().concurrence)};
}

Outcome trajectory_agreement() {
  const Clock clock;
  const InitialState init(InitialStateName::kPlusPlus);
  const FeedbackVector f{1.2, 0.0, 0.0};
  EnsembleConfig cfg;
  cfg.n_traj = 5000;
  cfg.seed = 12345;
  cfg.sample_every = 10;
  const EnsembleResult ens = run_ensemble(init.density(), kDefaults, f, cfg);
  const double elapsed = clock.seconds();
  const TimeSeries det = simulate(kDefaults, f, init, cfg.integration());
  if (ens.series.size() != det.size()) return {false, "sample grids differ"};
  double sup_coh = 0.0;
  double sup_c = 0.0;
  for (std::size_t i = 0; i < det.size(); ++i) {
    sup_coh = std::max(sup_coh, std::abs(ens.series.samples[i].abs_rho_eg - det.samples[i].abs_rho_eg));
    sup_c = std::max(sup_c, std::abs(ens.series.samples[i].concurrence - det.samples[i].concurrence));
  }
  return {sup_coh <= 0.03 && sup_c <= 0.03 && elapsed < 60.0,
          fmt("sup abs_rho_eg %.4f, sup concurrence %.4f, %.1f s on %zu worker(s)", sup_coh, sup_c, elapsed,
              worker_count())};
}

Outcome sigma_z_flatness() {
  const PresetResult r = run_preset("fig2c");
  const SweepGrid& g = *r.grid;
  double worst = 0.0;
  for (std::size_t a = 0; a < g.values.size(); ++a) {
    for (std::size_t b = a + 1; b < g.values.size(); ++b) {
      for (std::size_t c = 0; c < g.times.size(); ++c) {
        worst = std::max(worst, std::abs(g.values[a][c] - g.values[b][c]));
      }
    }
  }
  return {worst <= 1e-9 && g.values.size() == 101,
          fmt("%zu rows, max pairwise deviation %.3g", g.values.size(), worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact-identities", exact_identities},
      {"integrator-hygiene", integrator_hygiene},
      {"convergence-order", convergence_order},
      {"closed-form-oracle", closed_form},
      {"stationarity", stationarity},
      {"fig1-coherence", fig1_claim},
      {"fig3-populations", fig3_claim},
      {"fig5-revival", fig5_claim},
      {"trajectory-agreement", trajectory_agreement},
      {"sigma-z-flatness", sigma_z_flatness},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
