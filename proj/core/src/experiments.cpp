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

#include "jumpfeed/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jumpfeed/errors.hpp"
#include "jumpfeed/parallel.hpp"

namespace jumpfeed {

namespace {

CVector<4> basis_state(std::size_t index) {
  CVector<4> v{};
  v[index] = 1.0;
  return v;
}

}  // namespace

InitialState::InitialState(InitialStateName name) : name_(name) {
  if (name == InitialStateName::kCustom) {
    throw InvalidArgument("custom initial states need amplitudes or a density matrix");
  }
}

InitialState InitialState::custom_pure(const CVector<4>& amplitudes) {
  double n2 = 0.0;
  for (const auto& a : amplitudes) n2 += std::norm(a);
  if (!(n2 > 0.0)) throw InvalidArgument("custom state vector is zero");
  CVector<4> v = amplitudes;
  for (auto& a : v) a /= std::sqrt(n2);
  return custom_density(DensityMatrix4::from_pure(v).matrix());
}

InitialState InitialState::custom_density(const Mat4& rho) {
  DensityMatrix4(rho).check();
  InitialState s;
  s.name_ = InitialStateName::kCustom;
  s.custom_ = rho;
  return s;
}

InitialState InitialState::parse(std::string_view name) {
  if (name == "plus_plus") return InitialState(InitialStateName::kPlusPlus);
  if (name == "ge") return InitialState(InitialStateName::kGE);
  if (name == "ee") return InitialState(InitialStateName::kEE);
  if (name == "gg") return InitialState(InitialStateName::kGG);
  throw InvalidArgument("unknown initial state '" + std::string(name) +
                        "' (expected plus_plus, ge, ee or gg)");
}

std::string_view InitialState::label() const {
  switch (name_) {
    case InitialStateName::kPlusPlus: return "plus_plus";
    case InitialStateName::kGE: return "ge";
    case InitialStateName::kEE: return "ee";
    case InitialStateName::kGG: return "gg";
    case InitialStateName::kCustom: return "custom";
  }
  return "custom";
}

DensityMatrix4 InitialState::density() const {
  switch (name_) {
    case InitialStateName::kPlusPlus: return DensityMatrix4::from_pure({0.5, 0.5, 0.5, 0.5});
    case InitialStateName::kGE: return DensityMatrix4::from_pure(basis_state(kGE));
    case InitialStateName::kEE: return DensityMatrix4::from_pure(basis_state(kEE));
    case InitialStateName::kGG: return DensityMatrix4::from_pure(basis_state(kGG));
    case InitialStateName::kCustom: return DensityMatrix4(*custom_);
  }
  return DensityMatrix4(*custom_);
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kAx: return "ax";
    case SweepAxis::kAy: return "ay";
    case SweepAxis::kAz: return "az";
  }
  return "ax";
}

std::string_view to_string(SweepObservable obs) {
  return obs == SweepObservable::kAbsRhoEg ? "abs_rho_eg" : "concurrence";
}

SweepAxis parse_axis(std::string_view s) {
  if (s == "ax") return SweepAxis::kAx;
  if (s == "ay") return SweepAxis::kAy;
  if (s == "az") return SweepAxis::kAz;
  throw InvalidArgument("unknown sweep axis '" + std::string(s) + "' (expected ax, ay or az)");
}

SweepObservable parse_observable(std::string_view s) {
  if (s == "abs_rho_eg") return SweepObservable::kAbsRhoEg;
  if (s == "concurrence") return SweepObservable::kConcurrence;
  throw InvalidArgument("unknown observable '" + std::string(s) +
                        "' (expected abs_rho_eg or concurrence)");
}

double observable_value(const ObservableRecord& r, SweepObservable obs) {
  return obs == SweepObservable::kAbsRhoEg ? r.abs_rho_eg : r.concurrence;
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw InvalidArgument("sweep requires lo < hi");
  if (n_points < 2) throw InvalidArgument("sweep requires at least 2 points");
  params.validate();
  integration.validate();
}

double SweepSpec::axis_value(std::int64_t i) const {
  return std::lerp(lo, hi, static_cast<double>(i) / static_cast<double>(n_points - 1));
}

FeedbackVector SweepSpec::feedback_at(double value) const {
  FeedbackVector f = base_feedback;
  switch (axis) {
    case SweepAxis::kAx: f.ax = value; break;
    case SweepAxis::kAy: f.ay = value; break;
    case SweepAxis::kAz: f.az = value; break;
  }
  return f;
}

TimeSeries simulate(const SystemParams& p, const FeedbackVector& f, const InitialState& init,
                    const IntegrationConfig& cfg) {
  const MasterEquation eq(p, f);
  return evolve(init.density(), std::cref(eq), cfg);
}

SweepGrid sweep(const SweepSpec& spec) {
  spec.validate();
  SweepGrid grid;
  grid.axis = spec.axis;
  grid.observable = spec.observable;
  const auto n = static_cast<std::size_t>(spec.n_points);
  grid.axis_values.resize(n);
  grid.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) grid.axis_values[i] = spec.axis_value(static_cast<std::int64_t>(i));
  for (const auto s : sample_steps(spec.integration)) {
    grid.times.push_back(static_cast<double>(s) * spec.integration.dt);
  }

  parallel_for(n, [&](std::size_t i) {
    const double value = grid.axis_values[i];
    try {
      const TimeSeries ts = simulate(spec.params, spec.feedback_at(value), spec.init, spec.integration);
      std::vector<double> row;
      row.reserve(ts.size());
      for (const auto& r : ts.samples) row.push_back(observable_value(r, spec.observable));
      grid.values[i] = std::move(row);
    } catch (const StateCorrupted& e) {
      throw StateCorrupted(e.time(),
                           std::string(to_string(spec.axis)) + "=" + std::to_string(value) + ": " +
                               e.bound(),
                           e.value());
    }
  });
  return grid;
}

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {"fig1a", "fig1b", "fig2a", "fig2b", "fig2c",
                                               "fig3",  "fig4a", "fig4b", "fig5a", "fig5b"};
  return ids;
}

PresetSpec preset_spec(std::string_view figure_id) {
  constexpr double pi = std::numbers::pi;
  PresetSpec spec;
  spec.id = std::string(figure_id);
  spec.params = SystemParams{1.0, 1.0, 1.0, 0.5};
  spec.integration = IntegrationConfig{1e-3, 10.0, 10};

  auto make_sweep = [&](SweepAxis axis, SweepObservable obs) {
    SweepSpec s;
    s.axis = axis;
    s.lo = 0.0;
    s.hi = pi;
    s.n_points = 101;
    s.observable = obs;
    s.params = spec.params;
    s.init = spec.init;
    s.integration = IntegrationConfig{1e-3, 10.0, 50};
    spec.integration = s.integration;
    spec.sweep = s;
  };

  const FeedbackVector none{};
  if (figure_id == "fig1a" || figure_id == "fig1b") {
    spec.description = figure_id == "fig1a"
                           ? "coherence |rho_eg| of qubit 1, A=(1.2,0,0) vs uncontrolled"
                           : "excited population rho_ee of qubit 1, A=(1.2,0,0) vs uncontrolled";
    spec.init = InitialState(InitialStateName::kPlusPlus);
    spec.runs = {{"controlled", {1.2, 0.0, 0.0}}, {"uncontrolled", none}};
  } else if (figure_id == "fig2a" || figure_id == "fig2b" || figure_id == "fig2c") {
    const SweepAxis axis = figure_id == "fig2a"   ? SweepAxis::kAx
                           : figure_id == "fig2b" ? SweepAxis::kAy
                                                  : SweepAxis::kAz;
    spec.description = "|rho_eg| of qubit 1 versus time and " + std::string(to_string(axis)) +
                       " in [0, pi]";
    spec.init = InitialState(InitialStateName::kPlusPlus);
    make_sweep(axis, SweepObservable::kAbsRhoEg);
  } else if (figure_id == "fig3") {
    spec.description = "Bloch vector of qubit 1, A=(pi/2,0,0) vs uncontrolled";
    spec.init = InitialState(InitialStateName::kPlusPlus);
    spec.runs = {{"controlled", {pi / 2.0, 0.0, 0.0}}, {"uncontrolled", none}};
  } else if (figure_id == "fig4a") {
    spec.description = "concurrence versus time and ay in [0, pi], initial |g>|e>";
    spec.init = InitialState(InitialStateName::kGE);
    make_sweep(SweepAxis::kAy, SweepObservable::kConcurrence);
  } else if (figure_id == "fig4b") {
    spec.description = "concurrence, initial |g>|e>, ay=pi/2 and ay=0.9 vs uncontrolled";
    spec.init = InitialState(InitialStateName::kGE);
    spec.runs = {{"controlled", {0.0, pi / 2.0, 0.0}},
                 {"controlled_ay0.9", {0.0, 0.9, 0.0}},
                 {"uncontrolled", none}};
  } else if (figure_id == "fig5a") {
    spec.description = "concurrence versus time and ay in [0, pi], initial |e>|e>";
    spec.init = InitialState(InitialStateName::kEE);
    make_sweep(SweepAxis::kAy, SweepObservable::kConcurrence);
  } else if (figure_id == "fig5b") {
    spec.description = "concurrence, initial |e>|e>, ay=1.2 vs uncontrolled";
    spec.init = InitialState(InitialStateName::kEE);
    spec.runs = {{"controlled", {0.0, 1.2, 0.0}}, {"uncontrolled", none}};
  } else {
    throw UnknownFigure("unknown figure '" + std::string(figure_id) + "'");
  }
  return spec;
}

PresetResult run_preset(const PresetSpec& spec) {
  PresetResult out;
  out.spec = spec;
  if (spec.sweep) {
    out.grid = sweep(*spec.sweep);
    return out;
  }
  out.series.resize(spec.runs.size());
  parallel_for(spec.runs.size(), [&](std::size_t i) {
    const auto& run = spec.runs[i];
    out.series[i] = {run.label, run.feedback,
                     simulate(spec.params, run.feedback, spec.init, spec.integration)};
  });
  return out;
}

PresetResult run_preset(std::string_view figure_id) { return run_preset(preset_spec(figure_id)); }

}  // namespace jumpfeed
