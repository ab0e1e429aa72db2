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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jumpfeed/integrator.hpp"
#include "jumpfeed/model.hpp"

namespace jumpfeed {

enum class InitialStateName { kPlusPlus, kGE, kEE, kGG, kCustom };

/// Named product states or a custom density matrix.
class InitialState {
 public:
  InitialState() = default;
  explicit InitialState(InitialStateName name);

  /// Custom pure state (normalized on construction).
  static InitialState custom_pure(const CVector<4>& amplitudes);
  /// Custom density matrix; must satisfy DensityMatrix4::check().
  static InitialState custom_density(const Mat4& rho);

  /// plus_plus, ge, ee, gg. Throws InvalidArgument otherwise.
  static InitialState parse(std::string_view name);

  InitialStateName name() const { return name_; }
  std::string_view label() const;
  DensityMatrix4 density() const;

 private:
  InitialStateName name_ = InitialStateName::kPlusPlus;
  std::optional<Mat4> custom_;
};

enum class SweepAxis { kAx, kAy, kAz };
enum class SweepObservable { kAbsRhoEg, kConcurrence };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(SweepObservable obs);
SweepAxis parse_axis(std::string_view s);
SweepObservable parse_observable(std::string_view s);

double observable_value(const ObservableRecord& r, SweepObservable obs);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kAx;
  double lo = 0.0;
  double hi = 3.141592653589793;
  std::int64_t n_points = 101;
  SweepObservable observable = SweepObservable::kAbsRhoEg;
  SystemParams params;
  /// Amplitudes of the two axes that are not swept.
  FeedbackVector base_feedback;
  InitialState init;
  IntegrationConfig integration{1e-3, 10.0, 50};

  void validate() const;
  /// Grid point i; lerp(lo, hi, i / (n - 1)) so that both ends are exact.
  double axis_value(std::int64_t i) const;
  FeedbackVector feedback_at(double value) const;
};

/// observable(axis_values[row], times[col]) = values[row][col].
struct SweepGrid {
  SweepAxis axis = SweepAxis::kAx;
  SweepObservable observable = SweepObservable::kAbsRhoEg;
  std::vector<double> axis_values;
  std::vector<double> times;
  std::vector<std::vector<double>> values;
};

/// Rows run in parallel and are assembled in axis order. Integration errors
/// are rethrown as StateCorrupted tagged with the offending axis value.
SweepGrid sweep(const SweepSpec& spec);

struct LabeledRun {
  std::string label;
  FeedbackVector feedback;
};

/// Everything needed to reproduce one figure.
struct PresetSpec {
  std::string id;
  std::string description;
  SystemParams params;
  InitialState init;
  IntegrationConfig integration;
  /// Time-series presets: one evolution per entry.
  std::vector<LabeledRun> runs;
  /// Grid presets.
  std::optional<SweepSpec> sweep;
};

struct LabeledSeries {
  std::string label;
  FeedbackVector feedback;
  TimeSeries series;
};

struct PresetResult {
  PresetSpec spec;
  std::vector<LabeledSeries> series;
  std::optional<SweepGrid> grid;
};

const std::vector<std::string>& preset_ids();

/// Throws UnknownFigure for ids outside preset_ids().
PresetSpec preset_spec(std::string_view figure_id);

PresetResult run_preset(const PresetSpec& spec);
PresetResult run_preset(std::string_view figure_id);

/// Deterministic evolution under the feedback master equation.
TimeSeries simulate(const SystemParams& p, const FeedbackVector& f, const InitialState& init,
                    const IntegrationConfig& cfg);

}  // namespace jumpfeed
