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

// Output formats consumed by downstream plotting.
//
//   time series: t,rho1_ee,rho1_gg,abs_rho_eg,px,py,pz,concurrence,purity
//   grid (long form): axis,axis_value,t,observable,value
//
// Floats are written with 17 significant digits so they round-trip exactly.
// Each data file `<stem>.csv` gets a sidecar `<stem>.meta.json`.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "jumpfeed/experiments.hpp"
#include "jumpfeed/integrator.hpp"

namespace jumpfeed::io {

inline constexpr const char* kTimeSeriesHeader =
    "t,rho1_ee,rho1_gg,abs_rho_eg,px,py,pz,concurrence,purity";
inline constexpr const char* kGridHeader = "axis,axis_value,t,observable,value";

enum class Format { kCsv, kJson };

std::string format_double(double x);

void write_timeseries_csv(std::ostream& os, const TimeSeries& ts);
void write_grid_csv(std::ostream& os, const SweepGrid& grid);
void write_timeseries_json(std::ostream& os, const TimeSeries& ts);
void write_grid_json(std::ostream& os, const SweepGrid& grid);

/// run.csv -> run.meta.json
std::filesystem::path meta_path_for(const std::filesystem::path& data_path);

/// out.csv + "controlled" -> out.controlled.csv
std::filesystem::path labeled_path(const std::filesystem::path& base, const std::string& label);

/// Writes `text` to `path`, throwing jumpfeed::Error on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace jumpfeed::io
