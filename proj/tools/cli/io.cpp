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

#include "cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "jumpfeed/errors.hpp"
#include "json.hpp"

namespace jumpfeed::io {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_timeseries_csv(std::ostream& os, const TimeSeries& ts) {
  os << kTimeSeriesHeader << '\n';
  for (const auto& r : ts.samples) {
    os << format_double(r.t) << ',' << format_double(r.rho1_ee) << ',' << format_double(r.rho1_gg)
       << ',' << format_double(r.abs_rho_eg) << ',' << format_double(r.px) << ','
       << format_double(r.py) << ',' << format_double(r.pz) << ',' << format_double(r.concurrence)
       << ',' << format_double(r.purity) << '\n';
  }
}

void write_grid_csv(std::ostream& os, const SweepGrid& grid) {
  os << kGridHeader << '\n';
  const std::string axis(to_string(grid.axis));
  const std::string obs(to_string(grid.observable));
  for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
    const std::string value = format_double(grid.axis_values[i]);
    for (std::size_t j = 0; j < grid.times.size(); ++j) {
      os << axis << ',' << value << ',' << format_double(grid.times[j]) << ',' << obs << ','
         << format_double(grid.values[i][j]) << '\n';
    }
  }
}

void write_timeseries_json(std::ostream& os, const TimeSeries& ts) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : ts.samples) {
    rows.push_back({{"t", r.t},
                    {"rho1_ee", r.rho1_ee},
                    {"rho1_gg", r.rho1_gg},
                    {"abs_rho_eg", r.abs_rho_eg},
                    {"px", r.px},
                    {"py", r.py},
                    {"pz", r.pz},
                    {"concurrence", r.concurrence},
                    {"purity", r.purity}});
  }
  os << nlohmann::ordered_json{{"samples", rows}}.dump(1) << '\n';
}

void write_grid_json(std::ostream& os, const SweepGrid& grid) {
  nlohmann::ordered_json j{{"axis", to_string(grid.axis)},
                           {"observable", to_string(grid.observable)},
                           {"axis_values", grid.axis_values},
                           {"times", grid.times},
                           {"values", grid.values}};
  os << j.dump(1) << '\n';
}

std::filesystem::path meta_path_for(const std::filesystem::path& data_path) {
  std::filesystem::path p = data_path;
  p.replace_extension(".meta.json");
  return p;
}

std::filesystem::path labeled_path(const std::filesystem::path& base, const std::string& label) {
  std::filesystem::path p = base;
  const std::string ext = base.has_extension() ? base.extension().string() : ".csv";
  p.replace_extension("." + label + ext);
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace jumpfeed::io
