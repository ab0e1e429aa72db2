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

#include "cli/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/io.hpp"
#include "json.hpp"
#include "jumpfeed/jumpfeed.hpp"

namespace jumpfeed::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  SystemParams params;
  FeedbackVector feedback;
  std::string init = "plus_plus";
  IntegrationConfig integration;
  std::string out;
  std::string format = "csv";
};

struct SweepOptions {
  std::string axis = "ax";
  double lo = 0.0;
  double hi = 3.141592653589793;
  std::int64_t n_points = 101;
  std::string observable = "abs_rho_eg";
};

struct EnsembleOptions {
  std::int64_t n_traj = 1000;
  std::uint64_t seed = 20260101;
  std::string scheme = "rk4";
};

struct FigureOptions {
  std::string id;
  std::string out;
  std::string format = "csv";
};

struct RotationOptions {
  double angle = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Validation failure of a user-supplied value; reported as a usage error.
class UsageError : public Error {
 public:
  using Error::Error;
};

void add_physics_options(CLI::App* app, CommonOptions& o) {
  app->add_option("--omega1", o.params.omega1, "qubit 1 frequency (units of omega)")
      ->capture_default_str();
  app->add_option("--omega2", o.params.omega2, "qubit 2 frequency (units of omega)")
      ->capture_default_str();
  app->add_option("--g", o.params.g, "exchange coupling")->capture_default_str();
  app->add_option("--gamma", o.params.gamma, "decay rate of qubit 2")->capture_default_str();
  app->add_option("--ax", o.feedback.ax, "feedback amplitude A_x")->capture_default_str();
  app->add_option("--ay", o.feedback.ay, "feedback amplitude A_y")->capture_default_str();
  app->add_option("--az", o.feedback.az, "feedback amplitude A_z")->capture_default_str();
  app->add_option("--init", o.init, "initial state")
      ->check(CLI::IsMember({"plus_plus", "ge", "ee", "gg"}))
      ->capture_default_str();
  app->add_option("--dt", o.integration.dt, "time step (units of 1/omega)")->capture_default_str();
  app->add_option("--t-end", o.integration.t_end, "final time")->capture_default_str();
  app->add_option("--sample-every", o.integration.sample_every, "record every k-th step")
      ->capture_default_str();
  app->add_option("--out", o.out, "output data file; a .meta.json sidecar is written next to it")
      ->required();
  app->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_config_option(CLI::App* app, std::string& path) {
  app->add_option("--config", path, "flat key=value file; keys are flag names, flags win");
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Applies `key=value` lines to options of `app` that were not given on the
// command line. Blank lines and lines starting with '#' are ignored.
void apply_config_file(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config " + path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = app->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw UsageError("--config " + path + ":" + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
    }
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("--config " + path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

io::Format parse_format(const std::string& f) { return f == "json" ? io::Format::kJson : io::Format::kCsv; }

Json params_json(const SystemParams& p) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"g", p.g}, {"gamma", p.gamma}};
}

Json feedback_json(const FeedbackVector& f) { return {{"ax", f.ax}, {"ay", f.ay}, {"az", f.az}}; }

Json integration_json(const IntegrationConfig& c) {
  return {{"dt", c.dt}, {"t_end", c.t_end}, {"sample_every", c.sample_every}};
}

Json base_metadata(const std::string& command, const SystemParams& p, const FeedbackVector& f,
                   std::string_view init, const IntegrationConfig& c) {
  return {{"command", command},
          {"params", params_json(p)},
          {"feedback", feedback_json(f)},
          {"init", init},
          {"integration", integration_json(c)},
          {"ensemble", nullptr},
          {"version", std::string("jumpfeed ") + kVersion}};
}

std::string render(const TimeSeries& ts, io::Format format) {
  std::ostringstream os;
  if (format == io::Format::kJson) {
    io::write_timeseries_json(os, ts);
  } else {
    io::write_timeseries_csv(os, ts);
  }
  return os.str();
}

std::string render(const SweepGrid& grid, io::Format format) {
  std::ostringstream os;
  if (format == io::Format::kJson) {
    io::write_grid_json(os, grid);
  } else {
    io::write_grid_csv(os, grid);
  }
  return os.str();
}

void write_with_meta(const std::filesystem::path& path, const std::string& data, const Json& meta,
                     std::ostream& out) {
  io::write_file(path, data);
  const auto meta_path = io::meta_path_for(path);
  io::write_file(meta_path, meta.dump(2) + "\n");
  out << "wrote " << path.string() << " and " << meta_path.string() << '\n';
}

void validate(const CommonOptions& o) {
  try {
    o.params.validate();
    o.feedback.validate();
    o.integration.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

void run_simulate(const CommonOptions& o, std::ostream& out) {
  validate(o);
  const InitialState init = InitialState::parse(o.init);
  const TimeSeries ts = simulate(o.params, o.feedback, init, o.integration);
  Json meta = base_metadata("simulate", o.params, o.feedback, init.label(), o.integration);
  meta["rows"] = ts.size();
  write_with_meta(o.out, render(ts, parse_format(o.format)), meta, out);
}

void run_sweep(const CommonOptions& o, const SweepOptions& s, std::ostream& out) {
  validate(o);
  SweepSpec spec;
  try {
    spec.axis = parse_axis(s.axis);
    spec.observable = parse_observable(s.observable);
    spec.lo = s.lo;
    spec.hi = s.hi;
    spec.n_points = s.n_points;
    spec.params = o.params;
    spec.base_feedback = o.feedback;
    spec.init = InitialState::parse(o.init);
    spec.integration = o.integration;
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const SweepGrid grid = sweep(spec);
  Json meta = base_metadata("sweep", o.params, o.feedback, spec.init.label(), o.integration);
  meta["sweep"] = {{"axis", s.axis},
                   {"lo", s.lo},
                   {"hi", s.hi},
                   {"n_points", s.n_points},
                   {"observable", s.observable}};
  write_with_meta(o.out, render(grid, parse_format(o.format)), meta, out);
}

void run_trajectories(const CommonOptions& o, const EnsembleOptions& e, std::ostream& out) {
  validate(o);
  EnsembleConfig cfg;
  cfg.n_traj = e.n_traj;
  cfg.dt = o.integration.dt;
  cfg.t_end = o.integration.t_end;
  cfg.sample_every = o.integration.sample_every;
  cfg.seed = e.seed;
  cfg.scheme = e.scheme == "first-order" ? NoJumpScheme::kFirstOrder : NoJumpScheme::kRungeKutta4;
  try {
    cfg.validate();
  } catch (const InvalidArgument& ex) {
    throw UsageError(ex.what());
  }
  const InitialState init = InitialState::parse(o.init);
  const EnsembleResult r = run_ensemble(init.density(), o.params, o.feedback, cfg);

  Json meta = base_metadata("trajectories", o.params, o.feedback, init.label(), o.integration);
  meta["ensemble"] = {{"n_traj", cfg.n_traj},
                      {"dt", cfg.dt},
                      {"t_end", cfg.t_end},
                      {"seed", cfg.seed},
                      {"sample_every", cfg.sample_every},
                      {"scheme", e.scheme},
                      {"seed_expansion", "mt19937_64(splitmix64(seed + (k+1)*0x9E3779B97F4A7C15))"}};
  meta["jump_summary"] = {{"total", r.jumps.total},
                          {"mean", r.jumps.mean},
                          {"stddev", r.jumps.stddev},
                          {"standard_error", r.jumps.standard_error}};
  write_with_meta(o.out, render(r.series, parse_format(o.format)), meta, out);
  out << "jumps_total=" << r.jumps.total << '\n'
      << "jumps_mean=" << io::format_double(r.jumps.mean) << '\n'
      << "jumps_stddev=" << io::format_double(r.jumps.stddev) << '\n'
      << "jumps_standard_error=" << io::format_double(r.jumps.standard_error) << '\n';
}

void run_figure(const FigureOptions& o, std::ostream& out) {
  const PresetResult result = run_preset(o.id);
  const PresetSpec& spec = result.spec;
  const io::Format format = parse_format(o.format);
  if (result.grid) {
    Json meta = base_metadata("figure", spec.params, spec.sweep->base_feedback, spec.init.label(),
                              spec.integration);
    meta["figure"] = spec.id;
    meta["description"] = spec.description;
    meta["sweep"] = {{"axis", to_string(spec.sweep->axis)},
                     {"lo", spec.sweep->lo},
                     {"hi", spec.sweep->hi},
                     {"n_points", spec.sweep->n_points},
                     {"observable", to_string(spec.sweep->observable)}};
    write_with_meta(o.out, render(*result.grid, format), meta, out);
    return;
  }
  for (const auto& s : result.series) {
    Json meta = base_metadata("figure", spec.params, s.feedback, spec.init.label(), spec.integration);
    meta["figure"] = spec.id;
    meta["description"] = spec.description;
    meta["label"] = s.label;
    write_with_meta(io::labeled_path(o.out, s.label), render(s.series, format), meta, out);
  }
}

// Amplitudes within rounding noise of the rotation angle print as exact zero.
double snap(double v, double scale) {
  return std::abs(v) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0) ? 0.0
                                                                                            : v;
}

void run_convert(const RotationOptions& o, std::ostream& out) {
  const RotationForm r{o.angle, o.theta, o.phi};
  try {
    r.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const FeedbackVector f = rotation_to_amplitudes(r);
  const double scale = std::abs(o.angle);
  out << "ax=" << io::format_double(snap(f.ax, scale)) << '\n'
      << "ay=" << io::format_double(snap(f.ay, scale)) << '\n'
      << "az=" << io::format_double(snap(f.az, scale)) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-jump feedback control of two coupled qubits", "jumpfeed"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("jumpfeed ") + kVersion);
  std::string config_path;

  CommonOptions sim_opts;
  auto* simulate_cmd = app.add_subcommand("simulate", "deterministic master-equation evolution");
  add_physics_options(simulate_cmd, sim_opts);

  CommonOptions sweep_common;
  sweep_common.integration.sample_every = 50;
  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one feedback amplitude");
  add_physics_options(sweep_cmd, sweep_common);
  sweep_cmd->add_option("--axis", sweep_opts.axis, "swept amplitude")
      ->check(CLI::IsMember({"ax", "ay", "az"}))
      ->capture_default_str();
  sweep_cmd->add_option("--lo", sweep_opts.lo, "lower end of the sweep")->capture_default_str();
  sweep_cmd->add_option("--hi", sweep_opts.hi, "upper end of the sweep")->capture_default_str();
  sweep_cmd->add_option("--n-points", sweep_opts.n_points, "grid points")->capture_default_str();
  sweep_cmd->add_option("--observable", sweep_opts.observable, "recorded observable")
      ->check(CLI::IsMember({"abs_rho_eg", "concurrence"}))
      ->capture_default_str();

  CommonOptions traj_common;
  traj_common.integration.sample_every = 10;
  EnsembleOptions ens_opts;
  auto* traj_cmd = app.add_subcommand("trajectories", "Monte-Carlo quantum-jump ensemble");
  add_physics_options(traj_cmd, traj_common);
  traj_cmd->add_option("--n-traj", ens_opts.n_traj, "number of trajectories")->capture_default_str();
  traj_cmd->add_option("--seed", ens_opts.seed, "ensemble seed")->capture_default_str();
  traj_cmd->add_option("--scheme", ens_opts.scheme, "no-jump propagation")
      ->check(CLI::IsMember({"rk4", "first-order"}))
      ->capture_default_str();

  FigureOptions fig_opts;
  auto* figure_cmd = app.add_subcommand("figure", "run a figure preset");
  figure_cmd->add_option("id", fig_opts.id, "figure id")
      ->required()
      ->check(CLI::IsMember(preset_ids()));
  figure_cmd
      ->add_option("--out", fig_opts.out,
                   "output file; series presets write <stem>.<label>.csv per curve")
      ->required();
  figure_cmd->add_option("--format", fig_opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  RotationOptions rot_opts;
  auto* convert_cmd =
      app.add_subcommand("convert-rotation", "rotation (angle, theta, phi) to amplitudes A");
  convert_cmd->add_option("--angle", rot_opts.angle, "rotation angle (rad)")->required();
  convert_cmd->add_option("--theta", rot_opts.theta, "polar angle of the axis, [0, pi]")->required();
  convert_cmd->add_option("--phi", rot_opts.phi, "azimuth of the axis, [0, 2pi)")->required();

  const std::vector<CLI::App*> subcommands = {simulate_cmd, sweep_cmd, traj_cmd, figure_cmd,
                                              convert_cmd};
  for (auto* sub : subcommands) add_config_option(sub, config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : subcommands) {
      if (sub->parsed() && !config_path.empty()) apply_config_file(sub, config_path);
    }
    if (simulate_cmd->parsed()) run_simulate(sim_opts, out);
    if (sweep_cmd->parsed()) run_sweep(sweep_common, sweep_opts, out);
    if (traj_cmd->parsed()) run_trajectories(traj_common, ens_opts, out);
    if (figure_cmd->parsed()) run_figure(fig_opts, out);
    if (convert_cmd->parsed()) run_convert(rot_opts, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateCorrupted& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace jumpfeed::cli
