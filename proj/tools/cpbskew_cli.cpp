// Copyright 2026 The cpbskew Authors
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

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpbskew/config.hpp"
#include "cpbskew/error.hpp"
#include "cpbskew/figures.hpp"
#include "cpbskew/output.hpp"
#include "cpbskew/sweep.hpp"
#include "cpbskew/validation.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kBadArguments = 2, kIoFailure = 3 };

struct TraceFlags {
  std::optional<std::string> delta;
  std::optional<std::string> gamma;
  std::optional<std::string> n;
  std::optional<double> tmax;
  std::optional<std::size_t> steps;
  std::optional<std::string> out;
  bool plots = false;
};

cpbskew::SweepConfig resolve(const TraceFlags& flags, const std::string& config_path) {
  cpbskew::SweepConfig config;
  if (flags.delta) config.delta_values = cpbskew::parse_real_list(*flags.delta);
  if (flags.gamma) config.gamma_values = cpbskew::parse_real_list(*flags.gamma);
  if (flags.n) config.n_values = cpbskew::parse_count_list(*flags.n);
  if (flags.tmax) config.t_max = *flags.tmax;
  if (flags.steps) config.t_steps = *flags.steps;
  if (flags.out) config.output_dir = *flags.out;
  config.emit_plots = flags.plots;
  if (!config_path.empty()) cpbskew::apply_config_file(config_path, config);
  config.validate();
  return config;
}

int run_trace(const TraceFlags& flags, const std::string& config_path) {
  const cpbskew::SweepConfig config = resolve(flags, config_path);
  const auto points = config.points();
  const auto series = cpbskew::run_sweep(points, config.grid());
  const auto result =
      cpbskew::emit_outputs(series, config.output_dir, config.emit_plots ? "trace" : "");
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& s : series) {
    const auto records = cpbskew::find_extrema(s);
    const auto max = cpbskew::first_extremum(records, cpbskew::ExtremumKind::maximum);
    const auto min = cpbskew::first_extremum(records, cpbskew::ExtremumKind::minimum);
    std::cout << cpbskew::trace_file_name(s.point) << "  Omega=" << s.rabi << "  first max "
              << (max ? std::to_string(max->time) : "none") << "  first min "
              << (min ? std::to_string(min->time) : "none") << "  extrema " << records.size()
              << "\n";
  }
  std::cout << "wrote " << result.files.size() << " file(s) to " << config.output_dir.string()
            << "\n";
  return kOk;
}

int run_figures(const std::optional<std::string>& out_flag, const std::string& config_path) {
  cpbskew::SweepConfig config;
  config.output_dir = "figures";
  if (out_flag) config.output_dir = *out_flag;
  if (!config_path.empty()) cpbskew::apply_config_file(config_path, config);
  const auto report = cpbskew::reproduce_figures(config.output_dir);
  std::cout << report.render();
  return kOk;
}

int run_validate() {
  bool all = true;
  for (const auto& c : cpbskew::run_validation()) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  worst=" << c.worst
              << "  tol=" << c.tolerance << "\n";
    all = all && c.pass;
  }
  return all ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew information dynamics of a Cooper pair box in a single-mode cavity"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file; its entries override flags")
      ->check(CLI::ExistingFile);

  TraceFlags trace_flags;
  auto* trace = app.add_subcommand("trace", "Time traces for a grid of (Delta, gamma, n)");
  trace->fallthrough();
  trace->add_option("--delta", trace_flags.delta, "Scaled detunings, comma-separated");
  trace->add_option("--gamma", trace_flags.gamma, "Capacitance ratios C_j/C_g, comma-separated");
  trace->add_option("--n", trace_flags.n, "Initial photon numbers, comma-separated");
  trace->add_option("--tmax", trace_flags.tmax, "End of the scaled-time window");
  trace->add_option("--steps", trace_flags.steps, "Samples on [0, tmax]");
  trace->add_option("--out", trace_flags.out, "Output directory");
  trace->add_flag("--plots", trace_flags.plots, "Also write a gnuplot script");

  std::optional<std::string> figures_out;
  auto* figures = app.add_subcommand("figures", "Write the five reference figure sets");
  figures->fallthrough();
  figures->add_option("--out", figures_out, "Output directory");

  app.add_subcommand("validate", "Oracle equivalence and invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadArguments;
  }

  try {
    if (trace->parsed()) return run_trace(trace_flags, config_path);
    if (figures->parsed()) return run_figures(figures_out, config_path);
    return run_validate();
  } catch (const cpbskew::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const cpbskew::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArguments;
  }
}
