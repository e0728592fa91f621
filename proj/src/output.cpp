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

#include "cpbskew/output.hpp"

#include <fstream>
#include <system_error>

#include <fmt/core.h>

#include "cpbskew/error.hpp"

namespace cpbskew {

std::string trace_file_name(const SweepPoint& point) {
  return fmt::format("trace_d{:.6g}_g{:.6g}_n{}.csv", point.detuning, point.capacitance_ratio,
                     point.photons);
}

std::string format_value(double value) { return fmt::format("{:.11e}", value); }

std::string render_csv(const TraceSeries& series) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : series.rows) {
    out += fmt::format("{},{},{},{},{},{}\n", format_value(r.time), format_value(r.skew),
                       format_value(r.concurrence), format_value(r.purity),
                       format_value(r.variance_sum), format_value(r.wy_sum));
  }
  return out;
}

std::string render_plot_script(std::span<const TraceSeries> series, const std::string& title,
                               const std::string& image_name) {
  std::string out;
  out += "# gnuplot script; run from this directory: gnuplot " + image_name + ".gp\n";
  out += "set datafile separator ','\n";
  out += "set terminal pngcairo size 900,500\n";
  out += fmt::format("set output '{}.png'\n", image_name);
  out += fmt::format("set title '{}'\n", title);
  out += "set xlabel 'T'\nset ylabel 'S_I'\nset yrange [0.95:2.05]\nset key outside right\n";
  out += "plot";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& p = series[i].point;
    out += fmt::format("{} '{}' skip 1 using 1:2 with lines title 'Delta={:.6g}, gamma={:.6g}, "
                       "n={}'",
                       i == 0 ? "" : ", \\\n    ", trace_file_name(p), p.detuning,
                       p.capacitance_ratio, p.photons);
  }
  out += "\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << contents;
  out.close();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

EmitResult emit_outputs(std::span<const TraceSeries> series, const std::filesystem::path& dir,
                        const std::string& script_name, const std::string& title) {
  EmitResult result;
  if (series.empty()) {
    result.warnings.push_back("no traces to emit; nothing written");
    return result;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(),
                              ec.message()));
  }
  for (const auto& s : series) {
    const auto path = dir / trace_file_name(s.point);
    write_text_file(path, render_csv(s));
    result.files.push_back(path);
  }
  if (!script_name.empty()) {
    const auto path = dir / (script_name + ".gp");
    write_text_file(path, render_plot_script(series, title, script_name));
    result.files.push_back(path);
  }
  return result;
}

}  // namespace cpbskew
