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

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cpbskew/sweep.hpp"

namespace cpbskew {

inline constexpr const char* kCsvHeader = "T,S_I,concurrence,purity,variance_sum,wy_sum";

/// trace_d{Delta}_g{gamma}_n{n}.csv, values printed with 6 significant digits.
std::string trace_file_name(const SweepPoint& point);

/// 12 significant digits, scientific.
std::string format_value(double value);

/// Full CSV text for one trace.
std::string render_csv(const TraceSeries& series);

/// gnuplot script plotting S_I of every listed CSV on one set of axes.
std::string render_plot_script(std::span<const TraceSeries> series, const std::string& title,
                               const std::string& image_name);

struct EmitResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
};

// Writes one CSV per series into `dir` and, when `script_name` is non-empty,
// one plot script named `script_name` referencing them. An empty series set
// writes nothing and returns a warning. I/O failures throw IoError.
EmitResult emit_outputs(std::span<const TraceSeries> series, const std::filesystem::path& dir,
                        const std::string& script_name, const std::string& title = "S_I(T)");

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cpbskew
