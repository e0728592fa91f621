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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cpbskew/sweep.hpp"

namespace cpbskew {

struct SweepConfig {
  std::vector<double> delta_values{0.0};
  std::vector<double> gamma_values{0.25};
  std::vector<std::size_t> n_values{1};
  double t_max = 25.0;
  std::size_t t_steps = 2001;
  std::filesystem::path output_dir = "out";
  bool emit_plots = false;

  /// Throws ConfigError on empty lists, non-positive gamma, a bad time grid
  /// or more than 1e7 total evaluations.
  void validate() const;

  TimeGrid grid() const { return TimeGrid{t_max, t_steps}; }
  /// Cartesian product ordered delta-major, then gamma, then n.
  std::vector<SweepPoint> points() const;
};

inline constexpr std::size_t kMaxEvaluations = 10'000'000;

// Line-oriented `key = value` text. Keys: delta, gamma, n (comma-separated
// lists), tmax, steps, out, plots (true/false). '#' starts a comment.
// Unknown keys, duplicate keys and malformed values throw ConfigError.
void apply_config_text(std::string_view text, SweepConfig& config);
void apply_config_file(const std::filesystem::path& path, SweepConfig& config);

std::vector<double> parse_real_list(std::string_view text);
std::vector<std::size_t> parse_count_list(std::string_view text);

}  // namespace cpbskew
