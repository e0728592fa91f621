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

#include "cpbskew/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include <fmt/core.h>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view raw, std::string_view what) {
  const std::string_view s = trim(raw);
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw ConfigError(fmt::format("invalid {} '{}'", what, s));
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw ConfigError(fmt::format("non-finite {} '{}'", what, s));
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view what) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_number<T>(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_flag(std::string_view raw) {
  const std::string_view s = trim(raw);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(fmt::format("invalid boolean '{}'", s));
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  return parse_list<double>(text, "real");
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
  return parse_list<std::size_t>(text, "non-negative integer");
}

void SweepConfig::validate() const {
  if (delta_values.empty()) throw ConfigError("delta list is empty");
  if (gamma_values.empty()) throw ConfigError("gamma list is empty");
  if (n_values.empty()) throw ConfigError("n list is empty");
  for (const double g : gamma_values) {
    if (!(g > 0.0)) throw ConfigError(fmt::format("gamma must be positive, got {}", g));
  }
  if (!(t_max > 0.0)) throw ConfigError(fmt::format("tmax must be positive, got {}", t_max));
  if (t_steps < 2) throw ConfigError(fmt::format("steps must be at least 2, got {}", t_steps));
  const std::size_t tuples = delta_values.size() * gamma_values.size() * n_values.size();
  if (tuples > kMaxEvaluations / t_steps) {
    throw ConfigError(fmt::format("{} curves x {} steps exceeds the {} evaluation limit", tuples,
                                  t_steps, kMaxEvaluations));
  }
}

std::vector<SweepPoint> SweepConfig::points() const {
  std::vector<SweepPoint> out;
  for (const double d : delta_values) {
    for (const double g : gamma_values) {
      for (const std::size_t n : n_values) out.push_back({d, g, n});
    }
  }
  return out;
}

void apply_config_text(std::string_view text, SweepConfig& config) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError(fmt::format("line {}: duplicate key '{}'", line_no, key));
    }
    try {
      if (key == "delta") {
        config.delta_values = parse_real_list(value);
      } else if (key == "gamma") {
        config.gamma_values = parse_real_list(value);
      } else if (key == "n") {
        config.n_values = parse_count_list(value);
      } else if (key == "tmax") {
        config.t_max = parse_number<double>(value, "real");
      } else if (key == "steps") {
        config.t_steps = parse_number<std::size_t>(value, "integer");
      } else if (key == "out") {
        if (value.empty()) throw ConfigError("empty output directory");
        config.output_dir = std::string(value);
      } else if (key == "plots") {
        config.emit_plots = parse_flag(value);
      } else {
        throw ConfigError(fmt::format("unknown key '{}'", key));
      }
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
}

void apply_config_file(const std::filesystem::path& path, SweepConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read config file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    apply_config_text(buffer.str(), config);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace cpbskew
