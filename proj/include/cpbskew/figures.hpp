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
#include <optional>
#include <string>
#include <vector>

#include "cpbskew/extrema.hpp"
#include "cpbskew/sweep.hpp"

namespace cpbskew {

struct FigureSpec {
  std::string name;  // fig1 .. fig5
  std::string description;
  std::vector<SweepPoint> curves;
};

/// The five reference parameter groupings.
std::vector<FigureSpec> figure_specs();

// Extremum time quoted alongside a figure, checked at a relative tolerance.
struct ReferenceAnchor {
  std::string label;
  SweepPoint point;
  ExtremumKind kind;
  double reference_time;
};

inline constexpr double kAnchorTolerance = 0.20;

std::vector<ReferenceAnchor> reference_anchors();

struct CurveSummary {
  std::string figure;
  SweepPoint point;
  double rabi;
  std::optional<ExtremumRecord> first_max;
  std::optional<ExtremumRecord> first_min;
  std::size_t interior_extrema;
};

CurveSummary summarize(const std::string& figure, const TraceSeries& series);

struct AnchorOutcome {
  ReferenceAnchor anchor;
  std::optional<double> measured_time;
  bool within_tolerance;
};

AnchorOutcome check_anchor(const ReferenceAnchor& anchor, const TimeGrid& grid);

struct TrendOutcome {
  std::string name;
  bool pass;
  std::string detail;
};

// Qualitative orderings:
//   first-max time strictly decreasing over n = 2, 5, 8 (Delta = 0, gamma = 1/4);
//   interior extrema count on the grid non-decreasing as gamma goes 1/4, 1/6, 1/8
//   (n = 2, Delta = 0);
//   first-max time at Delta = 0.3 below that at Delta = 0 (n = 1, gamma = 1/4).
std::vector<TrendOutcome> evaluate_trends(const TimeGrid& grid);

struct ReproductionReport {
  std::vector<CurveSummary> curves;
  std::vector<AnchorOutcome> anchors;
  std::vector<TrendOutcome> trends;
  std::vector<std::string> notes;

  std::string render() const;
};

inline constexpr TimeGrid kDefaultGrid{25.0, 2001};

/// Runs every figure, writes out/figN/*.csv, out/figN/figN.gp and
/// out/report.txt, and returns the report.
ReproductionReport reproduce_figures(const std::filesystem::path& output_dir,
                                     const TimeGrid& grid = kDefaultGrid);

}  // namespace cpbskew
