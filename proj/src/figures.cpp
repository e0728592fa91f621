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

#include "cpbskew/figures.hpp"

#include <cmath>

#include <fmt/core.h>

#include "cpbskew/output.hpp"

namespace cpbskew {
namespace {

constexpr double kSixth = 1.0 / 6.0;

std::string describe(const SweepPoint& p) {
  return fmt::format("Delta={:.6g} gamma={:.6g} n={}", p.detuning, p.capacitance_ratio,
                     p.photons);
}

std::string describe(const std::optional<ExtremumRecord>& r) {
  return r ? fmt::format("T={:.4f} (S_I={:.6f})", r->time, r->value) : std::string("none");
}

std::optional<double> first_time(const SweepPoint& point, const TimeGrid& grid,
                                 ExtremumKind kind) {
  const auto records = find_extrema(run_trace(point, grid));
  const auto first = first_extremum(records, kind);
  if (!first) return std::nullopt;
  return first->time;
}

}  // namespace

std::vector<FigureSpec> figure_specs() {
  return {
      {"fig1", "S_I for Delta = 0, 0.3, 0.9 (gamma = 1/4, n = 1)",
       {{0.0, 0.25, 1}, {0.3, 0.25, 1}, {0.9, 0.25, 1}}},
      {"fig2", "S_I for n = 2, 5, 8 (gamma = 1/4, Delta = 0)",
       {{0.0, 0.25, 2}, {0.0, 0.25, 5}, {0.0, 0.25, 8}}},
      {"fig3", "S_I for gamma = 1/4, 1/6, 1/8 (n = 2, Delta = 0, resonant panel)",
       {{0.0, 0.25, 2}, {0.0, kSixth, 2}, {0.0, 0.125, 2}}},
      {"fig4", "S_I for gamma = 1/4, 1/6, 1/8 (n = 2, Delta = 0.3, detuned panel)",
       {{0.3, 0.25, 2}, {0.3, kSixth, 2}, {0.3, 0.125, 2}}},
      {"fig5", "S_I for gamma = 4, 6, 8 (n = 2, Delta = 0)",
       {{0.0, 4.0, 2}, {0.0, 6.0, 2}, {0.0, 8.0, 2}}},
  };
}

std::vector<ReferenceAnchor> reference_anchors() {
  return {
      {"fig1 resonant first maximum", {0.0, 0.25, 1}, ExtremumKind::maximum, 7.0},
      {"fig1 resonant first minimum", {0.0, 0.25, 1}, ExtremumKind::minimum, 12.5},
      {"fig1 Delta=0.3 first maximum", {0.3, 0.25, 1}, ExtremumKind::maximum, 3.0},
      {"fig2 n=2 first minimum", {0.0, 0.25, 2}, ExtremumKind::minimum, 10.0},
  };
}

CurveSummary summarize(const std::string& figure, const TraceSeries& series) {
  const auto records = find_extrema(series);
  return CurveSummary{figure,
                      series.point,
                      series.rabi,
                      first_extremum(records, ExtremumKind::maximum),
                      first_extremum(records, ExtremumKind::minimum),
                      records.size()};
}

AnchorOutcome check_anchor(const ReferenceAnchor& anchor, const TimeGrid& grid) {
  const auto measured = first_time(anchor.point, grid, anchor.kind);
  const bool within = measured && std::abs(*measured - anchor.reference_time) <=
                                      kAnchorTolerance * anchor.reference_time;
  return {anchor, measured, within};
}

std::vector<TrendOutcome> evaluate_trends(const TimeGrid& grid) {
  std::vector<TrendOutcome> out;

  {
    std::vector<double> times;
    bool pass = true;
    std::string detail;
    for (const std::size_t n : {2u, 5u, 8u}) {
      const auto t = first_time({0.0, 0.25, n}, grid, ExtremumKind::maximum);
      detail += fmt::format("{}n={}: {}", detail.empty() ? "" : ", ", n,
                            t ? fmt::format("{:.4f}", *t) : "none");
      if (!t || (!times.empty() && !(*t < times.back()))) pass = false;
      times.push_back(t.value_or(0.0));
    }
    out.push_back({"first-max time strictly decreasing in n (2, 5, 8)", pass, detail});
  }

  {
    std::vector<std::size_t> counts;
    bool pass = true;
    std::string detail;
    for (const double gamma : {0.25, kSixth, 0.125}) {
      const auto n_extrema = find_extrema(run_trace({0.0, gamma, 2}, grid)).size();
      detail += fmt::format("{}gamma={:.4g}: {}", detail.empty() ? "" : ", ", gamma, n_extrema);
      if (!counts.empty() && n_extrema < counts.back()) pass = false;
      counts.push_back(n_extrema);
    }
    out.push_back(
        {"interior extrema count non-decreasing as gamma decreases (1/4, 1/6, 1/8)", pass, detail});
  }

  {
    const auto resonant = first_time({0.0, 0.25, 1}, grid, ExtremumKind::maximum);
    const auto detuned = first_time({0.3, 0.25, 1}, grid, ExtremumKind::maximum);
    const bool pass = resonant && detuned && *detuned < *resonant;
    out.push_back({"first-max time at Delta=0.3 below Delta=0 (n=1, gamma=1/4)", pass,
                   fmt::format("Delta=0: {}, Delta=0.3: {}",
                               resonant ? fmt::format("{:.4f}", *resonant) : "none",
                               detuned ? fmt::format("{:.4f}", *detuned) : "none")});
  }
  return out;
}

std::string ReproductionReport::render() const {
  std::string out = "Skew information reproduction report\n";
  out += "====================================\n\n";
  out += "Curves (first extrema of S_I = 1 + C^2)\n";
  for (const auto& c : curves) {
    out += fmt::format("  {}  {}  Omega={:.6f}  first max {}  first min {}  interior extrema {}\n",
                       c.figure, describe(c.point), c.rabi, describe(c.first_max),
                       describe(c.first_min), c.interior_extrema);
  }
  out += fmt::format("\nReference extremum times (tolerance +/-{:.0f}%)\n", kAnchorTolerance * 100);
  for (const auto& a : anchors) {
    out += fmt::format(
        "  {:<32} reference T={:<5g} measured {:<10} {}\n", a.anchor.label,
        a.anchor.reference_time,
        a.measured_time ? fmt::format("T={:.4f}", *a.measured_time) : std::string("none"),
        a.within_tolerance
            ? "PASS"
            : fmt::format("DEVIATION ({:+.1f}%)",
                          a.measured_time ? 100.0 * (*a.measured_time - a.anchor.reference_time) /
                                                a.anchor.reference_time
                                          : 0.0));
  }
  out += "\nQualitative trends\n";
  for (const auto& t : trends) {
    out += fmt::format("  [{}] {}: {}\n", t.pass ? "PASS" : "FAIL", t.name, t.detail);
  }
  if (!notes.empty()) {
    out += "\nNotes\n";
    for (const auto& n : notes) out += "  - " + n + "\n";
  }
  return out;
}

ReproductionReport reproduce_figures(const std::filesystem::path& output_dir,
                                     const TimeGrid& grid) {
  const auto specs = figure_specs();
  std::vector<SweepPoint> all_points;
  for (const auto& f : specs) all_points.insert(all_points.end(), f.curves.begin(), f.curves.end());
  const auto all_series = run_sweep(all_points, grid);

  ReproductionReport report;
  std::size_t offset = 0;
  for (const auto& f : specs) {
    const std::span<const TraceSeries> group(all_series.data() + offset, f.curves.size());
    offset += f.curves.size();
    emit_outputs(group, output_dir / f.name, f.name, f.description);
    for (const auto& s : group) report.curves.push_back(summarize(f.name, s));
  }
  for (const auto& a : reference_anchors()) report.anchors.push_back(check_anchor(a, grid));
  report.trends = evaluate_trends(grid);
  report.notes = {
      "fig5 uses gamma = 4, 6, 8.",
      "Omega(gamma) = sqrt(gamma)/(1+gamma) is invariant under gamma -> 1/gamma, so the fig5 "
      "curves coincide with the fig3 curves.",
      "fig3 is the resonant set and fig4 the Delta = 0.3 set.",
      "Delta = 0 is treated as resonance.",
  };
  write_text_file(output_dir / "report.txt", report.render());
  return report;
}

}  // namespace cpbskew
