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
#include <span>
#include <vector>

#include "cpbskew/extrema.hpp"
#include "cpbskew/propagator.hpp"

namespace cpbskew {

// One curve of a figure: scaled detuning, capacitance ratio and the initial
// photon number.
struct SweepPoint {
  double detuning;
  double capacitance_ratio;
  std::size_t photons;

  JcParameters jc() const;
};

// Uniform samples t_max * i / (steps - 1), i = 0 .. steps-1.
struct TimeGrid {
  double t_max;
  std::size_t steps;

  /// Throws InvalidArgument unless t_max > 0 and steps >= 2.
  void validate() const;
  double at(std::size_t i) const;
  std::vector<double> samples() const;
};

struct TraceRow {
  double time;
  double skew;
  double concurrence;
  double purity;
  double variance_sum;
  double wy_sum;
};

struct TraceSeries {
  SweepPoint point;
  double rabi;
  std::vector<TraceRow> rows;
};

/// Measures of the evolved initial state at one time.
TraceRow evaluate_row(const SweepPoint& point, double time);

/// S_I(T) = 1 + C^2 as a continuous function of time.
double skew_at(const SweepPoint& point, double time);

// Parallel kernels. Rows are independent and written to fixed slots, so the
// output is bit-identical to the serial reference for any thread count.
TraceSeries run_trace(const SweepPoint& point, const TimeGrid& grid);
std::vector<TraceSeries> run_sweep(std::span<const SweepPoint> points, const TimeGrid& grid);

// Serial reference implementations.
TraceSeries run_trace_serial(const SweepPoint& point, const TimeGrid& grid);
std::vector<TraceSeries> run_sweep_serial(std::span<const SweepPoint> points,
                                          const TimeGrid& grid);

/// Extrema of S_I along the trace, refined on the closed-form curve.
std::vector<ExtremumRecord> find_extrema(const TraceSeries& series);

}  // namespace cpbskew
