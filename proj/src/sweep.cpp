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

#include "cpbskew/sweep.hpp"

#include <exception>
#include <limits>
#include <string>

#include <fmt/core.h>

#include "cpbskew/cpb_model.hpp"
#include "cpbskew/error.hpp"
#include "cpbskew/measures.hpp"

namespace cpbskew {
namespace {

TraceSeries empty_series(const SweepPoint& point, const TimeGrid& grid) {
  grid.validate();
  return TraceSeries{point, effective_rabi(point.capacitance_ratio),
                     std::vector<TraceRow>(grid.steps)};
}

TraceRow evaluate_row_checked(const SweepPoint& point, double time) {
  try {
    return evaluate_row(point, time);
  } catch (const Error& e) {
    throw Error(fmt::format("evaluation failed at T={} (Delta={}, gamma={}, n={}): {}", time,
                            point.detuning, point.capacitance_ratio, point.photons, e.what()));
  }
}

// Exceptions cannot cross an OpenMP region; keep the one from the lowest
// work item so the reported failure does not depend on scheduling.
class FirstFailure {
 public:
  void record(std::size_t item, std::exception_ptr error) {
#pragma omp critical(cpbskew_first_failure)
    {
      if (!error_ || item < item_) {
        item_ = item;
        error_ = std::move(error);
      }
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::size_t item_ = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error_;
};

}  // namespace

JcParameters SweepPoint::jc() const {
  return JcParameters{detuning, effective_rabi(capacitance_ratio)};
}

void TimeGrid::validate() const {
  if (!(t_max > 0.0)) throw InvalidArgument(fmt::format("t_max must be positive, got {}", t_max));
  if (steps < 2) throw InvalidArgument(fmt::format("need at least 2 time steps, got {}", steps));
}

double TimeGrid::at(std::size_t i) const {
  if (i + 1 == steps) return t_max;
  return t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<double> TimeGrid::samples() const {
  validate();
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) out[i] = at(i);
  return out;
}

TraceRow evaluate_row(const SweepPoint& point, double time) {
  const Evolution evo = evolve_initial(point.photons, point.jc(), time);
  const MeasureReport m = measure(evo.state);
  return TraceRow{time, m.skew, m.concurrence, m.purity_qubit, m.variance_sum_qubit,
                  m.wy_sum_qubit};
}

double skew_at(const SweepPoint& point, double time) {
  const Evolution evo = evolve_initial(point.photons, point.jc(), time);
  return 1.0 + concurrence_squared_pure(evo.state);
}

TraceSeries run_trace_serial(const SweepPoint& point, const TimeGrid& grid) {
  TraceSeries series = empty_series(point, grid);
  for (std::size_t i = 0; i < grid.steps; ++i) {
    series.rows[i] = evaluate_row_checked(point, grid.at(i));
  }
  return series;
}

TraceSeries run_trace(const SweepPoint& point, const TimeGrid& grid) {
  TraceSeries series = empty_series(point, grid);
  FirstFailure failure;
  const auto steps = static_cast<std::ptrdiff_t>(grid.steps);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < steps; ++i) {
    const auto row = static_cast<std::size_t>(i);
    try {
      series.rows[row] = evaluate_row_checked(point, grid.at(row));
    } catch (...) {
      failure.record(row, std::current_exception());
    }
  }
  failure.rethrow();
  return series;
}

std::vector<TraceSeries> run_sweep_serial(std::span<const SweepPoint> points,
                                          const TimeGrid& grid) {
  std::vector<TraceSeries> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(run_trace_serial(p, grid));
  return out;
}

std::vector<TraceSeries> run_sweep(std::span<const SweepPoint> points, const TimeGrid& grid) {
  std::vector<TraceSeries> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(empty_series(p, grid));

  const std::size_t steps = grid.steps;
  const auto items = static_cast<std::ptrdiff_t>(points.size() * steps);
  FirstFailure failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t item = 0; item < items; ++item) {
    const auto flat = static_cast<std::size_t>(item);
    const std::size_t curve = flat / steps;
    const std::size_t row = flat % steps;
    try {
      out[curve].rows[row] = evaluate_row_checked(points[curve], grid.at(row));
    } catch (...) {
      failure.record(flat, std::current_exception());
    }
  }
  failure.rethrow();
  return out;
}

std::vector<ExtremumRecord> find_extrema(const TraceSeries& series) {
  std::vector<double> times(series.rows.size());
  std::vector<double> values(series.rows.size());
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    times[i] = series.rows[i].time;
    values[i] = series.rows[i].skew;
  }
  const SweepPoint point = series.point;
  return find_extrema(times, values, [point](double t) { return skew_at(point, t); });
}

}  // namespace cpbskew
