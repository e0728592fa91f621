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

#include "cpbskew/extrema.hpp"

#include <cmath>
#include <string>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

constexpr double kFlatSlope = 1e-12;
constexpr double kRefineWidth = 1e-7;

int slope_sign(double dv, double dt) {
  const double slope = dv / dt;
  if (std::abs(slope) < kFlatSlope) return 0;
  return slope > 0.0 ? 1 : -1;
}

// Golden-section search for the maximum of sign * f on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi, double sign) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sign * f(c);
  double fd = sign * f(d);
  while (b - a > kRefineWidth) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sign * f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<ExtremumRecord> find_extrema(std::span<const double> times,
                                         std::span<const double> values,
                                         const std::function<double(double)>& curve) {
  if (times.size() != values.size()) {
    throw InvalidArgument("times and values differ in length");
  }
  if (times.size() < 3) {
    throw InvalidArgument("extremum search needs at least 3 samples, got " +
                          std::to_string(times.size()));
  }

  std::vector<ExtremumRecord> out;
  std::size_t maxima = 0;
  std::size_t minima = 0;
  int last_sign = 0;
  std::size_t flat_start = 0;  // first sample of the current flat run

  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    const int s = slope_sign(values[i + 1] - values[i], times[i + 1] - times[i]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      // Samples flat_start..i share the turning point.
      const ExtremumKind kind = last_sign > 0 ? ExtremumKind::maximum : ExtremumKind::minimum;
      const double sign = kind == ExtremumKind::maximum ? 1.0 : -1.0;
      double t;
      double v;
      if (flat_start == i) {
        t = times[i];
        v = values[i];
        if (curve) {
          const double refined = golden_section(curve, times[i - 1], times[i + 1], sign);
          const double fr = curve(refined);
          if (sign * fr >= sign * v) {
            t = refined;
            v = fr;
          }
        }
      } else {
        t = 0.5 * (times[flat_start] + times[i]);
        v = curve ? curve(t) : values[(flat_start + i) / 2];
      }
      const std::size_t occurrence = kind == ExtremumKind::maximum ? ++maxima : ++minima;
      out.push_back({kind, t, v, occurrence});
    }
    last_sign = s;
    flat_start = i + 1;
  }
  return out;
}

std::optional<ExtremumRecord> first_extremum(std::span<const ExtremumRecord> records,
                                             ExtremumKind kind) {
  for (const auto& r : records) {
    if (r.kind == kind) return r;
  }
  return std::nullopt;
}

}  // namespace cpbskew
