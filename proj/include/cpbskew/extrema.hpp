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
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cpbskew {

enum class ExtremumKind { maximum, minimum };

struct ExtremumRecord {
  ExtremumKind kind;
  double time;
  double value;
  std::size_t occurrence;  // 1 for the first maximum (or minimum), 2 for the second, ...
};

// Interior extrema of a sampled curve.
//
// A turning point is a sign change of the discrete slope. Slopes with
// magnitude below 1e-12 count as flat; a flat run between a rise and a fall
// is reported once at its centre. Isolated turning points are refined by
// golden-section search on `curve` over the two neighbouring intervals when
// a curve is supplied. Endpoints are never reported. Throws InvalidArgument
// for fewer than 3 samples or mismatched spans.
std::vector<ExtremumRecord> find_extrema(std::span<const double> times,
                                         std::span<const double> values,
                                         const std::function<double(double)>& curve = {});

std::optional<ExtremumRecord> first_extremum(std::span<const ExtremumRecord> records,
                                             ExtremumKind kind);

}  // namespace cpbskew
