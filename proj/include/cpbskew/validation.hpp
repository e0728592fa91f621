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
#include <cstdint>
#include <string>
#include <vector>

namespace cpbskew {

struct ValidationCheck {
  std::string name;
  double worst;      // largest observed violation
  double tolerance;
  bool pass;
};

struct ValidationOptions {
  std::uint64_t seed = 20261016;
  std::size_t draws = 1000;
  std::size_t oracle_samples = 500;
  double oracle_t_max = 25.0;
};

// Closed form against the eigendecomposition oracle on the full
// n x Delta x gamma grid, then randomized unitarity, normalization,
// excitation-conservation, range and measure-identity checks.
std::vector<ValidationCheck> run_validation(const ValidationOptions& options = {});

}  // namespace cpbskew
