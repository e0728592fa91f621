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

#include "cpbskew/cpb_model.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

// E_j / E_c above this ratio leaves the charge regime.
constexpr double kChargeRegimeRatio = 0.1;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument(fmt::format("{} must be positive and finite, got {}", name, value));
  }
}

}  // namespace

void validate(const CpbParameters& p) {
  require_positive(p.charging_energy, "charging energy E_c");
  require_positive(p.junction_capacitance, "junction capacitance C_j");
  require_positive(p.gate_capacitance, "gate capacitance C_g");
  require_positive(p.cavity_frequency, "cavity frequency");
  require_positive(p.coupling, "coupling g");
}

double transition_frequency(const CpbParameters& p) {
  validate(p);
  const double bias = 2.0 * p.gate_charge - 1.0;
  return std::hypot(p.josephson_energy, 4.0 * p.charging_energy * bias);
}

double mixing_angle(const CpbParameters& p) {
  validate(p);
  const double bias = 2.0 * p.gate_charge - 1.0;
  if (bias == 0.0) {
    if (p.josephson_energy == 0.0) return 0.0;
    return p.josephson_energy > 0.0 ? -std::numbers::pi / 2 : std::numbers::pi / 2;
  }
  return -std::atan(p.josephson_energy / (p.charging_energy * bias));
}

double effective_rabi(double capacitance_ratio) {
  if (!(capacitance_ratio > 0.0) || !std::isfinite(capacitance_ratio)) {
    throw InvalidArgument(
        fmt::format("capacitance ratio must be positive, got {}", capacitance_ratio));
  }
  return std::sqrt(capacitance_ratio) / (1.0 + capacitance_ratio);
}

double scaled_detuning(double detuning, double coupling) {
  if (!(coupling > 0.0)) {
    throw InvalidArgument(fmt::format("coupling must be positive, got {}", coupling));
  }
  return detuning / (2.0 * coupling);
}

EffectiveParameters derive(const CpbParameters& p) {
  validate(p);
  EffectiveParameters out{};
  out.transition_frequency = transition_frequency(p);
  out.mixing_angle = mixing_angle(p);
  out.mu = 1.0 - p.gate_charge;
  out.capacitance_ratio = p.junction_capacitance / p.gate_capacitance;
  out.rabi = effective_rabi(out.capacitance_ratio);
  out.scaled_detuning = scaled_detuning(p.detuning, p.coupling);
  if (std::abs(p.josephson_energy) > kChargeRegimeRatio * p.charging_energy) {
    out.warnings.push_back(
        fmt::format("E_j/E_c = {:.3g} exceeds {}: the two-level charge-qubit reduction "
                    "assumes E_j << E_c",
                    std::abs(p.josephson_energy) / p.charging_energy, kChargeRegimeRatio));
  }
  return out;
}

}  // namespace cpbskew
