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

#include <string>
#include <vector>

namespace cpbskew {

// Raw Cooper-pair-box circuit inputs, hbar = 1.
struct CpbParameters {
  double charging_energy;      // E_c > 0
  double josephson_energy;     // E_j
  double gate_charge;          // n_g, dimensionless
  double junction_capacitance; // C_j > 0
  double gate_capacitance;     // C_g > 0
  double cavity_frequency;     // omega > 0
  double detuning;             // bare delta
  double coupling;             // g > 0
};

struct EffectiveParameters {
  double transition_frequency;  // omega_c
  double mixing_angle;          // theta, radians
  double mu;                    // 1 - n_g
  double capacitance_ratio;     // gamma = C_j / C_g
  double rabi;                  // Omega(gamma)
  double scaled_detuning;       // Delta = delta / 2g
  std::vector<std::string> warnings;
};

/// Throws InvalidArgument on E_c, C_j, C_g, omega or g not strictly positive.
void validate(const CpbParameters& p);

/// sqrt(E_j^2 + 16 E_c^2 (2 n_g - 1)^2)
double transition_frequency(const CpbParameters& p);

/// -atan(E_j / (E_c (2 n_g - 1))); at the degeneracy point n_g = 1/2 the
/// limit -sign(E_j) pi/2 is returned (0 when E_j = 0 as well).
double mixing_angle(const CpbParameters& p);

/// sqrt(gamma) / (1 + gamma), the C_g = 1 normalisation of the coupling
/// prefactor sqrt(C_j) / (C_j + C_g).
double effective_rabi(double capacitance_ratio);

double scaled_detuning(double detuning, double coupling);

/// Derived quantities plus regime warnings (E_j should be well below E_c).
EffectiveParameters derive(const CpbParameters& p);

}  // namespace cpbskew
