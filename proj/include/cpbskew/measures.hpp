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

#include "cpbskew/quantum_core.hpp"

namespace cpbskew {

/// Wigner-Yanase skew information Tr(rho H^2) - Tr(sqrt(rho) H sqrt(rho) H).
/// Values down to -1e-10 are clamped to zero.
double skew_information(const DensityMatrix& rho, const Observable& observable);

/// Same quantity through -1/2 Tr([sqrt(rho), H]^2).
double skew_information_commutator(const DensityMatrix& rho, const Observable& observable);

/// C^2 of a pure qubit ⊗ field state, 4 det(rho_q), accumulated as the sum of
/// squared 2x2 minors of the amplitude matrix so product states give exactly 0.
double concurrence_squared_pure(const QubitFockState& state);

/// sqrt(2 (1 - Tr rho_q^2)) for a normalized pure joint state.
double concurrence_pure(const QubitFockState& state);

/// Wootters concurrence of a two-qubit density matrix in the product basis
/// |00>, |01>, |10>, |11>.
double concurrence_wootters(const DensityMatrix& rho);

/// 4x4 joint density matrix restricted to field levels {k, k+1}. Throws
/// InvalidDimension if the state has weight outside those two levels.
DensityMatrix two_level_joint_density(const QubitFockState& state, std::size_t lower_level);

/// 1 + C^2. Throws InvalidArgument outside C in [0, 1].
double skew_from_concurrence(double concurrence);

/// Sum of Pauli variances on the qubit, 3 - |r|^2.
double variance_sum_qubit(const QubitFockState& state);

/// Skew information of rho_q summed over sigma_x, sigma_y, sigma_z.
double wy_sum_qubit(const DensityMatrix& rho_qubit);

struct Diagnostics {
  double purity;
  double entropy;  // bits
};

Diagnostics diagnostics(const DensityMatrix& rho);
Diagnostics diagnostics(const QubitFockState& state);  // of the reduced qubit
Diagnostics field_diagnostics(const QubitFockState& state);

double von_neumann_entropy(const DensityMatrix& rho);

struct MeasureReport {
  double skew;  // 1 + C^2
  double wy_sum_qubit;
  double variance_sum_qubit;
  double concurrence;
  double purity_qubit;
  double entropy_qubit;
};

MeasureReport measure(const QubitFockState& state);

}  // namespace cpbskew
