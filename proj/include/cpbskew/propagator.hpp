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

// Dimensionless knobs of the qubit-cavity interaction: scaled detuning Delta
// and effective Rabi scale Omega. Time is the scaled time T.
struct JcParameters {
  double detuning;
  double rabi;
};

// Level-m factors of the exchange propagator:
//   cos_part = cos(Omega T sqrt(Delta^2 + m))
//   sin_part = sin(Omega T sqrt(Delta^2 + m)) / sqrt(Delta^2 + m)
// with sin_part -> Omega T when Delta^2 + m = 0.
struct RabiCoefficients {
  double cos_part;
  double sin_part;
};

RabiCoefficients rabi_coefficients(std::size_t level, const JcParameters& params, double time);

/// Default Fock cutoff for an initial photon number n (n + 5).
std::size_t default_fock_cutoff(std::size_t photons);

/// Closed-form U(T) on the 2N-dimensional truncated space. Block diagonal in
/// the sectors {|e,m>, |g,m+1>}, with |g,0> and the truncated top level
/// |e,N-1> evolving by a phase only. Throws InvalidDimension for N < 2.
CMatrix propagator_matrix(const JcParameters& params, double time, std::size_t fock_cutoff);

/// (|e,n> + |g,n>) / sqrt(2)
QubitFockState initial_state(std::size_t photons, std::size_t fock_cutoff);

// Amplitudes of the evolved initial state on its four-level support.
struct EvolvedAmplitudes {
  Complex excited_n;          // |e,n>
  Complex ground_n_plus_1;    // |g,n+1>
  Complex excited_n_minus_1;  // |e,n-1>, identically zero for n = 0
  Complex ground_n;           // |g,n>
  std::size_t photons;

  double norm_squared() const;
};

struct Evolution {
  EvolvedAmplitudes amplitudes;
  QubitFockState state;
};

/// Evolves (|e,n> + |g,n>)/sqrt(2) to time T. Throws InvalidDimension when
/// the cutoff cannot hold |g,n+1>.
Evolution evolve_initial(std::size_t photons, const JcParameters& params, double time,
                         std::size_t fock_cutoff);
Evolution evolve_initial(std::size_t photons, const JcParameters& params, double time);

/// Expectation of a^dagger a + |e><e| in the given state.
double excitation_number(const QubitFockState& state);

}  // namespace cpbskew
