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

#include "cpbskew/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cpbskew/error.hpp"

namespace cpbskew {
namespace {

using Index = Eigen::Index;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Index at(std::size_t cutoff, Level level, std::size_t photons) {
  return static_cast<Index>(QubitFockState::index(cutoff, level, photons));
}

}  // namespace

RabiCoefficients rabi_coefficients(std::size_t level, const JcParameters& params, double time) {
  const double radius =
      std::sqrt(params.detuning * params.detuning + static_cast<double>(level));
  const double phase = params.rabi * time * radius;
  if (radius == 0.0) return {1.0, params.rabi * time};
  return {std::cos(phase), std::sin(phase) / radius};
}

std::size_t default_fock_cutoff(std::size_t photons) { return photons + 5; }

CMatrix propagator_matrix(const JcParameters& params, double time, std::size_t fock_cutoff) {
  if (fock_cutoff < 2) {
    throw InvalidDimension("propagator needs a Fock cutoff of at least 2, got " +
                           std::to_string(fock_cutoff));
  }
  const std::size_t n = fock_cutoff;
  const double delta = params.detuning;
  CMatrix u = CMatrix::Zero(static_cast<Index>(2 * n), static_cast<Index>(2 * n));

  for (std::size_t m = 0; m + 1 < n; ++m) {
    const auto [c, s] = rabi_coefficients(m + 1, params, time);
    const Complex exchange = -kI * std::sqrt(static_cast<double>(m + 1)) * s;
    const Index e = at(n, Level::excited, m);
    const Index g = at(n, Level::ground, m + 1);
    u(e, e) = Complex(c, -delta * s);
    u(g, g) = Complex(c, delta * s);
    u(g, e) = exchange;
    u(e, g) = exchange;
  }

  // Uncoupled levels: |g,0> and the truncated |e,N-1>.
  const auto [c0, s0] = rabi_coefficients(0, params, time);
  u(at(n, Level::ground, 0), at(n, Level::ground, 0)) = Complex(c0, delta * s0);
  u(at(n, Level::excited, n - 1), at(n, Level::excited, n - 1)) = Complex(c0, -delta * s0);
  return u;
}

QubitFockState initial_state(std::size_t photons, std::size_t fock_cutoff) {
  QubitFockState state(fock_cutoff);
  state.amplitude(Level::excited, photons) = kInvSqrt2;
  state.amplitude(Level::ground, photons) = kInvSqrt2;
  return state;
}

double EvolvedAmplitudes::norm_squared() const {
  return std::norm(excited_n) + std::norm(ground_n_plus_1) + std::norm(excited_n_minus_1) +
         std::norm(ground_n);
}

Evolution evolve_initial(std::size_t photons, const JcParameters& params, double time,
                         std::size_t fock_cutoff) {
  if (fock_cutoff < photons + 2) {
    throw InvalidDimension("Fock cutoff " + std::to_string(fock_cutoff) +
                           " too small for initial photon number " + std::to_string(photons) +
                           " (need at least " + std::to_string(photons + 2) + ")");
  }
  const double delta = params.detuning;
  const auto [c_up, s_up] = rabi_coefficients(photons + 1, params, time);
  const auto [c_down, s_down] = rabi_coefficients(photons, params, time);

  EvolvedAmplitudes amps{};
  amps.photons = photons;
  amps.excited_n = kInvSqrt2 * Complex(c_up, -delta * s_up);
  amps.ground_n_plus_1 = kInvSqrt2 * (-kI) * std::sqrt(static_cast<double>(photons + 1)) * s_up;
  // |g,n> sits in the sector below; for n = 0 it is the dark level and the
  // same expression reduces to the phase exp(i Omega Delta T).
  amps.ground_n = kInvSqrt2 * Complex(c_down, delta * s_down);
  if (photons > 0) {
    amps.excited_n_minus_1 = kInvSqrt2 * (-kI) * std::sqrt(static_cast<double>(photons)) * s_down;
  }

  QubitFockState state(fock_cutoff);
  state.amplitude(Level::excited, photons) = amps.excited_n;
  state.amplitude(Level::ground, photons + 1) = amps.ground_n_plus_1;
  state.amplitude(Level::ground, photons) = amps.ground_n;
  if (photons > 0) state.amplitude(Level::excited, photons - 1) = amps.excited_n_minus_1;
  return {amps, std::move(state)};
}

Evolution evolve_initial(std::size_t photons, const JcParameters& params, double time) {
  return evolve_initial(photons, params, time, default_fock_cutoff(photons));
}

double excitation_number(const QubitFockState& state) {
  const std::size_t n = state.fock_cutoff();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double k_d = static_cast<double>(k);
    total += (k_d + 1.0) * std::norm(state.amplitude(Level::excited, k));
    total += k_d * std::norm(state.amplitude(Level::ground, k));
  }
  return total;
}

}  // namespace cpbskew
