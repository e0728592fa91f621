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

#include "cpbskew/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cpbskew/cpb_model.hpp"
#include "cpbskew/measures.hpp"
#include "cpbskew/oracle.hpp"
#include "cpbskew/propagator.hpp"
#include "cpbskew/sweep.hpp"

namespace cpbskew {
namespace {

ValidationCheck make_check(std::string name, double worst, double tolerance) {
  return {std::move(name), worst, tolerance, worst <= tolerance};
}

}  // namespace

std::vector<ValidationCheck> run_validation(const ValidationOptions& options) {
  std::vector<ValidationCheck> checks;

  const std::vector<double> times =
      TimeGrid{options.oracle_t_max, options.oracle_samples}.samples();
  double oracle_worst = 0.0;
  for (const std::size_t n : {0u, 1u, 2u, 5u, 8u}) {
    for (const double delta : {0.0, 0.3, 0.9}) {
      for (const double gamma : {0.25, 1.0 / 6.0, 0.125, 4.0, 6.0, 8.0}) {
        const JcParameters params{delta, effective_rabi(gamma)};
        oracle_worst = std::max(oracle_worst, closed_vs_oracle_deviation(n, params, times));
      }
    }
  }
  checks.push_back(make_check("closed form vs eigendecomposition oracle", oracle_worst, 1e-9));

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> detuning_dist(0.0, 2.0);
  std::uniform_real_distribution<double> gamma_dist(0.01, 100.0);
  std::uniform_real_distribution<double> time_dist(0.0, 50.0);
  std::uniform_int_distribution<std::size_t> cutoff_dist(2, 12);

  double unitarity = 0.0;
  double norm = 0.0;
  double excitation = 0.0;
  double range = 0.0;
  double purity_identity = 0.0;
  double variance_identity = 0.0;
  double initial_skew = 0.0;
  for (std::size_t draw = 0; draw < options.draws; ++draw) {
    const std::size_t cutoff = cutoff_dist(rng);
    const JcParameters params{detuning_dist(rng), effective_rabi(gamma_dist(rng))};
    const double t = time_dist(rng);
    const std::size_t photons = std::uniform_int_distribution<std::size_t>(0, cutoff - 2)(rng);

    const CMatrix u = propagator_matrix(params, t, cutoff);
    unitarity = std::max(
        unitarity, max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())));

    const Evolution evo = evolve_initial(photons, params, t, cutoff);
    norm = std::max({norm, std::abs(evo.amplitudes.norm_squared() - 1.0),
                     std::abs(evo.state.norm() - 1.0)});
    excitation = std::max(
        excitation, std::abs(excitation_number(evo.state) - (static_cast<double>(photons) + 0.5)));

    const MeasureReport m = measure(evo.state);
    range = std::max({range, 1.0 - m.skew, m.skew - 2.0});
    const double c2 = m.concurrence * m.concurrence;
    purity_identity = std::max(purity_identity, std::abs(c2 - 2.0 * (1.0 - m.purity_qubit)));
    variance_identity = std::max(variance_identity, std::abs(m.variance_sum_qubit - 2.0 - c2));

    const Evolution start = evolve_initial(photons, params, 0.0, cutoff);
    initial_skew = std::max(initial_skew, std::abs(measure(start.state).skew - 1.0));
  }
  checks.push_back(make_check("propagator unitarity max|U^H U - I|", unitarity, 1e-12));
  checks.push_back(make_check("state normalization", norm, 1e-12));
  checks.push_back(make_check("excitation number conservation", excitation, 1e-10));
  checks.push_back(make_check("S_I within [1, 2]", std::max(0.0, range), 0.0));
  checks.push_back(make_check("S_I(0) = 1", initial_skew, 0.0));
  checks.push_back(make_check("C^2 = 2(1 - Tr rho_q^2)", purity_identity, 1e-10));
  checks.push_back(make_check("variance sum = 2 + C^2", variance_identity, 1e-10));
  return checks;
}

}  // namespace cpbskew
