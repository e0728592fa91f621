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
#include <random>

#include "cpbskew/quantum_core.hpp"

namespace cpbskew::testing {

inline CVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = Complex(normal(rng), normal(rng));
  return v;
}

inline QubitFockState random_state(std::mt19937_64& rng, std::size_t cutoff) {
  CVector v = random_vector(rng, 2 * cutoff);
  v.normalize();
  return QubitFockState(cutoff, v);
}

// Random full-rank density matrix G G^H / Tr, G complex Gaussian.
inline DensityMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = random_vector(rng, dim);
  CMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

inline DensityMatrix projector(const CVector& psi) {
  CMatrix rho = psi * psi.adjoint() / psi.squaredNorm();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(rho);
}

inline CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace cpbskew::testing
